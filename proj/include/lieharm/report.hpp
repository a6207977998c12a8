#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace lieharm {

/// Machine-readable outcome of one verification check.  pass holds exactly
/// when max_residual <= tolerance.  Serialization is JSON lines with all
/// floating point numbers printed to 17 significant digits; wall time is
/// kept out of the line unless timing is requested, so identical runs are
/// byte identical.
struct CheckReport {
    std::string name;
    std::string manifold;
    std::string label;
    long long samples = 0;
    double max_residual = 0.0;
    double tolerance = 0.0;
    bool pass = false;
    unsigned long long seed = 0;
    std::map<std::string, std::string> config;  // configuration echo, pre-formatted
    std::optional<double> wall_ms;              // filled by the runner

    std::string to_jsonl(bool include_timing = false) const;
    static CheckReport from_jsonl(const std::string& line);
};

std::string format_double(double v);  // %.17g

/// Finalizes pass from residual and tolerance.
CheckReport make_report(std::string name, std::string manifold, std::string label,
                        long long samples, double max_residual, double tolerance,
                        unsigned long long seed,
                        std::map<std::string, std::string> config = {});

}  // namespace lieharm
