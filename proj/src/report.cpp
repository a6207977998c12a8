#include "lieharm/report.hpp"

#include <cstdio>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace lieharm {

std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

namespace {
std::string json_escape(const std::string& s) {
    std::string out;
    out.reserve(s.size() + 2);
    for (char c : s) {
        switch (c) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            case '\t': out += "\\t"; break;
            default: out += c;
        }
    }
    return out;
}
}  // namespace

std::string CheckReport::to_jsonl(bool include_timing) const {
    std::ostringstream os;
    os << "{\"name\":\"" << json_escape(name) << "\"";
    os << ",\"manifold\":\"" << json_escape(manifold) << "\"";
    os << ",\"label\":\"" << json_escape(label) << "\"";
    os << ",\"samples\":" << samples;
    os << ",\"max_residual\":" << format_double(max_residual);
    os << ",\"tolerance\":" << format_double(tolerance);
    os << ",\"pass\":" << (pass ? "true" : "false");
    os << ",\"seed\":" << seed;
    os << ",\"config\":{";
    bool first = true;
    for (const auto& [k, v] : config) {
        if (!first) os << ",";
        first = false;
        os << "\"" << json_escape(k) << "\":\"" << json_escape(v) << "\"";
    }
    os << "}";
    if (include_timing && wall_ms) os << ",\"wall_ms\":" << format_double(*wall_ms);
    os << "}";
    return os.str();
}

CheckReport CheckReport::from_jsonl(const std::string& line) {
    auto j = nlohmann::json::parse(line);
    CheckReport r;
    r.name = j.at("name").get<std::string>();
    r.manifold = j.at("manifold").get<std::string>();
    r.label = j.at("label").get<std::string>();
    r.samples = j.at("samples").get<long long>();
    r.max_residual = j.at("max_residual").get<double>();
    r.tolerance = j.at("tolerance").get<double>();
    r.pass = j.at("pass").get<bool>();
    r.seed = j.at("seed").get<unsigned long long>();
    for (auto& [k, v] : j.at("config").items()) r.config[k] = v.get<std::string>();
    if (j.contains("wall_ms")) r.wall_ms = j.at("wall_ms").get<double>();
    if (r.pass != (r.max_residual <= r.tolerance))
        throw std::runtime_error("CheckReport: pass flag inconsistent with residual");
    return r;
}

CheckReport make_report(std::string name, std::string manifold, std::string label,
                        long long samples, double max_residual, double tolerance,
                        unsigned long long seed, std::map<std::string, std::string> config) {
    CheckReport r;
    r.name = std::move(name);
    r.manifold = std::move(manifold);
    r.label = std::move(label);
    r.samples = samples;
    r.max_residual = max_residual;
    r.tolerance = tolerance;
    r.pass = max_residual <= tolerance;
    r.seed = seed;
    r.config = std::move(config);
    return r;
}

}  // namespace lieharm
