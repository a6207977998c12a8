#include <cstdio>
#include <fstream>
#include <iostream>
#include <numbers>
#include <sstream>

#include "CLI11.hpp"
#include "lieharm/checks.hpp"

namespace {

using namespace lieharm;

constexpr int kExitOk = 0;
constexpr int kExitCheckFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitIo = 3;

std::vector<double> parse_list(const std::string& s) {
    std::vector<double> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (!item.empty()) out.push_back(std::stod(item));
    }
    return out;
}

std::vector<int> parse_grid(const std::string& s) {
    std::vector<int> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, 'x')) out.push_back(std::stoi(item));
    return out;
}

cplx parse_complex(const std::string& s) {
    auto v = parse_list(s);
    if (v.empty() || v.size() > 2) throw std::invalid_argument("bad complex: " + s);
    return {v[0], v.size() == 2 ? v[1] : 0.0};
}

struct EvalOptions {
    std::string family;
    double ell0 = 0, ell1_re = 0, ell1_im = 0;
    double s = 0, m = 0, spin = 0, p = 0;
    int n = 0;
    std::string sign = "+";
    std::string lambda_str, mu_str;
    std::string point_str, grid_str;
    std::string out = "-";
};

struct Column {
    std::string name;
    double lo, hi;
    bool periodic;
};

std::vector<Column> columns_for(const std::string& family) {
    constexpr double kHalfPi = std::numbers::pi / 2;
    constexpr double kTwoPi = 2 * std::numbers::pi;
    if (family == "sl2c")
        return {{"theta0", 0.1, kHalfPi - 0.1, false}, {"theta1", -0.5, 0.5, false},
                {"phi_plus0", 0.0, kTwoPi, true},      {"phi_plus1", -0.5, 0.5, false},
                {"phi_minus0", 0.0, kTwoPi, true},     {"phi_minus1", -0.5, 0.5, false}};
    if (family == "su2")
        return {{"theta", 0.05, kHalfPi - 0.05, false},
                {"phi_plus", 0.0, kTwoPi, true},
                {"phi_minus", 0.0, kTwoPi, true}};
    if (family == "su11-disc" || family == "su11-cont")
        return {{"rho", 0.1, 3.0, false},
                {"phi_plus", 0.0, kTwoPi, true},
                {"phi_minus", 0.0, kTwoPi, true}};
    if (family == "e2")
        return {{"r", 0.1, 3.0, false},
                {"phi_plus", 0.0, kTwoPi, true},
                {"phi_minus", 0.0, kTwoPi, true}};
    if (family == "e2-compact")
        return {{"psi", 0.0, kTwoPi, true},
                {"phi_plus", 0.0, kTwoPi, true},
                {"phi_minus", 0.0, kTwoPi, true}};
    throw std::invalid_argument("unknown family: " + family);
}

int cmd_eval(const EvalOptions& opt) {
    // build the evaluator first: an ill-formed label must fail before any file
    // is created
    std::function<cplx(const std::vector<double>&)> evaluate;
    std::string label_desc;
    Covering covering{};
    try {
        if (opt.family == "sl2c") {
            SL2CLabel label(opt.ell0, cplx(opt.ell1_re, opt.ell1_im));
            double s = opt.s, m = opt.m;
            k_range(label.ell0, s, m);  // validates the weight lattice
            label_desc = label.str() + " s=" + format_double(s) + " m=" + format_double(m);
            covering = covering_required(label);
            evaluate = [label, s, m](const std::vector<double>& c) {
                ComplexAngles p{c[0], c[1], c[2], c[3], c[4], c[5]};
                return psi_sl2c(label, s, m, p);
            };
        } else if (opt.family == "su2") {
            SU2Label label(opt.spin);
            double m = opt.m;
            auto fam = make_su2_phi(label, m);
            label_desc = label.str() + " m=" + format_double(m);
            covering = covering_required(label);
            evaluate = [fam](const std::vector<double>& c) {
                Coords x;
                x.dim = 3;
                x.v = {c[0], c[1], c[2], 0, 0, 0};
                return fam->value(x);
            };
        } else if (opt.family == "su11-disc") {
            SU11DiscLabel label(opt.s, opt.sign == "-" ? DiscSign::minus : DiscSign::plus,
                                opt.n);
            auto fam = make_su11_disc(label);
            label_desc = label.str();
            covering = covering_required(label);
            evaluate = [fam](const std::vector<double>& c) {
                if (!(c[0] > 0)) throw std::domain_error("rho <= 0");
                Coords x;
                x.dim = 3;
                x.v = {c[0], c[1], c[2], 0, 0, 0};
                return fam->value(x);
            };
        } else if (opt.family == "su11-cont") {
            SU11ContLabel label(parse_complex(opt.lambda_str), parse_complex(opt.mu_str),
                                opt.n);
            auto fam = make_su11_cont(label);
            label_desc = label.str();
            covering = covering_required(label);
            evaluate = [fam](const std::vector<double>& c) {
                if (!(c[0] > 0)) throw std::domain_error("rho <= 0");
                Coords x;
                x.dim = 3;
                x.v = {c[0], c[1], c[2], 0, 0, 0};
                return fam->value(x);
            };
        } else if (opt.family == "e2" || opt.family == "e2-compact") {
            E2Label label(opt.p, opt.s, opt.n);
            auto fam = opt.family == "e2" ? make_e2_cone(label) : make_e2_compact(label);
            bool cone = opt.family == "e2";
            label_desc = label.str();
            covering = covering_required(label);
            evaluate = [fam, cone](const std::vector<double>& c) {
                if (cone && !(c[0] > 0)) throw std::domain_error("removed apex");
                Coords x;
                x.dim = 3;
                x.v = {c[0], c[1], c[2], 0, 0, 0};
                return fam->value(x);
            };
        } else {
            throw std::invalid_argument("unknown family: " + opt.family);
        }
    } catch (const std::exception& e) {
        std::cerr << "invalid label: " << e.what() << "\n";
        return kExitUsage;
    }

    auto cols = columns_for(opt.family);
    std::vector<std::vector<double>> rows;
    try {
        if (!opt.point_str.empty()) {
            auto pt = parse_list(opt.point_str);
            if (pt.size() != cols.size())
                throw std::invalid_argument("point needs " + std::to_string(cols.size()) +
                                            " coordinates");
            rows.push_back(pt);
        } else if (!opt.grid_str.empty()) {
            auto counts = parse_grid(opt.grid_str);
            if (counts.size() != cols.size())
                throw std::invalid_argument("grid needs " + std::to_string(cols.size()) +
                                            " counts");
            std::vector<double> cur(cols.size());
            std::function<void(size_t)> rec = [&](size_t i) {
                if (i == cols.size()) {
                    rows.push_back(cur);
                    return;
                }
                int n = counts[i];
                if (n < 1) throw std::invalid_argument("grid counts must be positive");
                for (int k = 0; k < n; ++k) {
                    double span = cols[i].hi - cols[i].lo;
                    cur[i] = cols[i].periodic ? cols[i].lo + span * k / n
                                              : cols[i].lo + span * (k + 0.5) / n;
                    rec(i + 1);
                }
            };
            rec(0);
        } else {
            throw std::invalid_argument("eval needs --point or --grid");
        }
    } catch (const std::exception& e) {
        std::cerr << "bad eval request: " << e.what() << "\n";
        return kExitUsage;
    }

    std::ostringstream body;
    body << "# family=" << opt.family << " label=" << label_desc
         << " covering=" << covering.str() << "\n";
    for (const auto& c : cols) body << c.name << ",";
    body << "re,im\n";
    for (const auto& row : rows) {
        cplx v;
        try {
            v = evaluate(row);
        } catch (const std::exception& e) {
            std::cerr << "evaluation failed: " << e.what() << "\n";
            return kExitUsage;
        }
        for (double c : row) body << format_double(c) << ",";
        body << format_double(v.real()) << "," << format_double(v.imag()) << "\n";
    }
    if (opt.out == "-") {
        std::cout << body.str();
        return kExitOk;
    }
    std::ofstream out(opt.out);
    if (!out) {
        std::cerr << "cannot open output file: " << opt.out << "\n";
        return kExitIo;
    }
    out << body.str();
    out.flush();
    if (!out) {
        std::cerr << "write failed: " << opt.out << "\n";
        return kExitIo;
    }
    return kExitOk;
}

struct CheckOptions {
    std::string suite;
    std::string algebra = "all";
    std::string family = "all";
    CheckConfig cfg;
    std::vector<std::string> tol_overrides;
    std::string out = "-";
};

int apply_tolerance_overrides(CheckConfig& cfg, const std::vector<std::string>& ov) {
    std::map<std::string, double*> slots = {
        {"commutator", &cfg.tol_commutator},
        {"ladder-fd", &cfg.tol_ladder_fd},
        {"ladder-analytic", &cfg.tol_ladder_analytic},
        {"spinor", &cfg.tol_spinor},
        {"harmonic-fd", &cfg.tol_harmonic_fd},
        {"harmonic-analytic", &cfg.tol_harmonic_analytic},
        {"gram-su2", &cfg.tol_gram_su2},
        {"gram-su11", &cfg.tol_gram_su11},
        {"iab", &cfg.tol_iab},
        {"casimir", &cfg.tol_casimir},
        {"e2-casimir", &cfg.tol_e2_casimir},
        {"dual", &cfg.tol_dual},
        {"window-orth", &cfg.tol_window_orth},
        {"window-ratio", &cfg.tol_window_ratio},
    };
    for (const auto& o : ov) {
        auto eq = o.find('=');
        if (eq == std::string::npos) {
            std::cerr << "bad --tol override (want name=value): " << o << "\n";
            return kExitUsage;
        }
        auto it = slots.find(o.substr(0, eq));
        if (it == slots.end()) {
            std::cerr << "unknown tolerance name: " << o.substr(0, eq) << "\n";
            return kExitUsage;
        }
        *it->second = std::stod(o.substr(eq + 1));
    }
    return kExitOk;
}

int cmd_check(const CheckOptions& opt) {
    CheckConfig cfg = opt.cfg;
    if (int rc = apply_tolerance_overrides(cfg, opt.tol_overrides); rc != kExitOk) return rc;
    std::vector<CheckReport> reports;
    try {
        if (opt.suite == "commutators" && opt.algebra != "all")
            reports = check_commutators(opt.algebra, cfg);
        else if (opt.suite == "ladder" && opt.family != "all")
            reports = check_ladder(opt.family, cfg);
        else if (opt.suite == "harmonic" && opt.family != "all")
            reports = check_harmonic(opt.family, cfg);
        else if (opt.suite == "gram" && opt.family != "all")
            reports = check_gram(opt.family, cfg);
        else
            reports = run_suite(opt.suite, cfg);
    } catch (const std::invalid_argument& e) {
        std::cerr << "bad check request: " << e.what() << "\n";
        return kExitUsage;
    }
    std::ostringstream body;
    for (const auto& r : reports) body << r.to_jsonl(cfg.timing) << "\n";
    std::cerr << "seed: " << cfg.seed << "\n";
    if (opt.out == "-") {
        std::cout << body.str();
    } else {
        std::ofstream out(opt.out);
        if (!out) {
            std::cerr << "cannot open output file: " << opt.out << "\n";
            return kExitIo;
        }
        out << body.str();
        if (!out) return kExitIo;
    }
    for (const auto& r : reports)
        if (!r.pass) return kExitCheckFailure;
    return kExitOk;
}

struct SweepOptions {
    std::string r_list;
    std::string generators = "iJ+,iJ-";
    std::string out = "-";
    unsigned long long seed = 42;
    double exponent_tol = 0.05;
};

int cmd_contract_sweep(const SweepOptions& opt) {
    std::vector<double> rs;
    try {
        rs = parse_list(opt.r_list);
    } catch (const std::exception& e) {
        std::cerr << "bad r list: " << e.what() << "\n";
        return kExitUsage;
    }
    if (rs.empty()) {
        std::cerr << "empty r list\n";
        return kExitUsage;
    }
    for (double r : rs)
        if (!(r > 1.0)) {
            std::cerr << "r values must exceed 1 (got " << r << ")\n";
            return kExitUsage;
        }
    std::vector<std::string> gens;
    {
        std::stringstream ss(opt.generators);
        std::string g;
        while (std::getline(ss, g, ',')) gens.push_back(g);
    }
    Rng rng(opt.seed);
    std::vector<std::pair<double, double>> angles;
    for (int i = 0; i < 12; ++i)
        angles.emplace_back(rng.uniform(0, 2 * std::numbers::pi),
                            rng.uniform(0, 2 * std::numbers::pi));
    auto f = TestFunction::random(Manifold::Cone, rng, 3, 2, 1);
    std::ostringstream body;
    body << "r,generator,residual\n";
    std::ostringstream trailer;
    trailer << "# {\"seed\":" << opt.seed << ",\"exponents\":{";
    bool ok = true, first = true;
    for (const auto& g : gens) {
        ContractionCurve curve;
        try {
            curve = contraction_residual_curve(g, [&](const Coords& x) { return f(x); },
                                               angles, rs);
        } catch (const std::exception& e) {
            std::cerr << "sweep failed: " << e.what() << "\n";
            return kExitUsage;
        }
        for (size_t i = 0; i < rs.size(); ++i)
            body << format_double(rs[i]) << "," << g << ","
                 << format_double(curve.residuals[i]) << "\n";
        if (!first) trailer << ",";
        first = false;
        trailer << "\"" << g << "\":";
        if (curve.fitted_exponent) {
            trailer << format_double(*curve.fitted_exponent);
            if (*curve.fitted_exponent < 1.0 - opt.exponent_tol) ok = false;
        } else {
            trailer << "null";
        }
    }
    trailer << "}}";
    body << trailer.str() << "\n";
    std::cerr << "seed: " << opt.seed << "\n";
    if (opt.out == "-") {
        std::cout << body.str();
    } else {
        std::ofstream out(opt.out);
        if (!out) {
            std::cerr << "cannot open output file: " << opt.out << "\n";
            return kExitIo;
        }
        out << body.str();
        if (!out) return kExitIo;
    }
    return ok ? kExitOk : kExitCheckFailure;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"harmonic realizations of the three dimensional Lie groups"};
    app.require_subcommand(1);

    EvalOptions eopt;
    auto* eval = app.add_subcommand("eval", "evaluate a family member on points or a grid");
    eval->add_option("family", eopt.family,
                     "sl2c | su2 | su11-disc | su11-cont | e2 | e2-compact")
        ->required();
    eval->add_option("--ell0", eopt.ell0);
    eval->add_option("--ell1-re", eopt.ell1_re);
    eval->add_option("--ell1-im", eopt.ell1_im);
    eval->add_option("--s", eopt.s);
    eval->add_option("--m", eopt.m);
    eval->add_option("--spin,--ell", eopt.spin);
    eval->add_option("--n", eopt.n);
    eval->add_option("--sign", eopt.sign, "+ or - (discrete series)");
    eval->add_option("--lambda", eopt.lambda_str, "re[,im]");
    eval->add_option("--mu", eopt.mu_str, "re[,im]");
    eval->add_option("--p", eopt.p);
    eval->add_option("--point", eopt.point_str, "comma separated chart coordinates");
    eval->add_option("--grid", eopt.grid_str, "per-coordinate counts, e.g. 8x8x8");
    eval->add_option("--out", eopt.out, "output CSV path ('-' for stdout)");

    CheckOptions copt;
    auto* check = app.add_subcommand("check", "run a verification suite, JSON lines out");
    check->add_option("suite", copt.suite,
                      "commutators | ladder | harmonic | gram | spinor-table | contraction "
                      "| e2-window | casimir | dual-formula | all")
        ->required();
    check->add_option("--algebra", copt.algebra, "sl2c | su2 | su11 | e2 | all");
    check->add_option("--family", copt.family,
                      "sl2c | su2 | su11-disc | su11-cont | e2 | iab | all");
    check->add_option("--seed", copt.cfg.seed);
    check->add_option("--functions", copt.cfg.n_functions);
    check->add_option("--points", copt.cfg.n_points);
    check->add_option("--threads", copt.cfg.threads);
    check->add_option("--h-step", copt.cfg.scheme.h);
    check->add_option("--guard", copt.cfg.scheme.guard);
    check->add_option("--nodes", copt.cfg.quad.n_polar);
    check->add_option("--rho-max", copt.cfg.quad.rho_max);
    check->add_option("--window", copt.cfg.quad.n_psi);
    check->add_option("--covering", copt.cfg.quad.n_phi_plus,
                      "uniform nodes per phi period");
    check->add_option("--tol", copt.tol_overrides,
                      "tolerance override name=value (repeatable)");
    check->add_flag("--timing", copt.cfg.timing, "embed wall time in reports");
    check->add_option("--out", copt.out, "output JSONL path ('-' for stdout)");

    SweepOptions sopt;
    auto* sweep = app.add_subcommand("contract-sweep",
                                     "operator residuals against the r -> inf limit");
    sweep->add_option("--r-list", sopt.r_list, "comma separated radii > 1")->required();
    sweep->add_option("--generators", sopt.generators, "default iJ+,iJ-");
    sweep->add_option("--seed", sopt.seed);
    sweep->add_option("--exponent-tol", sopt.exponent_tol);
    sweep->add_option("--out", sopt.out, "output CSV path ('-' for stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (eval->parsed()) return cmd_eval(eopt);
        if (check->parsed()) return cmd_check(copt);
        if (sweep->parsed()) return cmd_contract_sweep(sopt);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
