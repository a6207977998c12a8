#pragma once

#include "lieharm/contract.hpp"
#include "lieharm/geometry.hpp"
#include "lieharm/quad.hpp"
#include "lieharm/report.hpp"
#include "lieharm/testfn.hpp"

namespace lieharm {

/// Shared configuration for the verification suites.  Tolerances default to
/// the library's acceptance values; every field is overridable from the CLI.
struct CheckConfig {
    unsigned long long seed = 42;
    int n_functions = 20;
    int n_points = 100;
    int threads = 0;  // 0: pick from hardware
    bool timing = false;
    DiffScheme scheme{};
    QuadratureSpec quad{};

    double tol_commutator = 1e-6;
    double tol_ladder_fd = 1e-5;
    double tol_ladder_analytic = 1e-9;
    double tol_spinor = 1e-10;
    double tol_harmonic_fd = 1e-4;
    double tol_harmonic_analytic = 1e-8;
    double tol_gram_su2 = 1e-10;
    double tol_gram_su11 = 1e-6;
    double tol_iab = 1e-8;
    double tol_casimir = 1e-4;
    double tol_e2_casimir = 1e-6;
    double tol_dual = 1e-10;
    double tol_window_orth = 1e-12;
    double tol_window_ratio = 1e-6;
    double exponent_window = 0.2;  // structure-constant decay: 2 +- window
    double min_realization_exponent = 1.0;
    double tol_cone_coeff = 1e-12;

    std::map<std::string, std::string> echo() const;
};

/// Independent homogeneous-form evaluation (direct summation over k on the
/// embedded coordinates with zbar_i = conj(z_i)); the oracle for the
/// dual-formula checks.  Kept apart from the angle-form implementation.
cplx psi_sl2c_homogeneous_oracle(const SL2CLabel& label, double s, double m, cplx z1,
                                 cplx z2, cplx zb1, cplx zb2);

std::vector<CheckReport> check_commutators(const std::string& algebra,
                                           const CheckConfig& cfg);
std::vector<CheckReport> check_ladder(const std::string& family, const CheckConfig& cfg);
std::vector<CheckReport> check_harmonic(const std::string& family, const CheckConfig& cfg);
std::vector<CheckReport> check_gram(const std::string& family, const CheckConfig& cfg);
std::vector<CheckReport> check_spinor_table(const CheckConfig& cfg);
std::vector<CheckReport> check_contraction(const CheckConfig& cfg);
std::vector<CheckReport> check_e2_window(const CheckConfig& cfg);
std::vector<CheckReport> check_casimir(const CheckConfig& cfg);
std::vector<CheckReport> check_dual_formula(const CheckConfig& cfg);

/// Dispatch by suite name; "all" runs everything.  Reports come back sorted
/// on (name, label) so concurrency never changes the output bytes.
std::vector<CheckReport> run_suite(const std::string& suite, const CheckConfig& cfg);

std::vector<std::string> suite_names();

}  // namespace lieharm
