#pragma once

#include <functional>
#include <string>
#include <vector>

#include "lieharm/repfun.hpp"

namespace lieharm {

/// Finite-difference configuration shared by the first- and second-order
/// schemes.  Defaults keep truncation near roundoff for band-limited data.
struct DiffScheme {
    double h = 1e-3;        // inner first-order step
    double h_outer = 2e-3;  // outer step for nested second-order schemes
    double guard = 1e-4;    // singular-locus rejection radius
};

/// First-order differential operator: per-coordinate coefficient functions,
/// zero zeroth-order term.
struct FirstOrderOperator {
    Manifold manifold = Manifold::S3;
    int dim = 3;
    unsigned active = 0x7;  // bitmask of coordinates with non-zero coefficients
    std::function<void(const Coords&, cplx*)> coeffs;

    void eval_coeffs(const Coords& x, cplx* out) const { coeffs(x, out); }
};

/// Throws when x is within `guard` of the chart's singular locus.
void check_guard(Manifold m, const Coords& x, double guard);

/// 4th-order central difference of f along coordinate i.
template <typename F>
cplx directional_derivative(F&& f, const Coords& x, int i, double h) {
    Coords xp = x, xm = x, xp2 = x, xm2 = x;
    xp[i] += h;
    xm[i] -= h;
    xp2[i] += 2 * h;
    xm2[i] -= 2 * h;
    return (8.0 * (f(xp) - f(xm)) - (f(xp2) - f(xm2))) / (12.0 * h);
}

/// Sum_i c_i(x) d_i f(x) with finite-difference derivatives.
template <typename F>
cplx apply_fd(const FirstOrderOperator& op, F&& f, const Coords& x,
              const DiffScheme& scheme, double h_override = 0.0) {
    check_guard(op.manifold, x, scheme.guard);
    double h = h_override > 0 ? h_override : scheme.h;
    cplx c[6];
    op.eval_coeffs(x, c);
    cplx tot = 0.0;
    for (int i = 0; i < op.dim; ++i) {
        if (!(op.active >> i & 1u)) continue;
        tot += c[i] * directional_derivative(f, x, i, h);
    }
    return tot;
}

using PointFn = std::function<cplx(const Coords&)>;

/// apply with the finite-difference backend.
cplx apply(const FirstOrderOperator& op, const PointFn& f, const Coords& x,
           const DiffScheme& scheme = {});

/// apply with the exact analytic derivatives of a registered family member.
cplx apply(const FirstOrderOperator& op, const FamilyFunction& f, const Coords& x,
           const DiffScheme& scheme = {});

/// |A(Bf) - B(Af) - expected(f)| at x, second derivatives via nested
/// first-order schemes (inner scheme.h, outer scheme.h_outer).
struct OperatorTerm {
    cplx coeff;
    const FirstOrderOperator* op;
};

template <typename F>
double commutator_residual(const FirstOrderOperator& A, const FirstOrderOperator& B,
                           const std::vector<OperatorTerm>& expected, F&& f,
                           const Coords& x, const DiffScheme& scheme) {
    auto Bf = [&](const Coords& y) { return apply_fd(B, f, y, scheme); };
    auto Af = [&](const Coords& y) { return apply_fd(A, f, y, scheme); };
    cplx ab = apply_fd(A, Bf, x, scheme, scheme.h_outer);
    cplx ba = apply_fd(B, Af, x, scheme, scheme.h_outer);
    cplx exp_val = 0.0;
    for (const auto& t : expected) exp_val += t.coeff * apply_fd(*t.op, f, x, scheme);
    return std::abs(ab - ba - exp_val);
}

double commutator_residual(const FirstOrderOperator& A, const FirstOrderOperator& B,
                           const std::vector<OperatorTerm>& expected, const PointFn& f,
                           const Coords& x, const DiffScheme& scheme = {});

// ---------------------------------------------------------------------------
// Realizations
// ---------------------------------------------------------------------------

struct Relation {
    std::string a, b;                                   // [a, b]
    std::vector<std::pair<cplx, std::string>> expected;  // sum of coeff * generator
};

struct AlgebraRealization {
    std::string name;
    Manifold manifold;
    int dim;
    std::vector<std::pair<std::string, FirstOrderOperator>> generators;
    std::vector<Relation> relations;

    const FirstOrderOperator& op(const std::string& gen) const;
    std::vector<OperatorTerm> terms(const std::vector<std::pair<cplx, std::string>>& rhs) const;
};

/// L/Lbar plus derived J/K operators on the polarized complex sphere.
/// The structure table carries the J/K relations and [L_a, Lbar_b] = 0.
AlgebraRealization sl2c_realization();

/// R+, R-, R0 on (theta, phi+, phi-).
AlgebraRealization su2_realization();

/// J+, J-, J0 on (rho, phi+, phi-), with the -i rescaling baked in.
AlgebraRealization su11_realization();

enum class E2Form { cone, compact };

/// P+, P-, J on the cone (r, phi+, phi-) or its compactification.
AlgebraRealization e2_realization(E2Form form);

// ---------------------------------------------------------------------------
// Closed-form ladder expectations
// ---------------------------------------------------------------------------

struct Weight {
    double s = 0;  // spin (SL2C) / unused
    double m = 0;  // magnetic weight (SL2C, SU2)
    int n = 0;     // ladder index (SU11, E2)
};

struct LadderTerm {
    cplx coeff;
    Weight target;
};

/// Exact closed-form expansion of `generator` applied to the weight function
/// of `label`.  Zero-coefficient terms are dropped; an annihilated weight
/// yields an empty list.
std::vector<LadderTerm> ladder_expected(const RepLabel& label, const std::string& generator,
                                        const Weight& w);

/// Family member for a given label and weight (targets of ladder expansions).
FamilyPtr family_member(const RepLabel& label, const Weight& w);

/// C_s = (i/s) sqrt((s^2-l0^2)(s^2-l1^2)/(4 s^2-1)).
cplx c_s_coeff(const SL2CLabel& label, double s);

// ---------------------------------------------------------------------------
// Spinor action table
// ---------------------------------------------------------------------------

struct SpinorCheck {
    std::string name;
    double max_residual;
};

/// Verifies the 24 printed spinor actions at `npoints` seeded random points.
std::vector<SpinorCheck> spinor_action_table(unsigned long long seed, int npoints);

}  // namespace lieharm
