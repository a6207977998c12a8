#include "lieharm/liealg.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

namespace lieharm {

namespace {
const cplx I(0.0, 1.0);
constexpr double kHalfPi = std::numbers::pi / 2;
}  // namespace

void check_guard(Manifold m, const Coords& x, double guard) {
    switch (m) {
        case Manifold::S3C: {
            for (int i : {0, 3}) {
                if (std::abs(x[i]) < guard || std::abs(x[i] - kHalfPi) < guard)
                    throw std::domain_error("singular locus: Theta near 0 or pi/2");
            }
            break;
        }
        case Manifold::S3:
            if (std::abs(x[0]) < guard || std::abs(x[0] - kHalfPi) < guard)
                throw std::domain_error("singular locus: theta near 0 or pi/2");
            break;
        case Manifold::H22:
            if (std::abs(x[0]) < guard) throw std::domain_error("singular locus: rho near 0");
            break;
        case Manifold::Cone:
            if (std::abs(x[0]) < guard) throw std::domain_error("singular locus: r near 0");
            break;
        case Manifold::CompactCone:
            break;
    }
}

cplx apply(const FirstOrderOperator& op, const PointFn& f, const Coords& x,
           const DiffScheme& scheme) {
    cplx v = apply_fd(op, f, x, scheme);
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
        throw std::domain_error("apply: non-finite samples");
    return v;
}

cplx apply(const FirstOrderOperator& op, const FamilyFunction& f, const Coords& x,
           const DiffScheme& scheme) {
    check_guard(op.manifold, x, scheme.guard);
    cplx c[6], g[6] = {};
    op.eval_coeffs(x, c);
    f.gradient(x, g);
    cplx tot = 0.0;
    for (int i = 0; i < op.dim; ++i)
        if (op.active >> i & 1u) tot += c[i] * g[i];
    return tot;
}

double commutator_residual(const FirstOrderOperator& A, const FirstOrderOperator& B,
                           const std::vector<OperatorTerm>& expected, const PointFn& f,
                           const Coords& x, const DiffScheme& scheme) {
    return commutator_residual(A, B, expected, [&](const Coords& y) { return f(y); }, x,
                               scheme);
}

const FirstOrderOperator& AlgebraRealization::op(const std::string& gen) const {
    for (const auto& [n, o] : generators)
        if (n == gen) return o;
    throw std::invalid_argument("unknown generator: " + gen);
}

std::vector<OperatorTerm> AlgebraRealization::terms(
    const std::vector<std::pair<cplx, std::string>>& rhs) const {
    std::vector<OperatorTerm> out;
    out.reserve(rhs.size());
    for (const auto& [c, n] : rhs) out.push_back({c, &op(n)});
    return out;
}

// ---------------------------------------------------------------------------
// sl(2,C) on the polarized complex sphere
// ---------------------------------------------------------------------------

namespace {

enum class Sector { unbarred, barred };

/// L_{+,-,0} acting on one polarized sector (coordinates base+0,1,2).
FirstOrderOperator make_l(int kind, Sector sec) {
    // kind: +1, -1, 0
    FirstOrderOperator op;
    op.manifold = Manifold::S3C;
    op.dim = 6;
    int base = sec == Sector::unbarred ? 0 : 3;
    if (kind == 0) {
        op.active = 0x3u << (base + 1);
        op.coeffs = [base](const Coords&, cplx* c) {
            for (int i = 0; i < 6; ++i) c[i] = 0.0;
            c[base + 1] = -I / 2.0;
            c[base + 2] = I / 2.0;
        };
        return op;
    }
    double sgn = kind > 0 ? 1.0 : -1.0;
    op.active = 0x7u << base;
    op.coeffs = [base, sgn](const Coords& x, cplx* c) {
        for (int i = 0; i < 6; ++i) c[i] = 0.0;
        cplx Th = x[base], Pp = x[base + 1], Pm = x[base + 2];
        cplx ph = 0.5 * std::exp(I * sgn * (Pp - Pm));
        c[base] = sgn * ph;
        c[base + 1] = ph * (-I) * std::tan(Th);
        c[base + 2] = ph * (-I) / std::tan(Th);
    };
    return op;
}

FirstOrderOperator combine2(const FirstOrderOperator& a, cplx wa,
                            const FirstOrderOperator& b, cplx wb) {
    FirstOrderOperator op;
    op.manifold = a.manifold;
    op.dim = a.dim;
    op.active = a.active | b.active;
    auto ac = a.coeffs, bc = b.coeffs;
    op.coeffs = [ac, bc, wa, wb](const Coords& x, cplx* c) {
        cplx ca[6], cb[6];
        ac(x, ca);
        bc(x, cb);
        for (int i = 0; i < 6; ++i) c[i] = wa * ca[i] + wb * cb[i];
    };
    return op;
}

}  // namespace

AlgebraRealization sl2c_realization() {
    AlgebraRealization r;
    r.name = "sl2c";
    r.manifold = Manifold::S3C;
    r.dim = 6;
    auto Lp = make_l(+1, Sector::unbarred), Lm = make_l(-1, Sector::unbarred),
         L0 = make_l(0, Sector::unbarred);
    auto Bp = make_l(+1, Sector::barred), Bm = make_l(-1, Sector::barred),
         B0 = make_l(0, Sector::barred);
    r.generators = {
        {"L+", Lp},
        {"L-", Lm},
        {"L0", L0},
        {"Lb+", Bp},
        {"Lb-", Bm},
        {"Lb0", B0},
        {"J+", combine2(Lp, 1.0, Bp, 1.0)},
        {"J-", combine2(Lm, 1.0, Bm, 1.0)},
        {"J0", combine2(L0, 1.0, B0, 1.0)},
        {"K+", combine2(Lp, -I, Bp, I)},
        {"K-", combine2(Lm, -I, Bm, I)},
        {"K0", combine2(L0, -I, B0, I)},
    };
    // eq:geneLor block.  The printed [J-,K+] = 2 K0 entry is a typo: the
    // realized operators (and the J_{mu nu} dictionary) give -2 K0.
    r.relations = {
        {"J0", "J+", {{1.0, "J+"}}},
        {"J0", "J-", {{-1.0, "J-"}}},
        {"J0", "K+", {{1.0, "K+"}}},
        {"J0", "K-", {{-1.0, "K-"}}},
        {"K0", "J+", {{1.0, "K+"}}},
        {"K0", "J-", {{-1.0, "K-"}}},
        {"K0", "K+", {{-1.0, "J+"}}},
        {"K0", "K-", {{1.0, "J-"}}},
        {"J+", "J-", {{2.0, "J0"}}},
        {"J+", "K-", {{2.0, "K0"}}},
        {"K+", "K-", {{-2.0, "J0"}}},
        {"J-", "K+", {{-2.0, "K0"}}},
    };
    for (const char* a : {"L+", "L-", "L0"})
        for (const char* b : {"Lb+", "Lb-", "Lb0"}) r.relations.push_back({a, b, {}});
    return r;
}

AlgebraRealization su2_realization() {
    AlgebraRealization r;
    r.name = "su2";
    r.manifold = Manifold::S3;
    r.dim = 3;
    auto mk = [](int kind) {
        FirstOrderOperator op;
        op.manifold = Manifold::S3;
        op.dim = 3;
        if (kind == 0) {
            op.active = 0x6;
            op.coeffs = [](const Coords&, cplx* c) {
                c[0] = 0.0;
                c[1] = -I / 2.0;
                c[2] = I / 2.0;
            };
            return op;
        }
        double sgn = kind > 0 ? 1.0 : -1.0;
        op.active = 0x7;
        op.coeffs = [sgn](const Coords& x, cplx* c) {
            cplx th = x[0];
            cplx ph = 0.5 * std::exp(I * sgn * (x[1] - x[2]));
            c[0] = sgn * ph;
            c[1] = ph * (-I) * std::tan(th);
            c[2] = ph * (-I) / std::tan(th);
        };
        return op;
    };
    r.generators = {{"R+", mk(+1)}, {"R-", mk(-1)}, {"R0", mk(0)}};
    r.relations = {
        {"R0", "R+", {{1.0, "R+"}}},
        {"R0", "R-", {{-1.0, "R-"}}},
        {"R+", "R-", {{2.0, "R0"}}},
    };
    return r;
}

AlgebraRealization su11_realization() {
    AlgebraRealization r;
    r.name = "su11";
    r.manifold = Manifold::H22;
    r.dim = 3;
    auto mk = [](int kind) {
        FirstOrderOperator op;
        op.manifold = Manifold::H22;
        op.dim = 3;
        if (kind == 0) {
            op.active = 0x6;
            op.coeffs = [](const Coords&, cplx* c) {
                c[0] = 0.0;
                c[1] = -I / 2.0;
                c[2] = I / 2.0;
            };
            return op;
        }
        double sgn = kind > 0 ? 1.0 : -1.0;
        op.active = 0x7;
        op.coeffs = [sgn](const Coords& x, cplx* c) {
            cplx rho = x[0];
            cplx ph = 0.5 * std::exp(I * sgn * (x[1] - x[2]));
            c[0] = -sgn * ph;
            c[1] = ph * (-I) * std::tanh(rho);
            c[2] = ph * I / std::tanh(rho);
        };
        return op;
    };
    r.generators = {{"J+", mk(+1)}, {"J-", mk(-1)}, {"J0", mk(0)}};
    r.relations = {
        {"J0", "J+", {{1.0, "J+"}}},
        {"J0", "J-", {{-1.0, "J-"}}},
        {"J+", "J-", {{-2.0, "J0"}}},
    };
    return r;
}

AlgebraRealization e2_realization(E2Form form) {
    AlgebraRealization r;
    r.name = form == E2Form::cone ? "e2-cone" : "e2-compact";
    r.manifold = form == E2Form::cone ? Manifold::Cone : Manifold::CompactCone;
    r.dim = 3;
    FirstOrderOperator J;
    J.manifold = r.manifold;
    J.dim = 3;
    J.active = 0x6;
    J.coeffs = [](const Coords&, cplx* c) {
        c[0] = 0.0;
        c[1] = -I / 2.0;
        c[2] = I / 2.0;
    };
    auto mkP = [&](double sgn) {
        FirstOrderOperator op;
        op.manifold = r.manifold;
        op.dim = 3;
        op.active = 0x1;
        if (form == E2Form::cone) {
            op.coeffs = [sgn](const Coords& x, cplx* c) {
                c[0] = -sgn * (I / 2.0) * std::exp(I * sgn * (x[1] - x[2])) * x[0];
                c[1] = c[2] = 0.0;
            };
        } else {
            op.coeffs = [sgn](const Coords& x, cplx* c) {
                c[0] = -sgn * 0.5 * std::exp(I * sgn * (x[1] - x[2]));
                c[1] = c[2] = 0.0;
            };
        }
        return op;
    };
    r.generators = {{"P+", mkP(+1.0)}, {"P-", mkP(-1.0)}, {"J", J}};
    r.relations = {
        {"J", "P+", {{1.0, "P+"}}},
        {"J", "P-", {{-1.0, "P-"}}},
        {"P+", "P-", {}},
    };
    return r;
}

// ---------------------------------------------------------------------------
// Ladder expectations
// ---------------------------------------------------------------------------

cplx c_s_coeff(const SL2CLabel& label, double s) {
    // factored roots with the same pinned branch as a_coeff, so the (s - l1)
    // crossing flips C_s and A_s/A_{s-1} together
    cplx root = sqrt_branch(cplx((s * s - label.ell0 * label.ell0) /
                                 (4.0 * s * s - 1.0))) *
                sqrt_branch(s - label.ell1) * sqrt_branch(s + label.ell1);
    return I / s * root;
}

namespace {

void push(std::vector<LadderTerm>& v, cplx coeff, Weight w) {
    if (std::abs(coeff) > 0.0) v.push_back({coeff, w});
}

std::vector<LadderTerm> sl2c_ladder(const SL2CLabel& l, const std::string& g, double s,
                                    double m) {
    std::vector<LadderTerm> out;
    auto sq = [](double x) { return std::sqrt(x); };
    bool down_ok = s - 1.0 >= l.ell0 - 1e-12;
    cplx Cs = down_ok ? c_s_coeff(l, s) : 0.0;
    cplx Cs1 = c_s_coeff(l, s + 1.0);
    cplx mid = -I * l.ell0 * l.ell1 / (s * (s + 1.0));
    if (s == 0.0) mid = 0.0;  // only the (0,l1) tower starts at s=0 where l0=0
    if (g == "J+") {
        if (m + 1.0 <= s) push(out, sq((s - m) * (s + m + 1)), {s, m + 1, 0});
    } else if (g == "J-") {
        if (m - 1.0 >= -s) push(out, sq((s + m) * (s - m + 1)), {s, m - 1, 0});
    } else if (g == "J0") {
        push(out, m, {s, m, 0});
    } else if (g == "K+") {
        if (down_ok && std::abs(m + 1) <= s - 1.0 + 1e-12)
            push(out, Cs * sq((s - m) * (s - m - 1)), {s - 1, m + 1, 0});
        if (m + 1.0 <= s) push(out, mid * sq((s - m) * (s + m + 1)), {s, m + 1, 0});
        push(out, Cs1 * sq((s + m + 1) * (s + m + 2)), {s + 1, m + 1, 0});
    } else if (g == "K-") {
        if (down_ok && std::abs(m - 1) <= s - 1.0 + 1e-12)
            push(out, -Cs * sq((s + m) * (s + m - 1)), {s - 1, m - 1, 0});
        if (m - 1.0 >= -s) push(out, mid * sq((s + m) * (s - m + 1)), {s, m - 1, 0});
        push(out, -Cs1 * sq((s - m + 1) * (s - m + 2)), {s + 1, m - 1, 0});
    } else if (g == "K0") {
        // The printed middle term omits the factor m; the realized operators
        // and the [J+, K0] bracket require it.
        if (down_ok && std::abs(m) <= s - 1.0 + 1e-12)
            push(out, Cs * sq((s - m) * (s + m)), {s - 1, m, 0});
        push(out, mid * m, {s, m, 0});
        push(out, -Cs1 * sq((s + m + 1) * (s - m + 1)), {s + 1, m, 0});
    } else {
        throw std::invalid_argument("sl2c ladder: unknown generator " + g);
    }
    return out;
}

std::vector<LadderTerm> su2_ladder(const SU2Label& l, const std::string& g, double m) {
    std::vector<LadderTerm> out;
    double el = l.ell;
    if (g == "R+") {
        if (m + 1.0 <= el) push(out, std::sqrt((el - m) * (el + m + 1)), {el, m + 1, 0});
    } else if (g == "R-") {
        if (m - 1.0 >= -el) push(out, std::sqrt((el + m) * (el - m + 1)), {el, m - 1, 0});
    } else if (g == "R0") {
        push(out, m, {el, m, 0});
    } else {
        throw std::invalid_argument("su2 ladder: unknown generator " + g);
    }
    return out;
}

std::vector<LadderTerm> su11_disc_ladder(const SU11DiscLabel& l, const std::string& g, int n) {
    std::vector<LadderTerm> out;
    double s = l.s;
    bool plus = l.sign == DiscSign::plus;
    if (g == "J+") {
        if (plus)
            push(out, std::sqrt((n + 1.0) * (n + 2.0 * s)), {0, 0, n + 1});
        else if (n > 0)
            push(out, -std::sqrt(n * (n + 2.0 * s - 1.0)), {0, 0, n - 1});
    } else if (g == "J-") {
        if (plus) {
            if (n > 0) push(out, std::sqrt(n * (n + 2.0 * s - 1.0)), {0, 0, n - 1});
        } else {
            push(out, -std::sqrt((n + 1.0) * (n + 2.0 * s)), {0, 0, n + 1});
        }
    } else if (g == "J0") {
        push(out, (plus ? 1.0 : -1.0) * (n + s), {0, 0, n});
    } else {
        throw std::invalid_argument("su11 ladder: unknown generator " + g);
    }
    return out;
}

std::vector<LadderTerm> su11_cont_ladder(const SU11ContLabel& l, const std::string& g, int n) {
    // Branch-consistent coefficients: (n - 2 lambda) N_n / N_{n+1} and
    // (2 mu + n) N_n / N_{n-1} equal the printed square roots up to the
    // branch of the complex root.
    std::vector<LadderTerm> out;
    cplx lam = l.lambda, mu = l.mu;
    if (g == "J+") {
        cplx c = (double(n) - 2.0 * lam) * su11_cont_norm(lam, mu, n) /
                 su11_cont_norm(lam, mu, n + 1);
        push(out, c, {0, 0, n + 1});
    } else if (g == "J-") {
        cplx c = (2.0 * mu + double(n)) * su11_cont_norm(lam, mu, n) /
                 su11_cont_norm(lam, mu, n - 1);
        push(out, c, {0, 0, n - 1});
    } else if (g == "J0") {
        push(out, double(n) - lam + mu, {0, 0, n});
    } else {
        throw std::invalid_argument("su11 cont ladder: unknown generator " + g);
    }
    return out;
}

std::vector<LadderTerm> e2_ladder(const E2Label& l, const std::string& g, int n) {
    // Realized actions on the cone functions; the abstract kets carry the
    // opposite sign of p (isomorphic under p -> -p).
    std::vector<LadderTerm> out;
    if (g == "P+") {
        push(out, -I * l.p, {0, 0, n + 1});
    } else if (g == "P-") {
        push(out, I * l.p, {0, 0, n - 1});
    } else if (g == "J") {
        push(out, l.s + n, {0, 0, n});
    } else {
        throw std::invalid_argument("e2 ladder: unknown generator " + g);
    }
    return out;
}

}  // namespace

std::vector<LadderTerm> ladder_expected(const RepLabel& label, const std::string& generator,
                                        const Weight& w) {
    return std::visit(
        [&](const auto& l) -> std::vector<LadderTerm> {
            using T = std::decay_t<decltype(l)>;
            if constexpr (std::is_same_v<T, SL2CLabel>)
                return sl2c_ladder(l, generator, w.s, w.m);
            else if constexpr (std::is_same_v<T, SU2Label>)
                return su2_ladder(l, generator, w.m);
            else if constexpr (std::is_same_v<T, SU11DiscLabel>)
                return su11_disc_ladder(l, generator, w.n);
            else if constexpr (std::is_same_v<T, SU11ContLabel>)
                return su11_cont_ladder(l, generator, w.n);
            else
                return e2_ladder(l, generator, w.n);
        },
        label);
}

FamilyPtr family_member(const RepLabel& label, const Weight& w) {
    return std::visit(
        [&](const auto& l) -> FamilyPtr {
            using T = std::decay_t<decltype(l)>;
            if constexpr (std::is_same_v<T, SL2CLabel>)
                return make_sl2c_psi(l, w.s, w.m);
            else if constexpr (std::is_same_v<T, SU2Label>)
                return make_su2_phi(l, w.m);
            else if constexpr (std::is_same_v<T, SU11DiscLabel>)
                return make_su11_disc(SU11DiscLabel(l.s, l.sign, w.n));
            else if constexpr (std::is_same_v<T, SU11ContLabel>)
                return make_su11_cont(SU11ContLabel(l.lambda, l.mu, w.n));
            else
                return make_e2_cone(E2Label(l.p, l.s, w.n));
        },
        label);
}

// ---------------------------------------------------------------------------
// Spinor table
// ---------------------------------------------------------------------------

namespace {

cplx zfun(const Coords& x, int which) {
    // 0: z+, 1: z-, 2: z'+, 3: z'-, 4: conj z+, 5: conj z-, 6: conj z'+, 7: conj z'-
    switch (which) {
        case 0: return std::cos(x[0]) * std::exp(I * x[1]);
        case 1: return std::sin(x[0]) * std::exp(I * x[2]);
        case 2: return std::cos(x[3]) * std::exp(I * x[4]);
        case 3: return std::sin(x[3]) * std::exp(I * x[5]);
        case 4: return std::cos(x[3]) * std::exp(-I * x[4]);
        case 5: return std::sin(x[3]) * std::exp(-I * x[5]);
        case 6: return std::cos(x[0]) * std::exp(-I * x[1]);
        case 7: return std::sin(x[0]) * std::exp(-I * x[2]);
    }
    throw std::logic_error("zfun");
}

}  // namespace

std::vector<SpinorCheck> spinor_action_table(unsigned long long seed, int npoints) {
    auto realization = sl2c_realization();
    struct Entry {
        const char* name;
        const char* gen;
        int src;
        int tgt;  // -1 when annihilated
        cplx coeff;
    };
    // left-handed block under J = L + Lbar, right-handed under Jb = Lbar + L
    const std::vector<Entry> entries = {
        {"J+ z+ = 0", "J+", 0, -1, 0.0},
        {"J+ z- = z+", "J+", 1, 0, 1.0},
        {"J+ zb'+ = -zb'-", "J+", 6, 7, -1.0},
        {"J+ zb'- = 0", "J+", 7, -1, 0.0},
        {"J- z+ = z-", "J-", 0, 1, 1.0},
        {"J- z- = 0", "J-", 1, -1, 0.0},
        {"J- zb'+ = 0", "J-", 6, -1, 0.0},
        {"J- zb'- = -zb'+", "J-", 7, 6, -1.0},
        {"J0 z+ = z+/2", "J0", 0, 0, 0.5},
        {"J0 z- = -z-/2", "J0", 1, 1, -0.5},
        {"J0 zb'+ = -zb'+/2", "J0", 6, 6, -0.5},
        {"J0 zb'- = zb'-/2", "J0", 7, 7, 0.5},
        {"Jb+ z'+ = 0", "J+", 2, -1, 0.0},
        {"Jb+ z'- = z'+", "J+", 3, 2, 1.0},
        {"Jb+ zb+ = -zb-", "J+", 4, 5, -1.0},
        {"Jb+ zb- = 0", "J+", 5, -1, 0.0},
        {"Jb- z'+ = z'-", "J-", 2, 3, 1.0},
        {"Jb- z'- = 0", "J-", 3, -1, 0.0},
        {"Jb- zb+ = 0", "J-", 4, -1, 0.0},
        {"Jb- zb- = -zb+", "J-", 5, 4, -1.0},
        {"Jb0 z'+ = z'+/2", "J0", 2, 2, 0.5},
        {"Jb0 z'- = -z'-/2", "J0", 3, 3, -0.5},
        {"Jb0 zb+ = -zb+/2", "J0", 4, 4, -0.5},
        {"Jb0 zb- = zb-/2", "J0", 5, 5, 0.5},
    };
    std::mt19937_64 rng(seed);
    auto uni = [&rng](double a, double b) {
        return a + (b - a) * ((rng() >> 11) * 0x1.0p-53);
    };
    std::vector<Coords> pts;
    for (int i = 0; i < npoints; ++i) {
        ComplexAngles p;
        p.theta0 = uni(0.2, kHalfPi - 0.2);
        p.theta1 = uni(-0.4, 0.4);
        p.phiP0 = uni(0.0, 2 * std::numbers::pi);
        p.phiP1 = uni(-0.4, 0.4);
        p.phiM0 = uni(0.0, 2 * std::numbers::pi);
        p.phiM1 = uni(-0.4, 0.4);
        pts.push_back(coords_of(p));
    }
    DiffScheme scheme;
    std::vector<SpinorCheck> out;
    for (const auto& e : entries) {
        double worst = 0.0;
        const auto& op = realization.op(e.gen);
        for (const auto& x : pts) {
            auto f = [&](const Coords& y) { return zfun(y, e.src); };
            cplx lhs = apply_fd(op, f, x, scheme);
            cplx rhs = e.tgt >= 0 ? e.coeff * zfun(x, e.tgt) : cplx(0.0);
            worst = std::max(worst, std::abs(lhs - rhs));
        }
        out.push_back({e.name, worst});
    }
    return out;
}

}  // namespace lieharm
