#include "lieharm/repfun.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace lieharm {

namespace {
const cplx I(0.0, 1.0);

cplx ipow(cplx z, int n) {
    if (n < 0) return 1.0 / ipow(z, -n);
    cplx r = 1.0;
    while (n) {
        if (n & 1) r *= z;
        z *= z;
        n >>= 1;
    }
    return r;
}

int as_int(double x, const char* what) {
    if (!is_integer(x)) throw std::invalid_argument(std::string(what) + " must be an integer");
    return static_cast<int>(std::llround(x));
}
}  // namespace

Coords coords_of(const ComplexAngles& p) {
    Coords c;
    c.dim = 6;
    c.v = {p.Theta(), p.PhiPlus(), p.PhiMinus(),
           std::conj(p.Theta()), std::conj(p.PhiPlus()), std::conj(p.PhiMinus())};
    return c;
}

Coords coords_of(const S3Point& p) {
    Coords c;
    c.dim = 3;
    c.v = {p.theta, p.phiPlus, p.phiMinus, 0.0, 0.0, 0.0};
    return c;
}

Coords coords_of(const H22Point& p) {
    Coords c;
    c.dim = 3;
    c.v = {p.rho, p.phiPlus, p.phiMinus, 0.0, 0.0, 0.0};
    return c;
}

Coords coords_of(const ConePoint& p) {
    Coords c;
    c.dim = 3;
    c.v = {p.r, p.phiPlus, p.phiMinus, 0.0, 0.0, 0.0};
    return c;
}

Coords coords_of(const CompactConePoint& p) {
    Coords c;
    c.dim = 3;
    c.v = {p.psi, p.phiPlus, p.phiMinus, 0.0, 0.0, 0.0};
    return c;
}

Coords coords_of(const ChartPoint& p) {
    return std::visit([](const auto& q) { return coords_of(q); }, p);
}

std::pair<int, int> k_range(double ell0, double s, double m) {
    if (!is_half_integer(s) || !is_half_integer(m) || !is_half_integer(ell0))
        throw std::invalid_argument("k_range: arguments must be half-integers");
    if (s < ell0 || !is_integer(s - ell0))
        throw std::invalid_argument("k_range: s must be ell0, ell0+1, ...");
    if (m < -s || m > s || !is_integer(s - m))
        throw std::invalid_argument("k_range: m must lie in the weight lattice of s");
    int kmin = std::max(0, as_int(-ell0 - m, "k"));
    int kmax = std::min(as_int(s - ell0, "k"), as_int(s - m, "k"));
    return {kmin, kmax};
}

cplx sqrt_branch(cplx z) {
    // principal square root with a pinned cut: exact-negative-real input maps
    // to +i sqrt(|z|) regardless of the sign of its zero imaginary part
    if (std::abs(z.imag()) <= 1e-14 * std::abs(z.real())) {
        if (z.real() >= 0.0) return std::sqrt(z.real());
        return cplx(0.0, std::sqrt(-z.real()));
    }
    return std::sqrt(z);
}

cplx a_coeff(const SL2CLabel& label, double s) {
    if (s < label.ell0 || !is_integer(s - label.ell0))
        throw std::invalid_argument("a_coeff: s off the weight lattice");
    // Telescoped form of the Gamma ratio:
    //   A_s^2 = prod_{j=l0+1}^{s} (j - l1) / (j + l1),  A_{l0} = 1.
    // Taking the root factor by factor keeps A single branched across
    // adjacent spins, which the three-term K actions rely on.
    const cplx l1 = label.ell1;
    cplx a = 1.0;
    for (double j = label.ell0 + 1.0; j <= s + 1e-9; j += 1.0) {
        cplx num = j - l1, den = j + l1;
        if (std::abs(num) == 0.0) return 0.0;  // tower boundary, e.g. s >= l1
        if (std::abs(den) == 0.0)
            throw std::domain_error("a_coeff: gamma pole at j + ell1 = 0");
        a *= sqrt_branch(num / den);
    }
    return a;
}

// ---------------------------------------------------------------------------
// sl(2,C) psi functions, angle form
// ---------------------------------------------------------------------------

namespace {

/// One multiplicative factor  base^{ exponent }  with cached log-derivatives.
struct LogParts {
    cplx val;   // log of the factor
    cplx d;     // d/dx of the log
    cplx dd;    // d^2/dx^2 of the log
};

class Sl2cPsi final : public FamilyFunction {
public:
    Sl2cPsi(const SL2CLabel& label, double s, double m) : label_(label), s_(s), m_(m) {
        auto [kmin, kmax] = k_range(label.ell0, s, m);
        kmin_ = kmin;
        kmax_ = kmax;
        a_ = a_coeff(label, s);
        double logn = std::log(2.0 * s + 1.0);
        logn += log_factorial(as_int(s + m, "s+m"));
        logn += log_factorial(as_int(s - m, "s-m"));
        logn += log_factorial(as_int(s + label.ell0, "s+l0"));
        logn += log_factorial(as_int(s - label.ell0, "s-l0"));
        lognorm_ = 0.5 * logn;
        alpha_ = label.ell1 - s - 1.0;
        for (int k = kmin_; k <= kmax_; ++k) {
            logden_.push_back(log_factorial(ak(k)) + log_factorial(k) +
                              log_factorial(bk(k)) + log_factorial(ck(k)));
        }
    }

    Manifold manifold() const override { return Manifold::S3C; }
    int dim() const override { return 6; }
    std::string name() const override {
        std::ostringstream os;
        os << "psi_" << label_.str() << "_s" << s_ << "_m" << m_;
        return os.str();
    }
    cplx harmonic_constant() const override {
        return 2.0 * (label_.ell0 * label_.ell0 + label_.ell1 * label_.ell1 - 1.0);
    }

    cplx value(const Coords& x) const override { return eval(x, nullptr, nullptr); }
    void gradient(const Coords& x, cplx out[6]) const override {
        cplx dummy[6];
        eval(x, out, dummy);
    }
    void hessian_diag(const Coords& x, cplx out[6]) const override {
        cplx g[6];
        eval(x, g, out);
    }

    cplx eval0(const Coords& x) const { return eval(x, nullptr, nullptr); }

private:
    int ak(int k) const { return as_int(m_ + label_.ell0 + k, "a_k"); }
    int bk(int k) const { return as_int(s_ - m_ - k, "b_k"); }
    int ck(int k) const { return as_int(s_ - label_.ell0 - k, "c_k"); }

    /// Computes value; fills grad/hess when non-null.
    cplx eval(const Coords& x, cplx* grad, cplx* hess) const {
        const cplx Th = x[0], Pp = x[1], Pm = x[2];
        const cplx ThB = x[3], PpB = x[4], PmB = x[5];
        const cplx cT = std::cos(Th), sT = std::sin(Th);
        const cplx cB = std::cos(ThB), sB = std::sin(ThB);
        // factors with zero exponent are skipped outright, so the chart
        // boundary (where a trig factor vanishes) still evaluates cleanly
        auto xlog = [](double e, cplx z) { return e == 0.0 ? cplx(0.0) : e * std::log(z); };

        // base  B = cos(T)cos(Tb) e^{i(P+ - P+b)} + sin(T)sin(Tb) e^{i(P- - P-b)}
        const cplx Ep = std::exp(I * (Pp - PpB)), Em = std::exp(I * (Pm - PmB));
        const cplx C = cT * cB, S = sT * sB;
        const cplx B = C * Ep + S * Em;
        if (!(B.real() > 0.0))
            throw std::domain_error("psi_sl2c: (Z Zbar) base not in the right half plane");

        // k-sum with log-sum-exp ordering on the term moduli
        const int nk = kmax_ - kmin_ + 1;
        if (nk > 64) throw std::domain_error("psi_sl2c: k range too large");
        cplx q[64];
        double qmax = -1e300;
        for (int j = 0; j < nk; ++j) {
            int k = kmin_ + j;
            double A = ak(k), Bk = bk(k), Ck = ck(k), K = k;
            cplx logt = xlog(A, cT) + xlog(K, cB) + xlog(Bk, sT) + xlog(Ck, sB) +
                        I * (A * Pp - K * PpB + Bk * Pm - Ck * PmB) - logden_[static_cast<size_t>(j)];
            q[j] = logt;
            qmax = std::max(qmax, logt.real());
        }
        if (qmax == -std::numeric_limits<double>::infinity()) {
            if (grad)
                throw std::domain_error(
                    "psi_sl2c: derivatives undefined where every term vanishes");
            return 0.0;
        }
        cplx Ssum = 0.0;
        cplx Sd[6] = {}, Sdd[6] = {};
        const cplx tanT = sT / cT, cotT = cT / sT;
        const cplx tanB = sB / cB, cotB = cB / sB;
        const cplx sec2T = 1.0 / (cT * cT), csc2T = 1.0 / (sT * sT);
        const cplx sec2B = 1.0 / (cB * cB), csc2B = 1.0 / (sB * sB);
        for (int j = 0; j < nk; ++j) {
            int k = kmin_ + j;
            double A = ak(k), Bk = bk(k), Ck = ck(k), K = k;
            double sign = (k % 2 == 0) ? 1.0 : -1.0;
            cplx t = sign * std::exp(q[j] - qmax);
            Ssum += t;
            if (grad) {
                cplx d0 = -A * tanT + Bk * cotT;
                cplx d3 = -K * tanB + Ck * cotB;
                cplx d[6] = {d0, I * A, I * Bk, d3, -I * K, -I * Ck};
                cplx dd0 = -A * sec2T - Bk * csc2T;
                cplx dd3 = -K * sec2B - Ck * csc2B;
                cplx dd[6] = {dd0, 0.0, 0.0, dd3, 0.0, 0.0};
                for (int i = 0; i < 6; ++i) {
                    Sd[i] += d[i] * t;
                    Sdd[i] += (d[i] * d[i] + dd[i]) * t;
                }
            }
        }

        const cplx pref = a_ * std::exp(lognorm_ + qmax) * std::pow(B, alpha_);
        const cplx val = pref * Ssum;
        if (!grad) return val;

        // base derivatives per coordinate
        cplx Bd[6] = {(-sT * cB) * Ep + (cT * sB) * Em,
                      I * C * Ep,
                      I * S * Em,
                      (-cT * sB) * Ep + (sT * cB) * Em,
                      -I * C * Ep,
                      -I * S * Em};
        cplx Bdd[6] = {-B, -C * Ep, -S * Em, -B, -C * Ep, -S * Em};

        const cplx binv = 1.0 / B;
        for (int i = 0; i < 6; ++i) {
            cplx r = Bd[i] * binv;  // dB/B
            grad[i] = pref * (alpha_ * r * Ssum + Sd[i]);
            if (hess) {
                hess[i] = pref * (alpha_ * (alpha_ - 1.0) * r * r * Ssum +
                                  alpha_ * (Bdd[i] * binv) * Ssum +
                                  2.0 * alpha_ * r * Sd[i] + Sdd[i]);
            }
        }
        return val;
    }

    SL2CLabel label_;
    double s_, m_;
    int kmin_ = 0, kmax_ = 0;
    cplx a_;
    double lognorm_ = 0.0;
    cplx alpha_;
    std::vector<double> logden_;
};

// ---------------------------------------------------------------------------
// Power-exponential families:  N * base0^e0 * base1^e1 * exp(i(a x1 + b x2))
// covering SU(2), SU(1,1) discrete/continuous, E2 cone and compact forms.
// ---------------------------------------------------------------------------

enum class RadialKind { trig, hyper, plain, none };

class PowerExp final : public FamilyFunction {
public:
    PowerExp(Manifold man, std::string name, cplx norm, RadialKind kind, cplx e0, cplx e1,
             cplx f0, cplx f1, cplx f2, cplx harm)
        : man_(man), name_(std::move(name)), norm_(norm), kind_(kind), e0_(e0), e1_(e1),
          f0_(f0), f1_(f1), f2_(f2), harm_(harm) {}

    Manifold manifold() const override { return man_; }
    int dim() const override { return 3; }
    std::string name() const override { return name_; }
    cplx harmonic_constant() const override { return harm_; }

    cplx value(const Coords& x) const override {
        auto [v, ld, ldd] = radial(x[0]);
        cplx phase = std::exp(I * (f0_ * x[0] + f1_ * x[1] + f2_ * x[2]));
        return norm_ * v * phase;
    }
    void gradient(const Coords& x, cplx out[6]) const override {
        auto [v, ld, ldd] = radial(x[0]);
        cplx phase = std::exp(I * (f0_ * x[0] + f1_ * x[1] + f2_ * x[2]));
        cplx val = norm_ * v * phase;
        out[0] = (ld + I * f0_) * val;
        out[1] = I * f1_ * val;
        out[2] = I * f2_ * val;
    }
    void hessian_diag(const Coords& x, cplx out[6]) const override {
        auto [v, ld, ldd] = radial(x[0]);
        cplx phase = std::exp(I * (f0_ * x[0] + f1_ * x[1] + f2_ * x[2]));
        cplx val = norm_ * v * phase;
        cplx g0 = ld + I * f0_;
        out[0] = (g0 * g0 + ldd) * val;
        out[1] = -f1_ * f1_ * val;
        out[2] = -f2_ * f2_ * val;
    }

private:
    /// radial factor: value, log-derivative, second log-derivative
    std::tuple<cplx, cplx, cplx> radial(cplx t) const {
        switch (kind_) {
            case RadialKind::trig: {
                cplx c = std::cos(t), s = std::sin(t);
                cplx v = std::exp(e0_ * std::log(c) + e1_ * std::log(s));
                cplx ld = -e0_ * s / c + e1_ * c / s;
                cplx ldd = -e0_ / (c * c) - e1_ / (s * s);
                return {v, ld, ldd};
            }
            case RadialKind::hyper: {
                cplx c = std::cosh(t), s = std::sinh(t);
                cplx v = std::exp(e0_ * std::log(c) + e1_ * std::log(s));
                cplx ld = e0_ * s / c + e1_ * c / s;
                cplx ldd = e0_ / (c * c) - e1_ / (s * s);
                return {v, ld, ldd};
            }
            case RadialKind::plain: {
                cplx v = std::exp(e0_ * std::log(t));
                cplx ld = e0_ / t;
                return {v, ld, -e0_ / (t * t)};
            }
            case RadialKind::none:
                return {1.0, 0.0, 0.0};
        }
        return {1.0, 0.0, 0.0};
    }

    Manifold man_;
    std::string name_;
    cplx norm_;
    RadialKind kind_;
    cplx e0_, e1_;          // exponents of the two radial factors
    cplx f0_, f1_, f2_;     // phase frequencies for (radial coord, phi+, phi-)
    cplx harm_;
};

class S3CMonomial final : public FamilyFunction {
public:
    S3CMonomial(int a, int b, int c, int d) : a_(a), b_(b), c_(c), d_(d) {}
    Manifold manifold() const override { return Manifold::S3C; }
    int dim() const override { return 6; }
    std::string name() const override {
        std::ostringstream os;
        os << "mono[" << a_ << "," << b_ << "," << c_ << "," << d_ << "]";
        return os.str();
    }
    cplx harmonic_constant() const override {
        double ab = a_ + b_, cd = c_ + d_;
        return ab * (ab + 2.0) + cd * (cd + 2.0);
    }
    cplx value(const Coords& x) const override {
        return ipow(std::cos(x[0]), a_) * ipow(std::sin(x[0]), b_) *
               ipow(std::sin(x[3]), c_) * ipow(std::cos(x[3]), d_) *
               std::exp(I * (double(a_) * x[1] + double(b_) * x[2] -
                             double(c_) * x[5] - double(d_) * x[4]));
    }
    void gradient(const Coords& x, cplx out[6]) const override {
        cplx v = value(x);
        cplx tanT = std::tan(x[0]), cotT = 1.0 / tanT;
        cplx tanB = std::tan(x[3]), cotB = 1.0 / tanB;
        out[0] = (-double(a_) * tanT + double(b_) * cotT) * v;
        out[1] = I * double(a_) * v;
        out[2] = I * double(b_) * v;
        out[3] = (-double(d_) * tanB + double(c_) * cotB) * v;
        out[4] = -I * double(d_) * v;
        out[5] = -I * double(c_) * v;
    }
    void hessian_diag(const Coords& x, cplx out[6]) const override {
        cplx v = value(x);
        cplx cT = std::cos(x[0]), sT = std::sin(x[0]);
        cplx cB = std::cos(x[3]), sB = std::sin(x[3]);
        cplx d0 = -double(a_) * sT / cT + double(b_) * cT / sT;
        cplx dd0 = -double(a_) / (cT * cT) - double(b_) / (sT * sT);
        cplx d3 = -double(d_) * sB / cB + double(c_) * cB / sB;
        cplx dd3 = -double(d_) / (cB * cB) - double(c_) / (sB * sB);
        out[0] = (d0 * d0 + dd0) * v;
        out[1] = -double(a_) * double(a_) * v;
        out[2] = -double(b_) * double(b_) * v;
        out[3] = (d3 * d3 + dd3) * v;
        out[4] = -double(d_) * double(d_) * v;
        out[5] = -double(c_) * double(c_) * v;
    }

private:
    int a_, b_, c_, d_;
};

}  // namespace

FamilyPtr make_sl2c_psi(const SL2CLabel& label, double s, double m) {
    return std::make_shared<Sl2cPsi>(label, s, m);
}

FamilyPtr make_su2_phi(const SU2Label& label, double m) {
    double l = label.ell;
    if (m < -l - 1e-12 || m > l + 1e-12 || !is_integer(l - m))
        throw std::invalid_argument("phi_su2: invalid weight m");
    int a = as_int(l + m, "l+m"), b = as_int(l - m, "l-m");
    double logn = 0.5 * (log_factorial(as_int(2 * l + 1, "2l+1")) - log_factorial(a) -
                         log_factorial(b));
    std::ostringstream os;
    os << "phi_" << label.str() << "_m" << m;
    return std::make_shared<PowerExp>(Manifold::S3, os.str(), std::exp(logn),
                                      RadialKind::trig, double(a), double(b), 0.0,
                                      double(a), double(b), 4.0 * l * (l + 1.0));
}

cplx su11_disc_norm(double s, int n) {
    if (is_gamma_pole(cplx(2.0 * s - 1.0))) return 0.0;
    cplx ratio = std::exp(log_gamma(cplx(n + 2.0 * s)) - log_gamma(cplx(2.0 * s - 1.0)) -
                          log_factorial(n));
    return std::sqrt(2.0 * ratio);
}

FamilyPtr make_su11_disc(const SU11DiscLabel& label) {
    double s = label.s;
    int n = label.n;
    cplx norm = su11_disc_norm(s, n);
    double fp = 2.0 * s + n, fm = -double(n);
    if (label.sign == DiscSign::minus) {
        fp = -fp;
        fm = -fm;
    }
    return std::make_shared<PowerExp>(Manifold::H22, "Psi_" + label.str(), norm,
                                      RadialKind::hyper, -(2.0 * s + n), double(n), 0.0,
                                      fp, fm, 4.0 * s * (s - 1.0));
}

cplx su11_cont_norm(cplx lambda, cplx mu, int n) {
    cplx gn = -2.0 * lambda + double(n);
    if (is_gamma_pole(gn)) {
        std::ostringstream os;
        os << "su11_cont_norm: gamma pole at -2*lambda + n = " << gn.real();
        throw std::domain_error(os.str());
    }
    if (is_gamma_pole(2.0 * mu + double(n) + 1.0) || is_gamma_pole(-2.0 * mu - 2.0 * lambda - 1.0))
        return 0.0;
    cplx ratio = std::exp(log_gamma(gn) - log_gamma(2.0 * mu + double(n) + 1.0) -
                          log_gamma(-2.0 * mu - 2.0 * lambda - 1.0));
    return std::sqrt(2.0 * ratio);
}

FamilyPtr make_su11_cont(const SU11ContLabel& label) {
    cplx lam = label.lambda, mu = label.mu;
    int n = label.n;
    cplx norm = su11_cont_norm(lam, mu, n);
    cplx q = (lam + mu) * (lam + mu + 1.0);
    return std::make_shared<PowerExp>(Manifold::H22, "Psi_" + label.str(), norm,
                                      RadialKind::hyper, 2.0 * lam - double(n),
                                      2.0 * mu + double(n), 0.0, -(2.0 * lam - double(n)),
                                      -(2.0 * mu + double(n)), 4.0 * q);
}

FamilyPtr make_e2_cone(const E2Label& label) {
    double norm = 1.0 / std::sqrt(2.0 * std::numbers::pi);
    return std::make_shared<PowerExp>(Manifold::Cone, "Lambda_" + label.str(), norm,
                                      RadialKind::plain, 2.0 * label.p, 0.0, 0.0,
                                      2.0 * label.s + label.n, -double(label.n),
                                      (2.0 + 2.0 * label.p) * 2.0 * label.p);
}

FamilyPtr make_e2_compact(const E2Label& label) {
    // compact form exactly as printed: e^{i 2p Psi} e^{i(n+s) phi+ - i n phi-}
    return std::make_shared<PowerExp>(Manifold::CompactCone,
                                      "Lambda_c_" + label.str(), 1.0, RadialKind::none,
                                      0.0, 0.0, 2.0 * label.p, label.n + label.s,
                                      -double(label.n), 0.0);
}

FamilyPtr make_s3c_monomial(int a, int b, int c, int d) {
    if (a < 0 || b < 0 || c < 0 || d < 0)
        throw std::invalid_argument("monomial powers must be non-negative");
    return std::make_shared<S3CMonomial>(a, b, c, d);
}

cplx psi_sl2c(const SL2CLabel& label, double s, double m, const ComplexAngles& p) {
    if (in_removed_set(ChartPoint{p}))
        throw std::domain_error("psi_sl2c: point lies on a removed cylinder");
    return Sl2cPsi(label, s, m).eval0(coords_of(p));
}

cplx phi_su2(const SU2Label& label, double m, const S3Point& p) {
    return make_su2_phi(label, m)->value(coords_of(p));
}

cplx psi_su11_disc(const SU11DiscLabel& label, const H22Point& p) {
    if (!(p.rho > 0)) throw std::domain_error("psi_su11_disc: rho <= 0");
    return make_su11_disc(label)->value(coords_of(p));
}

cplx psi_su11_cont(const SU11ContLabel& label, const H22Point& p) {
    if (!(p.rho > 0)) throw std::domain_error("psi_su11_cont: rho <= 0");
    return make_su11_cont(label)->value(coords_of(p));
}

cplx lambda_e2(const E2Label& label, const ConePoint& p) {
    if (!(p.r > 0)) throw std::domain_error("lambda_e2: removed apex");
    return make_e2_cone(label)->value(coords_of(p));
}

cplx lambda_e2(const E2Label& label, const CompactConePoint& p) {
    return make_e2_compact(label)->value(coords_of(p));
}

}  // namespace lieharm
