#include "lieharm/quad.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace lieharm {

namespace {
constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;
}  // namespace

GaussRule gauss_legendre(int n, double a, double b) {
    if (n < 2) throw std::invalid_argument("gauss_legendre: need at least 2 nodes");
    GaussRule rule;
    rule.nodes.resize(n);
    rule.weights.resize(n);
    for (int i = 0; i < (n + 1) / 2; ++i) {
        double x = std::cos(kPi * (i + 0.75) / (n + 0.5));
        double pp = 0.0;
        for (int it = 0; it < 100; ++it) {
            double p0 = 1.0, p1 = 0.0;
            for (int j = 0; j < n; ++j) {
                double p2 = p1;
                p1 = p0;
                p0 = ((2.0 * j + 1.0) * x * p1 - j * p2) / (j + 1.0);
            }
            pp = n * (x * p0 - p1) / (x * x - 1.0);
            double dx = p0 / pp;
            x -= dx;
            if (std::abs(dx) < 1e-15) break;
        }
        double w = 2.0 / ((1.0 - x * x) * pp * pp);
        rule.nodes[i] = 0.5 * (b + a) - 0.5 * (b - a) * x;
        rule.nodes[n - 1 - i] = 0.5 * (b + a) + 0.5 * (b - a) * x;
        rule.weights[i] = rule.weights[n - 1 - i] = 0.5 * (b - a) * w;
    }
    return rule;
}

double tanh_sinh_01(const std::function<double(double, double)>& f, int levels) {
    // trapezoid in u with x(u) = 1/(1 + e^{-pi sinh u}); nodes cluster doubly
    // exponentially at both endpoints
    const double h = std::pow(2.0, -levels);
    const double U = 6.5;
    auto term = [&](double u) {
        double y = kPi * std::sinh(u);
        double t = 1.0 / (1.0 + std::exp(-y));
        double omt = 1.0 / (1.0 + std::exp(y));
        double w = kPi * std::cosh(u) * t * omt;  // dx/du
        if (t <= 0.0 || omt <= 0.0 || w < 1e-300) return 0.0;
        double v = f(t, omt);
        return std::isfinite(v) ? w * v : 0.0;
    };
    double sum = term(0.0);
    for (double u = h; u <= U; u += h) sum += term(u) + term(-u);
    return sum * h;
}

cplx inner_s3(const S3Fn& f, const S3Fn& g, const QuadratureSpec& spec) {
    auto polar = gauss_legendre(spec.n_polar, 0.0, kPi / 2);
    cplx total = 0.0;
    const int np = spec.n_phi_plus, nm = spec.n_phi_minus;
    const double wp = kTwoPi / np, wm = kTwoPi / nm;
    for (int it = 0; it < spec.n_polar; ++it) {
        double th = polar.nodes[it];
        double mw = polar.weights[it] * std::cos(th) * std::sin(th);
        cplx acc = 0.0;
        for (int ip = 0; ip < np; ++ip) {
            double pp = wp * ip;
            for (int im = 0; im < nm; ++im) {
                double pm = wm * im;
                S3Point x{th, pp, pm};
                acc += std::conj(g(x)) * f(x);
            }
        }
        total += mw * acc;
    }
    return total * (wp * wm) / (2.0 * kPi * kPi);
}

cplx inner_h22(const H22Fn& f, const H22Fn& g, const QuadratureSpec& spec, long long q_plus) {
    if (q_plus < 1) throw std::invalid_argument("inner_h22: covering q must be >= 1");
    auto radial = gauss_legendre(spec.n_polar, 0.0, spec.rho_max);
    const int np = spec.n_phi_plus, nm = spec.n_phi_minus;
    const double wp = kTwoPi * double(q_plus) / np, wm = kTwoPi / nm;
    cplx total = 0.0;
    for (size_t ir = 0; ir < radial.nodes.size(); ++ir) {
        double rho = radial.nodes[ir];
        double mw = radial.weights[ir] * std::cosh(rho) * std::sinh(rho);
        cplx acc = 0.0;
        for (int ip = 0; ip < np; ++ip) {
            double pp = wp * ip;
            for (int im = 0; im < nm; ++im) {
                double pm = wm * im;
                H22Point x{rho, pp, pm, Covering{}};
                acc += std::conj(f(x)) * g(x);
            }
        }
        total += mw * acc;
    }
    return total * (wp * wm) / (double(q_plus) * 4.0 * kPi * kPi);
}

cplx inner_h22_windowed(const H22Fn& f, const H22Fn& g, const QuadratureSpec& spec,
                        double window) {
    auto radial = gauss_legendre(spec.n_polar, 0.0, spec.rho_max);
    auto pp_rule = gauss_legendre(spec.n_phi_plus, -window, window);
    const int nm = spec.n_phi_minus;
    const double wm = kTwoPi / nm;
    cplx total = 0.0;
    for (size_t ir = 0; ir < radial.nodes.size(); ++ir) {
        double rho = radial.nodes[ir];
        double mw = radial.weights[ir] * std::cosh(rho) * std::sinh(rho);
        cplx acc = 0.0;
        for (size_t ip = 0; ip < pp_rule.nodes.size(); ++ip) {
            for (int im = 0; im < nm; ++im) {
                H22Point x{rho, pp_rule.nodes[ip], wm * im, Covering{}};
                acc += pp_rule.weights[ip] * std::conj(f(x)) * g(x);
            }
        }
        total += mw * acc;
    }
    return total * wm * 2.0 / (4.0 * kPi * kPi);
}

S3CInnerResult inner_s3c(const S3CFn& f, const S3CFn& g, const QuadratureSpec& spec) {
    auto t0_rule = gauss_legendre(spec.n_polar, 0.0, kPi / 2);
    auto im_rule = gauss_legendre(spec.n_imag, -spec.box_imag, spec.box_imag);
    const int np = spec.n_phi_plus, nm = spec.n_phi_minus;
    const double wp = kTwoPi / np, wm = kTwoPi / nm;
    cplx total = 0.0;
    for (size_t i0 = 0; i0 < t0_rule.nodes.size(); ++i0) {
        for (size_t i1 = 0; i1 < im_rule.nodes.size(); ++i1) {
            ComplexAngles base;
            base.theta0 = t0_rule.nodes[i0];
            base.theta1 = im_rule.nodes[i1];
            cplx Th = base.Theta();
            cplx measure = std::cos(Th) * std::sin(Th) * std::cos(std::conj(Th)) *
                           std::sin(std::conj(Th));
            double w01 = t0_rule.weights[i0] * im_rule.weights[i1];
            cplx acc = 0.0;
            for (int ip = 0; ip < np; ++ip) {
                for (size_t ip1 = 0; ip1 < im_rule.nodes.size(); ++ip1) {
                    for (int im = 0; im < nm; ++im) {
                        for (size_t im1 = 0; im1 < im_rule.nodes.size(); ++im1) {
                            ComplexAngles x = base;
                            x.phiP0 = wp * ip;
                            x.phiP1 = im_rule.nodes[ip1];
                            x.phiM0 = wm * im;
                            x.phiM1 = im_rule.nodes[im1];
                            double w = im_rule.weights[ip1] * im_rule.weights[im1];
                            acc += w * std::conj(f(x)) * g(x);
                        }
                    }
                }
            }
            total += w01 * measure * acc;
        }
    }
    total *= (wp * wm) / (kTwoPi * kTwoPi);
    bool finite = std::isfinite(total.real()) && std::isfinite(total.imag());
    return {total, finite, spec.box_imag};
}

double i_ab_closed(double a, double b) {
    if (!(a + b < -1.0)) {
        std::ostringstream os;
        os << "i_ab_closed: divergent, requires a+b < -1 (a+b = " << a + b << ")";
        throw std::domain_error(os.str());
    }
    if (!(b > -1.0)) {
        std::ostringstream os;
        os << "i_ab_closed: divergent, requires b > -1 (b = " << b << ")";
        throw std::domain_error(os.str());
    }
    return 0.5 *
           std::exp(std::lgamma(1.0 + b) + std::lgamma(-a - b - 1.0) - std::lgamma(-a));
}

double i_ab_numeric(double a, double b, int levels) {
    if (!(a + b < -1.0))
        throw std::domain_error("i_ab_numeric: divergent, requires a+b < -1");
    if (!(b > -1.0)) throw std::domain_error("i_ab_numeric: divergent, requires b > -1");
    // t = 1/r^2:  I = (1/2) Int_0^1 t^{-a-b-2} (1-t)^b dt
    return 0.5 * tanh_sinh_01(
                     [a, b](double t, double omt) {
                         return std::pow(t, -a - b - 2.0) * std::pow(omt, b);
                     },
                     levels);
}

GramResult gram_matrix(const std::vector<FamilyPtr>& members,
                       const std::vector<Covering>& coverings, const QuadratureSpec& spec) {
    if (members.empty()) throw std::invalid_argument("gram_matrix: no members");
    if (coverings.size() != members.size())
        throw std::invalid_argument("gram_matrix: covering list size mismatch");
    Manifold man = members.front()->manifold();
    for (const auto& m : members)
        if (m->manifold() != man)
            throw std::invalid_argument("gram_matrix: members on different manifolds");
    Covering total{};
    for (const auto& c : coverings) {
        if (!c.plus.is_finite() || !c.minus.is_finite())
            throw std::invalid_argument(
                "gram_matrix: infinite covering member is not normalizable here");
        total = covering_lcm(total, c);
    }
    long long q = total.plus.q();

    // sample every member on the shared grid once
    const int np = spec.n_phi_plus, nm = spec.n_phi_minus;
    GaussRule radial = man == Manifold::S3 ? gauss_legendre(spec.n_polar, 0.0, kPi / 2)
                                           : gauss_legendre(spec.n_polar, 0.0, spec.rho_max);
    const double wp = kTwoPi * double(q) / np, wm = kTwoPi / nm;
    const size_t nr = radial.nodes.size();
    const size_t npts = nr * static_cast<size_t>(np) * static_cast<size_t>(nm);
    std::vector<double> mweight(npts);
    std::vector<std::vector<cplx>> vals(members.size(), std::vector<cplx>(npts));
    size_t idx = 0;
    for (size_t ir = 0; ir < nr; ++ir) {
        double rc = radial.nodes[ir];
        double mw = radial.weights[ir] *
                    (man == Manifold::S3 ? std::cos(rc) * std::sin(rc)
                                         : std::cosh(rc) * std::sinh(rc));
        for (int ip = 0; ip < np; ++ip) {
            for (int im = 0; im < nm; ++im, ++idx) {
                mweight[idx] = mw;
                Coords x;
                x.dim = 3;
                x.v = {rc, wp * ip, wm * im, 0, 0, 0};
                for (size_t k = 0; k < members.size(); ++k) vals[k][idx] = members[k]->value(x);
            }
        }
    }
    double norm = man == Manifold::S3 ? wp * wm / (2.0 * kPi * kPi)
                                      : wp * wm / (double(q) * 4.0 * kPi * kPi);
    GramResult out;
    out.covering_q = q;
    out.matrix.assign(members.size(), std::vector<cplx>(members.size()));
    for (size_t i = 0; i < members.size(); ++i) {
        for (size_t j = 0; j < members.size(); ++j) {
            cplx acc = 0.0;
            // S3 product is conj(second) * first; H22 product is conj(first) * second
            for (size_t t = 0; t < npts; ++t) {
                cplx term = man == Manifold::S3 ? std::conj(vals[j][t]) * vals[i][t]
                                                : std::conj(vals[i][t]) * vals[j][t];
                acc += mweight[t] * term;
            }
            out.matrix[i][j] = acc * norm;
            double dev = std::abs(out.matrix[i][j] - (i == j ? cplx(1.0) : cplx(0.0)));
            if (i == j)
                out.max_diag_dev = std::max(out.max_diag_dev, dev);
            else
                out.max_offdiag = std::max(out.max_offdiag, dev);
        }
    }
    return out;
}

cplx inner_e2_windowed(const E2CompactFn& f, const E2CompactFn& g, double T, long long q,
                       const QuadratureSpec& spec) {
    if (q < 1) throw std::invalid_argument("inner_e2_windowed: q must be >= 1");
    auto psi_rule = gauss_legendre(spec.n_psi, -T, T);
    const int np = spec.n_phi_plus, nm = spec.n_phi_minus;
    const double wp = kTwoPi * double(q) / np, wm = kTwoPi / nm;
    cplx total = 0.0;
    for (size_t is = 0; is < psi_rule.nodes.size(); ++is) {
        cplx acc = 0.0;
        for (int ip = 0; ip < np; ++ip) {
            for (int im = 0; im < nm; ++im) {
                CompactConePoint x{psi_rule.nodes[is], wp * ip, wm * im, Covering{}};
                acc += std::conj(f(x)) * g(x);
            }
        }
        total += psi_rule.weights[is] * acc;
    }
    return total * (wp * wm) / (double(q) * 4.0 * kPi * kPi);
}

double haar_e2_density(const ConePoint& p) {
    if (!(p.r > 0)) throw std::domain_error("haar_e2_density: removed apex");
    return 1.0 / p.r;
}

}  // namespace lieharm
