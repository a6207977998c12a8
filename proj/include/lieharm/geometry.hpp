#pragma once

#include "lieharm/liealg.hpp"

namespace lieharm {

/// Laplace-Beltrami configuration: manifold tag plus the second-derivative
/// stencil (4th-order central, step h).
struct LaplacianSpec {
    Manifold manifold = Manifold::S3;
    double h = 1e-3;
    double guard = 1e-3;
};

/// 4th-order central second derivative along coordinate i.
template <typename F>
cplx second_derivative(F&& f, const Coords& x, int i, double h) {
    Coords xp = x, xm = x, xp2 = x, xm2 = x;
    xp[i] += h;
    xm[i] -= h;
    xp2[i] += 2 * h;
    xm2[i] -= 2 * h;
    return (-(f(xp2) + f(xm2)) + 16.0 * (f(xp) + f(xm)) - 30.0 * f(x)) / (12.0 * h * h);
}

/// The printed coordinate Laplacian of the manifold, evaluated with finite
/// differences.  Cone uses the contracted radial operator
/// Delta_c = -(1/r) d_r (r^3 d_r).
cplx laplacian_apply(const LaplacianSpec& spec, const PointFn& f, const Coords& x);

/// Same Laplacian through the closed-form derivatives of a family member.
cplx laplacian_apply(const LaplacianSpec& spec, const FamilyFunction& f, const Coords& x);

template <typename F>
cplx laplacian_fd(const LaplacianSpec& spec, F&& f, const Coords& x) {
    check_guard(spec.manifold, x, spec.guard);
    const double h = spec.h;
    auto d1 = [&](int i) { return directional_derivative(f, x, i, h); };
    auto d2 = [&](int i) { return second_derivative(f, x, i, h); };
    switch (spec.manifold) {
        case Manifold::S3: {
            cplx th = x[0], c = std::cos(th), s = std::sin(th);
            return d2(0) + (c / s - s / c) * d1(0) + d2(1) / (c * c) + d2(2) / (s * s);
        }
        case Manifold::S3C: {
            cplx th = x[0], c = std::cos(th), s = std::sin(th);
            cplx v = d2(0) + (c / s - s / c) * d1(0) + d2(1) / (c * c) + d2(2) / (s * s);
            cplx tb = x[3], cb = std::cos(tb), sb = std::sin(tb);
            v += d2(3) + (cb / sb - sb / cb) * d1(3) + d2(4) / (cb * cb) + d2(5) / (sb * sb);
            return v;
        }
        case Manifold::H22: {
            cplx rho = x[0], c = std::cosh(rho), s = std::sinh(rho);
            return -(d2(0) + (c / s + s / c) * d1(0)) + d2(1) / (c * c) - d2(2) / (s * s);
        }
        case Manifold::Cone: {
            cplx r = x[0];
            return -(r * r * d2(0) + 3.0 * r * d1(0));
        }
        case Manifold::CompactCone:
            throw std::domain_error("laplacian: no printed form on the compactified cone");
    }
    throw std::logic_error("laplacian_fd");
}

enum class Algebra { sl2c, su2, su11, e2 };

/// Quadratic Casimir evaluated as nested first-order operator applications:
/// su2: R0^2 + (R+R- + R-R+)/2;  su11: J0^2 - (J+J- + J-J+)/2;
/// sl2c: L0^2 + (L+L- + L-L+)/2 + the barred copy;  e2: (P+P- + P-P+)/2.
cplx casimir_from_realization(Algebra algebra, const PointFn& f, const Coords& x,
                              const DiffScheme& scheme = {});

enum class DerivBackend { finite_difference, analytic };

/// |Delta f + c f| with the family's printed harmonic constant c.
double harmonic_residual(const FamilyFunction& f, const Coords& x,
                         DerivBackend backend = DerivBackend::finite_difference,
                         const LaplacianSpec* spec_override = nullptr);

/// Quadratic form of the printed line element applied to displacement dx.
cplx metric_line_element(Manifold m, const Coords& x, const Coords& dx);

}  // namespace lieharm
