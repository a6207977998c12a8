#include "lieharm/geometry.hpp"

#include <cmath>
#include <stdexcept>

namespace lieharm {

cplx laplacian_apply(const LaplacianSpec& spec, const PointFn& f, const Coords& x) {
    return laplacian_fd(spec, [&](const Coords& y) { return f(y); }, x);
}

cplx laplacian_apply(const LaplacianSpec& spec, const FamilyFunction& f, const Coords& x) {
    check_guard(spec.manifold, x, spec.guard);
    cplx g[6] = {}, h[6] = {};
    f.gradient(x, g);
    f.hessian_diag(x, h);
    switch (spec.manifold) {
        case Manifold::S3: {
            cplx th = x[0], c = std::cos(th), s = std::sin(th);
            return h[0] + (c / s - s / c) * g[0] + h[1] / (c * c) + h[2] / (s * s);
        }
        case Manifold::S3C: {
            cplx th = x[0], c = std::cos(th), s = std::sin(th);
            cplx v = h[0] + (c / s - s / c) * g[0] + h[1] / (c * c) + h[2] / (s * s);
            cplx tb = x[3], cb = std::cos(tb), sb = std::sin(tb);
            v += h[3] + (cb / sb - sb / cb) * g[3] + h[4] / (cb * cb) + h[5] / (sb * sb);
            return v;
        }
        case Manifold::H22: {
            cplx rho = x[0], c = std::cosh(rho), s = std::sinh(rho);
            return -(h[0] + (c / s + s / c) * g[0]) + h[1] / (c * c) - h[2] / (s * s);
        }
        case Manifold::Cone: {
            cplx r = x[0];
            return -(r * r * h[0] + 3.0 * r * g[0]);
        }
        case Manifold::CompactCone:
            throw std::domain_error("laplacian: no printed form on the compactified cone");
    }
    throw std::logic_error("laplacian_apply");
}

cplx casimir_from_realization(Algebra algebra, const PointFn& f, const Coords& x,
                              const DiffScheme& scheme) {
    auto nested = [&](const FirstOrderOperator& A, const FirstOrderOperator& B) {
        auto Bf = [&](const Coords& y) { return apply_fd(B, f, y, scheme); };
        return apply_fd(A, Bf, x, scheme, scheme.h_outer);
    };
    switch (algebra) {
        case Algebra::su2: {
            auto r = su2_realization();
            const auto &p = r.op("R+"), &m = r.op("R-"), &z = r.op("R0");
            return nested(z, z) + 0.5 * (nested(p, m) + nested(m, p));
        }
        case Algebra::su11: {
            auto r = su11_realization();
            const auto &p = r.op("J+"), &m = r.op("J-"), &z = r.op("J0");
            return nested(z, z) - 0.5 * (nested(p, m) + nested(m, p));
        }
        case Algebra::sl2c: {
            auto r = sl2c_realization();
            cplx v = nested(r.op("L0"), r.op("L0")) +
                     0.5 * (nested(r.op("L+"), r.op("L-")) + nested(r.op("L-"), r.op("L+")));
            v += nested(r.op("Lb0"), r.op("Lb0")) +
                 0.5 * (nested(r.op("Lb+"), r.op("Lb-")) + nested(r.op("Lb-"), r.op("Lb+")));
            return v;
        }
        case Algebra::e2: {
            auto r = e2_realization(E2Form::cone);
            const auto &p = r.op("P+"), &m = r.op("P-");
            return 0.5 * (nested(p, m) + nested(m, p));
        }
    }
    throw std::logic_error("casimir_from_realization");
}

double harmonic_residual(const FamilyFunction& f, const Coords& x, DerivBackend backend,
                         const LaplacianSpec* spec_override) {
    LaplacianSpec spec;
    spec.manifold = f.manifold();
    if (spec_override) spec = *spec_override;
    cplx lap;
    if (backend == DerivBackend::analytic) {
        lap = laplacian_apply(spec, f, x);
    } else {
        lap = laplacian_fd(spec, [&](const Coords& y) { return f.value(y); }, x);
    }
    return std::abs(lap + f.harmonic_constant() * f.value(x));
}

cplx metric_line_element(Manifold m, const Coords& x, const Coords& dx) {
    switch (m) {
        case Manifold::S3: {
            cplx c = std::cos(x[0]), s = std::sin(x[0]);
            return dx[0] * dx[0] + c * c * dx[1] * dx[1] + s * s * dx[2] * dx[2];
        }
        case Manifold::H22: {
            cplx c = std::cosh(x[0]), s = std::sinh(x[0]);
            return -dx[0] * dx[0] + c * c * dx[1] * dx[1] - s * s * dx[2] * dx[2];
        }
        case Manifold::S3C: {
            cplx c = std::cos(x[0]), s = std::sin(x[0]);
            cplx v = dx[0] * dx[0] + c * c * dx[1] * dx[1] + s * s * dx[2] * dx[2];
            cplx cb = std::cos(x[3]), sb = std::sin(x[3]);
            v += dx[3] * dx[3] + cb * cb * dx[4] * dx[4] + sb * sb * dx[5] * dx[5];
            return v;
        }
        default:
            throw std::domain_error("metric_line_element: no printed metric for manifold");
    }
}

}  // namespace lieharm
