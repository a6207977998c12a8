#include "lieharm/contract.hpp"

#include <cmath>
#include <stdexcept>

namespace lieharm {

namespace {
const cplx I(0.0, 1.0);
}

AlgebraRealization su2_contracted_ops(double epsilon) {
    if (!(epsilon > 0)) throw std::invalid_argument("su2_contracted_ops: eps must be > 0");
    auto su2 = su2_realization();
    AlgebraRealization r;
    r.name = "su2-contracted";
    r.manifold = Manifold::S3;
    r.dim = 3;
    auto scale = [&](const FirstOrderOperator& op, double w) {
        FirstOrderOperator out = op;
        auto c0 = op.coeffs;
        out.coeffs = [c0, w](const Coords& x, cplx* c) {
            c0(x, c);
            for (int i = 0; i < 6; ++i) c[i] *= w;
        };
        return out;
    };
    r.generators = {{"P+", scale(su2.op("R+"), epsilon)},
                    {"P-", scale(su2.op("R-"), epsilon)},
                    {"J", su2.op("R0")}};
    double e2 = 2.0 * epsilon * epsilon;
    r.relations = {
        {"J", "P+", {{1.0, "P+"}}},
        {"J", "P-", {{-1.0, "P-"}}},
        {"P+", "P-", {{e2, "J"}}},
    };
    return r;
}

namespace {

FirstOrderOperator su11_r_gen(int kind, bool limit) {
    FirstOrderOperator op;
    op.manifold = Manifold::Cone;  // (r, phi+, phi-) chart with r > 1 in use
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
    if (limit) {
        op.coeffs = [sgn](const Coords& x, cplx* c) {
            cplx ph = (I / 2.0) * std::exp(I * sgn * (x[1] - x[2]));
            c[0] = -sgn * ph * x[0];
            c[1] = ph * (-I);
            c[2] = ph * I;
        };
    } else {
        op.coeffs = [sgn](const Coords& x, cplx* c) {
            cplx r = x[0];
            cplx sq = std::sqrt(r * r - 1.0);
            cplx ph = (I / 2.0) * std::exp(I * sgn * (x[1] - x[2]));
            c[0] = -sgn * ph * sq;
            c[1] = ph * (-I) * sq / r;
            c[2] = ph * I * r / sq;
        };
    }
    return op;
}

}  // namespace

AlgebraRealization su11_ops_at_r(double r) {
    if (!(r > 1.0)) throw std::domain_error("su11_ops_at_r: requires r > 1");
    AlgebraRealization out;
    out.name = "su11-at-r";
    out.manifold = Manifold::Cone;
    out.dim = 3;
    out.generators = {{"iJ+", su11_r_gen(+1, false)},
                      {"iJ-", su11_r_gen(-1, false)},
                      {"J0", su11_r_gen(0, false)}};
    out.relations = {
        {"J0", "iJ+", {{1.0, "iJ+"}}},
        {"J0", "iJ-", {{-1.0, "iJ-"}}},
        {"iJ+", "iJ-", {{2.0, "J0"}}},
    };
    return out;
}

AlgebraRealization su11_limit_ops() {
    AlgebraRealization out;
    out.name = "su11-limit";
    out.manifold = Manifold::Cone;
    out.dim = 3;
    out.generators = {{"iJ+", su11_r_gen(+1, true)},
                      {"iJ-", su11_r_gen(-1, true)},
                      {"J0", su11_r_gen(0, true)}};
    out.relations = {
        {"J0", "iJ+", {{1.0, "iJ+"}}},
        {"J0", "iJ-", {{-1.0, "iJ-"}}},
        {"iJ+", "iJ-", {{2.0, "J0"}}},
    };
    return out;
}

ContractionCurve contraction_residual_curve(const std::string& generator, const PointFn& f,
                                            const std::vector<std::pair<double, double>>& angles,
                                            const std::vector<double>& r_samples,
                                            const DiffScheme& scheme) {
    if (r_samples.empty())
        throw std::invalid_argument("contraction_residual_curve: empty r list");
    for (size_t i = 0; i < r_samples.size(); ++i) {
        if (!(r_samples[i] > 1.0))
            throw std::domain_error("contraction_residual_curve: r samples must exceed 1");
        if (i && !(r_samples[i] > r_samples[i - 1]))
            throw std::invalid_argument("contraction_residual_curve: r samples must increase");
    }
    auto limit = su11_limit_ops();
    const auto& op_inf = limit.op(generator);
    ContractionCurve curve;
    curve.r_values = r_samples;
    for (double r : r_samples) {
        auto at_r = su11_ops_at_r(r);
        const auto& op_r = at_r.op(generator);
        double worst = 0.0;
        for (auto [pp, pm] : angles) {
            Coords x;
            x.dim = 3;
            x.v = {r, pp, pm, 0, 0, 0};
            cplx a = apply_fd(op_r, f, x, scheme);
            cplx b = apply_fd(op_inf, f, x, scheme);
            worst = std::max(worst, std::abs(a - b));
        }
        curve.residuals.push_back(worst);
    }
    if (curve.r_values.size() >= 2) {
        // least squares on log(residual) = log C - e log r
        double sx = 0, sy = 0, sxx = 0, sxy = 0;
        int n = 0;
        for (size_t i = 0; i < curve.r_values.size(); ++i) {
            if (curve.residuals[i] <= 0) continue;
            double lx = std::log(curve.r_values[i]), ly = std::log(curve.residuals[i]);
            sx += lx;
            sy += ly;
            sxx += lx * lx;
            sxy += lx * ly;
            ++n;
        }
        if (n >= 2) {
            double slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
            curve.fitted_exponent = -slope;
        }
    }
    return curve;
}

AlgebraRealization real_form_substitution(const AlgebraRealization& r,
                                          RealFormDirection direction) {
    cplx w = direction == RealFormDirection::sl2r_to_su2 ? -I : I;
    AlgebraRealization out;
    out.name = r.name + (direction == RealFormDirection::sl2r_to_su2 ? "+su2conv" : "+sl2rconv");
    out.manifold = r.manifold;
    out.dim = r.dim;
    auto is_ladder = [](const std::string& g) {
        return !g.empty() && (g.back() == '+' || g.back() == '-');
    };
    auto scale = [](const FirstOrderOperator& op, cplx w2) {
        FirstOrderOperator o = op;
        auto c0 = op.coeffs;
        o.coeffs = [c0, w2](const Coords& x, cplx* c) {
            c0(x, c);
            for (int i = 0; i < 6; ++i) c[i] *= w2;
        };
        return o;
    };
    for (const auto& [name, op] : r.generators)
        out.generators.emplace_back(name, is_ladder(name) ? scale(op, w) : op);
    for (const auto& rel : r.relations) {
        Relation nr = rel;
        cplx lhs_scale = (is_ladder(rel.a) ? w : 1.0) * (is_ladder(rel.b) ? w : 1.0);
        for (auto& [c, g] : nr.expected) c = lhs_scale * c / (is_ladder(g) ? w : 1.0);
        out.relations.push_back(nr);
    }
    return out;
}

CompactConePoint compactify(const ConePoint& p) {
    if (!(p.r > 0)) throw std::domain_error("compactify: removed apex");
    return CompactConePoint{std::log(p.r), p.phiPlus, p.phiMinus, p.covering};
}

}  // namespace lieharm
