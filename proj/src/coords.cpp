#include "lieharm/coords.hpp"

#include <cmath>
#include <numbers>
#include <numeric>
#include <stdexcept>

namespace lieharm {

std::string manifold_name(Manifold m) {
    switch (m) {
        case Manifold::S3C: return "s3c";
        case Manifold::S3: return "s3";
        case Manifold::H22: return "h22";
        case Manifold::Cone: return "cone";
        case Manifold::CompactCone: return "compact-cone";
    }
    return "?";
}

Multiplicity Multiplicity::finite(long long q) {
    if (q <= 0) throw std::invalid_argument("Multiplicity: q must be positive");
    return Multiplicity(q, false);
}

long long Multiplicity::q() const {
    if (infinite_) throw std::logic_error("Multiplicity: infinite covering has no q");
    return q_;
}

std::string Multiplicity::str() const { return infinite_ ? "inf" : std::to_string(q_); }

std::string Covering::str() const { return "(" + plus.str() + "," + minus.str() + ")"; }

Covering covering_lcm(const Covering& a, const Covering& b) {
    auto one = [](const Multiplicity& x, const Multiplicity& y) {
        if (!x.is_finite() || !y.is_finite()) return Multiplicity::infinite();
        return Multiplicity::finite(std::lcm(x.q(), y.q()));
    };
    return Covering{one(a.plus, b.plus), one(a.minus, b.minus)};
}

std::array<cplx, 4> embed_s3c(const ComplexAngles& p) {
    const cplx I(0, 1);
    cplx Th = p.Theta(), Pp = p.PhiPlus(), Pm = p.PhiMinus();
    cplx ThB = std::conj(Th), PpB = std::conj(Pp), PmB = std::conj(Pm);
    return {std::cos(Th) * std::exp(I * Pp), std::sin(Th) * std::exp(I * Pm),
            std::cos(ThB) * std::exp(I * PpB), std::sin(ThB) * std::exp(I * PmB)};
}

std::array<cplx, 2> embed_s3(const S3Point& p) {
    const cplx I(0, 1);
    return {std::cos(p.theta) * std::exp(I * p.phiPlus),
            std::sin(p.theta) * std::exp(I * p.phiMinus)};
}

std::array<cplx, 2> embed_h22(const H22Point& p) {
    if (!(p.rho > 0))
        throw std::domain_error("embed_h22: rho <= 0 lies on the removed circle");
    const cplx I(0, 1);
    return {std::cosh(p.rho) * std::exp(I * p.phiPlus),
            std::sinh(p.rho) * std::exp(I * p.phiMinus)};
}

std::array<cplx, 2> embed_cone(const ConePoint& p) {
    if (!(p.r > 0)) throw std::domain_error("embed_cone: r <= 0 is the removed apex");
    const cplx I(0, 1);
    return {p.r * std::exp(I * p.phiPlus), p.r * std::exp(I * p.phiMinus)};
}

H22ChartInverse h22_chart_inverse(cplx zetaPlus, cplx zetaMinus) {
    double ap = std::abs(zetaPlus);
    if (ap <= 1.0)
        throw std::domain_error("h22_chart_inverse: |zeta+| <= 1 (removed circle)");
    double am2 = ap * ap - 1.0;
    return {ap, zetaPlus / ap, zetaMinus / std::sqrt(am2)};
}

bool in_removed_set(const ChartPoint& p) {
    return std::visit(
        [](const auto& pt) -> bool {
            using T = std::decay_t<decltype(pt)>;
            constexpr double kHalfPi = std::numbers::pi / 2;
            if constexpr (std::is_same_v<T, ComplexAngles>) {
                return pt.theta1 == 0.0 && (pt.theta0 == 0.0 || pt.theta0 == kHalfPi);
            } else if constexpr (std::is_same_v<T, S3Point>) {
                return pt.theta == 0.0 || pt.theta == kHalfPi;
            } else if constexpr (std::is_same_v<T, H22Point>) {
                return pt.rho <= 0.0;
            } else if constexpr (std::is_same_v<T, ConePoint>) {
                return pt.r <= 0.0;
            } else {
                return false;  // compactified cone has no removed set
            }
        },
        p);
}

}  // namespace lieharm
