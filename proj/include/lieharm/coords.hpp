#pragma once

#include <array>
#include <complex>
#include <string>
#include <tuple>
#include <variant>

#include "lieharm/special.hpp"

namespace lieharm {

enum class Manifold { S3C, S3, H22, Cone, CompactCone };

std::string manifold_name(Manifold m);

/// Covering multiplicity of one circle factor: a positive integer or infinite.
class Multiplicity {
public:
    static Multiplicity finite(long long q);
    static Multiplicity infinite() { return Multiplicity(0, true); }
    bool is_finite() const { return !infinite_; }
    long long q() const;
    bool operator==(const Multiplicity&) const = default;
    std::string str() const;

private:
    Multiplicity(long long q, bool inf) : q_(q), infinite_(inf) {}
    long long q_ = 1;
    bool infinite_ = false;
};

struct Covering {
    Multiplicity plus = Multiplicity::finite(1);
    Multiplicity minus = Multiplicity::finite(1);
    bool operator==(const Covering&) const = default;
    std::string str() const;
};

/// lcm of two finite coverings componentwise; infinite absorbs.
Covering covering_lcm(const Covering& a, const Covering& b);

// ---------------------------------------------------------------------------
// Chart points.  Angles are stored unreduced; nothing is wrapped mod 2*pi.
// ---------------------------------------------------------------------------

/// Complexified three-sphere angles: Theta = theta0 + i theta1,
/// Phi_pm = phiP0 + i phiP1 / phiM0 + i phiM1.
struct ComplexAngles {
    double theta0 = 0, theta1 = 0;
    double phiP0 = 0, phiP1 = 0;
    double phiM0 = 0, phiM1 = 0;
    cplx Theta() const { return {theta0, theta1}; }
    cplx PhiPlus() const { return {phiP0, phiP1}; }
    cplx PhiMinus() const { return {phiM0, phiM1}; }
};

struct S3Point {
    double theta = 0, phiPlus = 0, phiMinus = 0;
};

struct H22Point {
    double rho = 0, phiPlus = 0, phiMinus = 0;
    Covering covering{};
};

struct ConePoint {
    double r = 0, phiPlus = 0, phiMinus = 0;
    Covering covering{};
};

struct CompactConePoint {
    double psi = 0, phiPlus = 0, phiMinus = 0;
    Covering covering{};
};

using ChartPoint =
    std::variant<ComplexAngles, S3Point, H22Point, ConePoint, CompactConePoint>;

// ---------------------------------------------------------------------------
// Embeddings
// ---------------------------------------------------------------------------

/// (z+, z-, z'+, z'-) with z+ conj(z'+) + z- conj(z'-) = 1.
std::array<cplx, 4> embed_s3c(const ComplexAngles& p);

/// (w+, w-) with |w+|^2 + |w-|^2 = 1.
std::array<cplx, 2> embed_s3(const S3Point& p);

/// (zeta+, zeta-) with |zeta+|^2 - |zeta-|^2 = 1.  Throws for rho <= 0.
std::array<cplx, 2> embed_h22(const H22Point& p);

/// (r+, r-) with |r+| = |r-|.  Throws at the removed apex r <= 0.
std::array<cplx, 2> embed_cone(const ConePoint& p);

/// Inverse of the (r, u+, u-) chart of the hyperboloid.  Requires
/// |zeta+|^2 - |zeta-|^2 = 1 with |zeta+| > 1; the removed circle throws.
struct H22ChartInverse {
    double r;
    cplx uPlus;
    cplx uMinus;
};
H22ChartInverse h22_chart_inverse(cplx zetaPlus, cplx zetaMinus);

/// Exact membership test for the excluded circles / cylinders / apex.
bool in_removed_set(const ChartPoint& p);

}  // namespace lieharm
