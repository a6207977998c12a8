#pragma once

#include <array>
#include <memory>
#include <string>
#include <vector>

#include "lieharm/coords.hpp"
#include "lieharm/labels.hpp"

namespace lieharm {

/// Coordinate vector the differential machinery works on.
/// S3C uses the six polarized complex coordinates
/// (Theta, Phi+, Phi-, ThetaBar, Phi+Bar, Phi-Bar); the real forms use
/// their three chart coordinates with zero imaginary part.
struct Coords {
    std::array<cplx, 6> v{};
    int dim = 0;
    cplx operator[](int i) const { return v[static_cast<size_t>(i)]; }
    cplx& operator[](int i) { return v[static_cast<size_t>(i)]; }
};

Coords coords_of(const ComplexAngles& p);
Coords coords_of(const S3Point& p);
Coords coords_of(const H22Point& p);
Coords coords_of(const ConePoint& p);
Coords coords_of(const CompactConePoint& p);
Coords coords_of(const ChartPoint& p);

// ---------------------------------------------------------------------------
// SL(2,C) building blocks
// ---------------------------------------------------------------------------

/// Range of the summation index k: kmin = max(0, -ell0 - m),
/// kmax = min(s - ell0, s - m).  Throws off the weight lattice.
std::pair<int, int> k_range(double ell0, double s, double m);

/// A_s^{l0,l1} = sqrt(G(s-l1+1) G(l0+l1+1) / (G(s+l1+1) G(l0-l1+1))),
/// evaluated through the telescoped per-spin product so the square-root
/// branch is continuous across adjacent spins; 0 past a finite tower end.
cplx a_coeff(const SL2CLabel& label, double s);

/// Principal square root with the cut pinned to +i sqrt(|x|) on the negative
/// real axis (immune to the sign of a zero imaginary part).
cplx sqrt_branch(cplx z);

// ---------------------------------------------------------------------------
// Family functions with closed-form derivatives
// ---------------------------------------------------------------------------

class FamilyFunction {
public:
    virtual ~FamilyFunction() = default;
    virtual Manifold manifold() const = 0;
    virtual int dim() const = 0;
    virtual std::string name() const = 0;
    virtual cplx value(const Coords& x) const = 0;
    virtual void gradient(const Coords& x, cplx out[6]) const = 0;
    /// Diagonal second derivatives; the printed Laplacians need no mixed terms.
    virtual void hessian_diag(const Coords& x, cplx out[6]) const = 0;
    /// Constant c with  Laplacian(f) + c f = 0  for this family member.
    virtual cplx harmonic_constant() const = 0;
};

using FamilyPtr = std::shared_ptr<const FamilyFunction>;

FamilyPtr make_sl2c_psi(const SL2CLabel& label, double s, double m);
FamilyPtr make_su2_phi(const SU2Label& label, double m);
FamilyPtr make_su11_disc(const SU11DiscLabel& label);
FamilyPtr make_su11_cont(const SU11ContLabel& label);
FamilyPtr make_e2_cone(const E2Label& label);
FamilyPtr make_e2_compact(const E2Label& label);
/// z+^a z-^b conj(z-)^c conj(z+)^d as a polarized function on S3C.
FamilyPtr make_s3c_monomial(int a, int b, int c, int d);

// ---------------------------------------------------------------------------
// Point evaluation entry points
// ---------------------------------------------------------------------------

cplx psi_sl2c(const SL2CLabel& label, double s, double m, const ComplexAngles& p);
cplx phi_su2(const SU2Label& label, double m, const S3Point& p);
cplx psi_su11_disc(const SU11DiscLabel& label, const H22Point& p);
cplx psi_su11_cont(const SU11ContLabel& label, const H22Point& p);
cplx lambda_e2(const E2Label& label, const ConePoint& p);
cplx lambda_e2(const E2Label& label, const CompactConePoint& p);

/// Normalization of the discrete-series functions,
/// sqrt(2 G(n+2s) / (G(2s-1) G(n+1))); zero exactly at the G(2s-1) poles.
cplx su11_disc_norm(double s, int n);

/// Normalization of the continuous-series functions.  A pole of the numerator
/// Gamma throws (reported with the offending argument); denominator poles
/// yield zero.
cplx su11_cont_norm(cplx lambda, cplx mu, int n);

}  // namespace lieharm
