#pragma once

#include <functional>
#include <vector>

#include "lieharm/repfun.hpp"

namespace lieharm {

/// Node counts and truncations for the invariant inner products.
struct QuadratureSpec {
    int n_polar = 64;       // Gauss-Legendre nodes in theta (S3) / rho (H22)
    int n_phi_plus = 64;    // uniform nodes per 2*pi period
    int n_phi_minus = 64;
    double rho_max = 14.0;  // radial truncation for H22
    int n_psi = 257;        // window nodes for the E2 compactified product
    double box_imag = 1.0;  // |theta1|, |phi(+/-)1| bound for the S3C box
    int n_imag = 8;         // nodes per truncated imaginary direction
};

struct GaussRule {
    std::vector<double> nodes;
    std::vector<double> weights;
};

/// Gauss-Legendre rule on [a, b].
GaussRule gauss_legendre(int n, double a, double b);

/// Integrates f over (0, 1) with tanh-sinh (double-exponential) nodes,
/// robust to integrable endpoint singularities.  The integrand receives
/// (t, 1-t) with both arguments computed stably near the endpoints.
double tanh_sinh_01(const std::function<double(double, double)>& f, int levels = 9);

using S3Fn = std::function<cplx(const S3Point&)>;
using H22Fn = std::function<cplx(const H22Point&)>;
using S3CFn = std::function<cplx(const ComplexAngles&)>;
using E2CompactFn = std::function<cplx(const CompactConePoint&)>;

/// (f, g) = (1/2 pi^2) Int cos sin  conj(g) f  over the S3 chart.
cplx inner_s3(const S3Fn& f, const S3Fn& g, const QuadratureSpec& spec = {});

/// (f, g)_(q,1) = (1/q)(1/4 pi^2) Int cosh sinh  conj(f) g  with phi+ running
/// over [0, 2 pi q).  The radial integral is truncated at rho_max.
cplx inner_h22(const H22Fn& f, const H22Fn& g, const QuadratureSpec& spec,
               long long q_plus = 1);

/// The (inf,1) product with prefactor 2/(2 pi)^2 and phi+ in [-W, W].
cplx inner_h22_windowed(const H22Fn& f, const H22Fn& g, const QuadratureSpec& spec,
                        double window);

/// Truncated-box evaluation of the complex-sphere product; the true integral
/// generally diverges, so the result carries its truncation metadata.
struct S3CInnerResult {
    cplx value;
    bool finite;
    double box_imag;
};
S3CInnerResult inner_s3c(const S3CFn& f, const S3CFn& g, const QuadratureSpec& spec = {});

/// I_{a,b} = Int_1^inf r^{2a+1} (r^2-1)^b dr = G(1+b) G(-a-b-1) / (2 G(-a)).
/// Requires a + b < -1 and b > -1; the violated inequality is named.
double i_ab_closed(double a, double b);

/// Same integral through the substitution t = 1/r^2 and tanh-sinh nodes.
double i_ab_numeric(double a, double b, int levels = 9);

/// Gram matrix of family members under the manifold's invariant product,
/// on the lcm covering of the members' coverings.
struct GramResult {
    std::vector<std::vector<cplx>> matrix;
    long long covering_q = 1;
    double max_offdiag = 0.0;
    double max_diag_dev = 0.0;
};
GramResult gram_matrix(const std::vector<FamilyPtr>& members,
                       const std::vector<Covering>& coverings, const QuadratureSpec& spec);

/// (f, g)_q over the window Psi in [-T, T]:
/// (1/q)(1/4 pi^2) Int dPsi Int_0^{2 pi q} dphi+ Int_0^{2 pi} dphi- conj(f) g.
cplx inner_e2_windowed(const E2CompactFn& f, const E2CompactFn& g, double T, long long q,
                       const QuadratureSpec& spec = {});

/// Density of the invariant measure d mu = dr dphi+ dphi- / r.
double haar_e2_density(const ConePoint& p);

}  // namespace lieharm
