#pragma once

#include <complex>
#include <optional>

namespace lieharm {

using cplx = std::complex<double>;

/// Complex log-gamma via the Lanczos approximation (g = 7, 9 coefficients),
/// with the reflection formula for Re(z) < 0.5.  Relative error below 1e-13
/// on the strip used by this library.  Poles (z a non-positive integer) throw.
cplx log_gamma(cplx z);

/// Gamma(z) = exp(log_gamma(z)); 0 is returned nowhere, poles throw.
cplx gamma_fn(cplx z);

/// 1 / Gamma(z); entire, returns 0 at the poles of Gamma.
cplx rgamma(cplx z);

/// log(n!) for integer n >= 0 (table below 171, log-gamma above).
double log_factorial(int n);

/// n! for integer n in [0, 170].
double factorial(int n);

/// True when z sits on a pole of Gamma (a non-positive integer) within tol.
bool is_gamma_pole(cplx z, double tol = 1e-12);

/// Nearest rational p/q with 1 <= q <= max_den and |x - p/q| <= tol,
/// via continued fractions.  Returns nothing for irrational-looking input.
struct Rational {
    long long num;
    long long den;
};
std::optional<Rational> to_rational(double x, long long max_den = 4096,
                                    double tol = 1e-9);

/// True when x is an integer within tol.
bool is_integer(double x, double tol = 1e-9);

/// True when 2x is an integer within tol (the half-integer lattice).
bool is_half_integer(double x, double tol = 1e-9);

}  // namespace lieharm
