#pragma once

#include <cstdint>
#include <random>

#include "lieharm/repfun.hpp"

namespace lieharm {

/// Deterministic uniform sampler.  The mapping from raw 64-bit draws to
/// doubles is fixed here so identical seeds give identical streams on every
/// platform.
class Rng {
public:
    explicit Rng(unsigned long long seed) : eng_(seed) {}
    double uniform(double a, double b) {
        return a + (b - a) * ((eng_() >> 11) * 0x1.0p-53);
    }
    int uniform_int(int lo, int hi) {  // inclusive bounds
        return lo + static_cast<int>(eng_() % static_cast<unsigned long long>(hi - lo + 1));
    }

private:
    std::mt19937_64 eng_;
};

/// Band-limited test function: a short sum of terms
///   coeff * (radial coord)^p * exp(i sum_j freq_j * x_j)
/// with integer Fourier frequencies on the angle coordinates and low-degree
/// polynomial factors on the radial/polar ones.
class TestFunction {
public:
    struct Term {
        cplx coeff;
        std::array<double, 6> freq{};  // phase frequencies per coordinate
        std::array<int, 2> rpow{};     // powers of the radial coords (slots 0 and 3)
    };

    static TestFunction random(Manifold m, Rng& rng, int n_terms = 4, int max_freq = 3,
                               int max_pow = 2);

    cplx operator()(const Coords& x) const;
    Manifold manifold() const { return manifold_; }

private:
    Manifold manifold_ = Manifold::S3;
    int dim_ = 3;
    std::vector<Term> terms_;
};

/// Seeded random non-singular chart points with sampling margins wide enough
/// for the finite-difference stencils.
Coords random_point(Manifold m, Rng& rng, double margin = 0.15);

ComplexAngles random_complex_angles(Rng& rng, double margin = 0.15, double imag = 0.4);
S3Point random_s3_point(Rng& rng, double margin = 0.15);
H22Point random_h22_point(Rng& rng, double rho_min = 0.25, double rho_max = 2.5);
ConePoint random_cone_point(Rng& rng, double r_min = 0.3, double r_max = 3.0);

}  // namespace lieharm
