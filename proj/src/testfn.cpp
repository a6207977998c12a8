#include "lieharm/testfn.hpp"

#include <cmath>
#include <numbers>

namespace lieharm {

namespace {
const cplx I(0.0, 1.0);
constexpr double kHalfPi = std::numbers::pi / 2;
constexpr double kTwoPi = 2.0 * std::numbers::pi;

cplx ipow(cplx z, int n) {
    cplx r = 1.0;
    for (int i = 0; i < n; ++i) r *= z;
    return r;
}
}  // namespace

TestFunction TestFunction::random(Manifold m, Rng& rng, int n_terms, int max_freq,
                                  int max_pow) {
    TestFunction f;
    f.manifold_ = m;
    f.dim_ = m == Manifold::S3C ? 6 : 3;
    for (int t = 0; t < n_terms; ++t) {
        Term term;
        term.coeff = cplx(rng.uniform(-1, 1), rng.uniform(-1, 1));
        if (m == Manifold::S3C) {
            term.rpow = {rng.uniform_int(0, max_pow), rng.uniform_int(0, max_pow)};
            for (int j : {1, 2, 4, 5}) term.freq[j] = rng.uniform_int(-max_freq, max_freq);
        } else {
            term.rpow = {rng.uniform_int(0, max_pow), 0};
            for (int j : {1, 2}) term.freq[j] = rng.uniform_int(-max_freq, max_freq);
        }
        f.terms_.push_back(term);
    }
    return f;
}

cplx TestFunction::operator()(const Coords& x) const {
    cplx tot = 0.0;
    for (const auto& t : terms_) {
        cplx ph = 0.0;
        for (int j = 0; j < dim_; ++j)
            if (t.freq[j] != 0.0) ph += t.freq[j] * x[j];
        cplx v = t.coeff * std::exp(I * ph);
        if (t.rpow[0]) v *= ipow(x[0], t.rpow[0]);
        if (dim_ == 6 && t.rpow[1]) v *= ipow(x[3], t.rpow[1]);
        tot += v;
    }
    return tot;
}

ComplexAngles random_complex_angles(Rng& rng, double margin, double imag) {
    ComplexAngles p;
    p.theta0 = rng.uniform(margin, kHalfPi - margin);
    p.theta1 = rng.uniform(-imag, imag);
    p.phiP0 = rng.uniform(0.0, kTwoPi);
    p.phiP1 = rng.uniform(-imag, imag);
    p.phiM0 = rng.uniform(0.0, kTwoPi);
    p.phiM1 = rng.uniform(-imag, imag);
    return p;
}

S3Point random_s3_point(Rng& rng, double margin) {
    return {rng.uniform(margin, kHalfPi - margin), rng.uniform(0.0, kTwoPi),
            rng.uniform(0.0, kTwoPi)};
}

H22Point random_h22_point(Rng& rng, double rho_min, double rho_max) {
    return {rng.uniform(rho_min, rho_max), rng.uniform(0.0, kTwoPi),
            rng.uniform(0.0, kTwoPi), Covering{}};
}

ConePoint random_cone_point(Rng& rng, double r_min, double r_max) {
    return {rng.uniform(r_min, r_max), rng.uniform(0.0, kTwoPi), rng.uniform(0.0, kTwoPi),
            Covering{}};
}

Coords random_point(Manifold m, Rng& rng, double margin) {
    switch (m) {
        case Manifold::S3C: return coords_of(random_complex_angles(rng, margin));
        case Manifold::S3: return coords_of(random_s3_point(rng, margin));
        case Manifold::H22: return coords_of(random_h22_point(rng));
        case Manifold::Cone: return coords_of(random_cone_point(rng));
        case Manifold::CompactCone: {
            CompactConePoint p{rng.uniform(0.0, kTwoPi), rng.uniform(0.0, kTwoPi),
                               rng.uniform(0.0, kTwoPi), Covering{}};
            return coords_of(p);
        }
    }
    throw std::logic_error("random_point");
}

}  // namespace lieharm
