#include "lieharm/special.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace lieharm {

namespace {

constexpr double kPi = std::numbers::pi;

// Lanczos coefficients, g = 7.
constexpr std::array<double, 9> kLanczos = {
    0.99999999999980993,     676.5203681218851,     -1259.1392167224028,
    771.32342877765313,      -176.61502916214059,   12.507343278686905,
    -0.13857109526572012,    9.9843695780195716e-6, 1.5056327351493116e-7};

cplx lanczos_log_gamma(cplx z) {
    // valid for Re(z) >= 0.5
    z -= 1.0;
    cplx x = kLanczos[0];
    for (int i = 1; i < 9; ++i) x += kLanczos[i] / (z + static_cast<double>(i));
    cplx t = z + 7.5;
    return 0.5 * std::log(2.0 * kPi) + (z + 0.5) * std::log(t) - t + std::log(x);
}

}  // namespace

bool is_gamma_pole(cplx z, double tol) {
    if (std::abs(z.imag()) > tol) return false;
    double r = z.real();
    return r < 0.5 && std::abs(r - std::round(r)) < tol;
}

cplx log_gamma(cplx z) {
    if (is_gamma_pole(z)) throw std::domain_error("log_gamma: pole at non-positive integer");
    if (z.real() >= 0.5) return lanczos_log_gamma(z);
    // reflection: log G(z) = log(pi) - log(sin(pi z)) - log G(1-z)
    // Branch matters only through exp(); every consumer of complex arguments
    // exponentiates ratios, which is branch independent.
    return std::log(kPi) - std::log(std::sin(kPi * z)) - lanczos_log_gamma(1.0 - z);
}

cplx gamma_fn(cplx z) { return std::exp(log_gamma(z)); }

cplx rgamma(cplx z) {
    if (is_gamma_pole(z)) return 0.0;
    return std::exp(-log_gamma(z));
}

namespace {
constexpr int kFactTableSize = 171;
struct FactTable {
    std::array<double, kFactTableSize> fact{};
    std::array<double, kFactTableSize> logfact{};
    FactTable() {
        fact[0] = 1.0;
        logfact[0] = 0.0;
        for (int n = 1; n < kFactTableSize; ++n) {
            fact[n] = fact[n - 1] * n;
            logfact[n] = logfact[n - 1] + std::log(static_cast<double>(n));
        }
    }
};
const FactTable kFact;
}  // namespace

double factorial(int n) {
    if (n < 0 || n >= kFactTableSize) throw std::domain_error("factorial: out of range");
    return kFact.fact[n];
}

double log_factorial(int n) {
    if (n < 0) throw std::domain_error("log_factorial: negative");
    if (n < kFactTableSize) return kFact.logfact[n];
    return std::lgamma(static_cast<double>(n) + 1.0);
}

std::optional<Rational> to_rational(double x, long long max_den, double tol) {
    if (!std::isfinite(x)) return std::nullopt;
    long long p0 = 1, q0 = 0;  // previous convergent
    long long p1 = static_cast<long long>(std::floor(x)), q1 = 1;
    double frac = x - std::floor(x);
    for (int it = 0; it < 64; ++it) {
        if (std::abs(x - static_cast<double>(p1) / static_cast<double>(q1)) <=
            tol * std::max(1.0, std::abs(x)))
            return Rational{p1, q1};
        if (frac < 1e-15) break;
        double inv = 1.0 / frac;
        long long a = static_cast<long long>(std::floor(inv));
        frac = inv - std::floor(inv);
        long long p2 = a * p1 + p0, q2 = a * q1 + q0;
        if (q2 > max_den) break;
        p0 = p1;
        q0 = q1;
        p1 = p2;
        q1 = q2;
    }
    if (std::abs(x - static_cast<double>(p1) / static_cast<double>(q1)) <=
        tol * std::max(1.0, std::abs(x)))
        return Rational{p1, q1};
    return std::nullopt;
}

bool is_integer(double x, double tol) { return std::abs(x - std::round(x)) < tol; }

bool is_half_integer(double x, double tol) { return is_integer(2.0 * x, tol); }

}  // namespace lieharm
