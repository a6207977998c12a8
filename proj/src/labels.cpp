#include "lieharm/labels.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace lieharm {

namespace {
std::string cplx_str(cplx z) {
    std::ostringstream os;
    os << z.real();
    if (z.imag() != 0) os << (z.imag() > 0 ? "+" : "") << z.imag() << "i";
    return os.str();
}

Multiplicity denominator_covering(double twice_freq) {
    // multiplicity for a phase carrying frequency `twice_freq` modulo integers
    auto r = to_rational(twice_freq);
    if (!r) return Multiplicity::infinite();
    return Multiplicity::finite(r->den);
}
}  // namespace

SL2CLabel::SL2CLabel(double l0, cplx l1) : ell0(l0), ell1(l1) {
    if (!is_half_integer(ell0))
        throw std::invalid_argument("SL2CLabel: 2*ell0 must be an integer");
    ell0 = std::round(2.0 * ell0) / 2.0;
    if (ell0 < 0) {  // [l0, l1] ~ [-l0, -l1]
        ell0 = -ell0;
        ell1 = -ell1;
    }
}

bool SL2CLabel::finite_dimensional() const {
    return ell1.imag() == 0.0 && is_half_integer(ell1.real()) &&
           ell1.real() >= ell0 + 1.0;
}

std::vector<double> SL2CLabel::spins(double s_max) const {
    double top = s_max;
    if (finite_dimensional()) top = std::min(top, ell1.real() - 1.0);
    std::vector<double> out;
    for (double s = ell0; s <= top + 1e-12; s += 1.0) out.push_back(s);
    return out;
}

std::string SL2CLabel::str() const {
    std::ostringstream os;
    os << "sl2c[" << ell0 << "," << cplx_str(ell1) << "]";
    return os.str();
}

SU2Label::SU2Label(double l) : ell(l) {
    if (!is_half_integer(ell) || ell < 0)
        throw std::invalid_argument("SU2Label: ell must be a non-negative half-integer");
    ell = std::round(2.0 * ell) / 2.0;
}

std::string SU2Label::str() const {
    std::ostringstream os;
    os << "su2[" << ell << "]";
    return os.str();
}

SU11DiscLabel::SU11DiscLabel(double s_, DiscSign sign_, int n_) : s(s_), sign(sign_), n(n_) {
    if (!(s > 0)) throw std::invalid_argument("SU11DiscLabel: s must be positive");
    if (n < 0) throw std::invalid_argument("SU11DiscLabel: n must be >= 0");
}

std::string SU11DiscLabel::str() const {
    std::ostringstream os;
    os << "su11d[" << s << (sign == DiscSign::plus ? "+" : "-") << ",n=" << n << "]";
    return os.str();
}

SU11ContLabel::SU11ContLabel(cplx lambda_, cplx mu_, int n_)
    : lambda(lambda_), mu(mu_), n(n_) {
    cplx d = mu - lambda;
    if (std::abs(d.imag()) > 1e-9)
        throw std::invalid_argument("SU11ContLabel: mu - lambda must be real");
    double diff = d.real();
    while (diff > 0.5 + 1e-12) {
        lambda += 0.5;
        mu -= 0.5;
        n += 1;
        diff -= 1.0;
    }
    while (diff <= -0.5 + 1e-12) {
        lambda -= 0.5;
        mu += 0.5;
        n -= 1;
        diff += 1.0;
    }
}

std::string SU11ContLabel::str() const {
    std::ostringstream os;
    os << "su11c[l=" << cplx_str(lambda) << ",m=" << cplx_str(mu) << ",n=" << n << "]";
    return os.str();
}

E2Label::E2Label(double p_, double s_, int n_) : p(p_), s(s_), n(n_) {
    if (!(s > -0.5 && s <= 0.5))
        throw std::invalid_argument("E2Label: s must lie in (-1/2, 1/2]");
}

std::string E2Label::str() const {
    std::ostringstream os;
    os << "e2[p=" << p << ",s=" << s << ",n=" << n << "]";
    return os.str();
}

std::string label_str(const RepLabel& label) {
    return std::visit([](const auto& l) { return l.str(); }, label);
}

std::vector<std::pair<std::string, cplx>> casimir_values(const RepLabel& label) {
    using R = std::vector<std::pair<std::string, cplx>>;
    return std::visit(
        [](const auto& l) -> R {
            using T = std::decay_t<decltype(l)>;
            if constexpr (std::is_same_v<T, SL2CLabel>) {
                cplx q1 = l.ell0 * l.ell0 + l.ell1 * l.ell1 - 1.0;
                cplx q2 = -2.0 * cplx(0, 1) * l.ell0 * l.ell1;
                return {{"Q1", q1}, {"Q2", q2}};
            } else if constexpr (std::is_same_v<T, SU2Label>) {
                return {{"Q", l.ell * (l.ell + 1.0)}};
            } else if constexpr (std::is_same_v<T, SU11DiscLabel>) {
                return {{"Q", l.s * (l.s - 1.0)}};
            } else if constexpr (std::is_same_v<T, SU11ContLabel>) {
                cplx lm = l.lambda + l.mu;
                return {{"Q", lm * (lm + 1.0)}};
            } else {
                return {{"Q", l.p * l.p}};
            }
        },
        label);
}

std::string unitary_class_name(UnitaryClass c) {
    switch (c) {
        case UnitaryClass::principal: return "principal";
        case UnitaryClass::complementary: return "complementary";
        case UnitaryClass::discrete_normalizable: return "discrete-normalizable";
        case UnitaryClass::discrete_non_normalizable: return "discrete-non-normalizable";
        case UnitaryClass::supplementary: return "supplementary";
        case UnitaryClass::finite_dimensional: return "finite-dimensional";
        case UnitaryClass::non_unitary: return "non-unitary";
    }
    return "?";
}

UnitaryClass unitary_class(const RepLabel& label) {
    return std::visit(
        [](const auto& l) -> UnitaryClass {
            using T = std::decay_t<decltype(l)>;
            if constexpr (std::is_same_v<T, SL2CLabel>) {
                if (l.ell1.real() == 0.0) return UnitaryClass::principal;
                if (l.ell0 == 0.0 && l.ell1.imag() == 0.0 && l.ell1.real() > 0.0 &&
                    l.ell1.real() <= 1.0)
                    return UnitaryClass::complementary;
                if (l.finite_dimensional()) return UnitaryClass::finite_dimensional;
                return UnitaryClass::non_unitary;
            } else if constexpr (std::is_same_v<T, SU2Label>) {
                return UnitaryClass::finite_dimensional;
            } else if constexpr (std::is_same_v<T, SU11DiscLabel>) {
                return l.s > 0.5 ? UnitaryClass::discrete_normalizable
                                 : UnitaryClass::discrete_non_normalizable;
            } else if constexpr (std::is_same_v<T, SU11ContLabel>) {
                cplx lm = l.lambda + l.mu;
                double diff = (l.mu - l.lambda).real();
                if (std::abs(lm.real() + 0.5) < 1e-12 && lm.imag() != 0.0)
                    return UnitaryClass::principal;
                if (lm.imag() == 0.0 &&
                    std::abs(lm.real() + 0.5) < 0.5 - std::abs(diff))
                    return UnitaryClass::supplementary;
                return UnitaryClass::non_unitary;
            } else {
                return UnitaryClass::principal;  // E2: unitary for every real p
            }
        },
        label);
}

Covering covering_required(const RepLabel& label) {
    return std::visit(
        [](const auto& l) -> Covering {
            using T = std::decay_t<decltype(l)>;
            if constexpr (std::is_same_v<T, SU11DiscLabel>) {
                return {denominator_covering(2.0 * l.s), Multiplicity::finite(1)};
            } else if constexpr (std::is_same_v<T, SU11ContLabel>) {
                // phi+ carries 2*lambda - n, phi- carries 2*mu + n
                return {denominator_covering(2.0 * l.lambda.real()),
                        denominator_covering(2.0 * l.mu.real())};
            } else if constexpr (std::is_same_v<T, E2Label>) {
                return {denominator_covering(2.0 * l.s), Multiplicity::finite(1)};
            } else {
                return Covering{};
            }
        },
        label);
}

}  // namespace lieharm
