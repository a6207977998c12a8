#pragma once

#include <string>
#include <variant>
#include <vector>

#include "lieharm/coords.hpp"
#include "lieharm/special.hpp"

namespace lieharm {

/// [ell0, ell1] with 2 ell0 a non-negative integer.  Canonical form keeps
/// ell0 >= 0 through the isomorphism [l0, l1] ~ [-l0, -l1].
struct SL2CLabel {
    double ell0;
    cplx ell1;
    SL2CLabel(double l0, cplx l1);
    cplx p() const { return ell0 + ell1 - 1.0; }
    cplx q() const { return -ell0 + ell1 - 1.0; }
    bool finite_dimensional() const;
    /// spins s = ell0, ell0+1, ..., up to ell1-1 for finite labels.
    std::vector<double> spins(double s_max) const;
    std::string str() const;
};

struct SU2Label {
    double ell;  // any non-negative half-integer; the spinor is ell = 1/2
    explicit SU2Label(double l);
    std::string str() const;
};

enum class DiscSign { plus, minus };

struct SU11DiscLabel {
    double s;  // s > 0; the realized product is unitary only for s > 1/2
    DiscSign sign;
    int n;  // weight index, n >= 0
    SU11DiscLabel(double s_, DiscSign sign_, int n_);
    std::string str() const;
};

struct SU11ContLabel {
    cplx lambda;
    cplx mu;
    int n;
    /// Canonicalizes into -1/2 < mu - lambda <= 1/2 by the label shift
    /// (lambda, mu, n) -> (lambda + k/2, mu - k/2, n + k).
    SU11ContLabel(cplx lambda_, cplx mu_, int n_);
    std::string str() const;
};

struct E2Label {
    double p;
    double s;  // in (-1/2, 1/2]
    int n;
    E2Label(double p_, double s_, int n_);
    std::string str() const;
};

using RepLabel = std::variant<SL2CLabel, SU2Label, SU11DiscLabel, SU11ContLabel, E2Label>;

std::string label_str(const RepLabel& label);

/// Named Casimir eigenvalues: {Q1, Q2} for sl(2,C), single Q otherwise.
std::vector<std::pair<std::string, cplx>> casimir_values(const RepLabel& label);

enum class UnitaryClass {
    principal,
    complementary,
    discrete_normalizable,
    discrete_non_normalizable,
    supplementary,
    finite_dimensional,
    non_unitary,
};

std::string unitary_class_name(UnitaryClass c);

UnitaryClass unitary_class(const RepLabel& label);

/// Covering of the underlying manifold on which the family is single valued.
/// Frequencies on phi+ / phi- dictate the two multiplicities.
Covering covering_required(const RepLabel& label);

}  // namespace lieharm
