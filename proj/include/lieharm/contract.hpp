#pragma once

#include <optional>

#include "lieharm/liealg.hpp"

namespace lieharm {

/// J = R0, P+- = eps R+-.  The residual relation [P+, P-] = 2 eps^2 J decays
/// to the flat translation algebra as eps -> 0.
AlgebraRealization su2_contracted_ops(double epsilon);

/// iJ+-, J0 written in the r = cosh(rho) coordinate; valid on r > 1.
/// The argument records the working radius and validates r > 1; the
/// coefficients themselves read the chart coordinate.
AlgebraRealization su11_ops_at_r(double r);

/// The r -> infinity limit operators; still an sl(2,R) triple.
AlgebraRealization su11_limit_ops();

struct ContractionCurve {
    std::vector<double> r_values;
    std::vector<double> residuals;
    std::optional<double> fitted_exponent;  // residual ~ C r^{-exponent}
};

/// Sup over the angular sample points of |(op_r - op_inf) f| at radius r,
/// for each r in r_samples, plus the least-squares decay exponent.
ContractionCurve contraction_residual_curve(const std::string& generator, const PointFn& f,
                                            const std::vector<std::pair<double, double>>& angles,
                                            const std::vector<double>& r_samples,
                                            const DiffScheme& scheme = {});

enum class RealFormDirection { sl2r_to_su2, su2_to_sl2r };

/// J0 -> J0, J+- -> -i J+- (or the inverse): rescales the ladder generators
/// of a realization and rewrites its expected table accordingly.
AlgebraRealization real_form_substitution(const AlgebraRealization& r,
                                          RealFormDirection direction);

/// r = e^Phi compactification of the cone chart; Psi records Phi = log r.
CompactConePoint compactify(const ConePoint& p);

}  // namespace lieharm
