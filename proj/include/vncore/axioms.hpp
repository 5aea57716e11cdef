#pragma once

#include <cstddef>
#include <optional>

#include "vncore/mat.hpp"
#include "vncore/report.hpp"

namespace vncore {

/// An abstract (V, mu, eta, delta, eps, S) package. delta/eps/antipode are
/// optional; their presence gates which checks are runnable. dim_ui is the
/// context constant for the rescaled-unit defect check.
struct AlgebraDatum {
    std::size_t dim = 0;
    Mat mu;   // dim x dim^2
    Mat eta;  // dim x 1
    std::optional<Mat> delta;     // dim^2 x dim
    std::optional<Mat> eps;       // 1 x dim
    std::optional<Mat> antipode;  // dim x dim
    Rational dim_ui = Rational(1);
};

/// mu(1 x mu) = mu(mu x 1) and mu(eta x 1) = 1 = mu(1 x eta).
CheckReport check_algebra(const AlgebraDatum& d);

/// (1 x delta)delta = (delta x 1)delta and (eps x 1)delta = 1 = (1 x eps)delta.
CheckReport check_coalgebra(const AlgebraDatum& d);

/// delta mu = (mu x mu)(1 x swap x 1)(delta x delta).
CheckReport check_very_weak_bialgebra(const AlgebraDatum& d);

/// mu_3 (1 x S x 1) delta_3 = 1.
CheckReport check_vn_core(const AlgebraDatum& d);

/// 1 x eta = (1 x mu)(1 x S x 1) delta_3.
CheckReport check_unital_core(const AlgebraDatum& d);

struct FusionReports {
    CheckReport left_inverse;  // g f = 1
    CheckReport fgf;           // f g f = f
    CheckReport gfg;           // g f g = g
    CheckReport equation;      // f12 f13 f23 = f23 f12, informational
};
FusionReports check_fusion(const AlgebraDatum& d);

struct DefectReports {
    CheckReport counit_mult;    // eps mu vs eps x eps, informational
    CheckReport rescaled_unit;  // dim_ui (delta eta) vs eta x eta, informational
};
DefectReports check_counit_unit_defects(const AlgebraDatum& d);

/// Dual datum: mu' = delta^T, eta' = eps^T, delta' = mu^T, eps' = eta^T,
/// S' = S^T. Requires the coalgebra half to be present.
AlgebraDatum dualize(const AlgebraDatum& d);

/// Meta-assertions on previously computed verdicts.
CheckReport implication_check(const char* name, const CheckReport& premise,
                              const CheckReport& conclusion);

}  // namespace vncore
