#pragma once

#include <cmath>
#include <stdexcept>
#include <string>

#include "compwave/stress.hpp"

namespace compwave {

/// Which composite wave pattern the far-field pair (v-, v+) produces on the
/// 2-characteristic field. SingleWave covers pairs inside one stress region,
/// where no mixed pattern forms.
enum class CaseLabel { Case1, Case2, Case3, SingleWave };

const char* to_string(CaseLabel label);

struct ClassificationError : std::domain_error {
    using std::domain_error::domain_error;
};

/// Far-field Riemann data for the contact + rarefaction composite (Case 1),
/// normalized so that u- = -sqrt(b) v- and u_a = -sqrt(b) a.
struct FarFieldData {
    double v_minus = 0.0;
    double v_plus = 0.0;
    double u_minus = 0.0;
    double u_plus = 0.0;
    double a = 0.0;    ///< strain threshold, copied from the stress model
    double u_a = 0.0;  ///< intermediate velocity between the two waves
    double delta = 0.0;  ///< amplitude v+ - v-
};

/// Classify (v-, v+) against the three stress regions. Requires v- < v+.
CaseLabel classify(const StressModel& m, double v_minus, double v_plus);

/// Build the normalized Case-1 data. Requires -a < v- < a < v+.
FarFieldData build_case1(const StressModel& m, double v_minus, double v_plus);

/// The two Rankine-Hugoniot residuals at trial speed lambda2(v_star).
/// Diagnostic only: Case-1 jumps resolve into two waves, so nonzero residuals
/// are expected except for pure-contact data.
struct RhResidual {
    double mass = 0.0;      ///< -lambda2(v*)(v+ - v-) - (u+ - u-)
    double momentum = 0.0;  ///< -lambda2(v*)(u+ - u-) - (sigma(v+) - sigma(v-))
    bool within(double tol) const {
        return std::abs(mass) <= tol && std::abs(momentum) <= tol;
    }
};

RhResidual check_rh(const StressModel& m, const FarFieldData& data, double v_star);

}  // namespace compwave
