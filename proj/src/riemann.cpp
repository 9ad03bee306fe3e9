#include "compwave/riemann.hpp"

namespace compwave {

const char* to_string(CaseLabel label) {
    switch (label) {
        case CaseLabel::Case1: return "Case1";
        case CaseLabel::Case2: return "Case2";
        case CaseLabel::Case3: return "Case3";
        case CaseLabel::SingleWave: return "SingleWave";
    }
    return "?";
}

CaseLabel classify(const StressModel& m, double v_minus, double v_plus) {
    if (!(v_minus < v_plus))
        throw std::invalid_argument("classify: requires v_minus < v_plus");
    const bool minus_in_B = v_minus > -m.a && v_minus < m.a;
    const bool minus_in_C = v_minus <= -m.a;
    const bool plus_in_A = v_plus >= m.a;
    const bool plus_in_B = v_plus > -m.a && v_plus < m.a;
    if (minus_in_B && plus_in_A) return CaseLabel::Case1;
    if (minus_in_C && plus_in_B) return CaseLabel::Case2;
    if (minus_in_C && plus_in_A) return CaseLabel::Case3;
    return CaseLabel::SingleWave;
}

FarFieldData build_case1(const StressModel& m, double v_minus, double v_plus) {
    if (!(v_minus > -m.a))
        throw ClassificationError("build_case1: v_minus not above -a (region C)");
    if (!(v_minus < m.a))
        throw ClassificationError("build_case1: v_minus not below a (not in region B)");
    if (!(v_plus > m.a))
        throw ClassificationError("build_case1: v_plus not above a (not in region A)");
    FarFieldData d;
    d.v_minus = v_minus;
    d.v_plus = v_plus;
    d.a = m.a;
    const double sb = m.sqrt_b();
    d.u_minus = -sb * v_minus + 0.0;  // +0.0 normalizes the sign of zero
    d.u_a = -sb * m.a;
    d.u_plus = d.u_a - lambda2_primitive(m, m.a, v_plus);
    d.delta = v_plus - v_minus;
    return d;
}

RhResidual check_rh(const StressModel& m, const FarFieldData& data, double v_star) {
    if (!(v_star >= data.v_minus && v_star <= data.v_plus))
        throw std::domain_error("check_rh: v_star outside [v_minus, v_plus]");
    const double s = lambda2(m, v_star);
    RhResidual r;
    r.mass = -s * (data.v_plus - data.v_minus) - (data.u_plus - data.u_minus);
    r.momentum = -s * (data.u_plus - data.u_minus) -
                 (sigma(m, data.v_plus) - sigma(m, data.v_minus));
    return r;
}

}  // namespace compwave
