#include "besovlab/lacunary.hpp"

#include <cmath>
#include <stdexcept>

namespace besovlab {

std::string to_string(WeightRule r) {
    return r == WeightRule::uniform ? "uniform" : "jsq";
}

WeightRule weight_rule_from_string(const std::string& s) {
    if (s == "uniform") return WeightRule::uniform;
    if (s == "jsq" || s == "quadratic_decay") return WeightRule::quadratic_decay;
    throw std::domain_error("unknown weight rule '" + s + "' (expected uniform|jsq)");
}

long long lacunary_frequency(int j) {
    if (j < 3) throw std::domain_error("lacunary_frequency: j must be >= 3");
    return 11LL << (j - 3);
}

LacunaryProfile build_profile(double s, int truncation, WeightRule rule) {
    if (truncation < 3)
        throw std::domain_error("build_profile: truncation J must be >= 3, got " +
                                std::to_string(truncation));
    if (truncation > 27)
        throw std::domain_error("build_profile: truncation J > 27 exceeds integer frequencies");
    if (!(s > 0.0)) throw std::domain_error("build_profile: regularity s must be > 0");

    LacunaryProfile out;
    out.s = s;
    out.truncation = truncation;
    out.rule = rule;
    for (int j = 3; j <= truncation; ++j) {
        const double w = rule == WeightRule::uniform
                             ? 1.0
                             : 1.0 / (static_cast<double>(j) * static_cast<double>(j));
        const double amp = w * std::exp2(-static_cast<double>(j) * s);
        out.poly.set(static_cast<int>(lacunary_frequency(j)), amp, 0.0);
    }
    return out;
}

ShearFlowState shear_initial_data(const LacunaryProfile& profile, int dimension, double drift) {
    if (dimension < 2)
        throw std::domain_error("shear_initial_data: dimension must be >= 2, got " +
                                std::to_string(dimension));
    ShearFlowState st;
    st.dimension = dimension;
    st.drift = drift;
    st.profile = profile.poly;
    st.viscosity = 0.0;
    st.time = 0.0;
    return st;
}

}  // namespace besovlab
