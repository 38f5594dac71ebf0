#include "besovlab/flows.hpp"

#include <cmath>
#include <stdexcept>

#include "besovlab/errors.hpp"

namespace besovlab {

namespace {

// lambda_j * t as a long double product; lambda_j = 11*2^{j-3} is exact.
long double block_phase(int j, double t) {
    if (j < 3) throw std::domain_error("block coefficients are defined for j >= 3");
    return static_cast<long double>(11LL << (j - 3)) * static_cast<long double>(t);
}

constexpr long double kTwoPiL = 2.0L * 3.14159265358979323846264338327950288L;

double reduced_cos(long double phase) { return static_cast<double>(cosl(remainderl(phase, kTwoPiL))); }
double reduced_sin(long double phase) { return static_cast<double>(sinl(remainderl(phase, kTwoPiL))); }

}  // namespace

BlockModulation block_modulation(ModulationKind kind, int j, double t, std::optional<double> extra,
                                 double base_speed) {
    BlockModulation m;
    m.kind = kind;
    m.j = j;
    m.t = t;
    const long double phase = block_phase(j, t);
    switch (kind) {
        case ModulationKind::euler_vs_data:
            if (extra)
                throw std::invalid_argument("block_modulation: euler_vs_data takes no extra parameter");
            m.first = reduced_cos(phase) - 1.0;
            m.second = reduced_sin(phase);
            break;
        case ModulationKind::two_speed: {
            if (!extra)
                throw std::invalid_argument("block_modulation: two_speed requires the second speed");
            const long double fast = phase * static_cast<long double>(*extra);
            const long double slow = phase * static_cast<long double>(base_speed);
            m.first = reduced_cos(fast) - reduced_cos(slow);
            m.second = reduced_sin(fast) - reduced_sin(slow);
            break;
        }
        case ModulationKind::viscous: {
            if (!extra)
                throw std::invalid_argument("block_modulation: viscous requires the viscosity");
            const double eps = *extra;
            if (eps < 0.0) throw std::domain_error("block_modulation: viscosity must be >= 0");
            m.first = reduced_cos(phase);
            m.second = reduced_sin(phase);
            const double k = static_cast<double>(11LL << (j - 3));
            m.third = std::expm1(-eps * k * k * t);
            break;
        }
    }
    return m;
}

ShearFlowState euler_traveling_wave(const ShearFlowState& data, double t) {
    if (data.viscosity != 0.0)
        throw WrongEquationError("euler_traveling_wave: input carries a viscosity tag; "
                                 "use ns_damped_wave");
    if (t < 0.0) throw std::domain_error("euler_traveling_wave: t must be >= 0");
    ShearFlowState out = data;
    out.profile = translate(data.profile, data.drift * t);
    out.time = t;
    return out;
}

ShearFlowState ns_damped_wave(const ShearFlowState& data, double eps, double t) {
    if (!(eps > 0.0)) throw std::domain_error("ns_damped_wave: eps must be > 0");
    if (t < 0.0) throw std::domain_error("ns_damped_wave: t must be >= 0");
    if (data.drift != 1.0)
        throw std::domain_error("ns_damped_wave: construction requires unit drift");
    ShearFlowState out = data;
    out.profile = heat_damp(translate(data.profile, t), eps, t);
    out.viscosity = eps;
    out.time = t;
    return out;
}

double euler_residual(const ShearFlowState& data, double t, const Grid1D& probe, ProfileAxis axis) {
    if (data.viscosity != 0.0)
        throw WrongEquationError("euler_residual: input carries a viscosity tag");

    if (axis == ProfileAxis::x2) {
        // Static ansatz u = (c, h(x_2), 0, ...): time derivative vanishes and
        // the advective term reduces to u_2 d_2 u_2 = h h'.
        const TrigPolynomial dh = differentiate(data.profile);
        double sup = 0.0;
        for (int i = 0; i < probe.size(); ++i) {
            const double x = probe.node(i);
            sup = std::max(sup, std::abs(data.profile.eval(x) * dh.eval(x)));
        }
        return sup;
    }

    // Traveling wave u_2 = h(x_1 - c t):
    //   time route    -c * (translate then evaluate of h')
    //   space route    c * d/dx of (translate of h)
    const double shift = data.drift * t;
    const TrigPolynomial time_route = translate(differentiate(data.profile), shift) * (-data.drift);
    const TrigPolynomial space_route = differentiate(translate(data.profile, shift)) * data.drift;
    double sup = 0.0;
    for (int i = 0; i < probe.size(); ++i) {
        const double x = probe.node(i);
        sup = std::max(sup, std::abs(time_route.eval(x) + space_route.eval(x)));
    }
    return sup;
}

double ns_residual(const ShearFlowState& data, double eps, double t, const Grid1D& probe) {
    if (!(eps > 0.0)) throw std::domain_error("ns_residual: eps must be > 0");

    // Evolution family from the state's own tag.
    const bool damped = data.viscosity > 0.0;
    const double family_eps = data.viscosity;

    // Profile at time t and its analytic time derivative, with derivatives
    // taken on the initial profile before transforming.
    TrigPolynomial at_t, time_deriv;
    const TrigPolynomial d1 = differentiate(data.profile);
    const TrigPolynomial d2 = differentiate(d1);
    if (damped) {
        at_t = heat_damp(translate(data.profile, t), family_eps, t);
        time_deriv = heat_damp(translate(d1, t), family_eps, t) * (-1.0) +
                     heat_damp(translate(d2, t), family_eps, t) * family_eps;
    } else {
        at_t = translate(data.profile, t);
        time_deriv = translate(d1, t) * (-1.0);
    }
    const TrigPolynomial space_d1 = differentiate(at_t);
    const TrigPolynomial space_d2 = differentiate(space_d1);

    double sup = 0.0;
    for (int i = 0; i < probe.size(); ++i) {
        const double x = probe.node(i);
        const double r = time_deriv.eval(x) + space_d1.eval(x) - eps * space_d2.eval(x);
        sup = std::max(sup, std::abs(r));
    }
    return sup;
}

}  // namespace besovlab
