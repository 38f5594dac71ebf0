#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "besovlab/errors.hpp"
#include "besovlab/flows.hpp"
#include "besovlab/lacunary.hpp"

using namespace besovlab;

namespace {
constexpr double kPi = 3.14159265358979323846;

double sup_on_grid(const TrigPolynomial& p, const Grid1D& g) {
    double m = 0.0;
    for (int i = 0; i < g.size(); ++i) m = std::max(m, std::abs(p.eval(g.node(i))));
    return m;
}
}  // namespace

TEST_CASE("traveling wave evolution") {
    auto f = build_profile(2.0, 10, WeightRule::uniform);
    auto u0 = shear_initial_data(f, 2, 1.0);

    auto same = euler_traveling_wave(u0, 0.0);
    for (const auto& [k, ab] : u0.profile.terms()) {
        CHECK(same.profile.at(k).cos_amp == ab.cos_amp);
        CHECK(same.profile.at(k).sin_amp == ab.sin_amp);
    }

    // (11/8) 2^n t = pi flips the sign of block n.
    const int n = 6;
    const double lambda = static_cast<double>(lacunary_frequency(n));
    const double t = kPi / lambda;
    auto moved = euler_traveling_wave(u0, t);
    const int lam = static_cast<int>(lambda);
    CHECK(moved.profile.at(lam).cos_amp ==
          doctest::Approx(-u0.profile.at(lam).cos_amp).epsilon(1e-13));
    CHECK(std::abs(moved.profile.at(lam).sin_amp) < 1e-15);

    // drift c translates by c*t.
    auto fast = shear_initial_data(f, 2, 1.1);
    auto moved_fast = euler_traveling_wave(fast, 0.7);
    auto expected = translate(f.poly, 1.1 * 0.7);
    for (const auto& [k, ab] : expected.terms()) {
        CHECK(moved_fast.profile.at(k).cos_amp == doctest::Approx(ab.cos_amp).epsilon(1e-14));
        CHECK(moved_fast.profile.at(k).sin_amp == doctest::Approx(ab.sin_amp).epsilon(1e-14));
    }

    ShearFlowState viscous = u0;
    viscous.viscosity = 0.01;
    CHECK_THROWS_AS(euler_traveling_wave(viscous, 0.1), WrongEquationError);
}

TEST_CASE("damped wave evolution") {
    auto f = build_profile(2.0, 8, WeightRule::uniform);
    auto u0 = shear_initial_data(f, 2, 1.0);

    auto still = ns_damped_wave(u0, 1e-3, 0.0);
    for (const auto& [k, ab] : u0.profile.terms())
        CHECK(still.profile.at(k).cos_amp == ab.cos_amp);

    // Single mode: cos(44x) -> exp(-1936 eps t) cos(44(x-t)).
    ShearFlowState single;
    single.dimension = 2;
    single.drift = 1.0;
    single.profile = TrigPolynomial::cosine(44, 1.0);
    const double eps = 2e-3, t = 0.35;
    auto damped = ns_damped_wave(single, eps, t);
    auto expect = translate(TrigPolynomial::cosine(44, std::exp(-1936.0 * eps * t)), t);
    CHECK(damped.profile.at(44).cos_amp == doctest::Approx(expect.at(44).cos_amp).epsilon(1e-14));
    CHECK(damped.profile.at(44).sin_amp == doctest::Approx(expect.at(44).sin_amp).epsilon(1e-14));
    CHECK(damped.viscosity == eps);

    // eps -> 0 approaches the Euler wave at the first-order rate
    // eps * (121/64) 2^{2J} t * sup|f|.
    auto euler = euler_traveling_wave(u0, t);
    Grid1D g(1024);
    const double k_top = static_cast<double>(lacunary_frequency(8));
    for (double e : {1e-8, 1e-9}) {
        auto ns = ns_damped_wave(u0, e, t);
        const double gap = sup_on_grid(ns.profile - euler.profile, g);
        CHECK(gap <= e * k_top * k_top * t * f.poly.coefficient_l1() * (1.0 + 1e-9));
    }

    auto off_drift = shear_initial_data(f, 2, 1.5);
    CHECK_THROWS_AS(ns_damped_wave(off_drift, 1e-3, 0.1), std::domain_error);
    CHECK_THROWS_AS(ns_damped_wave(u0, 0.0, 0.1), std::domain_error);
}

TEST_CASE("block modulation coefficients") {
    // euler_vs_data at the flip time: (a, b) = (-2, 0).
    const int n = 9;
    const double lambda = static_cast<double>(lacunary_frequency(n));
    const double tn = kPi / lambda;
    auto m = block_modulation(ModulationKind::euler_vs_data, n, tn);
    CHECK(m.first == doctest::Approx(-2.0).epsilon(1e-14));
    CHECK(std::abs(m.second) < 1e-14);

    // two_speed at (11/8) 2^n t = n*pi with speed 1 + 1/n: (c, d) = (+-2, 0).
    const double tn2 = n * kPi / lambda;
    auto m2 = block_modulation(ModulationKind::two_speed, n, tn2, 1.0 + 1.0 / n);
    CHECK(std::abs(m2.first) == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(std::abs(m2.second) < 1e-12);

    // viscous at eps_n = (8/(11 pi)) 2^{-n}: (e, f, g) = (-1, 0, exp(-1) - 1).
    const double eps_n = 8.0 / (11.0 * kPi) * std::exp2(-n);
    auto m3 = block_modulation(ModulationKind::viscous, n, tn, eps_n);
    CHECK(m3.first == doctest::Approx(-1.0).epsilon(1e-14));
    CHECK(std::abs(m3.second) < 1e-14);
    CHECK(m3.third == doctest::Approx(std::exp(-1.0) - 1.0).epsilon(1e-12));
    CHECK(m3.third > -1.0);
    CHECK(m3.third <= 0.0);

    CHECK_THROWS_AS(block_modulation(ModulationKind::two_speed, 5, 0.1), std::invalid_argument);
    CHECK_THROWS_AS(block_modulation(ModulationKind::viscous, 5, 0.1), std::invalid_argument);
    CHECK_THROWS_AS(block_modulation(ModulationKind::euler_vs_data, 5, 0.1, 1.0),
                    std::invalid_argument);
}

TEST_CASE("modulation identities") {
    std::mt19937 rng(31);
    std::uniform_real_distribution<double> ts(0.0, 1.0);
    for (int rep = 0; rep < 20; ++rep) {
        const int j = 3 + static_cast<int>(rng() % 8);
        const double t = ts(rng);
        auto m = block_modulation(ModulationKind::euler_vs_data, j, t);
        const double lambda = static_cast<double>(lacunary_frequency(j));
        const double rhs = 4.0 * std::pow(std::sin(lambda * t / 2.0), 2);
        CHECK(m.first * m.first + m.second * m.second == doctest::Approx(rhs).epsilon(1e-12));
        CHECK(std::abs(m.first) <= 2.0 + 1e-15);
        CHECK(std::abs(m.second) <= 1.0 + 1e-15);

        // Two-speed coefficients with both speeds equal vanish identically.
        auto z = block_modulation(ModulationKind::two_speed, j, t, 1.0);
        CHECK(z.first == 0.0);
        CHECK(z.second == 0.0);

        // With base speed 0 they reduce to the euler-vs-data pair.
        auto r = block_modulation(ModulationKind::two_speed, j, t, 1.0, 0.0);
        CHECK(r.first == doctest::Approx(m.first).epsilon(1e-14));
        CHECK(r.second == doctest::Approx(m.second).epsilon(1e-14));
    }
}

TEST_CASE("euler residual certifies the traveling wave") {
    Grid1D probe(4096);
    for (double s : {0.5, 2.0}) {
        auto f = build_profile(s, 10, WeightRule::uniform);
        auto u0 = shear_initial_data(f, 2, 1.0);
        for (int n = 6; n <= 12; ++n) {
            const double t = kPi / static_cast<double>(lacunary_frequency(n));
            CHECK(euler_residual(u0, t, probe) <= 1e-10);
        }
    }

    // Static transverse field (1, cos(x_2), 0) is not a solution:
    // residual sup |cos * (-sin)| = 1/2.
    ShearFlowState bad;
    bad.dimension = 2;
    bad.drift = 1.0;
    bad.profile = TrigPolynomial::cosine(1, 1.0);
    CHECK(euler_residual(bad, 0.0, probe, ProfileAxis::x2) == doctest::Approx(0.5).epsilon(1e-6));

    ShearFlowState zero;
    zero.drift = 0.0;
    CHECK(euler_residual(zero, 0.3, probe) == 0.0);
}

TEST_CASE("advection-diffusion residual certifies the damped wave") {
    Grid1D probe(4096);
    auto f = build_profile(2.0, 10, WeightRule::uniform);
    auto u0 = shear_initial_data(f, 2, 1.0);
    for (int n = 6; n <= 12; ++n) {
        const double t = kPi / static_cast<double>(lacunary_frequency(n));
        const double eps = 8.0 / (11.0 * kPi) * std::exp2(-n);
        auto state = u0;
        state.viscosity = eps;
        CHECK(ns_residual(state, eps, t, probe) <= 1e-10);
    }

    // Euler wave probed with eps > 0: the missing diffusion term remains
    // (compare against the same probe-grid sup of f'').
    const double eps = 1e-3, t = 0.2;
    auto d2 = differentiate(differentiate(translate(f.poly, t)));
    CHECK(ns_residual(u0, eps, t, probe) ==
          doctest::Approx(eps * sup_on_grid(d2, probe)).epsilon(1e-10));

    ShearFlowState zero;
    zero.drift = 1.0;
    CHECK(ns_residual(zero, eps, t, probe) == 0.0);
}
