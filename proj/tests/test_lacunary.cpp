#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "besovlab/besov.hpp"
#include "besovlab/dyadic.hpp"
#include "besovlab/lacunary.hpp"

using namespace besovlab;

namespace {
constexpr double kPi = 3.14159265358979323846;
}

TEST_CASE("profile construction") {
    // s=1, J=3, uniform: single term 2^{-3} cos(11x).
    auto f = build_profile(1.0, 3, WeightRule::uniform);
    CHECK(f.poly.terms().size() == 1);
    CHECK(f.poly.at(11).cos_amp == doctest::Approx(0.125).epsilon(1e-16));
    CHECK(f.k_max() == 11);

    // s=2, J=5, quadratic decay: terms j^{-2} 2^{-2j} cos(11*2^{j-3} x).
    auto g = build_profile(2.0, 5, WeightRule::quadratic_decay);
    CHECK(g.poly.terms().size() == 3);
    for (int j = 3; j <= 5; ++j) {
        const int lambda = static_cast<int>(lacunary_frequency(j));
        const double expected = std::exp2(-2.0 * j) / (j * j);
        CHECK(g.poly.at(lambda).cos_amp == doctest::Approx(expected).epsilon(1e-16));
        CHECK(g.poly.at(lambda).sin_amp == 0.0);
    }

    CHECK_THROWS_AS(build_profile(1.0, 2, WeightRule::uniform), std::domain_error);
    CHECK_THROWS_AS(build_profile(0.0, 5, WeightRule::uniform), std::domain_error);
    CHECK_THROWS_AS(build_profile(-1.0, 5, WeightRule::uniform), std::domain_error);
}

TEST_CASE("frequencies are exact integers") {
    CHECK(lacunary_frequency(3) == 11);
    CHECK(lacunary_frequency(4) == 22);
    CHECK(lacunary_frequency(16) == 11LL * 8192LL);
    CHECK_THROWS_AS(lacunary_frequency(2), std::domain_error);
}

TEST_CASE("profiles are block diagonal") {
    auto part = build_partition(131072);
    for (auto rule : {WeightRule::uniform, WeightRule::quadratic_decay}) {
        auto f = build_profile(1.25, 16, rule);
        for (int j = -1; j <= 18; ++j) {
            auto block = dyadic_block(f.poly, j, part);
            if (j >= 3 && j <= 16) {
                const int lambda = static_cast<int>(lacunary_frequency(j));
                const double w = rule == WeightRule::uniform ? 1.0 : 1.0 / (j * j);
                const double expected = w * std::exp2(-1.25 * j);
                CHECK(block.terms().size() == 1);
                CHECK(std::abs(block.at(lambda).cos_amp - expected) <= 1e-12);
            } else {
                CHECK(block.empty());
            }
        }
    }
}

TEST_CASE("uniform-rule Besov norm equals c0 for every s and J") {
    auto part = build_partition(131072);
    for (double s : {0.5, 1.0, 2.0}) {
        for (int J : {3, 8, 16}) {
            auto f = build_profile(s, J, WeightRule::uniform);
            for (double p : {1.0, 2.0, kInf}) {
                const double norm = besov_norm_scalar(f.poly, BesovIndex{s, p, kInf}, J, 1, part);
                CHECK(norm == doctest::Approx(c0(p)).epsilon(1e-10));
            }
        }
    }
}

TEST_CASE("profiles are even and 2*pi periodic") {
    auto f = build_profile(0.8, 10, WeightRule::uniform);
    for (double x : {0.3, 1.1, 2.9}) {
        CHECK(f.poly.eval(x) == doctest::Approx(f.poly.eval(-x)).epsilon(1e-13));
    }
    auto moved = translate(f.poly, 2.0 * kPi);
    for (const auto& [k, ab] : f.poly.terms()) {
        CHECK(moved.at(k).cos_amp == doctest::Approx(ab.cos_amp).epsilon(1e-14));
        CHECK(std::abs(moved.at(k).sin_amp) <= 1e-14);
    }
}

TEST_CASE("shear initial data") {
    auto f = build_profile(2.0, 10, WeightRule::uniform);

    auto u0 = shear_initial_data(f, 2, 1.0);
    CHECK(u0.dimension == 2);
    CHECK(u0.drift == 1.0);
    CHECK(u0.viscosity == 0.0);
    CHECK(u0.time == 0.0);
    CHECK(u0.pressure == 0.0);

    auto u0n = shear_initial_data(f, 2, 1.0 + 1.0 / 10.0);
    CHECK(u0n.drift == doctest::Approx(1.1).epsilon(1e-16));

    auto g = build_profile(2.0, 10, WeightRule::quadratic_decay);
    auto v0 = shear_initial_data(g, 3, 1.0);
    CHECK(v0.dimension == 3);

    CHECK_THROWS_AS(shear_initial_data(f, 1, 1.0), std::domain_error);
}

TEST_CASE("weight rule names round trip") {
    CHECK(weight_rule_from_string("uniform") == WeightRule::uniform);
    CHECK(weight_rule_from_string("jsq") == WeightRule::quadratic_decay);
    CHECK(to_string(WeightRule::quadratic_decay) == "jsq");
    CHECK_THROWS_AS(weight_rule_from_string("cubic"), std::domain_error);
}
