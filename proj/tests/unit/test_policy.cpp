#include <doctest.h>

#include <cmath>

#include "chaoskit/errors.hpp"
#include "chaoskit/policy.hpp"
#include "support/oracles.hpp"

using namespace chaoskit;

namespace {

constexpr double kUpperT = 0.9913 / 1.0479;

}  // namespace

TEST_CASE("dangerous_epsilons") {
    SUBCASE("upper-case firm coefficient") {
        const auto d = dangerous_epsilons(0.94599);
        CHECK(d[0].name == "eps1");
        CHECK(d[3].name == "eps_inf");
        REQUIRE(d[0].value);
        CHECK(std::abs(*d[0].value - 3.1713) <= 1e-3);
        CHECK(std::abs(*d[1].value - 3.6464) <= 1e-3);
        CHECK(std::abs(*d[2].value - 3.7464) <= 1e-3);
        CHECK(std::abs(*d[3].value - 3.7737) <= 1e-3);
        // printed as 3.6465 / 3.7465 in the rounded case analysis
        CHECK(std::abs(*d[1].value - 3.6465) <= 1e-3);
        CHECK(std::abs(*d[2].value - 3.7465) <= 1e-3);
    }
    SUBCASE("lower-case coefficient cannot reach any boundary") {
        for (const auto& e : dangerous_epsilons(0.17884)) CHECK_FALSE(e.value.has_value());
    }
    SUBCASE("identity scaling") {
        const auto d = dangerous_epsilons(1.0);
        CHECK(*d[0].value == 3.0);
        CHECK(*d[1].value == 3.4495);
        CHECK(*d[2].value == 3.5441);
        CHECK(*d[3].value == 3.5699);
    }
    SUBCASE("quotient of exactly 10 is unreachable") {
        CHECK_FALSE(dangerous_epsilons(0.3)[0].value.has_value());
        CHECK(dangerous_epsilons(0.30001)[0].value.has_value());
    }
    CHECK_THROWS_AS(dangerous_epsilons(0.0), DomainError);
}

TEST_CASE("max_reachable_r") {
    CHECK(std::abs(max_reachable_r(0.17884) - 1.7884) <= 1e-12);
    CHECK(std::abs(max_reachable_r(0.29245) - 2.9245) <= 1e-12);
    CHECK(max_reachable_r(0.5) == 4.0);
}

TEST_CASE("advise: the three reference cases") {
    SUBCASE("lower") {
        const auto rep = advise(std::nullopt, 10.0, 0.1494, -0.1646);
        CHECK(rep.rationale == RationaleCase::lower);
        CHECK(rep.recommendation == Recommendation::FIX_LABOUR_FIRST);
        REQUIRE(rep.r);
        CHECK(std::abs(*rep.r - 1.7884) <= 1e-4);
        REQUIRE(rep.regime);
        CHECK(rep.regime->label == Regime::period_1);
        REQUIRE(rep.steady_level);
        CHECK(std::abs(*rep.steady_level - 0.4408) <= 1e-3);
        CHECK(std::abs(*rep.steady_level - (1.0 - 1.0 / *rep.r)) <= 1e-9);
        CHECK(rep.flagged.empty());
    }
    SUBCASE("middle") {
        const auto rep = advise(std::nullopt, 10.0, 0.2754, -0.0583);
        CHECK(rep.rationale == RationaleCase::middle);
        CHECK(rep.recommendation == Recommendation::INCREASE_SUPPORT);
        CHECK(std::abs(*rep.r - 2.9245) <= 1e-4);
        CHECK(rep.regime->label == Regime::period_1);
        CHECK(std::abs(rep.max_reachable_r - 2.9245) <= 1e-4);
    }
    SUBCASE("upper") {
        const auto rep = advise(std::nullopt, 3.7737, 0.9913, 0.0479);
        CHECK(rep.rationale == RationaleCase::upper);
        CHECK(rep.recommendation == Recommendation::TUNE_AVOID_BIFURCATIONS);
        REQUIRE(rep.flagged.size() == 1);
        CHECK(rep.flagged[0] == "eps_inf");
        CHECK(std::abs(*rep.r - kAccumulation) <= 1e-4);
        // r lands 3e-5 below the rounded accumulation constant: on the edge of chaos
        CHECK(rep.regime->label == Regime::period_8_cascade);
        CHECK(classify_regime(*rep.r + 1e-4).label == Regime::chaotic);
        CHECK_FALSE(rep.steady_level.has_value());
    }
    SUBCASE("no epsilon: advice without regime") {
        const auto rep = advise(std::nullopt, std::nullopt, 0.5, 0.0);
        CHECK_FALSE(rep.regime.has_value());
        CHECK_FALSE(rep.r.has_value());
        CHECK(rep.T == 0.5);
    }
    SUBCASE("supplied T must match") {
        CHECK_NOTHROW(advise(kUpperT, 3.0, 0.9913, 0.0479));
        CHECK_THROWS_AS(advise(0.94599, 3.0, 0.9913, 0.0479), DomainError);
        CHECK_THROWS_AS(advise(std::nullopt, 3.0, 0.5, -1.0), DomainError);
        CHECK_THROWS_AS(advise(std::nullopt, 10.5, 0.5, 0.0), DomainError);
        CHECK_THROWS_AS(advise(std::nullopt, 9.0, 0.5, 0.0), DomainError);  // r = 4.5
    }
}

TEST_CASE("property: dangerous epsilons separate regimes") {
    auto g = oracle::rng(60606);
    for (int i = 0; i < 500; ++i) {
        const double T = oracle::uniform(g, 0.05, 2.0);
        for (const auto& d : dangerous_epsilons(T)) {
            if (!d.value) continue;
            const auto lo = classify_regime(T * (*d.value - 1e-4)).label;
            const auto hi = classify_regime(T * (*d.value + 1e-4)).label;
            REQUIRE(lo != hi);
        }
    }
}

TEST_CASE("property: report depends on (T, eps) only through r") {
    auto g = oracle::rng(777);
    for (int i = 0; i < 500; ++i) {
        const double r = oracle::uniform(g, 0.05, 3.99);
        const double T1 = oracle::uniform(g, r / 9.9, 1.5);
        const double T2 = oracle::uniform(g, r / 9.9, 1.5);
        const auto a = advise(std::nullopt, r / T1, T1, 0.0);
        const auto b = advise(std::nullopt, r / T2, T2, 0.0);
        REQUIRE(a.regime->label == b.regime->label);
        REQUIRE(a.steady_level.has_value() == b.steady_level.has_value());
        if (a.steady_level) REQUIRE(std::abs(*a.steady_level - *b.steady_level) <= 1e-12);
    }
}

TEST_CASE("property: every (alpha+beta, n) gets exactly one recommendation") {
    auto g = oracle::rng(1);
    for (int i = 0; i < 2000; ++i) {
        const double ab = oracle::uniform(g, 1e-9, 1.0);
        const double n = oracle::uniform(g, -0.999, 0.999);
        const auto rep = advise(std::nullopt, std::nullopt, ab, n);
        REQUIRE(rep.recommendation == recommendation_for(rationale_case(ab)));
    }
    CHECK(rationale_case(0.1494) == RationaleCase::lower);
    CHECK(rationale_case(0.14940001) == RationaleCase::middle);
    CHECK(rationale_case(0.2754) == RationaleCase::middle);
    CHECK(rationale_case(0.27540001) == RationaleCase::upper);
}
