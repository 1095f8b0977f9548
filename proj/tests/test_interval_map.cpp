#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <random>

#include "doctest.h"
#include "topent/interval_map.hpp"

using namespace topent;

namespace {

double fprime(const ModalMap& map, double x, double h = 1e-6) {
    return (map(std::min(x + h, map.domain().hi)) - map(std::max(x - h, map.domain().lo))) /
           (2.0 * h);
}

double cubic_derivative(const CubicParams& p, double x) {
    return 3.0 * p.alpha * x * x + 2.0 * p.beta * x + (-p.sigma1 - p.alpha);
}

CubicParams random_cubic(std::mt19937& rng, bool positive) {
    std::uniform_real_distribution<double> uni(0.0, 1.0);
    for (;;) {
        const double mag = 1.0 + 1e-3 + (3.0 - 1e-3) * uni(rng);
        const double alpha = positive ? mag : -mag;
        const double bound = 2.0 * std::sqrt(mag) - mag;
        const double beta = (2.0 * uni(rng) - 1.0) * bound * 0.999;
        const CubicParams p{alpha, beta, positive ? -1 : 1};
        if (cubic_invalid_reason(p).empty()) return p;
    }
}

}  // namespace

TEST_CASE("family evaluation matches the defining formulas") {
    CHECK(ModalMap::logistic(4.0)(0.5) == doctest::Approx(1.0));
    CHECK(ModalMap::tent(2.0)(0.25) == doctest::Approx(0.5));
    CHECK(ModalMap::cubic({4.0, 0.0, -1})(0.5) == doctest::Approx(-1.0));
    // composition order is inner map first
    CHECK(ModalMap::quartic({4.0, 3.0})(0.5) == doctest::Approx(0.0));
    CHECK(ModalMap::sawtooth({2.0, 1.5})(0.25) == doctest::Approx(0.75));
}

TEST_CASE("evaluation outside the domain is rejected") {
    const ModalMap q = ModalMap::logistic(4.0);
    CHECK_THROWS_AS(q(1.5), DomainError);
    CHECK_THROWS_AS(q(-0.1), DomainError);
}

TEST_CASE("cubic critical points") {
    const auto [c1, c2] = critical_points_cubic({4.0, 0.0, -1});
    CHECK(c1 == doctest::Approx(-0.5));
    CHECK(c2 == doctest::Approx(0.5));

    const ModalMap cheb = ModalMap::cubic({4.0, 0.0, -1});
    CHECK(cheb(c1) == doctest::Approx(1.0));   // (p1, p2) = (1, -1)
    CHECK(cheb(c2) == doctest::Approx(-1.0));

    CHECK_THROWS_AS(critical_points_cubic({1.0, 0.0, -1}), DegenerateMapError);
}

TEST_CASE("quartic critical points") {
    const auto three = critical_points_quartic({4.0, 4.0});
    REQUIRE(three.size() == 3);
    CHECK(three[0] == doctest::Approx((2.0 - std::sqrt(2.0)) / 4.0));
    CHECK(three[1] == doctest::Approx(0.5));
    CHECK(three[2] == doctest::Approx((2.0 + std::sqrt(2.0)) / 4.0));

    CHECK(critical_points_quartic({1.5, 3.0}) == std::vector<double>{0.5});
    CHECK(critical_points_quartic({2.0, 3.0}) == std::vector<double>{0.5});
}

TEST_CASE("sawtooth entropy closed form") {
    CHECK(exact_sawtooth_entropy({2.0, 2.0}) == doctest::Approx(std::log(4.0)));
    CHECK(exact_sawtooth_entropy({1.0, 1.0}) == 0.0);
    CHECK(exact_sawtooth_entropy({0.5, 2.0}) == doctest::Approx(0.0));
}

TEST_CASE("random cubics have flat derivative at the critical points") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 1000; ++trial) {
        const CubicParams p = random_cubic(rng, trial % 2 == 0);
        const auto [c1, c2] = critical_points_cubic(p);
        CHECK(c1 < c2);
        CHECK(std::abs(cubic_derivative(p, c1)) < 1e-12);
        CHECK(std::abs(cubic_derivative(p, c2)) < 1e-12);
        CHECK(c1 > -1.0);
        CHECK(c2 < 1.0);
    }
}

TEST_CASE("boundary anchoring and invariance of the witness set") {
    std::mt19937 rng(11);
    std::uniform_real_distribution<double> u01(0.0, 1.0);
    std::vector<ModalMap> maps;
    for (int k = 0; k < 50; ++k) {
        maps.push_back(ModalMap::logistic(4.0 * u01(rng)));
        maps.push_back(ModalMap::tent(2.0 * u01(rng)));
        maps.push_back(ModalMap::sawtooth({0.5 + 1.5 * u01(rng), 0.5 + 1.5 * u01(rng)}));
        maps.push_back(ModalMap::quartic({4.0 * u01(rng), 4.0 * u01(rng)}));
        maps.push_back(ModalMap::cubic(random_cubic(rng, true)));
        maps.push_back(ModalMap::cubic(random_cubic(rng, false)));
    }
    for (const ModalMap& m : maps) {
        const Interval dom = m.domain();
        for (double e : {dom.lo, dom.hi}) {
            const double fe = m(e);
            const double gap = std::min(std::abs(fe - dom.lo), std::abs(fe - dom.hi));
            CHECK(gap <= 1e-12);
        }
        for (double c : m.critical_points()) CHECK(dom.contains(m(c), 1e-9));
    }
}

TEST_CASE("derivative sign alternates across critical points, consistent with shape") {
    std::mt19937 rng(13);
    for (int trial = 0; trial < 200; ++trial) {
        const ModalMap m = trial % 2 == 0
                               ? ModalMap::cubic(random_cubic(rng, trial % 4 == 0))
                               : ModalMap::quartic({2.0 + 1.9 * (trial % 97) / 96.0, 3.7});
        double expected = m.shape() == Shape::Positive ? 1.0 : -1.0;
        double x_prev = m.domain().lo;
        for (double c : m.critical_points()) {
            const double mid = 0.5 * (x_prev + c);
            CHECK(fprime(m, mid) * expected > 0.0);
            expected = -expected;
            x_prev = c;
        }
        const double mid = 0.5 * (x_prev + m.domain().hi);
        CHECK(fprime(m, mid) * expected > 0.0);
    }
}

TEST_CASE("parameter range validation") {
    CHECK_THROWS_AS(ModalMap::logistic(4.5), DomainError);
    CHECK_THROWS_AS(ModalMap::tent(-0.1), DomainError);
    CHECK_THROWS_AS(ModalMap::cubic({2.0, 1.5, -1}), DomainError);  // beta bound
    CHECK_THROWS_AS(ModalMap::cubic({1.0, 0.0, -1}), DomainError);  // alpha <= 1
    CHECK_THROWS_AS(ModalMap::cubic({4.0, 0.0, 1}), DomainError);   // wrong sigma pairing
    CHECK(cubic_invalid_reason({4.0, 0.0, -1}).empty());
    CHECK(cubic_invalid_reason({-4.0, 0.0, 1}).empty());
    CHECK_FALSE(cubic_invalid_reason({2.0, 1.5, -1}).empty());
}

TEST_CASE("sawtooth modality follows the inner slope") {
    CHECK(ModalMap::sawtooth({0.9, 1.8}).modality() == 1);
    CHECK(ModalMap::sawtooth({1.0, 1.8}).modality() == 1);
    CHECK(ModalMap::sawtooth({1.6, 0.7}).modality() == 3);
}
