#include "fracspec/cycles.hpp"
#include "fracspec/ifs.hpp"

#include <doctest.h>

using namespace fracspec;

namespace {

// Re-verify a reported cycle: exact step relation and |chi_B| = 1 at every
// point.
void verify_cycle(Int R, const DigitSet& B, const ExtremeCycle& c) {
    REQUIRE(c.points.size() == c.digits.size());
    AffineIfs ifs(R, std::vector<Int>(B));
    for (std::size_t i = 0; i < c.points.size(); ++i) {
        Rational next = c.points[(i + 1) % c.points.size()];
        CHECK((c.points[i] + c.digits[i]) / R == next);
        double x = double(c.points[i].numerator()) / double(c.points[i].denominator());
        CHECK(std::abs(digit_mask(ifs, x)) == doctest::Approx(1.0).epsilon(1e-12));
    }
}

} // namespace

TEST_CASE("attractor interval") {
    auto [lo, hi] = attractor_interval(4, {0, 1});
    CHECK(lo == Rational(0));
    CHECK(hi == Rational(1, 3));
    CHECK_THROWS_AS(attractor_interval(1, {0, 1}), std::invalid_argument);
}

TEST_CASE("spectral pair has only the trivial cycle") {
    auto cycles = extreme_cycles(4, {0, 2}, {0, 1});
    REQUIRE(cycles.size() == 1);
    CHECK(cycles[0].trivial);
    CHECK(cycles[0].points == std::vector<Rational>{Rational(0)});
    CHECK(cycles[0].digits == std::vector<Int>{0});
    verify_cycle(4, {0, 2}, cycles[0]);
}

TEST_CASE("negative controls produce the cycle at 1") {
    auto c1 = extreme_cycles(4, {0, 2}, {0, 3});
    REQUIRE(c1.size() == 2);
    bool found = false;
    for (const ExtremeCycle& c : c1) {
        verify_cycle(4, {0, 2}, c);
        if (!c.trivial) {
            CHECK(c.points == std::vector<Rational>{Rational(1)});
            CHECK(c.digits == std::vector<Int>{3});
            found = true;
        }
    }
    CHECK(found);

    auto c2 = extreme_cycles(2, {0, 1}, {0, 1});
    REQUIRE(c2.size() == 2);
    bool found2 = false;
    for (const ExtremeCycle& c : c2)
        if (!c.trivial) {
            CHECK(c.points == std::vector<Rational>{Rational(1)});
            CHECK(c.digits == std::vector<Int>{1});
            found2 = true;
        }
    CHECK(found2);
}

TEST_CASE("a genuine two-cycle") {
    // (4, {0,5}, {0,3}): 1/5 -> (1/5+3)/4 = 4/5 -> (4/5+0)/4 = 1/5.
    auto cycles = extreme_cycles(4, {0, 5}, {0, 3});
    bool found = false;
    for (const ExtremeCycle& c : cycles) {
        verify_cycle(4, {0, 5}, c);
        if (c.points.size() == 2) {
            CHECK(c.points == std::vector<Rational>{Rational(1, 5), Rational(4, 5)});
            CHECK(c.digits == std::vector<Int>{3, 0});
            found = true;
        }
    }
    CHECK(found);
}

TEST_CASE("translation of B leaves cycles unchanged") {
    // chi_B only rotates under translation, so extremity is unaffected.
    auto a = extreme_cycles(4, {0, 2}, {0, 3});
    auto b = extreme_cycles(4, {-1, 1}, {0, 3});
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        CHECK(a[i].points == b[i].points);
        CHECK(a[i].digits == b[i].digits);
    }
}

TEST_CASE("spectral verdicts") {
    SpectralVerdict good = is_spectral_pair(4, {0, 2}, {0, 1});
    CHECK(good.spectral);
    CHECK(good.hadamard.unitary);
    CHECK(good.nontrivial_cycles.empty());

    SpectralVerdict bad = is_spectral_pair(2, {0, 1}, {0, 1});
    CHECK_FALSE(bad.spectral);
    CHECK(bad.hadamard.unitary); // Hadamard holds; the cycle breaks it
    REQUIRE(bad.nontrivial_cycles.size() == 1);
    CHECK(bad.nontrivial_cycles[0].points == std::vector<Rational>{Rational(1)});

    SpectralVerdict nh = is_spectral_pair(4, {0, 1}, {0, 1});
    CHECK_FALSE(nh.spectral);
    CHECK_FALSE(nh.hadamard.unitary);
}

TEST_CASE("cycle input validation") {
    CHECK_THROWS_AS(extreme_cycles(4, {0}, {0, 1}), std::invalid_argument);
    CHECK_THROWS_AS(extreme_cycles(4, {0, 2}, {1, 2}), std::invalid_argument);
    CHECK_THROWS_AS(extreme_cycles(1, {0, 2}, {0, 1}), std::invalid_argument);
}
