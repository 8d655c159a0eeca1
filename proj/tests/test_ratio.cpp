#include <doctest.h>

#include <cmath>
#include <random>

#include <boost/multiprecision/cpp_int.hpp>

#include "dcq/ratio.hpp"

using dcq::Error;
using dcq::errc;
using dcq::FloorWalker;
using dcq::Ratio;

TEST_CASE("parses fractions and finite decimals exactly") {
    CHECK(Ratio::parse("1/2") == Ratio::of(1, 2));
    CHECK(Ratio::parse("2/4") == Ratio::of(1, 2));
    CHECK(Ratio::parse("0.5") == Ratio::of(1, 2));
    CHECK(Ratio::parse(".5") == Ratio::of(1, 2));
    CHECK(Ratio::parse("0.35") == Ratio::of(7, 20));
    CHECK(Ratio::parse("0.333333333333333333") ==
          Ratio::of(333333333333333333LL, 1000000000000000000LL));
    CHECK(Ratio::parse("7/10").num() == 7);
    CHECK(Ratio::parse("7/10").den() == 10);
}

TEST_CASE("rejects malformed and out-of-range literals") {
    CHECK_THROWS_WITH_AS(Ratio::parse("abc"), doctest::Contains("invalid"), Error);
    CHECK_THROWS_AS(Ratio::parse("1/0"), Error);
    CHECK_THROWS_AS(Ratio::parse("-1/2"), Error);
    CHECK_THROWS_AS(Ratio::parse("1."), Error);
    CHECK_THROWS_AS(Ratio::parse(""), Error);
    CHECK_THROWS_AS(Ratio::parse(" 1/2"), Error);
    CHECK_THROWS_AS(Ratio::parse("1/2/3"), Error);
    CHECK_THROWS_AS(Ratio::parse("1e-3"), Error);
    CHECK_THROWS_AS(Ratio::parse("0.5.5"), Error);

    auto code_of = [](auto fn) {
        try {
            fn();
        } catch (const Error& e) {
            return e.code();
        }
        return errc::parse_error;
    };
    CHECK(code_of([] { Ratio::parse("3/2"); }) == errc::ratio_out_of_range);
    CHECK(code_of([] { Ratio::parse("1/1"); }) == errc::ratio_out_of_range);
    CHECK(code_of([] { Ratio::parse("0.0"); }) == errc::ratio_out_of_range);
    CHECK(code_of([] { Ratio::parse("2"); }) == errc::ratio_out_of_range);
    CHECK(code_of([] { Ratio::parse("abc"); }) == errc::parse_error);
    // 29 significant digits cannot reduce into 64-bit components: report,
    // do not round.
    CHECK(code_of([] { Ratio::parse("0.12345678901234567890123456789"); }) == errc::overflow);
}

TEST_CASE("floor_mul matches exact integer division, never float rounding") {
    CHECK(Ratio::of(1, 3).floor_mul(3) == 1);
    CHECK(Ratio::of(1, 2).floor_mul(7) == 3);
    CHECK(Ratio::of(1, 3).floor_mul(1'000'000'000) == 333'333'333);
    CHECK(Ratio::of(1, 3).floor_mul(0) == 0);

    // The trap this operation exists to avoid: a rounded binary product can
    // land just below an integer and floor one too low. (3 * double(1/3)
    // happens to round back to exactly 1.0 under round-to-even, but
    // 22 * double(15/22) lands at 14.999999999999998 and floors to 14.)
    CHECK(static_cast<std::int64_t>(22.0 * (15.0 / 22.0)) == 14);
    CHECK(Ratio::of(15, 22).floor_mul(22) == 15);
}

TEST_CASE("floor_mul result is below n for n >= 1") {
    std::mt19937_64 rng(12345);
    std::uniform_int_distribution<std::int64_t> den_dist(2, 1'000'000);
    std::uniform_int_distribution<std::int64_t> n_dist(1, 1'000'000'000'000LL);
    for (int i = 0; i < 2000; ++i) {
        std::int64_t den = den_dist(rng);
        std::uniform_int_distribution<std::int64_t> num_dist(1, den - 1);
        Ratio r = Ratio::of(num_dist(rng), den);
        std::int64_t n = n_dist(rng);
        std::int64_t f = r.floor_mul(n);
        CHECK(f >= 0);
        CHECK(f < n);
    }
}

TEST_CASE("floor_mul agrees with an arbitrary-precision oracle") {
    using boost::multiprecision::cpp_int;
    std::mt19937_64 rng(777);
    std::uniform_int_distribution<std::int64_t> den_dist(2, 2'000'000'000LL);
    std::uniform_int_distribution<std::int64_t> n_dist(0, INT64_MAX / 4);
    for (int i = 0; i < 2000; ++i) {
        std::int64_t den = den_dist(rng);
        std::uniform_int_distribution<std::int64_t> num_dist(1, den - 1);
        std::int64_t num = num_dist(rng);
        Ratio r = Ratio::of(num, den);
        std::int64_t n = n_dist(rng);
        cpp_int expected = (cpp_int(r.num()) * n) / r.den();
        CHECK(cpp_int(r.floor_mul(n)) == expected);
    }
}

TEST_CASE("FloorWalker reproduces floor_mul along a full walk") {
    std::mt19937_64 rng(31337);
    std::uniform_int_distribution<std::int64_t> den_dist(2, 97);
    for (int trial = 0; trial < 20; ++trial) {
        std::int64_t den = den_dist(rng);
        std::uniform_int_distribution<std::int64_t> num_dist(1, den - 1);
        Ratio r = Ratio::of(num_dist(rng), den);
        FloorWalker walker(r);
        CHECK(walker.index() == 0);
        for (std::int64_t n = 1; n <= 10'000; ++n) {
            walker.advance();
            CHECK(walker.index() == r.floor_mul(n));
        }
    }
}

TEST_CASE("str round-trips through parse") {
    Ratio r = Ratio::parse("0.35");
    CHECK(r.str() == "7/20");
    CHECK(Ratio::parse(r.str()) == r);
}
