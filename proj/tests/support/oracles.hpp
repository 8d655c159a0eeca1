#pragma once

// Expected values frozen from independent high-precision computation
// (40-digit bracketed bisection on the characteristic equations and direct
// evaluation of the closed forms). Tests compare library output against
// these constants; nothing here goes through the library.

namespace dcq::testing {

// spec b = (1,1), p = (1/2, 1/3)
inline constexpr double kS0_HalfThird = 0.7878849110258697836;
inline constexpr double kD_HalfThird = 0.8637698962504378480;  // sum b p^{s0} ln(1/p)
inline constexpr double kEll0_HalfThird = 1.4693970127381844181;
inline constexpr double kEll1_HalfThird = 0.6183331283687292334;
inline constexpr double kEll2_HalfThird = 0.2327307560007259512;
inline constexpr double kTotal_HalfThird = 2.9387940254763688363; // (sum b)/(s0 D)
inline constexpr double kZeta1PlusS0_HalfThird = 1.9006672185578401078;

// spec b = (1,1), p = (7/10, 3/10): s0 = 1 exactly (sum p_j = 1)
inline constexpr double kD_SevenThree = 0.6108643020548934630;
inline constexpr double kEll0_SevenThree = 1.6370247805217762434;
inline constexpr double kEll1_SevenThree = 0.4911074341565328730; // general max-bounded form

// spec b = (1,1), p = (1/2, 1/2): s0 = 1, ell_0 = 1/ln 2
inline constexpr double kEll0_HalfHalf = 1.4426950408889634074;

// spec b = (2,2), p = (1/2, 1/3)
inline constexpr double kS0_TwoTwo = 1.6055248444243280076;

// spec b = (3,3), p = (1/2, 1/3)
inline constexpr double kS0_ThreeThree = 2.0980678421296678963;

} // namespace dcq::testing
