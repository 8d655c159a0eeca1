#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include "dcq/error.hpp"

namespace dcq {

/// An exact rational in the open interval (0,1), kept in lowest terms.
///
/// Subproblem ratios must never pass through binary floating point: the
/// index map n -> floor(p*n) is part of the recurrence definition, and a
/// rounded product mis-indexes it (floor(3 * double(1/3)) == 0, not 1).
/// All index arithmetic below is exact integer arithmetic; doubles appear
/// only where a ratio enters an analytic formula.
class Ratio {
  public:
    /// Accepts "u/v" or a finite decimal such as "0.35"; both convert
    /// exactly. Throws errc::parse_error for anything else and
    /// errc::overflow when the reduced numerator or denominator does not
    /// fit in 64 bits.
    static Ratio parse(std::string_view text);

    /// Validates 0 < num/den < 1 and reduces. Throws errc::ratio_out_of_range.
    static Ratio of(std::int64_t num, std::int64_t den);

    std::int64_t num() const noexcept { return num_; }
    std::int64_t den() const noexcept { return den_; }

    double value() const noexcept { return static_cast<double>(num_) / static_cast<double>(den_); }
    double log() const noexcept;       // ln(num/den), negative
    double log_inverse() const noexcept { return -log(); } // ln(den/num), positive

    /// floor(num*n/den) by exact 128-bit integer arithmetic. Requires n >= 0;
    /// the result is < n for n >= 1 because num < den.
    std::int64_t floor_mul(std::int64_t n) const;

    std::string str() const; // canonical "u/v"

    friend bool operator==(const Ratio&, const Ratio&) = default;

  private:
    Ratio(std::int64_t num, std::int64_t den) : num_(num), den_(den) {}

    std::int64_t num_ = 1;
    std::int64_t den_ = 2;
};

/// Walks n -> floor(p*n) incrementally for n = 0, 1, 2, ... without any
/// division in the loop. Maintains j = floor(p*n) and r = p*n - j scaled
/// by den, so each step is one add and one conditional subtract.
class FloorWalker {
  public:
    explicit FloorWalker(const Ratio& p) : num_(p.num()), den_(p.den()) {}

    std::int64_t index() const noexcept { return index_; }

    void advance() noexcept {
        rem_ += num_;
        if (rem_ >= den_) {
            rem_ -= den_;
            ++index_;
        }
    }

  private:
    std::int64_t num_;
    std::int64_t den_;
    std::int64_t rem_ = 0;   // (num * n) mod den, invariant 0 <= rem < den
    std::int64_t index_ = 0; // floor(num * n / den)
};

} // namespace dcq
