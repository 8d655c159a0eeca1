#pragma once

#include <cstdint>
#include <vector>

#include "dcq/ratio.hpp"
#include "dcq/toll.hpp"

namespace dcq {

struct Branch {
    double weight;  // b_j >= 0
    Ratio ratio;    // p_j in (0,1), exact
};

/// A validated divide-and-conquer recurrence X_n = a_n + sum_j b_j * X_{floor(p_j n)}.
///
/// Validation demands sum(b_j) > 1; otherwise the characteristic equation
/// sum b_j p_j^s = 1 has no positive root and the growth analysis is void.
/// Duplicate (b, p) pairs are kept as given, not merged.
class RecurrenceSpec {
  public:
    /// Throws errc::empty_branches, errc::negative_weight (with the branch
    /// index in the message), or errc::subcritical_weight_sum. Ratio range
    /// is enforced by Ratio itself.
    static RecurrenceSpec validate(std::vector<Branch> branches);

    const std::vector<Branch>& branches() const noexcept { return branches_; }
    std::size_t branch_count() const noexcept { return branches_.size(); }
    double weight_sum() const noexcept { return weight_sum_; }

  private:
    explicit RecurrenceSpec(std::vector<Branch> branches);

    std::vector<Branch> branches_;
    double weight_sum_ = 0.0;
};

/// Dense table X_0..X_N for one toll sequence.
struct Trajectory {
    std::int64_t horizon = 0;
    std::vector<double> values; // size horizon + 1

    double at(std::int64_t n) const { return values[static_cast<std::size_t>(n)]; }

    /// X_n / n^s0 for n >= 1.
    double ratio(std::int64_t n, double s0) const;
};

/// Fundamental solution column K^j: the trajectory of the unit impulse at j.
struct KernelColumn {
    std::int64_t impulse_index = 0;
    std::int64_t horizon = 0;
    std::vector<double> values; // size horizon + 1; zero below impulse_index

    double at(std::int64_t n) const { return values[static_cast<std::size_t>(n)]; }
};

/// Forward dynamic program over n = 0..N: O(m N) arithmetic, O(N) memory.
/// Branch contributions are summed in declaration order so results are
/// reproducible bit for bit.
Trajectory evaluate_dense(const RecurrenceSpec& spec, const Toll& toll, std::int64_t horizon);

/// Memoized evaluation of the single value X_n, visiting only indices
/// reachable from n under the maps n -> floor(p_j n). Matches
/// evaluate_dense bit for bit (same summation order). Worth using only for
/// isolated very large n; the reachable set is polylogarithmic in n.
double evaluate_sparse(const RecurrenceSpec& spec, const Toll& toll, std::int64_t n);

/// K^j over 0..N; identical to evaluate_dense(spec, Toll::impulse(j), N).
/// An impulse index beyond the horizon yields the all-zero column.
KernelColumn kernel_column(const RecurrenceSpec& spec, std::int64_t impulse_index, std::int64_t horizon);

} // namespace dcq
