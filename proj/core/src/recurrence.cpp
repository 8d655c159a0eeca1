#include "dcq/recurrence.hpp"

#include <cmath>
#include <unordered_map>

namespace dcq {

RecurrenceSpec::RecurrenceSpec(std::vector<Branch> branches) : branches_(std::move(branches)) {
    for (const Branch& b : branches_) weight_sum_ += b.weight;
}

RecurrenceSpec RecurrenceSpec::validate(std::vector<Branch> branches) {
    if (branches.empty()) {
        throw Error(errc::empty_branches, "a recurrence needs at least one branch");
    }
    double sum = 0.0;
    for (std::size_t j = 0; j < branches.size(); ++j) {
        if (!(branches[j].weight >= 0.0)) {
            throw Error(errc::negative_weight,
                        "branch " + std::to_string(j) + " has negative weight " +
                            std::to_string(branches[j].weight));
        }
        sum += branches[j].weight;
    }
    if (!(sum > 1.0)) {
        throw Error(errc::subcritical_weight_sum,
                    "weight sum " + std::to_string(sum) +
                        " <= 1: no positive root s0 exists");
    }
    return RecurrenceSpec(std::move(branches));
}

double Trajectory::ratio(std::int64_t n, double s0) const {
    return at(n) / std::pow(static_cast<double>(n), s0);
}

Trajectory evaluate_dense(const RecurrenceSpec& spec, const Toll& toll, std::int64_t horizon) {
    if (horizon < 0) {
        throw Error(errc::domain_error, "horizon must be non-negative");
    }
    Trajectory out;
    out.horizon = horizon;
    out.values.resize(static_cast<std::size_t>(horizon) + 1);
    out.values[0] = toll(0);

    const auto& branches = spec.branches();
    std::vector<FloorWalker> walkers;
    walkers.reserve(branches.size());
    for (const Branch& b : branches) walkers.emplace_back(b.ratio);

    for (std::int64_t n = 1; n <= horizon; ++n) {
        double x = toll(n);
        for (std::size_t j = 0; j < branches.size(); ++j) {
            walkers[j].advance(); // now holds floor(p_j * n) < n
            x += branches[j].weight * out.values[static_cast<std::size_t>(walkers[j].index())];
        }
        out.values[static_cast<std::size_t>(n)] = x;
    }
    return out;
}

double evaluate_sparse(const RecurrenceSpec& spec, const Toll& toll, std::int64_t n) {
    if (n < 0) {
        throw Error(errc::domain_error, "index must be non-negative");
    }
    std::unordered_map<std::int64_t, double> memo;
    // The recursion depth is bounded by log(n)/log(1/p_max), so plain
    // recursion is safe; the lambda keeps declaration-order summation to
    // stay bit-compatible with the dense table.
    auto eval = [&](auto&& self, std::int64_t k) -> double {
        if (k == 0) return toll(0);
        if (auto it = memo.find(k); it != memo.end()) return it->second;
        double x = toll(k);
        for (const Branch& b : spec.branches()) {
            x += b.weight * self(self, b.ratio.floor_mul(k));
        }
        memo.emplace(k, x);
        return x;
    };
    return eval(eval, n);
}

KernelColumn kernel_column(const RecurrenceSpec& spec, std::int64_t impulse_index, std::int64_t horizon) {
    if (impulse_index < 0 || horizon < 0) {
        throw Error(errc::domain_error, "impulse index and horizon must be non-negative");
    }
    // An impulse past the horizon has not fired yet: the column is all
    // zeros (K^j_n = 0 for n < j).
    KernelColumn out;
    out.impulse_index = impulse_index;
    out.horizon = horizon;
    out.values.resize(static_cast<std::size_t>(horizon) + 1);
    out.values[0] = impulse_index == 0 ? 1.0 : 0.0;

    const auto& branches = spec.branches();
    std::vector<FloorWalker> walkers;
    walkers.reserve(branches.size());
    for (const Branch& b : branches) walkers.emplace_back(b.ratio);

    for (std::int64_t n = 1; n <= horizon; ++n) {
        double x = n == impulse_index ? 1.0 : 0.0;
        for (std::size_t j = 0; j < branches.size(); ++j) {
            walkers[j].advance();
            x += branches[j].weight * out.values[static_cast<std::size_t>(walkers[j].index())];
        }
        out.values[static_cast<std::size_t>(n)] = x;
    }
    return out;
}

} // namespace dcq
