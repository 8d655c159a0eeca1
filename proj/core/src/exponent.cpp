#include "dcq/exponent.hpp"

#include <cmath>
#include <cstdint>
#include <limits>
#include <optional>

namespace dcq {

double characteristic(const RecurrenceSpec& spec, double s) {
    double f = 0.0;
    for (const Branch& b : spec.branches()) {
        f += b.weight * std::exp(s * b.ratio.log());
    }
    return f;
}

double characteristic_derivative(const RecurrenceSpec& spec, double s) {
    double d = 0.0;
    for (const Branch& b : spec.branches()) {
        double lp = b.ratio.log();
        d += b.weight * std::exp(s * lp) * lp;
    }
    return d;
}

namespace {

// Builds a strict bracket around a point where f evaluated to exactly 1,
// widening symmetrically until both signs are strict. The first-order width
// needed is ~eps/|f'|, far below the 32*tol budget for any sane tolerance.
CriticalExponent bracket_exact_hit(const RecurrenceSpec& spec, double root, double tol, int iterations) {
    double step = std::max(tol, root * std::numeric_limits<double>::epsilon());
    while (step <= 32.0 * tol) {
        double lo = root - step;
        double hi = root + step;
        if (lo > 0.0 && characteristic(spec, lo) > 1.0 && characteristic(spec, hi) < 1.0) {
            return CriticalExponent{root, 0.0, lo, hi, iterations};
        }
        step *= 2.0;
    }
    throw Error(errc::tolerance_unreachable,
                "cannot certify a strict bracket of width 64*tol around s0");
}

} // namespace

CriticalExponent solve_exponent(const RecurrenceSpec& spec, double tol) {
    if (!(tol > 0.0)) {
        throw Error(errc::domain_error, "tolerance must be positive");
    }
    if (tol < 1e-15) {
        throw Error(errc::tolerance_unreachable,
                    "requested residual tolerance is below floating-point resolution (~1e-15)");
    }

    int iterations = 0;

    // f(0) = sum b_j > 1 by validation; double hi until f(hi) < 1.
    double lo = 0.0;
    double hi = 1.0;
    for (;;) {
        ++iterations;
        double fh = characteristic(spec, hi);
        if (fh < 1.0) break;
        if (fh == 1.0) return bracket_exact_hit(spec, hi, tol, iterations);
        lo = hi;
        hi *= 2.0;
        if (!std::isfinite(hi)) {
            throw Error(errc::internal_inconsistency, "no finite upper bracket for s0");
        }
    }

    // Safeguarded Newton: probe the Newton step from the midpoint when it
    // stays strictly inside the bracket, otherwise bisect. The bracket
    // invariant f(lo) > 1 > f(hi) holds throughout.
    double mid = 0.5 * (lo + hi);
    double fmid = characteristic(spec, mid);
    for (;;) {
        ++iterations;
        if (fmid == 1.0) return bracket_exact_hit(spec, mid, tol, iterations);
        if (fmid > 1.0) {
            lo = mid;
        } else {
            hi = mid;
        }

        double width = hi - lo;
        if (width <= 16.0 * tol) {
            double s0 = 0.5 * (lo + hi);
            double residual = std::abs(characteristic(spec, s0) - 1.0);
            if (residual <= tol) {
                // A Newton probe can land within an ulp of an endpoint and
                // leave the midpoint sitting on it. Nudging the touched
                // endpoint outward keeps s0 strictly inside; monotonicity
                // preserves the sign certificate without re-evaluation.
                double out_lo = lo, out_hi = hi;
                if (s0 <= out_lo) out_lo = std::nextafter(s0, 0.0);
                if (s0 >= out_hi) out_hi = std::nextafter(s0, 2.0 * s0 + 1.0);
                return CriticalExponent{s0, residual, out_lo, out_hi, iterations};
            }
            if (width <= 8.0 * std::numeric_limits<double>::epsilon() * std::max(1.0, hi)) {
                throw Error(errc::tolerance_unreachable,
                            "bracket collapsed to machine resolution with residual above tol");
            }
        }

        double next = 0.5 * (lo + hi);
        double fnext = characteristic(spec, next);
        double slope = characteristic_derivative(spec, next);
        if (slope < 0.0) {
            double newton = next - (fnext - 1.0) / slope;
            if (newton > lo && newton < hi && newton != next) {
                mid = newton;
                fmid = characteristic(spec, mid);
                continue;
            }
        }
        mid = next;
        fmid = fnext;
    }
}

namespace {

struct Convergent {
    std::int64_t num;
    std::int64_t den;
    double error;
    double quality;
};

// Continued-fraction scan of x: returns the best (lowest-quality) convergent
// u/v with v <= den_limit and |x - u/v| <= err_limit, if any. quality is
// |x - u/v| * v^2: every convergent of a "generic" irrational has quality
// O(1), so only a dramatically better match hints at a rational relation.
std::optional<Convergent> suspicious_convergent(double x, int depth,
                                                std::int64_t den_limit,
                                                double err_limit,
                                                double quality_limit) {
    std::optional<Convergent> best;
    double t = x;
    std::int64_t h_prev = 1, h_prev2 = 0; // numerators
    std::int64_t k_prev = 0, k_prev2 = 1; // denominators
    for (int i = 0; i < depth; ++i) {
        double af = std::floor(t);
        if (af > 9e17) break; // partial quotient out of integer range
        std::int64_t a = static_cast<std::int64_t>(af);
        __int128 h128 = static_cast<__int128>(a) * h_prev + h_prev2;
        __int128 k128 = static_cast<__int128>(a) * k_prev + k_prev2;
        if (h128 > INT64_MAX || k128 > INT64_MAX) break;
        std::int64_t h = static_cast<std::int64_t>(h128);
        std::int64_t k = static_cast<std::int64_t>(k128);
        if (k > 0) {
            double err = std::abs(x * static_cast<double>(k) - static_cast<double>(h)) /
                         static_cast<double>(k);
            double quality = err * static_cast<double>(k) * static_cast<double>(k);
            if (k <= den_limit && err <= err_limit && quality <= quality_limit) {
                if (!best || quality < best->quality) {
                    best = Convergent{h, k, err, quality};
                }
            }
        }
        h_prev2 = h_prev;
        h_prev = h;
        k_prev2 = k_prev;
        k_prev = k;
        double frac = t - af;
        if (frac < 1e-18) break; // expansion terminated: x is rational to double precision
        t = 1.0 / frac;
    }
    return best;
}

} // namespace

RegimeReport regime_report(const RecurrenceSpec& spec, const CriticalExponent& exponent) {
    RegimeReport report;
    for (const Branch& b : spec.branches()) {
        double p = b.ratio.value();
        report.weight_sum += b.weight;
        report.first_moment += b.weight * p;
        report.second_moment += b.weight * p * p;
    }
    report.s0_gt_1 = report.first_moment > 1.0;
    report.s0_gt_2 = report.second_moment > 1.0;

    // Regime equivalences: sum b_j p_j > 1 iff s0 > 1, and sum b_j p_j^2 > 1
    // iff s0 > 2 (both sides are f at 1 resp. 2 against f(s0) = 1). A
    // mismatch outside the neutral band means the solver and the moments
    // disagree about the same function.
    constexpr double kBand = 1e-9;
    auto cross_check = [&](double moment, double threshold, bool flag) {
        if (std::abs(moment - 1.0) <= kBand || std::abs(exponent.s0 - threshold) <= kBand) return;
        if (flag != (exponent.s0 > threshold)) {
            throw Error(errc::internal_inconsistency,
                        "moment flag disagrees with solved s0 beyond tolerance");
        }
    };
    cross_check(report.first_moment, 1.0, report.s0_gt_1);
    cross_check(report.second_moment, 2.0, report.s0_gt_2);

    const auto& branches = spec.branches();
    std::size_t m = branches.size();
    constexpr int kDepth = 20;
    constexpr std::int64_t kDenLimit = 1'000'000;
    constexpr double kErrLimit = 1e-12;
    constexpr double kQualityLimit = 1e-9;

    std::size_t suspect_pairs = 0;
    std::size_t total_pairs = 0;
    for (std::size_t j = 0; j + 1 < m; ++j) {
        for (std::size_t l = j + 1; l < m; ++l) {
            ++total_pairs;
            double x = branches[j].ratio.log() / branches[l].ratio.log();
            auto conv = suspicious_convergent(x, kDepth, kDenLimit, kErrLimit, kQualityLimit);
            if (conv) {
                ++suspect_pairs;
                report.rationality_warnings.push_back(
                    RationalityWarning{j, l, conv->num, conv->den, conv->error, conv->quality});
            }
        }
    }
    // Convergence needs SOME pair with irrational log ratio; with a single
    // branch no such pair can exist at all.
    report.irrationality_suspect = (m == 1) || (total_pairs > 0 && suspect_pairs == total_pairs);
    return report;
}

} // namespace dcq
