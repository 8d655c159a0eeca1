#pragma once

#include "config.hpp"

namespace dcq::cli {

// Exit codes: 0 success, 1 parse error, 2 validation/hypothesis error,
// 3 internal inconsistency.
inline constexpr int kExitOk = 0;
inline constexpr int kExitParse = 1;
inline constexpr int kExitValidation = 2;
inline constexpr int kExitInternal = 3;

int cmd_solve(const AnalysisConfig& config);
int cmd_trace(const AnalysisConfig& config);
int cmd_coeffs(const AnalysisConfig& config);
int cmd_limit(const AnalysisConfig& config);
int cmd_mc(const AnalysisConfig& config);

/// Maps a thrown dcq::Error onto the exit-code contract.
int exit_code_for(const Error& error) noexcept;

} // namespace dcq::cli
