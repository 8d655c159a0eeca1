#pragma once

#include <stdexcept>
#include <string>

namespace dcq {

// One code per contract violation the library reports. The CLI maps these
// onto exit codes, so additions here need a mapping there as well.
enum class errc {
    empty_branches,
    ratio_out_of_range,
    negative_weight,
    subcritical_weight_sum,
    parse_error,
    overflow,
    tolerance_unreachable,
    envelope_too_weak,
    toll_index_out_of_range,
    empty_sample,
    out_of_validity_region,
    domain_error,
    internal_inconsistency,
};

class Error : public std::runtime_error {
  public:
    Error(errc code, const std::string& what) : std::runtime_error(what), code_(code) {}

    errc code() const noexcept { return code_; }

  private:
    errc code_;
};

const char* errc_name(errc code) noexcept;

} // namespace dcq
