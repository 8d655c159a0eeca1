#include "dcq/error.hpp"

namespace dcq {

const char* errc_name(errc code) noexcept {
    switch (code) {
        case errc::empty_branches: return "EmptyBranches";
        case errc::ratio_out_of_range: return "RatioOutOfRange";
        case errc::negative_weight: return "NegativeWeight";
        case errc::subcritical_weight_sum: return "SubcriticalWeightSum";
        case errc::parse_error: return "ParseError";
        case errc::overflow: return "Overflow";
        case errc::tolerance_unreachable: return "ToleranceUnreachable";
        case errc::envelope_too_weak: return "EnvelopeTooWeak";
        case errc::toll_index_out_of_range: return "TollIndexOutOfRange";
        case errc::empty_sample: return "EmptySample";
        case errc::out_of_validity_region: return "OutOfValidityRegion";
        case errc::domain_error: return "DomainError";
        case errc::internal_inconsistency: return "InternalInconsistency";
    }
    return "UnknownError";
}

} // namespace dcq
