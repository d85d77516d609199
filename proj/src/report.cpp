#include "mnsd/report.hpp"

namespace mnsd {

std::string_view to_string(VerdictStatus s) {
    switch (s) {
    case VerdictStatus::pass: return "pass";
    case VerdictStatus::reject: return "reject";
    case VerdictStatus::inapplicable: return "inapplicable";
    case VerdictStatus::inconclusive: return "inconclusive";
    }
    return "?";
}

std::string_view to_string(F2Mode m) { return m == F2Mode::legacy ? "legacy" : "strict"; }

std::string_view to_string(Mode m) { return m == Mode::basic ? "basic" : "full"; }

std::string_view to_string(ReferenceStage s) {
    return s == ReferenceStage::prefilter ? "prefilter" : "final";
}

bool ClassificationReport::same_outcome(const ClassificationReport& other) const {
    return dimension == other.dimension && factorization == other.factorization &&
           mode == other.mode && f2_mode == other.f2_mode && raw_count == other.raw_count &&
           survivors == other.survivors && rejections == other.rejections &&
           unresolved == other.unresolved && engine_version == other.engine_version;
}

} // namespace mnsd
