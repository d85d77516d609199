#pragma once

#include <string>
#include <string_view>

namespace mnsd {

// Outcome of one exclusion rule on one candidate type. "pass" means "not
// excluded by this rule"; "inapplicable" means the rule's hypothesis does
// not hold; "inconclusive" is reserved for the one rule whose written
// argument does not cover every configuration (f18).
enum class VerdictStatus { pass, reject, inapplicable, inconclusive };

std::string_view to_string(VerdictStatus s);

enum class F2Mode { legacy, strict };
enum class Mode { basic, full };

std::string_view to_string(F2Mode m);
std::string_view to_string(Mode m);

struct FilterVerdict {
    std::string filter_id;
    VerdictStatus status = VerdictStatus::pass;
    std::string reason;
    std::string citation; // key into the shipped citation table

    friend bool operator==(const FilterVerdict&, const FilterVerdict&) = default;
};

} // namespace mnsd
