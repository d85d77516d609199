#pragma once

#include <memory>
#include <span>
#include <string_view>
#include <vector>

#include "mnsd/enumerator.hpp"
#include "mnsd/filters.hpp"
#include "mnsd/report.hpp"

// Orchestration: enumeration, filter application, recursion and memoization,
// comparison against the shipped reference tables, report assembly.

namespace mnsd {

inline constexpr std::string_view kEngineVersion = "1.0.0";

// Installs the memo cache and the recursive full-mode classify handle when
// the context does not carry them yet.
void ensure_context(FilterContext& ctx);

// Classifies one odd dimension. Basic mode applies the structural checks and
// the divisibility filters f1-f9; full mode adds f10-f18. Candidate
// evaluation stops at the first rejecting filter in canonical order (the
// rejected set is order-independent); explain() runs the whole catalog.
// Throws InvalidInput for even or zero dimensions.
ClassificationReport classify(u64 dimension, Mode mode, FilterContext& ctx);

// Same partition, but every filter runs and all rejecting verdicts are
// retained. Not memoized.
ClassificationReport classify_collect_all(u64 dimension, Mode mode, FilterContext& ctx);

// One report per odd N < max, ascending. In full mode, dimensions matching
// the K1 pointed hypothesis take a fast path whose report contains only the
// pointed type.
std::vector<std::shared_ptr<const ClassificationReport>> scan(u64 max, Mode mode,
                                                              FilterContext& ctx,
                                                              bool fast_path = true);

// Verdicts from every filter in the full catalog, canonical order, with no
// early exit. Requires fpdim(t) == dimension and dimension odd.
std::vector<FilterVerdict> explain(u64 dimension, const TypeVector& t, FilterContext& ctx);

// Set difference between the report's survivors and the shipped reference
// table of the matching stage (basic -> prefilter, full -> final).
// Throws NotFound for dimensions outside the reference set.
DiscrepancyReport compare_reference(const ClassificationReport& report);

// The dimensions covered by the shipped reference tables.
std::span<const u64> reference_dimensions();
bool is_reference_dimension(u64 dimension);

// Reference survivor list for one dimension and stage; canonical order.
const std::vector<TypeVector>& reference_types(u64 dimension, ReferenceStage stage);

// The reference tables in their on-disk format (line-oriented records:
// dimension, stage tag, canonical type strings).
std::string_view reference_tables_text();

// Expected attribution: for each type present in a prefilter table but
// absent from the final table, the filter whose rejection the catalog's
// arguments assign to it.
struct Attribution {
    u64 dimension;
    std::string_view type;
    std::string_view filter_id;
};

std::span<const Attribution> attribution_map();

} // namespace mnsd
