#pragma once

#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <string_view>
#include <tuple>
#include <vector>

#include "mnsd/report.hpp"
#include "mnsd/typevec.hpp"
#include "mnsd/verdict.hpp"

// The exclusion-rule catalog: every arithmetic argument used to discard
// candidate types, as an independently callable, hypothesis-gated predicate
// with a citation key and a tri-state-plus verdict. Rules encode statements,
// not proofs.

namespace mnsd {

// Shared memo for recursive classification, keyed by dimension, filter set
// and f2 mode. Concurrent reads and idempotent concurrent writes are safe.
class MemoCache {
  public:
    using Key = std::tuple<u64, Mode, F2Mode>;

    std::shared_ptr<const ClassificationReport> lookup(const Key& key) const;

    // Returns the stored value; an existing entry for the same key wins.
    std::shared_ptr<const ClassificationReport>
    insert(const Key& key, std::shared_ptr<const ClassificationReport> value);

    std::size_t size() const;

  private:
    mutable std::mutex mutex_;
    std::map<Key, std::shared_ptr<const ClassificationReport>> entries_;
};

struct FilterContext {
    F2Mode f2_mode = F2Mode::legacy;

    // Full-mode classification of a strictly smaller dimension, memoized.
    // Wired by the pipeline; rules that recurse (f17) require it.
    std::function<std::shared_ptr<const ClassificationReport>(u64)> classify_handle;

    std::shared_ptr<MemoCache> memo;
};

using FilterFn = FilterVerdict (*)(const TypeVector&, u64, const FilterContext&);

struct FilterDef {
    std::string_view id;
    bool basic = false; // member of the divisibility stage (versus advanced)
    FilterFn eval = nullptr;
};

// Catalog in canonical evaluation order.
std::span<const FilterDef> filter_catalog();
const FilterDef* find_filter(std::string_view id); // nullptr when unknown
std::vector<const FilterDef*> filter_set(Mode mode);

// All filters share the precondition fpdim(t) == N with N odd; violations
// raise InvalidInput. Individual rules follow.
FilterVerdict structural(const TypeVector& t, u64 n, const FilterContext& ctx);
FilterVerdict f1_parity(const TypeVector& t, u64 n, const FilterContext& ctx);
FilterVerdict f2_dim3_divisibility(const TypeVector& t, u64 n, const FilterContext& ctx);
FilterVerdict f3_stabilizer_power(const TypeVector& t, u64 n, const FilterContext& ctx);
FilterVerdict f4_grading_bound(const TypeVector& t, u64 n, const FilterContext& ctx);
FilterVerdict f5_two_level(const TypeVector& t, u64 n, const FilterContext& ctx);
FilterVerdict f8_square_divides(const TypeVector& t, u64 n, const FilterContext& ctx);
FilterVerdict f9_pointed_divides_isotypic(const TypeVector& t, u64 n, const FilterContext& ctx);
FilterVerdict f10_pq_order(const TypeVector& t, u64 n, const FilterContext& ctx);
FilterVerdict f11_p2_order(const TypeVector& t, u64 n, const FilterContext& ctx);
FilterVerdict f12_perfect_adjoint(const TypeVector& t, u64 n, const FilterContext& ctx);
FilterVerdict f13_rank_window(const TypeVector& t, u64 n, const FilterContext& ctx);
FilterVerdict f14_known_pointed(const TypeVector& t, u64 n, const FilterContext& ctx);
FilterVerdict f15_adjoint_feasible(const TypeVector& t, u64 n, const FilterContext& ctx);
FilterVerdict f16_adjoint_forbidden_shape(const TypeVector& t, u64 n, const FilterContext& ctx);
FilterVerdict f17_modular_factor(const TypeVector& t, u64 n, const FilterContext& ctx);
FilterVerdict f18_sixth_power(const TypeVector& t, u64 n, const FilterContext& ctx);

// Dimension-shape hypotheses of f14, exposed for the scan fast path.
// K1: at most one prime exponent of N is >= 2, and that exponent is <= 4.
// K2: N = 3^5 d with d square-free and coprime to 3.
bool matches_known_pointed_k1(u64 n);
bool matches_known_pointed_k2(u64 n);

// Product over primes p with p^t exactly dividing n_1 such that some n_i
// (i >= 2) is coprime to p, of p^t; 1 when no prime qualifies. Divides the
// invertible count of any feasible adjoint type.
u64 forced_invertible_divisor(const TypeVector& t, u64 n);

// All type vectors (1,a; d,x; ...) with dimensions drawn from t's non-unit
// dimension set, a + sum x_j d_j^2 = N/n_1, a | n_1, the forced divisor
// dividing a, and each x_j even with 2 <= x_j <= the matching count of t.
// Canonically sorted. Empty when n_1 does not divide N.
std::vector<TypeVector> adjoint_candidates(const TypeVector& t, u64 n);

// Shipped citation table: key -> (label, quoted condition).
struct Citation {
    std::string_view key;
    std::string_view label;
    std::string_view quote;
};

std::span<const Citation> citation_table();
const Citation* find_citation(std::string_view key); // nullptr when unknown

// The citation table rendered in its on-disk format (tab-separated lines),
// for comparison with the shipped data file.
std::string citation_table_text();

} // namespace mnsd
