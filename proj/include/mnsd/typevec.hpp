#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mnsd/errors.hpp"

namespace mnsd {

using u64 = std::uint64_t;

// One class of simple objects: the common FP dimension and how many
// non-isomorphic simples have it.
struct TypeEntry {
    u64 dim = 0;
    u64 count = 0;

    friend bool operator==(const TypeEntry&, const TypeEntry&) = default;
};

// The "type" of a fusion category: (d_1,n_1; d_2,n_2; ...; d_s,n_s) with
// d_1 = 1 and dimensions strictly increasing. Parity constraints (odd d_i,
// even n_i) are deliberately NOT enforced here — they are filter f1's job,
// so the engine can report why a user-supplied bad type fails.
class TypeVector {
  public:
    explicit TypeVector(std::vector<TypeEntry> entries);

    // Grammar: ["("] pair (";" pair)* [")"] with pair := integer "," integer.
    // Whitespace-insensitive; optional outer parentheses.
    static TypeVector parse(std::string_view text);

    // Canonical form "(1,n1;d2,n2;...)": always parenthesized, no spaces.
    std::string format() const;

    // Sum of n_i * d_i^2.
    u64 fpdim() const;

    // Total number of simple classes, sum of n_i.
    u64 rank() const;

    // True iff the single entry is the d = 1 entry.
    bool pointed() const;

    // Number of invertible classes, n_1.
    u64 pointed_count() const { return entries_.front().count; }

    // Divides every multiplicity by r when possible, keeping dimensions.
    std::optional<TypeVector> divide_counts(u64 r) const;

    const std::vector<TypeEntry>& entries() const { return entries_; }
    std::size_t size() const { return entries_.size(); }

    // Canonical order: ascending rank, then lexicographic on the flattened
    // (d_i, n_i) sequence. Total on distinct vectors.
    static bool canonical_less(const TypeVector& a, const TypeVector& b);

    friend bool operator==(const TypeVector&, const TypeVector&) = default;

  private:
    std::vector<TypeEntry> entries_;
};

} // namespace mnsd
