#include "mnsd/enumerator.hpp"

#include <algorithm>
#include <cmath>

#include "mnsd/errors.hpp"

namespace mnsd {

namespace {

u64 odd_floor_sqrt(u64 n) {
    if (n == 0) return 0;
    u64 r = static_cast<u64>(std::sqrt(static_cast<double>(n)));
    while (r * r > n) --r;
    while ((r + 1) * (r + 1) <= n) ++r;
    if (r % 2 == 0 && r > 0) --r;
    return r;
}

// Descending-dimension search: subtract n*d^2 with even n for each chosen odd
// d, leaving at least 1 for the unit entry; the remainder must divide N.
void search(u64 total, u64 remaining, u64 max_dim, std::vector<TypeEntry>& acc,
            std::vector<TypeVector>& out) {
    if (total % remaining == 0) {
        std::vector<TypeEntry> entries;
        entries.reserve(acc.size() + 1);
        entries.push_back({1, remaining});
        entries.insert(entries.end(), acc.rbegin(), acc.rend());
        out.push_back(TypeVector(std::move(entries)));
    }
    if (remaining < 19) return; // smallest extension: 2*3^2 + 1
    u64 d = std::min(max_dim, odd_floor_sqrt(remaining - 1));
    for (; d >= 3; d -= 2) {
        const u64 dd = d * d;
        for (u64 count = 2; count * dd <= remaining - 1; count += 2) {
            acc.push_back({d, count});
            search(total, remaining - count * dd, d - 2, acc, out);
            acc.pop_back();
        }
    }
}

} // namespace

std::vector<TypeVector> enumerate_raw(u64 dimension) {
    if (dimension == 0) throw InvalidInput("enumerate_raw: dimension must be positive");
    if (dimension % 2 == 0)
        throw InvalidInput("enumerate_raw: dimension " + std::to_string(dimension) +
                           " is even; maximally non-self-dual modular categories are exactly "
                           "the odd-dimensional ones");
    std::vector<TypeVector> out;
    std::vector<TypeEntry> acc;
    search(dimension, dimension, odd_floor_sqrt(dimension - 1), acc, out);
    std::sort(out.begin(), out.end(), TypeVector::canonical_less);
    for (const auto& t : out) {
        if (t.fpdim() != dimension)
            throw std::logic_error("enumerate_raw produced a type of wrong dimension: " +
                                   t.format());
    }
    return out;
}

EnumerationPartition enumerate_with(u64 dimension, std::span<const std::string> filter_ids,
                                    const FilterContext& ctx) {
    std::vector<const FilterDef*> filters;
    filters.reserve(filter_ids.size());
    for (const auto& id : filter_ids) {
        const FilterDef* def = find_filter(id);
        if (!def) throw ConfigError("unknown filter id '" + id + "'");
        filters.push_back(def);
    }

    EnumerationPartition part;
    for (const auto& t : enumerate_raw(dimension)) {
        std::vector<FilterVerdict> rejecting;
        for (const FilterDef* f : filters) {
            FilterVerdict v = f->eval(t, dimension, ctx);
            if (v.status == VerdictStatus::reject) rejecting.push_back(std::move(v));
        }
        if (rejecting.empty()) {
            part.survivors.push_back(t);
        } else {
            part.rejections.push_back({t, std::move(rejecting)});
        }
    }
    return part;
}

} // namespace mnsd
