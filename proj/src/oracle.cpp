#include "mnsd/oracle.hpp"

#include <algorithm>

#include "mnsd/arith.hpp"
#include "mnsd/errors.hpp"

namespace mnsd::oracle {

namespace {

// Try every ascending odd dimension d with every even count until the budget
// is exceeded, then close the type with the unit entry.
void iterate(u64 total, u64 d, u64 used, std::vector<TypeEntry>& acc,
             std::vector<TypeVector>& out) {
    if (d * d > total) {
        const u64 units = total - used;
        if (units >= 1 && total % units == 0) {
            std::vector<TypeEntry> entries;
            entries.push_back({1, units});
            entries.insert(entries.end(), acc.begin(), acc.end());
            out.push_back(TypeVector(std::move(entries)));
        }
        return;
    }
    iterate(total, d + 2, used, acc, out);
    for (u64 count = 2; used + count * d * d <= total - 1; count += 2) {
        acc.push_back({d, count});
        iterate(total, d + 2, used + count * d * d, acc, out);
        acc.pop_back();
    }
}

bool all_dims_square_divide(const TypeVector& t, u64 n) {
    for (std::size_t i = 1; i < t.entries().size(); ++i) {
        if (n % (t.entries()[i].dim * t.entries()[i].dim) != 0) return false;
    }
    return true;
}

} // namespace

std::vector<TypeVector> oracle_enumerate(u64 dimension) {
    if (dimension == 0) throw InvalidInput("oracle_enumerate: dimension must be positive");
    if (dimension % 2 == 0)
        throw InvalidInput("oracle_enumerate: dimension must be odd, got " +
                           std::to_string(dimension));
    std::vector<TypeVector> out;
    std::vector<TypeEntry> acc;
    iterate(dimension, 3, 0, acc, out);
    std::sort(out.begin(), out.end(), TypeVector::canonical_less);
    return out;
}

VerdictStatus oracle_check(const TypeVector& t, u64 n, std::string_view filter_id) {
    if (n == 0 || n % 2 == 0 || t.fpdim() != n)
        throw InvalidInput("oracle_check: type/dimension mismatch or even dimension");
    const auto& es = t.entries();
    const u64 n1 = es.front().count;

    if (filter_id == "f1") {
        for (const auto& e : es) {
            if (e.dim % 2 == 0) return VerdictStatus::reject;
        }
        for (std::size_t i = 1; i < es.size(); ++i) {
            if (es[i].count % 2 != 0) return VerdictStatus::reject;
        }
        return VerdictStatus::pass;
    }

    if (filter_id == "f2") {
        // strict reading of the statement: requires d2 = 3 and no
        // dimension-9 classes before the divisibility applies
        if (es.size() < 2 || es[1].dim != 3) return VerdictStatus::inapplicable;
        for (const auto& e : es) {
            if (e.dim == 9) return VerdictStatus::inapplicable;
        }
        return n % (n1 + 9 * es[1].count) == 0 ? VerdictStatus::pass : VerdictStatus::reject;
    }

    if (filter_id == "f3") {
        for (const auto& pp : arith::factorize(n1).factors) {
            bool coprime = false;
            for (std::size_t i = 1; i < es.size(); ++i) {
                if (es[i].count % pp.prime != 0) coprime = true;
            }
            if (!coprime) continue;
            u64 req = 1;
            for (u64 e = 0; e < 2 * pp.exponent; ++e) req *= pp.prime;
            if (n % req != 0) return VerdictStatus::reject;
        }
        return VerdictStatus::pass;
    }

    if (filter_id == "f4") {
        const u64 dmax = es.back().dim;
        return n1 * dmax * dmax > n ? VerdictStatus::reject : VerdictStatus::pass;
    }

    if (filter_id == "f5") {
        if (es.size() != 2) return VerdictStatus::inapplicable;
        const u64 d = es[1].dim;
        const u64 m = es[1].count;
        const u64 dn = d * d * n1;
        if ((m % n1 != 0 && n % dn != 0) || dn == n) return VerdictStatus::reject;
        return VerdictStatus::pass;
    }

    if (filter_id == "f8")
        return all_dims_square_divide(t, n) ? VerdictStatus::pass : VerdictStatus::reject;

    if (filter_id == "f9") {
        for (std::size_t i = 1; i < es.size(); ++i) {
            if ((es[i].count * es[i].dim * es[i].dim) % n1 != 0) return VerdictStatus::reject;
        }
        return VerdictStatus::pass;
    }

    throw ConfigError("oracle_check does not support filter id '" + std::string(filter_id) + "'");
}

} // namespace mnsd::oracle
