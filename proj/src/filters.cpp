#include "mnsd/filters.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <string>

#include "mnsd/arith.hpp"

namespace mnsd {

namespace {

using arith::factorize;
using arith::is_prime;
using arith::is_prime_power;
using arith::is_square_free;
using arith::p_part;

void check_shared(const TypeVector& t, u64 n) {
    if (n == 0 || n % 2 == 0)
        throw InvalidInput("filters require an odd positive dimension, got " + std::to_string(n));
    if (t.fpdim() != n)
        throw InvalidInput("type " + t.format() + " has FP dimension " +
                           std::to_string(t.fpdim()) + ", expected " + std::to_string(n));
}

u64 ipow(u64 base, u64 exp) {
    u64 r = 1;
    while (exp--) r *= base;
    return r;
}

std::string num(u64 v) { return std::to_string(v); }

FilterVerdict verdict(std::string_view id, VerdictStatus st, std::string reason,
                      std::string_view citation) {
    return FilterVerdict{std::string(id), st, std::move(reason), std::string(citation)};
}

FilterVerdict pass(std::string_view id, std::string reason, std::string_view citation) {
    return verdict(id, VerdictStatus::pass, std::move(reason), citation);
}

FilterVerdict reject(std::string_view id, std::string reason, std::string_view citation) {
    return verdict(id, VerdictStatus::reject, std::move(reason), citation);
}

FilterVerdict inapplicable(std::string_view id, std::string reason, std::string_view citation) {
    return verdict(id, VerdictStatus::inapplicable, std::move(reason), citation);
}

FilterVerdict inconclusive(std::string_view id, std::string reason, std::string_view citation) {
    return verdict(id, VerdictStatus::inconclusive, std::move(reason), citation);
}

// Valid (q, cofactor) readings of N = p^m q^n d with the full exponents of
// p and q pulled out, n <= 4 and d square-free (hence coprime to p and q).
std::vector<u64> valid_second_primes(u64 n, u64 p, u64 p_exponent) {
    std::vector<u64> out;
    const u64 rest = n / ipow(p, p_exponent);
    for (const auto& qq : factorize(rest).factors) {
        if (qq.exponent > 4) continue;
        if (!is_square_free(rest / ipow(qq.prime, qq.exponent))) continue;
        out.push_back(qq.prime);
    }
    return out;
}

} // namespace

// ---------------------------------------------------------------------------
// memo cache

std::shared_ptr<const ClassificationReport> MemoCache::lookup(const Key& key) const {
    std::lock_guard<std::mutex> lock(mutex_);
    const auto it = entries_.find(key);
    return it == entries_.end() ? nullptr : it->second;
}

std::shared_ptr<const ClassificationReport>
MemoCache::insert(const Key& key, std::shared_ptr<const ClassificationReport> value) {
    std::lock_guard<std::mutex> lock(mutex_);
    const auto [it, fresh] = entries_.emplace(key, std::move(value));
    return it->second;
}

std::size_t MemoCache::size() const {
    std::lock_guard<std::mutex> lock(mutex_);
    return entries_.size();
}

// ---------------------------------------------------------------------------
// structural constraints (definitional divisibility + solvability)

FilterVerdict structural(const TypeVector& t, u64 n, const FilterContext&) {
    check_shared(t, n);
    const u64 n1 = t.pointed_count();
    if (n % n1 != 0)
        return reject("structural",
                      "invertible count n1 = " + num(n1) + " does not divide N = " + num(n),
                      "structural_divides");
    if (n > 1 && n1 == 1)
        return reject("structural",
                      "odd-dimensional modular categories below the bound are solvable, so a "
                      "non-trivial one has n1 > 1; got n1 = 1 at N = " +
                          num(n),
                      "structural_solvable");
    return pass("structural", "n1 = " + num(n1) + " divides N and is non-trivial where required",
                "structural_solvable");
}

// ---------------------------------------------------------------------------
// f1: odd dimensions, even multiplicities

FilterVerdict f1_parity(const TypeVector& t, u64 n, const FilterContext&) {
    check_shared(t, n);
    const auto& es = t.entries();
    for (const auto& e : es) {
        if (e.dim % 2 == 0)
            return reject("f1", "even dimension d = " + num(e.dim), "f1");
    }
    for (std::size_t i = 1; i < es.size(); ++i) {
        if (es[i].count % 2 != 0)
            return reject("f1",
                          "odd multiplicity n = " + num(es[i].count) + " for dimension " +
                              num(es[i].dim),
                          "f1");
    }
    return pass("f1", "all dimensions odd, all non-unit multiplicities even", "f1");
}

// ---------------------------------------------------------------------------
// f2: with d2 = 3, n1 + 9 n2 divides N. Legacy mode applies the divisibility
// unconditionally; strict mode requires the absence of dimension-9 classes.

FilterVerdict f2_dim3_divisibility(const TypeVector& t, u64 n, const FilterContext& ctx) {
    check_shared(t, n);
    const auto& es = t.entries();
    if (es.size() < 2 || es[1].dim != 3)
        return inapplicable("f2", "no dimension-3 classes", "f2");
    if (ctx.f2_mode == F2Mode::strict) {
        for (const auto& e : es) {
            if (e.dim == 9)
                return inapplicable(
                    "f2", "dimension-9 classes present; divisibility clause not justified",
                    "f2_strict");
        }
    }
    const u64 n1 = t.pointed_count();
    const u64 sub = n1 + 9 * es[1].count;
    if (n % sub != 0)
        return reject("f2",
                      "n1 + 9*n2 = " + num(sub) + " does not divide N = " + num(n), "f2");
    return pass("f2", "n1 + 9*n2 = " + num(sub) + " divides N = " + num(n), "f2");
}

// ---------------------------------------------------------------------------
// f3: for p^t exactly dividing n1 with some non-unit multiplicity coprime to
// p, the square p^{2t} must divide N.

FilterVerdict f3_stabilizer_power(const TypeVector& t, u64 n, const FilterContext&) {
    check_shared(t, n);
    const auto& es = t.entries();
    bool forced = false;
    for (const auto& pp : factorize(t.pointed_count()).factors) {
        bool coprime_exists = false;
        for (std::size_t i = 1; i < es.size(); ++i) {
            if (es[i].count % pp.prime != 0) {
                coprime_exists = true;
                break;
            }
        }
        if (!coprime_exists) continue;
        forced = true;
        const u64 req = ipow(pp.prime, 2 * pp.exponent);
        if (n % req != 0)
            return reject("f3",
                          num(pp.prime) + "^" + num(pp.exponent) + " exactly divides n1 = " +
                              num(t.pointed_count()) + " and some multiplicity is coprime to " +
                              num(pp.prime) + ", but " + num(pp.prime) + "^" +
                              num(2 * pp.exponent) + " = " + num(req) + " does not divide N = " +
                              num(n),
                          "f3");
    }
    if (!forced) return pass("f3", "no prime of n1 forces a square divisibility", "f3");
    return pass("f3", "every forced prime-power square divides N", "f3");
}

// ---------------------------------------------------------------------------
// f4: n1 * (max d)^2 <= N, from equal-size universal grading components

FilterVerdict f4_grading_bound(const TypeVector& t, u64 n, const FilterContext&) {
    check_shared(t, n);
    const u64 n1 = t.pointed_count();
    const u64 dmax = t.entries().back().dim;
    const u64 bound = n1 * dmax * dmax;
    if (bound > n)
        return reject("f4",
                      "n1*(max d)^2 = " + num(n1) + "*" + num(dmax * dmax) + " = " + num(bound) +
                          " exceeds N = " + num(n),
                      "f4");
    return pass("f4", "n1*(max d)^2 = " + num(bound) + " <= N = " + num(n), "f4");
}

// ---------------------------------------------------------------------------
// f5: two-level types (1,n;d,m): n | m or d^2 n | N, and d^2 n < N

FilterVerdict f5_two_level(const TypeVector& t, u64 n, const FilterContext&) {
    check_shared(t, n);
    const auto& es = t.entries();
    if (es.size() != 2) return inapplicable("f5", "type does not have exactly two levels", "f5");
    const u64 units = es[0].count;
    const u64 d = es[1].dim;
    const u64 m = es[1].count;
    const u64 dn = d * d * units;
    if (m % units != 0 && n % dn != 0)
        return reject("f5",
                      "n = " + num(units) + " does not divide m = " + num(m) + " and d^2*n = " +
                          num(dn) + " does not divide N = " + num(n),
                      "f5");
    if (dn == n)
        return reject("f5", "d^2*n = N = " + num(n) + ", the excluded extreme case", "f5");
    return pass("f5", "two-level divisibility holds with d^2*n = " + num(dn) + " < N", "f5");
}

// ---------------------------------------------------------------------------
// f8: every d_i^2 divides N

FilterVerdict f8_square_divides(const TypeVector& t, u64 n, const FilterContext&) {
    check_shared(t, n);
    const auto& es = t.entries();
    for (std::size_t i = 1; i < es.size(); ++i) {
        const u64 dd = es[i].dim * es[i].dim;
        if (n % dd != 0)
            return reject("f8",
                          "d^2 = " + num(dd) + " does not divide N = " + num(n) +
                              " for dimension " + num(es[i].dim),
                          "f8");
    }
    return pass("f8", "every squared dimension divides N", "f8");
}

// ---------------------------------------------------------------------------
// f9: n1 divides every isotypic dimension n_i d_i^2

FilterVerdict f9_pointed_divides_isotypic(const TypeVector& t, u64 n, const FilterContext&) {
    check_shared(t, n);
    const auto& es = t.entries();
    const u64 n1 = t.pointed_count();
    for (std::size_t i = 1; i < es.size(); ++i) {
        const u64 iso = es[i].count * es[i].dim * es[i].dim;
        if (iso % n1 != 0)
            return reject("f9",
                          "n1 = " + num(n1) + " does not divide n_i*d_i^2 = " + num(iso) +
                              " for dimension " + num(es[i].dim),
                          "f9");
    }
    return pass("f9", "n1 divides every isotypic dimension", "f9");
}

// ---------------------------------------------------------------------------
// f10: N = p^m q^n d (m in {2,3}, n <= 4, d square-free coprime to pq) with
// n1 = p prime requires p | q-1 or q | p-1

FilterVerdict f10_pq_order(const TypeVector& t, u64 n, const FilterContext&) {
    check_shared(t, n);
    const u64 p = t.pointed_count();
    if (!is_prime(p)) return inapplicable("f10", "n1 = " + num(p) + " is not prime", "f10");
    const u64 m = p_part(n, p).exponent;
    if (m != 2 && m != 3)
        return inapplicable("f10", "exponent of p = " + num(p) + " in N is " + num(m) +
                                       ", not 2 or 3", "f10");
    const auto qs = valid_second_primes(n, p, m);
    if (qs.empty())
        return inapplicable("f10", "N has no p^m q^n d reading with square-free cofactor", "f10");
    for (const u64 q : qs) {
        if ((q - 1) % p != 0 && (p - 1) % q != 0)
            return reject("f10",
                          "N = " + num(n) + " reads as p^" + num(m) + " q^n d with p = " + num(p) +
                              ", q = " + num(q) + ", but " + num(p) + " does not divide " +
                              num(q - 1) + " and " + num(q) + " does not divide " + num(p - 1),
                          "f10");
    }
    return pass("f10", "every valid second prime satisfies the order condition", "f10");
}

// ---------------------------------------------------------------------------
// f11: N = p^3 q^n d (p < q, n <= 4, d square-free coprime to pq) with
// n1 = p^2 requires p | q-1

FilterVerdict f11_p2_order(const TypeVector& t, u64 n, const FilterContext&) {
    check_shared(t, n);
    const auto pp = is_prime_power(t.pointed_count());
    if (!pp || pp->exponent != 2)
        return inapplicable("f11", "n1 = " + num(t.pointed_count()) + " is not a prime square",
                            "f11");
    const u64 p = pp->prime;
    if (p_part(n, p).exponent != 3)
        return inapplicable("f11",
                            "exponent of p = " + num(p) + " in N is " +
                                num(p_part(n, p).exponent) + ", not 3",
                            "f11");
    std::vector<u64> qs;
    for (const u64 q : valid_second_primes(n, p, 3)) {
        if (q > p) qs.push_back(q);
    }
    if (qs.empty())
        return inapplicable("f11", "N has no p^3 q^n d reading with q > p", "f11");
    for (const u64 q : qs) {
        if ((q - 1) % p != 0)
            return reject("f11",
                          "N = " + num(n) + " reads as p^3 q^n d with p = " + num(p) + ", q = " +
                              num(q) + ", but " + num(p) + " does not divide " + num(q - 1),
                          "f11");
    }
    return pass("f11", "every valid second prime satisfies p | q-1", "f11");
}

// ---------------------------------------------------------------------------
// f12: the adjoint of a solvable non-trivial category has a non-trivial
// invertible whose order divides both n1 and N/n1

FilterVerdict f12_perfect_adjoint(const TypeVector& t, u64 n, const FilterContext&) {
    check_shared(t, n);
    const u64 n1 = t.pointed_count();
    if (n % n1 != 0)
        return inapplicable("f12", "n1 does not divide N; adjoint dimension undefined", "f12");
    const u64 adj = n / n1;
    if (adj > 1 && std::gcd(n1, adj) == 1)
        return reject("f12",
                      "adjoint dimension N/n1 = " + num(adj) + " is coprime to n1 = " + num(n1) +
                          ", leaving no room for the forced non-trivial invertible",
                      "f12");
    return pass("f12", "gcd(n1, N/n1) = " + num(std::gcd(n1, adj)) + " leaves room", "f12");
}

// ---------------------------------------------------------------------------
// f13: rank window 27..49, rank != 1 (mod 8): pointed or perfect

FilterVerdict f13_rank_window(const TypeVector& t, u64 n, const FilterContext&) {
    check_shared(t, n);
    const u64 r = t.rank();
    if (r < 27 || r > 49)
        return inapplicable("f13", "rank " + num(r) + " outside window [27,49]", "f13");
    if (r % 8 == 1)
        return inapplicable("f13", "rank " + num(r) + " is 1 mod 8", "f13");
    if (!t.pointed() && t.pointed_count() > 1)
        return reject("f13",
                      "rank " + num(r) + " lies in [27,49] with " + num(r) + " mod 8 = " +
                          num(r % 8) + ", yet the type is neither pointed nor perfect",
                      "f13");
    return pass("f13", "type is pointed or perfect", "f13");
}

// ---------------------------------------------------------------------------
// f14: known pointed dimensions. K1: N = q^n d with q odd prime, n <= 4, d
// square-free coprime to q. K2: N = 3^5 d with d square-free coprime to 3.

bool matches_known_pointed_k1(u64 n) {
    if (n == 0) throw InvalidInput("matches_known_pointed_k1: positive argument required");
    u64 non_square_free = 0;
    for (const auto& pp : factorize(n).factors) {
        if (pp.exponent >= 2) {
            if (pp.exponent > 4) return false;
            ++non_square_free;
        }
    }
    return non_square_free <= 1;
}

bool matches_known_pointed_k2(u64 n) {
    if (n % 243 != 0) return false;
    const u64 d = n / 243;
    return d % 3 != 0 && is_square_free(d);
}

FilterVerdict f14_known_pointed(const TypeVector& t, u64 n, const FilterContext&) {
    check_shared(t, n);
    const bool k1 = matches_known_pointed_k1(n);
    const bool k2 = !k1 && matches_known_pointed_k2(n);
    if (!k1 && !k2)
        return inapplicable("f14", "N matches neither q^n d nor 3^5 d with square-free cofactor",
                            "f14_k1");
    const std::string_view key = k1 ? "f14_k1" : "f14_k2";
    if (!t.pointed())
        return reject("f14",
                      "modular categories of dimension N = " + num(n) + " = " +
                          arith::format_factorization(factorize(n)) +
                          " are pointed; the type is not",
                      key);
    return pass("f14", "type is pointed", key);
}

// ---------------------------------------------------------------------------
// adjoint machinery

u64 forced_invertible_divisor(const TypeVector& t, u64 n) {
    check_shared(t, n);
    const auto& es = t.entries();
    u64 forced = 1;
    for (const auto& pp : factorize(t.pointed_count()).factors) {
        for (std::size_t i = 1; i < es.size(); ++i) {
            if (es[i].count % pp.prime != 0) {
                forced *= ipow(pp.prime, pp.exponent);
                break;
            }
        }
    }
    return forced;
}

std::vector<TypeVector> adjoint_candidates(const TypeVector& t, u64 n) {
    check_shared(t, n);
    const u64 n1 = t.pointed_count();
    if (n % n1 != 0) return {};
    const u64 target = n / n1;
    const u64 forced = forced_invertible_divisor(t, n);
    const auto& es = t.entries();

    std::vector<TypeVector> out;
    std::vector<TypeEntry> acc;
    for (const u64 a : arith::divisors(n1)) {
        if (a % forced != 0 || a > target) continue;
        acc.assign({TypeEntry{1, a}});
        auto dfs = [&](auto&& self, std::size_t idx, u64 remaining) -> void {
            if (idx == es.size()) {
                if (remaining == 0) out.push_back(TypeVector(acc));
                return;
            }
            self(self, idx + 1, remaining); // this dimension absent
            const u64 d = es[idx].dim;
            const u64 dd = d * d;
            for (u64 x = 2; x <= es[idx].count && x * dd <= remaining; x += 2) {
                acc.push_back({d, x});
                self(self, idx + 1, remaining - x * dd);
                acc.pop_back();
            }
        };
        dfs(dfs, 1, target - a);
    }
    std::sort(out.begin(), out.end(), TypeVector::canonical_less);
    return out;
}

// ---------------------------------------------------------------------------
// f15: a non-pointed type must admit at least one feasible adjoint type

FilterVerdict f15_adjoint_feasible(const TypeVector& t, u64 n, const FilterContext&) {
    check_shared(t, n);
    const u64 n1 = t.pointed_count();
    if (n % n1 != 0)
        return inapplicable("f15", "n1 does not divide N; adjoint dimension undefined", "f15");
    if (t.pointed()) return pass("f15", "pointed type, adjoint is trivial", "f15");
    const auto cands = adjoint_candidates(t, n);
    if (cands.empty())
        return reject("f15",
                      "adjoint Diophantine infeasible: a + sum x_j*d_j^2 = " + num(n / n1) +
                          " with " + num(forced_invertible_divisor(t, n)) +
                          " | a | " + num(n1) + " and even bounded x_j has no solution",
                      "f15");
    return pass("f15", "adjoint type exists, e.g. " + cands.front().format(), "f15");
}

// ---------------------------------------------------------------------------
// f16: under the p^3 q^s m / p^t m dimension shapes, an adjoint of type
// (1,p; p,*; q,*) is excluded; reject when no other adjoint type remains

FilterVerdict f16_adjoint_forbidden_shape(const TypeVector& t, u64 n, const FilterContext&) {
    check_shared(t, n);
    const auto& es = t.entries();
    const u64 p = t.pointed_count();
    if (!is_prime(p)) return inapplicable("f16", "n1 = " + num(p) + " is not prime", "f16");
    if (n % p != 0)
        return inapplicable("f16", "n1 does not divide N; adjoint dimension undefined", "f16");

    bool p_entry_coprime = false;
    for (std::size_t i = 1; i < es.size(); ++i) {
        if (es[i].dim == p && es[i].count % p != 0) p_entry_coprime = true;
    }
    if (!p_entry_coprime)
        return inapplicable("f16", "no dimension-p entry with multiplicity coprime to p", "f16");

    const u64 vp = p_part(n, p).exponent;
    std::vector<u64> valid_qs;
    for (std::size_t i = 1; i < es.size(); ++i) {
        const u64 q = es[i].dim;
        if (q == p || !is_prime(q)) continue;
        // shape A: N = p^3 q^s m, s <= 4, m square-free coprime to pq
        bool ok = false;
        if (vp == 3) {
            const u64 vq = p_part(n, q).exponent;
            if (vq <= 4 && is_square_free(n / ipow(p, 3) / ipow(q, vq))) ok = true;
        }
        // shape B: N = p^t m, t <= 6, m square-free coprime to pq
        if (!ok && vp >= 1 && vp <= 6) {
            const u64 m = n / ipow(p, vp);
            if (m % q != 0 && is_square_free(m)) ok = true;
        }
        if (ok) valid_qs.push_back(q);
    }
    if (valid_qs.empty())
        return inapplicable("f16", "dimension shape matches neither p^3 q^s m nor p^t m", "f16");

    auto forbidden = [&](const TypeVector& cand) {
        if (cand.pointed_count() != p) return false;
        bool has_p = false;
        bool has_q = false;
        for (const auto& e : cand.entries()) {
            if (e.dim == p) has_p = true;
            if (std::find(valid_qs.begin(), valid_qs.end(), e.dim) != valid_qs.end())
                has_q = true;
        }
        return has_p && has_q;
    };

    const auto cands = adjoint_candidates(t, n);
    std::vector<TypeVector> remaining;
    for (const auto& c : cands) {
        if (!forbidden(c)) remaining.push_back(c);
    }
    if (remaining.empty()) {
        std::string reason = "every feasible adjoint type has exactly p = " + num(p) +
                             " invertibles together with p- and q-dimensional classes, the "
                             "excluded shape";
        if (!cands.empty()) reason += " (e.g. " + cands.front().format() + ")";
        else reason += " (no feasible adjoint type at all)";
        return reject("f16", std::move(reason), "f16");
    }
    return pass("f16", "allowed adjoint type remains, e.g. " + remaining.front().format(), "f16");
}

// ---------------------------------------------------------------------------
// f17: a prime r | n1 with r^2 not dividing N forces a modular pointed factor
// of dimension r, so the componentwise quotient must survive at N/r

FilterVerdict f17_modular_factor(const TypeVector& t, u64 n, const FilterContext& ctx) {
    check_shared(t, n);
    const u64 n1 = t.pointed_count();
    if (n % n1 != 0)
        return inapplicable("f17", "n1 does not divide N", "f17");
    std::vector<u64> rs;
    for (const auto& pp : factorize(n1).factors) {
        if (n % (pp.prime * pp.prime) != 0) rs.push_back(pp.prime);
    }
    if (rs.empty())
        return inapplicable("f17", "every prime of n1 has its square dividing N", "f17");
    for (const u64 r : rs) {
        const auto quotient = t.divide_counts(r);
        if (!quotient)
            return reject("f17",
                          "a modular pointed factor of dimension " + num(r) +
                              " forces componentwise division of multiplicities by " + num(r) +
                              ", which fails",
                          "f17");
        if (!ctx.classify_handle)
            throw ConfigError("f17 requires a classify handle in the filter context");
        const auto sub = ctx.classify_handle(n / r);
        const bool survives =
            std::find(sub->survivors.begin(), sub->survivors.end(), *quotient) !=
            sub->survivors.end();
        if (!survives)
            return reject("f17",
                          "complementary factor type " + quotient->format() +
                              " is excluded at dimension " + num(n / r),
                          "f17");
    }
    return pass("f17", "every forced factorization has a surviving complementary type", "f17");
}

// ---------------------------------------------------------------------------
// f18: N = p^6 with type (1,p^2; p,x; p^2,y), y > 0, gcd(x,p) = 1. Replays
// the grading/centralizer chain; reject when the chain closes, inconclusive
// for configurations the written argument does not cover.

FilterVerdict f18_sixth_power(const TypeVector& t, u64 n, const FilterContext&) {
    check_shared(t, n);
    const auto pp = is_prime_power(n);
    if (!pp || pp->exponent != 6)
        return inapplicable("f18", "N is not the sixth power of a prime", "f18");
    const u64 p = pp->prime;
    const u64 p2 = p * p;
    const auto& es = t.entries();
    if (es.size() != 3 || es[0].count != p2 || es[1].dim != p || es[2].dim != p2)
        return inapplicable("f18", "type does not match (1,p^2; p,x; p^2,y)", "f18");
    const u64 x = es[1].count;
    const u64 y = es[2].count;
    if (x % p == 0)
        return inapplicable("f18", "p-dimensional multiplicity divisible by p", "f18");
    if (x < p2 - 1)
        return inconclusive("f18",
                            "no feasible adjoint type without p^2-dimensional classes; the "
                            "written argument cannot proceed",
                            "f18");
    if (y < 2)
        return inconclusive("f18",
                            "a single p^2-dimensional class cannot form a dual pair; "
                            "configuration not covered by the written argument",
                            "f18");
    return reject("f18",
                  "adjoint type is forced to (1," + num(p2) + ";" + num(p) + "," + num(p2 - 1) +
                      "); non-trivial grading components carry no invertibles and are a single " +
                      num(p2) + "-class or " + num(p2) + " " + num(p) +
                      "-classes; a dual pair of single components gives a centralizer of "
                      "dimension " +
                      num(p2 * p2 * p) + " whose de-equivariantization is pointed of dimension " +
                      num(p2 * p2) + ", bounding simple dimensions by " + num(p) +
                      " and contradicting the " + num(p2) + "-dimensional classes",
                  "f18");
}

// ---------------------------------------------------------------------------
// catalog

namespace {

constexpr std::array<FilterDef, 17> kCatalog{{
    {"structural", true, &structural},
    {"f1", true, &f1_parity},
    {"f2", true, &f2_dim3_divisibility},
    {"f3", true, &f3_stabilizer_power},
    {"f4", true, &f4_grading_bound},
    {"f5", true, &f5_two_level},
    {"f8", true, &f8_square_divides},
    {"f9", true, &f9_pointed_divides_isotypic},
    {"f10", false, &f10_pq_order},
    {"f11", false, &f11_p2_order},
    {"f12", false, &f12_perfect_adjoint},
    {"f13", false, &f13_rank_window},
    {"f14", false, &f14_known_pointed},
    {"f15", false, &f15_adjoint_feasible},
    {"f16", false, &f16_adjoint_forbidden_shape},
    {"f17", false, &f17_modular_factor},
    {"f18", false, &f18_sixth_power},
}};

} // namespace

std::span<const FilterDef> filter_catalog() { return kCatalog; }

const FilterDef* find_filter(std::string_view id) {
    for (const auto& f : kCatalog) {
        if (f.id == id) return &f;
    }
    return nullptr;
}

std::vector<const FilterDef*> filter_set(Mode mode) {
    std::vector<const FilterDef*> out;
    for (const auto& f : kCatalog) {
        if (mode == Mode::full || f.basic) out.push_back(&f);
    }
    return out;
}

} // namespace mnsd
