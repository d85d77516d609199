#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mnsd/errors.hpp"

// Exact integer number theory used by every filter. All arithmetic is done
// in unsigned 64-bit integers; inputs in this project stay below 10^6, so
// plain trial division is adequate throughout.

namespace mnsd::arith {

using u64 = std::uint64_t;

struct PrimePower {
    u64 prime = 0;
    u64 exponent = 0;

    friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

// A positive integer together with its prime factorization.
// Invariants: primes strictly ascending, exponents >= 1, the product of
// prime^exponent reconstructs value, and value == 1 iff factors is empty.
struct FactoredInt {
    u64 value = 1;
    std::vector<PrimePower> factors;

    friend bool operator==(const FactoredInt&, const FactoredInt&) = default;
};

// Deterministic trial-division primality test, adequate for n < 2^32.
bool is_prime(u64 n);

// Unique factorization of n >= 1; throws InvalidInput on n == 0.
FactoredInt factorize(u64 n);

// Renders a factorization as "3^2*7^2" ("1" for the empty factorization).
std::string format_factorization(const FactoredInt& f);

// All divisors of n >= 1 in strictly ascending order.
std::vector<u64> divisors(u64 n);

// Exact power of p dividing n: exponent t and power p^t.
struct PPart {
    u64 exponent = 0;
    u64 power = 1;

    friend bool operator==(const PPart&, const PPart&) = default;
};

// Requires p prime and n >= 1; throws InvalidInput otherwise.
PPart p_part(u64 n, u64 p);

// True iff no prime square divides n (so true for 1).
bool is_square_free(u64 n);

// Returns (p, k) iff n == p^k with k >= 1. By convention 1 is not a prime
// power, so the result is empty for n == 1.
std::optional<PrimePower> is_prime_power(u64 n);

} // namespace mnsd::arith
