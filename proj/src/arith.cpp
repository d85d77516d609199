#include "mnsd/arith.hpp"

#include <algorithm>
#include <string>

namespace mnsd::arith {

bool is_prime(u64 n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    if (n % 3 == 0) return n == 3;
    for (u64 d = 5; d * d <= n; d += 6) {
        if (n % d == 0 || n % (d + 2) == 0) return false;
    }
    return true;
}

FactoredInt factorize(u64 n) {
    if (n == 0) throw InvalidInput("factorize: argument must be positive");
    FactoredInt out;
    out.value = n;
    auto strip = [&](u64 p) {
        if (n % p != 0) return;
        u64 e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        out.factors.push_back({p, e});
    };
    strip(2);
    strip(3);
    for (u64 d = 5; d * d <= n; d += 6) {
        strip(d);
        strip(d + 2);
    }
    if (n > 1) out.factors.push_back({n, 1});
    return out;
}

std::string format_factorization(const FactoredInt& f) {
    if (f.factors.empty()) return "1";
    std::string s;
    for (const auto& pp : f.factors) {
        if (!s.empty()) s += '*';
        s += std::to_string(pp.prime);
        if (pp.exponent > 1) {
            s += '^';
            s += std::to_string(pp.exponent);
        }
    }
    return s;
}

std::vector<u64> divisors(u64 n) {
    const FactoredInt f = factorize(n);
    std::vector<u64> out{1};
    for (const auto& pp : f.factors) {
        const std::size_t base = out.size();
        u64 power = 1;
        for (u64 e = 1; e <= pp.exponent; ++e) {
            power *= pp.prime;
            for (std::size_t i = 0; i < base; ++i) out.push_back(out[i] * power);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

PPart p_part(u64 n, u64 p) {
    if (n == 0) throw InvalidInput("p_part: argument must be positive");
    if (!is_prime(p)) throw InvalidInput("p_part: " + std::to_string(p) + " is not prime");
    PPart out;
    while (n % p == 0) {
        n /= p;
        ++out.exponent;
        out.power *= p;
    }
    return out;
}

bool is_square_free(u64 n) {
    if (n == 0) throw InvalidInput("is_square_free: argument must be positive");
    for (const auto& pp : factorize(n).factors) {
        if (pp.exponent >= 2) return false;
    }
    return true;
}

std::optional<PrimePower> is_prime_power(u64 n) {
    if (n == 0) throw InvalidInput("is_prime_power: argument must be positive");
    const FactoredInt f = factorize(n);
    if (f.factors.size() != 1) return std::nullopt;
    return f.factors.front();
}

} // namespace mnsd::arith
