#pragma once

#include <string_view>
#include <vector>

#include "mnsd/typevec.hpp"
#include "mnsd/verdict.hpp"

// Brute-force reference implementations for differential testing. These
// deliberately share no code with the production enumerator or the filter
// catalog; only the arith primitives and the TypeVector data model are used.

namespace mnsd::oracle {

// Same contract as enumerate_raw, via plain nested iteration over ascending
// odd dimensions and all admissible even counts. Canonically sorted.
std::vector<TypeVector> oracle_enumerate(u64 dimension);

// Recomputes the verdict status of an arithmetically restatable filter from
// its statement. Supported ids: f1, f2 (strict reading), f3, f4, f5, f8, f9.
// Unsupported ids raise ConfigError.
VerdictStatus oracle_check(const TypeVector& t, u64 dimension, std::string_view filter_id);

} // namespace mnsd::oracle
