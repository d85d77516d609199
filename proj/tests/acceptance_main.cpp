// Acceptance suite: runs the engine's headline guarantees end to end and
// prints one pass/fail line per criterion. Exits non-zero if any fail.

#include <algorithm>
#include <chrono>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "mnsd/cli.hpp"
#include "mnsd/oracle.hpp"
#include "mnsd/pipeline.hpp"

using namespace mnsd;
using Clock = std::chrono::steady_clock;

namespace {

int failures = 0;
int index = 0;

void report(const std::string& name, bool ok, double seconds, const std::string& detail = "") {
    ++index;
    std::cout << "[" << index << "/8] " << name;
    for (std::size_t i = name.size(); i < 46; ++i) std::cout << '.';
    std::cout << (ok ? " PASS" : " FAIL");
    std::ostringstream ss;
    ss.setf(std::ios::fixed);
    ss.precision(2);
    ss << seconds;
    std::cout << " (" << ss.str() << " s)";
    if (!ok && !detail.empty()) std::cout << "  [" << detail << "]";
    std::cout << "\n";
    if (!ok) ++failures;
}

FilterContext make_ctx(F2Mode mode = F2Mode::legacy) {
    FilterContext ctx;
    ctx.f2_mode = mode;
    return ctx;
}

std::set<std::string> type_set(const std::vector<TypeVector>& ts) {
    std::set<std::string> out;
    for (const auto& t : ts) out.insert(t.format());
    return out;
}

double since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

// 1. classify(N, basic) with legacy f2 reproduces the prefilter tables,
//    each dimension under a second.
void criterion1() {
    const auto start = Clock::now();
    bool ok = true;
    std::string detail;
    for (const u64 n : reference_dimensions()) {
        const auto t0 = Clock::now();
        auto ctx = make_ctx();
        const auto rep = classify(n, Mode::basic, ctx);
        const double dt = since(t0);
        const bool match =
            type_set(rep.survivors) == type_set(reference_types(n, ReferenceStage::prefilter));
        if (!match || dt >= 1.0) {
            ok = false;
            detail = "dimension " + std::to_string(n) + (match ? " too slow" : " differs");
        }
    }
    report("prefilter reproduction (13 dimensions)", ok, since(start), detail);
}

// 2. classify(N, full) reproduces the final tables with empty unresolved in
//    legacy mode; the five non-pointed lists are pinned explicitly.
void criterion2() {
    const auto start = Clock::now();
    bool ok = true;
    std::string detail;
    auto ctx = make_ctx();
    for (const u64 n : reference_dimensions()) {
        const auto rep = classify(n, Mode::full, ctx);
        if (type_set(rep.survivors) != type_set(reference_types(n, ReferenceStage::final)) ||
            !rep.unresolved.empty()) {
            ok = false;
            detail = "dimension " + std::to_string(n);
        }
    }
    const std::vector<std::pair<u64, std::set<std::string>>> pinned = {
        {441, {"(1,3;3,16;7,6)", "(1,441)"}},
        {729, {"(1,9;3,80)", "(1,27;3,78)", "(1,729)"}},
        {1125, {"(1,15;3,40;5,30)", "(1,1125)"}},
        {1323, {"(1,9;3,48;7,18)", "(1,1323)"}},
        {1521, {"(1,3;3,56;13,6)", "(1,1521)"}},
    };
    for (const auto& [n, expected] : pinned) {
        if (type_set(classify(n, Mode::full, ctx).survivors) != expected) {
            ok = false;
            detail = "pinned dimension " + std::to_string(n);
        }
    }
    const double dt = since(start);
    if (dt >= 5.0) {
        ok = false;
        detail = "too slow";
    }
    report("final classification reproduction", ok, dt, detail);
}

// 3. scan(2025, full): non-pointed survivors exactly at 441, 729, 1125,
//    1323, 1521; the smallest non-pointed dimension is 441.
void criterion3() {
    const auto start = Clock::now();
    auto ctx = make_ctx();
    const auto reports = scan(2025, Mode::full, ctx);
    std::vector<u64> non_pointed_dims;
    u64 smallest = 0;
    for (const auto& rep : reports) {
        bool has = false;
        for (const auto& t : rep->survivors) {
            if (!t.pointed()) has = true;
        }
        if (has) {
            non_pointed_dims.push_back(rep->dimension);
            if (smallest == 0) smallest = rep->dimension;
        }
    }
    const bool ok = non_pointed_dims == std::vector<u64>{441, 729, 1125, 1323, 1521} &&
                    smallest == 441;
    const double dt = since(start);
    report("scan headline claims", ok && dt < 30.0, dt,
           ok ? "too slow" : "non-pointed dimensions differ");
}

// 4. every odd N < 2025 outside the reference set matches the K1 pointed
//    hypothesis and classifies (without the fast path) to pointed-only.
void criterion4() {
    const auto start = Clock::now();
    bool ok = true;
    std::string detail;
    auto ctx = make_ctx();
    for (u64 n = 1; n < 2025; n += 2) {
        if (is_reference_dimension(n)) continue;
        if (!matches_known_pointed_k1(n)) {
            ok = false;
            detail = std::to_string(n) + " fails K1";
            break;
        }
        const auto rep = classify(n, Mode::full, ctx);
        if (rep.survivors.size() != 1 || !rep.survivors.front().pointed()) {
            ok = false;
            detail = std::to_string(n) + " not pointed-only";
            break;
        }
    }
    report("K1 coverage of the remaining dimensions", ok, since(start), detail);
}

// 5. enumerate_raw equals the brute-force oracle for all odd N <= 2025, and
//    supported filter verdicts match the oracle restatements on the raw
//    candidates of the reference dimensions.
void criterion5() {
    const auto start = Clock::now();
    bool ok = true;
    std::string detail;
    for (u64 n = 1; n <= 2025 && ok; n += 2) {
        if (enumerate_raw(n) != oracle::oracle_enumerate(n)) {
            ok = false;
            detail = "enumeration differs at " + std::to_string(n);
        }
    }
    const char* supported[] = {"f1", "f2", "f3", "f4", "f5", "f8", "f9"};
    auto strict_ctx = make_ctx(F2Mode::strict);
    ensure_context(strict_ctx);
    for (const u64 n : reference_dimensions()) {
        if (!ok) break;
        for (const auto& t : enumerate_raw(n)) {
            for (const char* id : supported) {
                const auto expected = oracle::oracle_check(t, n, id);
                const auto got = find_filter(id)->eval(t, n, strict_ctx).status;
                if (expected != got) {
                    ok = false;
                    detail = std::string(id) + " differs on " + t.format();
                }
            }
        }
    }
    const double dt = since(start);
    if (dt >= 60.0) {
        ok = false;
        detail = "too slow";
    }
    report("oracle equivalence", ok, dt, detail);
}

// 6. the embedded attribution map (>= 12 entries from the exclusion
//    arguments) is honored by explain.
void criterion6() {
    const auto start = Clock::now();
    bool ok = attribution_map().size() >= 12;
    std::string detail = ok ? "" : "map too small";
    auto ctx = make_ctx();
    for (const auto& a : attribution_map()) {
        const auto verdicts = explain(a.dimension, TypeVector::parse(std::string(a.type)), ctx);
        bool found = false;
        for (const auto& v : verdicts) {
            if (v.filter_id == a.filter_id && v.status == VerdictStatus::reject) found = true;
        }
        if (!found) {
            ok = false;
            detail = std::string(a.type) + "@" + std::to_string(a.dimension) + " lacks " +
                     std::string(a.filter_id);
        }
    }
    report("attribution audit", ok, since(start), detail);
}

// 7. strict f2: the two extra basic candidates at 729 appear, the final
//    table still holds, and no unresolved candidate is ever a survivor; in
//    both modes full survivors never exceed the final tables.
void criterion7() {
    const auto start = Clock::now();
    bool ok = true;
    std::string detail;
    auto strict_ctx = make_ctx(F2Mode::strict);
    const auto basic = classify(729, Mode::basic, strict_ctx);
    auto legacy_ctx = make_ctx();
    auto expected = type_set(classify(729, Mode::basic, legacy_ctx).survivors);
    expected.insert("(1,9;3,44;9,4)");
    expected.insert("(1,9;3,62;9,2)");
    if (type_set(basic.survivors) != expected) {
        ok = false;
        detail = "strict basic candidates at 729 differ";
    }
    const auto full = classify(729, Mode::full, strict_ctx);
    if (type_set(full.survivors) != type_set(reference_types(729, ReferenceStage::final))) {
        ok = false;
        detail = "strict full survivors at 729 differ";
    }
    for (const u64 n : reference_dimensions()) {
        for (const F2Mode mode : {F2Mode::legacy, F2Mode::strict}) {
            auto ctx = make_ctx(mode);
            const auto rep = classify(n, Mode::full, ctx);
            const auto final_set = type_set(reference_types(n, ReferenceStage::final));
            for (const auto& t : rep.survivors) {
                if (!final_set.count(t.format())) {
                    ok = false;
                    detail = "survivor beyond the final table at " + std::to_string(n);
                }
            }
            for (const auto& u : rep.unresolved) {
                if (final_set.count(u.type.format()) == 0) continue;
                ok = false;
                detail = "final-table type left unresolved at " + std::to_string(n);
            }
        }
    }
    report("strict-mode robustness", ok, since(start), detail);
}

// 8. scan --max 2025 --format json is byte-identical across two runs.
void criterion8() {
    const auto start = Clock::now();
    const char* argv[] = {"mnsd", "scan", "--max", "2025", "--format", "json"};
    std::ostringstream out1, err1, out2, err2;
    const int c1 = io::run_cli(6, argv, out1, err1);
    const int c2 = io::run_cli(6, argv, out2, err2);
    const bool ok = c1 == 0 && c2 == 0 && out1.str() == out2.str() && !out1.str().empty();
    report("deterministic structured output", ok, since(start));
}

} // namespace

int main() {
    criterion1();
    criterion2();
    criterion3();
    criterion4();
    criterion5();
    criterion6();
    criterion7();
    criterion8();
    std::cout << "ACCEPTANCE: " << (8 - failures) << "/8 criteria passed\n";
    return failures == 0 ? 0 : 1;
}
