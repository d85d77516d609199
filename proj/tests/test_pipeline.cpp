#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <fstream>
#include <set>
#include <sstream>
#include <string>

#include "mnsd/pipeline.hpp"

using namespace mnsd;

namespace {

FilterContext make_ctx(F2Mode mode = F2Mode::legacy) {
    FilterContext ctx;
    ctx.f2_mode = mode;
    return ctx;
}

std::vector<std::string> formats(const std::vector<TypeVector>& ts) {
    std::vector<std::string> out;
    for (const auto& t : ts) out.push_back(t.format());
    return out;
}

u64 fnv1a64(std::string_view data) {
    u64 h = 0xcbf29ce484222325ull;
    for (unsigned char c : data) {
        h ^= c;
        h *= 0x100000001b3ull;
    }
    return h;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in.good());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

} // namespace

TEST_CASE("classify pinned dimensions") {
    auto ctx = make_ctx();
    const auto full441 = classify(441, Mode::full, ctx);
    CHECK(formats(full441.survivors) == std::vector<std::string>{"(1,3;3,16;7,6)", "(1,441)"});

    const auto basic1575 = classify(1575, Mode::basic, ctx);
    CHECK(formats(basic1575.survivors) ==
          std::vector<std::string>{"(1,3;3,8;5,6;15,6)", "(1,3;3,8;5,24;15,4)",
                                   "(1,3;3,8;5,42;15,2)", "(1,3;3,8;5,60)",
                                   "(1,3;3,58;5,6;15,4)", "(1,3;3,58;5,24;15,2)",
                                   "(1,9;3,24;5,54)", "(1,3;3,58;5,42)", "(1,21;3,56;5,42)",
                                   "(1,1575)"});

    const auto trivial = classify(1, Mode::full, ctx);
    CHECK(formats(trivial.survivors) == std::vector<std::string>{"(1,1)"});
    CHECK(trivial.raw_count == 1);
}

TEST_CASE("classify rejects even dimensions with the parity message") {
    auto ctx = make_ctx();
    CHECK_THROWS_WITH_AS(classify(442, Mode::full, ctx),
                         doctest::Contains("odd-dimensional"), InvalidInput);
}

TEST_CASE("report partition invariants") {
    auto ctx = make_ctx();
    for (const u64 n : reference_dimensions()) {
        for (const Mode mode : {Mode::basic, Mode::full}) {
            const auto rep = classify(n, mode, ctx);
            CHECK(rep.survivors.size() + rep.rejections.size() + rep.unresolved.size() ==
                  rep.raw_count);
            for (const auto& r : rep.rejections) {
                CHECK(!r.verdicts.empty());
                CHECK(r.verdicts.front().status == VerdictStatus::reject);
            }
        }
    }
}

TEST_CASE("full survivors are contained in basic survivors") {
    auto ctx = make_ctx();
    for (const u64 n : reference_dimensions()) {
        const auto basic = classify(n, Mode::basic, ctx);
        const auto full = classify(n, Mode::full, ctx);
        for (const auto& t : full.survivors) {
            CHECK(std::find(basic.survivors.begin(), basic.survivors.end(), t) !=
                  basic.survivors.end());
        }
    }
}

TEST_CASE("early-exit and collect-all classify agree on the partition") {
    for (const u64 n : {675, 729, 1323, 1575}) {
        auto ctx = make_ctx();
        const auto fast = classify(n, Mode::full, ctx);
        const auto slow = classify_collect_all(n, Mode::full, ctx);
        CHECK(formats(fast.survivors) == formats(slow.survivors));
        REQUIRE(fast.rejections.size() == slow.rejections.size());
        for (std::size_t i = 0; i < fast.rejections.size(); ++i) {
            CHECK(fast.rejections[i].type == slow.rejections[i].type);
            CHECK(fast.rejections[i].verdicts.size() <= slow.rejections[i].verdicts.size());
            CHECK(fast.rejections[i].verdicts.front() == slow.rejections[i].verdicts.front());
        }
    }
}

TEST_CASE("scan of a small range is pointed-only") {
    auto ctx = make_ctx();
    const auto reports = scan(10, Mode::full, ctx);
    REQUIRE(reports.size() == 5);
    u64 expected = 1;
    for (const auto& rep : reports) {
        CHECK(rep->dimension == expected);
        expected += 2;
        REQUIRE(rep->survivors.size() == 1);
        CHECK(rep->survivors.front().pointed());
    }
}

TEST_CASE("scan rejects a zero bound") {
    auto ctx = make_ctx();
    CHECK_THROWS_AS(scan(0, Mode::full, ctx), InvalidInput);
}

TEST_CASE("the non-K1 dimensions below 2025 are exactly the reference set") {
    std::vector<u64> hard;
    for (u64 n = 1; n < 2025; n += 2) {
        if (!matches_known_pointed_k1(n)) hard.push_back(n);
    }
    const auto ref = reference_dimensions();
    CHECK(hard == std::vector<u64>(ref.begin(), ref.end()));
}

TEST_CASE("memoized and fresh scans produce identical reports") {
    auto shared_ctx = make_ctx();
    const auto first = scan(250, Mode::full, shared_ctx);
    const auto second = scan(250, Mode::full, shared_ctx); // memo hits
    REQUIRE(first.size() == second.size());
    for (std::size_t i = 0; i < first.size(); ++i) CHECK(first[i]->same_outcome(*second[i]));

    for (std::size_t i = 0; i < first.size(); ++i) {
        auto fresh_ctx = make_ctx();
        const auto rep = classify(first[i]->dimension, Mode::full, fresh_ctx);
        if (!matches_known_pointed_k1(first[i]->dimension))
            CHECK(rep.same_outcome(*first[i]));
        else
            CHECK(formats(rep.survivors) == formats(first[i]->survivors));
    }
}

TEST_CASE("compare_reference stages") {
    auto ctx = make_ctx();
    CHECK(compare_reference(classify(1323, Mode::full, ctx)).empty());
    CHECK(compare_reference(classify(729, Mode::basic, ctx)).empty());

    auto strict_ctx = make_ctx(F2Mode::strict);
    const auto d = compare_reference(classify(729, Mode::basic, strict_ctx));
    CHECK(d.missing_from_engine.empty());
    CHECK(formats(d.extra_in_engine) ==
          std::vector<std::string>{"(1,9;3,44;9,4)", "(1,9;3,62;9,2)"});

    const auto rep35 = classify(35, Mode::full, ctx);
    CHECK_THROWS_AS(compare_reference(rep35), NotFound);
}

TEST_CASE("explain runs the whole catalog in canonical order") {
    auto ctx = make_ctx();
    const auto verdicts = explain(243, TypeVector::parse("(1,9;3,26)"), ctx);
    REQUIRE(verdicts.size() == filter_catalog().size());
    for (std::size_t i = 0; i < verdicts.size(); ++i)
        CHECK(verdicts[i].filter_id == filter_catalog()[i].id);
    bool f13_reject = false;
    for (const auto& v : verdicts) {
        if (v.filter_id == "f13" && v.status == VerdictStatus::reject) {
            f13_reject = true;
            CHECK(std::string(find_citation(v.citation)->quote) == "either pointed or perfect");
        }
    }
    CHECK(f13_reject);
}

TEST_CASE("explain validates its inputs") {
    auto ctx = make_ctx();
    CHECK_THROWS_AS(explain(441, TypeVector::parse("(1,3;3,16;7,7)"), ctx), InvalidInput);
    CHECK_THROWS_AS(explain(442, TypeVector::parse("(1,442)"), ctx), InvalidInput);
}

TEST_CASE("explain reports no rejects for theorem survivors") {
    auto ctx = make_ctx();
    for (const auto& v : explain(441, TypeVector::parse("(1,3;3,16;7,6)"), ctx))
        CHECK(v.status != VerdictStatus::reject);
    for (const auto& v : explain(441, TypeVector::parse("(1,441)"), ctx))
        CHECK(v.status != VerdictStatus::reject);
}

TEST_CASE("attribution map covers every excluded prefilter type and is honored") {
    std::set<std::pair<u64, std::string>> covered;
    for (const auto& a : attribution_map()) covered.insert({a.dimension, std::string(a.type)});

    for (const u64 n : reference_dimensions()) {
        const auto& pre = reference_types(n, ReferenceStage::prefilter);
        const auto& fin = reference_types(n, ReferenceStage::final);
        for (const auto& t : pre) {
            const bool excluded = std::find(fin.begin(), fin.end(), t) == fin.end();
            CHECK(excluded == covered.count({n, t.format()}));
        }
    }

    auto ctx = make_ctx();
    for (const auto& a : attribution_map()) {
        const auto verdicts = explain(a.dimension, TypeVector::parse(std::string(a.type)), ctx);
        bool found = false;
        for (const auto& v : verdicts) {
            if (v.filter_id == a.filter_id && v.status == VerdictStatus::reject) found = true;
        }
        INFO(a.type, " at ", a.dimension, " expects ", a.filter_id);
        CHECK(found);
    }
}

TEST_CASE("unresolved is empty in legacy mode for all reference dimensions") {
    auto ctx = make_ctx();
    for (const u64 n : reference_dimensions()) {
        CHECK(classify(n, Mode::basic, ctx).unresolved.empty());
        CHECK(classify(n, Mode::full, ctx).unresolved.empty());
    }
}

TEST_CASE("reference tables are pinned by checksum") {
    CHECK(fnv1a64(reference_tables_text()) == 0x2a33c428b9b26305ull);
    CHECK(fnv1a64(citation_table_text()) == 0x6ee5ca74290a28edull);
}

TEST_CASE("shipped data files match the embedded tables") {
    CHECK(read_file(std::string(MNSD_DATA_DIR) + "/reference_tables.txt") ==
          reference_tables_text());
    CHECK(read_file(std::string(MNSD_DATA_DIR) + "/citations.tsv") == citation_table_text());
}

TEST_CASE("reference fixtures are canonically ordered and self-consistent") {
    for (const u64 n : reference_dimensions()) {
        for (const ReferenceStage stage : {ReferenceStage::prefilter, ReferenceStage::final}) {
            const auto& list = reference_types(n, stage);
            REQUIRE(!list.empty());
            for (const auto& t : list) CHECK(t.fpdim() == n);
            for (std::size_t i = 1; i < list.size(); ++i)
                CHECK(TypeVector::canonical_less(list[i - 1], list[i]));
        }
        const auto& pre = reference_types(n, ReferenceStage::prefilter);
        for (const auto& t : reference_types(n, ReferenceStage::final))
            CHECK(std::find(pre.begin(), pre.end(), t) != pre.end());
    }
}
