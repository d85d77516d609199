#include "mnsd/pipeline.hpp"

#include <algorithm>
#include <chrono>

#include "mnsd/arith.hpp"

namespace mnsd {

namespace {

using Clock = std::chrono::steady_clock;

std::shared_ptr<const ClassificationReport> classify_memo(u64 dimension, Mode mode, F2Mode f2,
                                                          std::shared_ptr<MemoCache> memo);

FilterContext make_sub_context(F2Mode f2, std::shared_ptr<MemoCache> memo) {
    FilterContext ctx;
    ctx.f2_mode = f2;
    ctx.memo = memo;
    ctx.classify_handle = [f2, memo](u64 d) { return classify_memo(d, Mode::full, f2, memo); };
    return ctx;
}

ClassificationReport classify_core(u64 dimension, Mode mode, const FilterContext& ctx,
                                   bool early_exit) {
    const auto start = Clock::now();
    const auto raw = enumerate_raw(dimension); // validates: odd, positive
    ClassificationReport rep;
    rep.dimension = dimension;
    rep.factorization = arith::factorize(dimension);
    rep.mode = mode;
    rep.f2_mode = ctx.f2_mode;
    rep.engine_version = std::string(kEngineVersion);
    rep.raw_count = raw.size();
    const auto filters = filter_set(mode);
    for (const auto& t : raw) {
        std::vector<FilterVerdict> rejecting;
        std::vector<FilterVerdict> open;
        for (const FilterDef* f : filters) {
            FilterVerdict v = f->eval(t, dimension, ctx);
            if (v.status == VerdictStatus::reject) {
                rejecting.push_back(std::move(v));
                if (early_exit) break;
            } else if (v.status == VerdictStatus::inconclusive) {
                open.push_back(std::move(v));
            }
        }
        if (!rejecting.empty()) {
            rep.rejections.push_back({t, std::move(rejecting)});
        } else if (!open.empty()) {
            rep.unresolved.push_back({t, std::move(open)});
        } else {
            rep.survivors.push_back(t);
        }
    }
    rep.elapsed = std::chrono::duration_cast<std::chrono::microseconds>(Clock::now() - start);
    return rep;
}

std::shared_ptr<const ClassificationReport> classify_memo(u64 dimension, Mode mode, F2Mode f2,
                                                          std::shared_ptr<MemoCache> memo) {
    const MemoCache::Key key{dimension, mode, f2};
    if (auto hit = memo->lookup(key)) return hit;
    const FilterContext sub = make_sub_context(f2, memo);
    auto rep = std::make_shared<const ClassificationReport>(
        classify_core(dimension, mode, sub, /*early_exit=*/true));
    return memo->insert(key, rep);
}

std::shared_ptr<const ClassificationReport> pointed_fast_report(u64 dimension, F2Mode f2) {
    ClassificationReport rep;
    rep.dimension = dimension;
    rep.factorization = arith::factorize(dimension);
    rep.mode = Mode::full;
    rep.f2_mode = f2;
    rep.raw_count = 1;
    rep.survivors.push_back(TypeVector({{1, dimension}}));
    rep.engine_version = std::string(kEngineVersion);
    return std::make_shared<const ClassificationReport>(std::move(rep));
}

} // namespace

void ensure_context(FilterContext& ctx) {
    if (!ctx.memo) ctx.memo = std::make_shared<MemoCache>();
    if (!ctx.classify_handle) {
        const F2Mode f2 = ctx.f2_mode;
        auto memo = ctx.memo;
        ctx.classify_handle = [f2, memo](u64 d) { return classify_memo(d, Mode::full, f2, memo); };
    }
}

ClassificationReport classify(u64 dimension, Mode mode, FilterContext& ctx) {
    ensure_context(ctx);
    return *classify_memo(dimension, mode, ctx.f2_mode, ctx.memo);
}

ClassificationReport classify_collect_all(u64 dimension, Mode mode, FilterContext& ctx) {
    ensure_context(ctx);
    return classify_core(dimension, mode, ctx, /*early_exit=*/false);
}

std::vector<std::shared_ptr<const ClassificationReport>> scan(u64 max, Mode mode,
                                                              FilterContext& ctx,
                                                              bool fast_path) {
    if (max == 0) throw InvalidInput("scan: bound must be positive");
    ensure_context(ctx);
    std::vector<std::shared_ptr<const ClassificationReport>> out;
    for (u64 n = 1; n < max; n += 2) {
        if (fast_path && mode == Mode::full && matches_known_pointed_k1(n)) {
            out.push_back(pointed_fast_report(n, ctx.f2_mode));
        } else {
            out.push_back(classify_memo(n, mode, ctx.f2_mode, ctx.memo));
        }
    }
    return out;
}

std::vector<FilterVerdict> explain(u64 dimension, const TypeVector& t, FilterContext& ctx) {
    if (dimension == 0 || dimension % 2 == 0)
        throw InvalidInput("explain: dimension " + std::to_string(dimension) +
                           " must be odd; maximally non-self-dual modular categories are "
                           "exactly the odd-dimensional ones");
    if (t.fpdim() != dimension)
        throw InvalidInput("type " + t.format() + " has FP dimension " +
                           std::to_string(t.fpdim()) + ", not " + std::to_string(dimension));
    ensure_context(ctx);
    std::vector<FilterVerdict> out;
    for (const auto& f : filter_catalog()) out.push_back(f.eval(t, dimension, ctx));
    return out;
}

DiscrepancyReport compare_reference(const ClassificationReport& report) {
    DiscrepancyReport d;
    d.dimension = report.dimension;
    d.stage = report.mode == Mode::basic ? ReferenceStage::prefilter : ReferenceStage::final;
    const auto& expected = reference_types(report.dimension, d.stage);

    std::vector<TypeVector> engine = report.survivors;
    std::vector<TypeVector> ref = expected;
    std::sort(engine.begin(), engine.end(), TypeVector::canonical_less);
    std::sort(ref.begin(), ref.end(), TypeVector::canonical_less);
    std::set_difference(ref.begin(), ref.end(), engine.begin(), engine.end(),
                        std::back_inserter(d.missing_from_engine), TypeVector::canonical_less);
    std::set_difference(engine.begin(), engine.end(), ref.begin(), ref.end(),
                        std::back_inserter(d.extra_in_engine), TypeVector::canonical_less);
    return d;
}

} // namespace mnsd
