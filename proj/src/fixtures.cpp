#include <map>
#include <sstream>

#include "mnsd/pipeline.hpp"

namespace mnsd {

namespace {

// Reference survivor tables for the thirteen dimensions needing the full
// machinery, one line per (dimension, stage), types in canonical order.
// The prefilter stage is what the divisibility filters alone leave; the
// final stage is what the whole catalog leaves. data/reference_tables.txt
// ships the same records; tests guard both against edits via a checksum.
constexpr std::string_view kReferenceTables =
    "225 prefilter (1,3;3,8;5,6) (1,225)\n"
    "225 final (1,225)\n"
    "243 prefilter (1,9;3,26) (1,243)\n"
    "243 final (1,243)\n"
    "441 prefilter (1,3;3,16;7,6) (1,441)\n"
    "441 final (1,3;3,16;7,6) (1,441)\n"
    "675 prefilter (1,3;3,8;5,6;15,2) (1,3;3,8;5,24) (1,9;3,24;5,18) (1,675)\n"
    "675 final (1,675)\n"
    "729 prefilter (1,9;3,8;9,8) (1,9;3,26;9,6) (1,9;3,80) (1,27;3,78) (1,729)\n"
    "729 final (1,9;3,80) (1,27;3,78) (1,729)\n"
    "1089 prefilter (1,3;3,40;11,6) (1,1089)\n"
    "1089 final (1,1089)\n"
    "1125 prefilter (1,3;3,8;5,6;15,4) (1,3;3,8;5,24;15,2) (1,3;3,8;5,42) (1,9;3,24;5,36) "
    "(1,15;3,40;5,30) (1,1125)\n"
    "1125 final (1,15;3,40;5,30) (1,1125)\n"
    "1215 prefilter (1,9;3,8;9,14) (1,9;3,26;9,12) (1,9;3,44;9,10) (1,9;3,134) (1,27;3,132) "
    "(1,45;3,130) (1,1215)\n"
    "1215 final (1,1215)\n"
    "1225 prefilter (1,1225)\n"
    "1225 final (1,1225)\n"
    "1323 prefilter (1,3;3,16;7,6;21,2) (1,3;3,16;7,24) (1,21;3,14;7,24) (1,9;3,48;7,18) "
    "(1,1323)\n"
    "1323 final (1,9;3,48;7,18) (1,1323)\n"
    "1521 prefilter (1,3;3,56;13,6) (1,1521)\n"
    "1521 final (1,3;3,56;13,6) (1,1521)\n"
    "1575 prefilter (1,3;3,8;5,6;15,6) (1,3;3,8;5,24;15,4) (1,3;3,8;5,42;15,2) (1,3;3,8;5,60) "
    "(1,3;3,58;5,6;15,4) (1,3;3,58;5,24;15,2) (1,9;3,24;5,54) (1,3;3,58;5,42) (1,21;3,56;5,42) "
    "(1,1575)\n"
    "1575 final (1,1575)\n"
    "1701 prefilter (1,9;3,8;9,20) (1,9;3,26;9,18) (1,9;3,62;9,14) (1,9;3,188) (1,27;3,186) "
    "(1,63;3,182) (1,1701)\n"
    "1701 final (1,1701)\n";

constexpr u64 kReferenceDims[] = {225,  243,  441,  675,  729,  1089, 1125,
                                  1215, 1225, 1323, 1521, 1575, 1701};

// Expected rejection attribution for every type the prefilter table keeps
// and the final table drops.
constexpr Attribution kAttributionMap[] = {
    {225, "(1,3;3,8;5,6)", "f10"},
    {243, "(1,9;3,26)", "f13"},
    {675, "(1,3;3,8;5,6;15,2)", "f10"},
    {675, "(1,3;3,8;5,24)", "f10"},
    {675, "(1,9;3,24;5,18)", "f11"},
    {729, "(1,9;3,8;9,8)", "f18"},
    {729, "(1,9;3,26;9,6)", "f18"},
    {1089, "(1,3;3,40;11,6)", "f10"},
    {1125, "(1,3;3,8;5,6;15,4)", "f10"},
    {1125, "(1,3;3,8;5,24;15,2)", "f10"},
    {1125, "(1,3;3,8;5,42)", "f10"},
    {1125, "(1,9;3,24;5,36)", "f12"},
    {1215, "(1,9;3,8;9,14)", "f14"},
    {1215, "(1,9;3,26;9,12)", "f14"},
    {1215, "(1,9;3,44;9,10)", "f14"},
    {1215, "(1,9;3,134)", "f14"},
    {1215, "(1,27;3,132)", "f14"},
    {1215, "(1,45;3,130)", "f14"},
    {1323, "(1,3;3,16;7,6;21,2)", "f16"},
    {1323, "(1,3;3,16;7,24)", "f16"},
    {1323, "(1,21;3,14;7,24)", "f15"},
    {1575, "(1,3;3,8;5,6;15,6)", "f10"},
    {1575, "(1,3;3,8;5,24;15,4)", "f10"},
    {1575, "(1,3;3,8;5,42;15,2)", "f10"},
    {1575, "(1,3;3,8;5,60)", "f10"},
    {1575, "(1,3;3,58;5,6;15,4)", "f10"},
    {1575, "(1,3;3,58;5,24;15,2)", "f10"},
    {1575, "(1,3;3,58;5,42)", "f10"},
    {1575, "(1,9;3,24;5,54)", "f12"},
    {1575, "(1,21;3,56;5,42)", "f17"},
    {1701, "(1,9;3,8;9,20)", "f14"},
    {1701, "(1,9;3,26;9,18)", "f14"},
    {1701, "(1,9;3,62;9,14)", "f14"},
    {1701, "(1,9;3,188)", "f14"},
    {1701, "(1,27;3,186)", "f14"},
    {1701, "(1,63;3,182)", "f14"},
};

using TableKey = std::pair<u64, ReferenceStage>;

const std::map<TableKey, std::vector<TypeVector>>& parsed_tables() {
    static const auto tables = [] {
        std::map<TableKey, std::vector<TypeVector>> out;
        std::istringstream in{std::string(kReferenceTables)};
        std::string line;
        while (std::getline(in, line)) {
            if (line.empty()) continue;
            std::istringstream ls(line);
            u64 dim = 0;
            std::string stage_tag, type_text;
            ls >> dim >> stage_tag;
            const ReferenceStage stage =
                stage_tag == "prefilter" ? ReferenceStage::prefilter : ReferenceStage::final;
            auto& list = out[{dim, stage}];
            while (ls >> type_text) list.push_back(TypeVector::parse(type_text));
        }
        return out;
    }();
    return tables;
}

} // namespace

std::span<const u64> reference_dimensions() { return kReferenceDims; }

bool is_reference_dimension(u64 dimension) {
    for (const u64 d : kReferenceDims) {
        if (d == dimension) return true;
    }
    return false;
}

const std::vector<TypeVector>& reference_types(u64 dimension, ReferenceStage stage) {
    const auto& tables = parsed_tables();
    const auto it = tables.find({dimension, stage});
    if (it == tables.end())
        throw NotFound("no reference table for dimension " + std::to_string(dimension));
    return it->second;
}

std::string_view reference_tables_text() { return kReferenceTables; }

std::span<const Attribution> attribution_map() { return kAttributionMap; }

} // namespace mnsd
