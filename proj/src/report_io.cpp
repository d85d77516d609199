#include "mnsd/report_io.hpp"

#include <sstream>

#include "json.hpp"

#include "mnsd/arith.hpp"
#include "mnsd/errors.hpp"

namespace mnsd::io {

namespace {

using ordered_json = nlohmann::ordered_json;

std::string csv_field(std::string_view s) {
    if (s.find_first_of(",\"\n") == std::string_view::npos) return std::string(s);
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

std::string citation_text(std::string_view key) {
    const Citation* c = find_citation(key);
    if (!c) return std::string(key);
    return std::string(c->label) + ": \"" + std::string(c->quote) + "\"";
}

double to_ms(std::chrono::microseconds us) { return static_cast<double>(us.count()) / 1000.0; }

ordered_json factorization_json(const arith::FactoredInt& f) {
    ordered_json arr = ordered_json::array();
    for (const auto& pp : f.factors) arr.push_back({pp.prime, pp.exponent});
    return arr;
}

ordered_json verdict_json(const FilterVerdict& v) {
    return ordered_json{{"filter", v.filter_id},
                        {"status", std::string(to_string(v.status))},
                        {"reason", v.reason},
                        {"citation", v.citation}};
}

ordered_json report_json(const ClassificationReport& rep, bool timing) {
    ordered_json j;
    j["dimension"] = rep.dimension;
    j["factorization"] = factorization_json(rep.factorization);
    j["mode"] = std::string(to_string(rep.mode));
    j["f2_mode"] = std::string(to_string(rep.f2_mode));
    j["raw_count"] = rep.raw_count;
    ordered_json survivors = ordered_json::array();
    for (const auto& t : rep.survivors) survivors.push_back(t.format());
    j["survivors"] = std::move(survivors);
    ordered_json rejections = ordered_json::array();
    for (const auto& r : rep.rejections) {
        ordered_json verdicts = ordered_json::array();
        for (const auto& v : r.verdicts) verdicts.push_back(verdict_json(v));
        rejections.push_back(ordered_json{{"type", r.type.format()}, {"verdicts", verdicts}});
    }
    j["rejections"] = std::move(rejections);
    ordered_json unresolved = ordered_json::array();
    for (const auto& u : rep.unresolved) {
        ordered_json verdicts = ordered_json::array();
        for (const auto& v : u.verdicts) verdicts.push_back(verdict_json(v));
        unresolved.push_back(ordered_json{{"type", u.type.format()}, {"verdicts", verdicts}});
    }
    j["unresolved"] = std::move(unresolved);
    j["engine_version"] = rep.engine_version;
    if (timing) j["elapsed_ms"] = to_ms(rep.elapsed);
    return j;
}

constexpr std::string_view kReportCsvHeader = "dimension,stage,type,outcome,filter,citation,reason";

void report_csv_rows(const ClassificationReport& rep, std::string& out) {
    const std::string stage(to_string(rep.mode == Mode::basic ? ReferenceStage::prefilter
                                                              : ReferenceStage::final));
    const std::string dim = std::to_string(rep.dimension);
    for (const auto& t : rep.survivors) {
        out += dim + "," + stage + "," + csv_field(t.format()) + ",survivor,,,\n";
    }
    for (const auto& r : rep.rejections) {
        const auto& v = r.verdicts.front();
        out += dim + "," + stage + "," + csv_field(r.type.format()) + ",rejected," +
               v.filter_id + "," + csv_field(v.citation) + "," + csv_field(v.reason) + "\n";
    }
    for (const auto& u : rep.unresolved) {
        const auto& v = u.verdicts.front();
        out += dim + "," + stage + "," + csv_field(u.type.format()) + ",unresolved," +
               v.filter_id + "," + csv_field(v.citation) + "," + csv_field(v.reason) + "\n";
    }
}

void report_table(const ClassificationReport& rep, bool timing, std::ostringstream& os) {
    os << "dimension " << rep.dimension << " = "
       << arith::format_factorization(rep.factorization) << "\n";
    os << "mode " << to_string(rep.mode) << ", f2-mode " << to_string(rep.f2_mode)
       << ", raw candidates: " << rep.raw_count << "\n";
    os << "survivors (" << rep.survivors.size() << "):\n";
    for (const auto& t : rep.survivors) os << "  " << t.format() << "\n";
    os << "rejected (" << rep.rejections.size() << "):\n";
    for (const auto& r : rep.rejections) {
        bool first = true;
        for (const auto& v : r.verdicts) {
            if (first) {
                os << "  " << r.type.format() << "\n";
                first = false;
            }
            os << "    " << v.filter_id << ": " << v.reason << " [" << citation_text(v.citation)
               << "]\n";
        }
    }
    if (!rep.unresolved.empty()) {
        os << "UNRESOLVED (" << rep.unresolved.size() << "):\n";
        for (const auto& u : rep.unresolved) {
            os << "  " << u.type.format() << "\n";
            for (const auto& v : u.verdicts) {
                os << "    " << v.filter_id << ": " << v.reason << " ["
                   << citation_text(v.citation) << "]\n";
            }
        }
    }
    if (timing) os << "elapsed: " << to_ms(rep.elapsed) << " ms\n";
}

} // namespace

Format parse_format(std::string_view name) {
    if (name == "table") return Format::table;
    if (name == "json") return Format::json;
    if (name == "csv") return Format::csv;
    throw ConfigError("unknown format '" + std::string(name) + "'");
}

std::string render_report(const ClassificationReport& rep, Format f, bool timing) {
    if (f == Format::json) return report_json(rep, timing).dump(2) + "\n";
    if (f == Format::csv) {
        std::string out{kReportCsvHeader};
        out += "\n";
        report_csv_rows(rep, out);
        return out;
    }
    std::ostringstream os;
    report_table(rep, timing, os);
    return os.str();
}

std::string render_scan(std::span<const std::shared_ptr<const ClassificationReport>> reports,
                        u64 max, Format f, bool timing) {
    if (f == Format::json) {
        ordered_json j;
        j["max"] = max;
        if (!reports.empty()) {
            j["mode"] = std::string(to_string(reports.front()->mode));
            j["f2_mode"] = std::string(to_string(reports.front()->f2_mode));
        }
        j["engine_version"] = std::string(kEngineVersion);
        ordered_json arr = ordered_json::array();
        for (const auto& rep : reports) arr.push_back(report_json(*rep, timing));
        j["reports"] = std::move(arr);
        ordered_json np = ordered_json::array();
        for (const auto& rep : reports) {
            ordered_json types = ordered_json::array();
            for (const auto& t : rep->survivors) {
                if (!t.pointed()) types.push_back(t.format());
            }
            if (!types.empty())
                np.push_back(ordered_json{{"dimension", rep->dimension}, {"types", types}});
        }
        j["non_pointed"] = std::move(np);
        return j.dump(2) + "\n";
    }
    if (f == Format::csv) {
        std::string out{kReportCsvHeader};
        out += "\n";
        for (const auto& rep : reports) report_csv_rows(*rep, out);
        return out;
    }
    std::ostringstream os;
    for (const auto& rep : reports) {
        u64 non_pointed = 0;
        for (const auto& t : rep->survivors) {
            if (!t.pointed()) ++non_pointed;
        }
        os << "N=" << rep->dimension << " [" << arith::format_factorization(rep->factorization)
           << "] raw=" << rep->raw_count << " survivors=" << rep->survivors.size()
           << " non-pointed=" << non_pointed;
        if (!rep->unresolved.empty()) os << " UNRESOLVED=" << rep->unresolved.size();
        if (timing) os << " elapsed=" << to_ms(rep->elapsed) << "ms";
        os << "\n";
    }
    os << "non-pointed survivors below " << max << ":\n";
    bool any = false;
    for (const auto& rep : reports) {
        std::string line;
        for (const auto& t : rep->survivors) {
            if (!t.pointed()) line += " " + t.format();
        }
        if (!line.empty()) {
            os << "  " << rep->dimension << ":" << line << "\n";
            any = true;
        }
    }
    if (!any) os << "  none\n";
    return os.str();
}

std::string render_explain(u64 dimension, const TypeVector& t,
                           std::span<const FilterVerdict> verdicts, Format f) {
    if (f == Format::json) {
        ordered_json j;
        j["dimension"] = dimension;
        j["type"] = t.format();
        ordered_json arr = ordered_json::array();
        for (const auto& v : verdicts) arr.push_back(verdict_json(v));
        j["verdicts"] = std::move(arr);
        return j.dump(2) + "\n";
    }
    if (f == Format::csv) {
        std::string out = "dimension,type,filter,status,citation,reason\n";
        for (const auto& v : verdicts) {
            out += std::to_string(dimension) + "," + csv_field(t.format()) + "," + v.filter_id +
                   "," + std::string(to_string(v.status)) + "," + csv_field(v.citation) + "," +
                   csv_field(v.reason) + "\n";
        }
        return out;
    }
    std::ostringstream os;
    os << "type " << t.format() << " at dimension " << dimension << "\n";
    for (const auto& v : verdicts) {
        os << "  " << v.filter_id;
        for (std::size_t i = v.filter_id.size(); i < 12; ++i) os << ' ';
        os << to_string(v.status);
        for (std::size_t i = to_string(v.status).size(); i < 14; ++i) os << ' ';
        os << v.reason << " [" << citation_text(v.citation) << "]\n";
    }
    return os.str();
}

std::string render_filters(Format f) {
    struct Row {
        std::string_view id;
        std::string_view stage;
        const Citation* citation;
    };
    std::vector<Row> rows;
    for (const auto& def : filter_catalog()) {
        std::vector<std::string_view> keys;
        if (def.id == "structural") keys = {"structural_solvable", "structural_divides"};
        else if (def.id == "f2") keys = {"f2", "f2_strict"};
        else if (def.id == "f14") keys = {"f14_k1", "f14_k2"};
        else keys = {def.id};
        for (const auto key : keys)
            rows.push_back({def.id, def.basic ? "basic" : "advanced", find_citation(key)});
    }
    if (f == Format::json) {
        ordered_json arr = ordered_json::array();
        for (const auto& r : rows) {
            arr.push_back(ordered_json{{"id", std::string(r.id)},
                                       {"stage", std::string(r.stage)},
                                       {"citation_key", std::string(r.citation->key)},
                                       {"label", std::string(r.citation->label)},
                                       {"quote", std::string(r.citation->quote)}});
        }
        return ordered_json{{"filters", arr}}.dump(2) + "\n";
    }
    if (f == Format::csv) {
        std::string out = "id,stage,citation_key,label,quote\n";
        for (const auto& r : rows) {
            out += std::string(r.id) + "," + std::string(r.stage) + "," +
                   std::string(r.citation->key) + "," + csv_field(r.citation->label) + "," +
                   csv_field(r.citation->quote) + "\n";
        }
        return out;
    }
    std::ostringstream os;
    for (const auto& r : rows) {
        os << "  " << r.id;
        for (std::size_t i = r.id.size(); i < 12; ++i) os << ' ';
        os << r.stage;
        for (std::size_t i = r.stage.size(); i < 10; ++i) os << ' ';
        os << r.citation->label << ": \"" << r.citation->quote << "\"\n";
    }
    return os.str();
}

std::string render_discrepancy(const DiscrepancyReport& d, Format f) {
    if (f == Format::json) {
        ordered_json j;
        j["dimension"] = d.dimension;
        j["stage"] = std::string(to_string(d.stage));
        ordered_json missing = ordered_json::array();
        for (const auto& t : d.missing_from_engine) missing.push_back(t.format());
        j["missing_from_engine"] = std::move(missing);
        ordered_json extra = ordered_json::array();
        for (const auto& t : d.extra_in_engine) extra.push_back(t.format());
        j["extra_in_engine"] = std::move(extra);
        j["match"] = d.empty();
        return j.dump(2) + "\n";
    }
    if (f == Format::csv) {
        std::string out;
        const std::string dim = std::to_string(d.dimension);
        const std::string stage(to_string(d.stage));
        for (const auto& t : d.missing_from_engine)
            out += dim + "," + stage + "," + csv_field(t.format()) + ",missing_from_engine,,,\n";
        for (const auto& t : d.extra_in_engine)
            out += dim + "," + stage + "," + csv_field(t.format()) + ",extra_in_engine,,,\n";
        return out;
    }
    std::ostringstream os;
    os << "reference comparison (" << to_string(d.stage) << " stage, dimension " << d.dimension
       << "): ";
    if (d.empty()) {
        os << "exact match\n";
        return os.str();
    }
    os << "MISMATCH\n";
    for (const auto& t : d.missing_from_engine) os << "  missing from engine: " << t.format()
                                                   << "\n";
    for (const auto& t : d.extra_in_engine) os << "  extra in engine: " << t.format() << "\n";
    return os.str();
}

} // namespace mnsd::io
