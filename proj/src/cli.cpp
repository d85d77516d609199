#include "mnsd/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include "CLI11.hpp"

#include "mnsd/pipeline.hpp"
#include "mnsd/report_io.hpp"

namespace mnsd::io {

namespace {

constexpr const char* kConfigEnvVar = "MNSD_CONFIG";

struct CommonOptions {
    std::string filters = "full";
    std::string f2_mode = "legacy";
    std::string format = "table";
    bool timing = false;
    std::string config_path;
    std::string output_path;

    CLI::Option* filters_opt = nullptr;
    CLI::Option* f2_opt = nullptr;
    CLI::Option* format_opt = nullptr;
    CLI::Option* timing_opt = nullptr;
};

void add_common(CLI::App* cmd, CommonOptions& o, bool with_filters) {
    if (with_filters)
        o.filters_opt = cmd->add_option("--filters", o.filters, "filter set: basic|full");
    o.f2_opt = cmd->add_option("--f2-mode", o.f2_mode, "legacy|strict");
    o.format_opt = cmd->add_option("--format", o.format, "table|json|csv");
    o.timing_opt = cmd->add_flag("--timing", o.timing, "include wall-clock timings");
    cmd->add_option("--config", o.config_path, "key=value configuration file");
    cmd->add_option("--output", o.output_path, "write the report to a file");
}

std::map<std::string, std::string> read_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open configuration file '" + path + "'");
    std::map<std::string, std::string> kv;
    std::string line;
    auto trim = [](std::string s) {
        const auto a = s.find_first_not_of(" \t\r");
        const auto b = s.find_last_not_of(" \t\r");
        return a == std::string::npos ? std::string() : s.substr(a, b - a + 1);
    };
    while (std::getline(in, line)) {
        line = trim(line);
        if (line.empty() || line[0] == '#') continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw ConfigError("malformed configuration line '" + line + "'");
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (key != "filters" && key != "f2-mode" && key != "format" && key != "timing")
            throw ConfigError("unknown configuration key '" + key + "'");
        kv[key] = value;
    }
    return kv;
}

// Built-ins < configuration file < command-line flags.
void apply_config(CommonOptions& o) {
    std::string path = o.config_path;
    if (path.empty()) {
        if (const char* env = std::getenv(kConfigEnvVar)) path = env;
    }
    if (path.empty()) return;
    const auto kv = read_config(path);
    const auto get = [&](const char* key) -> const std::string* {
        const auto it = kv.find(key);
        return it == kv.end() ? nullptr : &it->second;
    };
    if (o.filters_opt && o.filters_opt->count() == 0) {
        if (const auto* v = get("filters")) o.filters = *v;
    }
    if (o.f2_opt && o.f2_opt->count() == 0) {
        if (const auto* v = get("f2-mode")) o.f2_mode = *v;
    }
    if (o.format_opt && o.format_opt->count() == 0) {
        if (const auto* v = get("format")) o.format = *v;
    }
    if (o.timing_opt && o.timing_opt->count() == 0) {
        if (const auto* v = get("timing")) {
            if (*v == "true" || *v == "1") o.timing = true;
            else if (*v == "false" || *v == "0") o.timing = false;
            else throw ConfigError("timing must be true/false, got '" + *v + "'");
        }
    }
}

Mode parse_mode(const std::string& s) {
    if (s == "basic") return Mode::basic;
    if (s == "full") return Mode::full;
    throw ConfigError("unknown filter set '" + s + "'; expected basic or full");
}

F2Mode parse_f2(const std::string& s) {
    if (s == "legacy") return F2Mode::legacy;
    if (s == "strict") return F2Mode::strict;
    throw ConfigError("unknown f2 mode '" + s + "'; expected legacy or strict");
}

int emit(const std::string& text, const CommonOptions& o, std::ostream& out, std::ostream& err) {
    if (o.output_path.empty()) {
        out << text;
        return 0;
    }
    std::ofstream f(o.output_path, std::ios::binary);
    if (!f) {
        err << "error: cannot open output file '" << o.output_path << "'\n";
        return 1;
    }
    f << text;
    return 0;
}

} // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"classification of admissible types of odd-dimensional (maximally "
                 "non-self-dual) modular categories"};
    app.require_subcommand(1);

    auto* classify_cmd =
        app.add_subcommand("classify", "classify one odd FP dimension");
    u64 dim = 0;
    classify_cmd->add_option("--dim", dim, "FP dimension (odd)")->required();
    CommonOptions classify_opts;
    add_common(classify_cmd, classify_opts, true);
    bool compare_paper = false;
    classify_cmd->add_flag("--compare-paper", compare_paper,
                           "compare survivors against the shipped reference tables");
    bool explain_all = false;
    classify_cmd->add_flag("--explain", explain_all,
                           "retain every rejecting verdict instead of the first");

    auto* scan_cmd = app.add_subcommand("scan", "classify every odd dimension below a bound");
    u64 max = 2025;
    scan_cmd->add_option("--max", max, "exclusive upper bound (default 2025)");
    CommonOptions scan_opts;
    add_common(scan_cmd, scan_opts, true);
    bool scan_compare = false;
    scan_cmd->add_flag("--compare-paper", scan_compare,
                       "compare reference dimensions against the shipped tables");

    auto* explain_cmd =
        app.add_subcommand("explain", "run the whole catalog on one supplied type");
    u64 explain_dim = 0;
    std::string type_text;
    explain_cmd->add_option("--dim", explain_dim, "FP dimension (odd)")->required();
    explain_cmd->add_option("--type", type_text, "type string, e.g. \"(1,3;3,16;7,6)\"")
        ->required();
    CommonOptions explain_opts;
    add_common(explain_cmd, explain_opts, false);

    auto* filters_cmd = app.add_subcommand("filters", "list the filter catalog with citations");
    CommonOptions filters_opts;
    add_common(filters_cmd, filters_opts, false);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }

    try {
        if (app.got_subcommand(classify_cmd)) {
            apply_config(classify_opts);
            const Mode mode = parse_mode(classify_opts.filters);
            const Format format = parse_format(classify_opts.format);
            FilterContext ctx;
            ctx.f2_mode = parse_f2(classify_opts.f2_mode);
            const ClassificationReport rep = explain_all
                                                 ? classify_collect_all(dim, mode, ctx)
                                                 : classify(dim, mode, ctx);
            std::string text = render_report(rep, format, classify_opts.timing);
            int code = 0;
            if (compare_paper) {
                const DiscrepancyReport d = compare_reference(rep);
                text += render_discrepancy(d, format);
                if (!d.empty()) code = 3;
            }
            const int emit_code = emit(text, classify_opts, out, err);
            return emit_code != 0 ? emit_code : code;
        }

        if (app.got_subcommand(scan_cmd)) {
            apply_config(scan_opts);
            if (max == 0) {
                err << "error: scan requires --max >= 1\n";
                return 1;
            }
            const Mode mode = parse_mode(scan_opts.filters);
            const Format format = parse_format(scan_opts.format);
            FilterContext ctx;
            ctx.f2_mode = parse_f2(scan_opts.f2_mode);
            const auto reports = scan(max, mode, ctx);
            std::string text = render_scan(reports, max, format, scan_opts.timing);
            int code = 0;
            if (scan_compare) {
                for (const auto& rep : reports) {
                    if (!is_reference_dimension(rep->dimension)) continue;
                    const DiscrepancyReport d = compare_reference(*rep);
                    text += render_discrepancy(d, format);
                    if (!d.empty()) code = 3;
                }
            }
            const int emit_code = emit(text, scan_opts, out, err);
            return emit_code != 0 ? emit_code : code;
        }

        if (app.got_subcommand(explain_cmd)) {
            apply_config(explain_opts);
            const Format format = parse_format(explain_opts.format);
            FilterContext ctx;
            ctx.f2_mode = parse_f2(explain_opts.f2_mode);
            const TypeVector t = TypeVector::parse(type_text);
            const auto verdicts = explain(explain_dim, t, ctx);
            return emit(render_explain(explain_dim, t, verdicts, format), explain_opts, out,
                        err);
        }

        apply_config(filters_opts);
        return emit(render_filters(parse_format(filters_opts.format)), filters_opts, out, err);
    } catch (const InvalidInput& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const NotFound& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const ConfigError& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
}

} // namespace mnsd::io
