#pragma once

#include <memory>
#include <span>
#include <string>
#include <vector>

#include "mnsd/pipeline.hpp"
#include "mnsd/report.hpp"

// Output formatting for the command-line surface: human table, JSON with
// stable key order, CSV. Structured output is byte-identical across runs
// with identical flags; wall-clock timings appear only when requested.

namespace mnsd::io {

enum class Format { table, json, csv };

Format parse_format(std::string_view name); // throws ConfigError

std::string render_report(const ClassificationReport& rep, Format f, bool timing);

std::string render_scan(std::span<const std::shared_ptr<const ClassificationReport>> reports,
                        u64 max, Format f, bool timing);

std::string render_explain(u64 dimension, const TypeVector& t,
                           std::span<const FilterVerdict> verdicts, Format f);

std::string render_filters(Format f);

std::string render_discrepancy(const DiscrepancyReport& d, Format f);

} // namespace mnsd::io
