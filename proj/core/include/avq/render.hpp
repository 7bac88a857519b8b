#pragma once

#include <string>
#include <utility>
#include <vector>

#include "avq/feasibility.hpp"
#include "avq/sequences.hpp"
#include "avq/trunc_series.hpp"

namespace avq {

enum class OutputFormat { Text, Json, Csv };

/// Parses "text" / "json" / "csv"; throws std::invalid_argument otherwise.
OutputFormat output_format_from_name(const std::string& name);

// All renderers return the complete output (newline-terminated) and are
// deterministic: identical inputs give identical bytes. Text output is
// aligned columns, json is a single document, csv has a fixed header row and
// flattens list-valued cells with ';'.

std::string render_fd(const std::vector<std::pair<int, Int>>& rows,
                      OutputFormat format);

std::string render_chern(int dim, const TruncSeries& c, OutputFormat format);

std::string render_circle(int d, const Int& f,
                          const std::vector<IntPair>& solutions,
                          OutputFormat format);

std::string render_table(const std::vector<EliminationRecord>& records,
                         OutputFormat format);

std::string render_record(const EliminationRecord& rec, OutputFormat format);

/// Prose trail for one dimension: the ordered elimination steps with rule
/// citations verbatim. Text only.
std::string render_explain(const EliminationRecord& rec);

std::string render_fine(const std::vector<FineRow>& rows, OutputFormat format);

}  // namespace avq
