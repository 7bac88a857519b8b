#include "avq/render.hpp"

#include <algorithm>
#include <cstddef>
#include <sstream>
#include <stdexcept>

#include "avq/serialize.hpp"

namespace avq {

OutputFormat output_format_from_name(const std::string& name) {
  if (name == "text") return OutputFormat::Text;
  if (name == "json") return OutputFormat::Json;
  if (name == "csv") return OutputFormat::Csv;
  throw std::invalid_argument("output_format_from_name: " + name);
}

namespace {

using nlohmann::ordered_json;

std::string dump(const ordered_json& j) { return j.dump(2) + "\n"; }

enum class Align { Left, Right };

struct Column {
  std::string header;
  Align align;
};

/// Aligned text table: column widths fit the widest cell, two spaces between
/// columns, no trailing spaces.
std::string layout(const std::vector<Column>& cols,
                   const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> width(cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c) {
    width[c] = cols[c].header.size();
  }
  for (const auto& row : rows) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      width[c] = std::max(width[c], row[c].size());
    }
  }
  std::ostringstream out;
  auto emit = [&](const std::vector<std::string>& cells) {
    std::string line;
    for (std::size_t c = 0; c < cells.size(); ++c) {
      const std::size_t pad = width[c] - cells[c].size();
      if (c > 0) {
        line += "  ";
      }
      if (cols[c].align == Align::Right) {
        line.append(pad, ' ');
      }
      line += cells[c];
      if (cols[c].align == Align::Left && c + 1 < cells.size()) {
        line.append(pad, ' ');
      }
    }
    out << line << '\n';
  };
  std::vector<std::string> headers;
  headers.reserve(cols.size());
  for (const auto& col : cols) {
    headers.push_back(col.header);
  }
  emit(headers);
  for (const auto& row : rows) {
    emit(row);
  }
  return out.str();
}

std::string csv(const std::string& header,
                const std::vector<std::vector<std::string>>& rows) {
  std::ostringstream out;
  out << header << '\n';
  for (const auto& row : rows) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c > 0) {
        out << ',';
      }
      out << row[c];
    }
    out << '\n';
  }
  return out.str();
}

std::string pair_str(const IntPair& p) {
  return "(" + to_decimal(p.first) + ", " + to_decimal(p.second) + ")";
}

std::string parts_str(const PolarizationType& t) {
  std::string s = "(";
  for (std::size_t i = 0; i < t.parts.size(); ++i) {
    if (i > 0) {
      s += ",";
    }
    s += to_decimal(t.parts[i]);
  }
  return s + ")";
}

bool is_effective_pair(const IntPair& p) {
  return p.first >= 0 && p.second >= 0;
}

std::string join(const std::vector<std::string>& items, const char* sep) {
  std::string s;
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i > 0) {
      s += sep;
    }
    s += items[i];
  }
  return s;
}

std::vector<std::string> rule_names(const EliminationRecord& rec) {
  std::vector<std::string> names;
  names.reserve(rec.rules_applied.size());
  for (const auto& a : rec.rules_applied) {
    names.push_back(rule_id_name(a.rule_id));
  }
  return names;
}

std::vector<std::string> table_row(const EliminationRecord& rec,
                                   const char* rule_sep, const char* empty) {
  const auto names = rule_names(rec);
  return {std::to_string(rec.d),
          to_decimal(rec.f_d),
          to_decimal(rec.max_degree),
          to_decimal(rec.min_degree),
          verdict_name(rec.verdict),
          names.empty() ? empty : join(names, rule_sep)};
}

}  // namespace

std::string render_fd(const std::vector<std::pair<int, Int>>& rows,
                      OutputFormat format) {
  switch (format) {
    case OutputFormat::Text: {
      std::vector<std::vector<std::string>> cells;
      cells.reserve(rows.size());
      for (const auto& [d, f] : rows) {
        cells.push_back({std::to_string(d), to_decimal(f)});
      }
      return layout({{"d", Align::Right}, {"F_d", Align::Right}}, cells);
    }
    case OutputFormat::Json: {
      ordered_json arr = ordered_json::array();
      for (const auto& [d, f] : rows) {
        ordered_json row;
        row["d"] = d;
        row["f_d"] = to_decimal(f);
        arr.push_back(std::move(row));
      }
      return dump(arr);
    }
    case OutputFormat::Csv: {
      std::vector<std::vector<std::string>> cells;
      cells.reserve(rows.size());
      for (const auto& [d, f] : rows) {
        cells.push_back({std::to_string(d), to_decimal(f)});
      }
      return csv("d,f_d", cells);
    }
  }
  throw std::invalid_argument("render_fd: unknown format");
}

std::string render_chern(int dim, const TruncSeries& c, OutputFormat format) {
  switch (format) {
    case OutputFormat::Text: {
      std::vector<std::vector<std::string>> cells;
      for (int k = 0; k <= c.order(); ++k) {
        cells.push_back({std::to_string(k), to_decimal(c.coeff(k))});
      }
      return layout({{"k", Align::Right}, {"c_k", Align::Right}}, cells);
    }
    case OutputFormat::Json: {
      ordered_json out;
      out["dim"] = dim;
      ordered_json coeffs = ordered_json::array();
      for (int k = 0; k <= c.order(); ++k) {
        coeffs.push_back(to_decimal(c.coeff(k)));
      }
      out["coefficients"] = std::move(coeffs);
      return dump(out);
    }
    case OutputFormat::Csv: {
      std::vector<std::vector<std::string>> cells;
      for (int k = 0; k <= c.order(); ++k) {
        cells.push_back({std::to_string(k), to_decimal(c.coeff(k))});
      }
      return csv("k,c_k", cells);
    }
  }
  throw std::invalid_argument("render_chern: unknown format");
}

std::string render_circle(int d, const Int& f,
                          const std::vector<IntPair>& solutions,
                          OutputFormat format) {
  switch (format) {
    case OutputFormat::Text: {
      std::vector<std::vector<std::string>> cells;
      cells.reserve(solutions.size());
      for (const auto& p : solutions) {
        cells.push_back({to_decimal(p.first), to_decimal(p.second),
                         to_decimal(p.first + p.second),
                         is_effective_pair(p) ? "yes" : "no"});
      }
      return layout({{"a", Align::Right},
                     {"b", Align::Right},
                     {"degree", Align::Right},
                     {"effective", Align::Left}},
                    cells);
    }
    case OutputFormat::Json: {
      ordered_json out;
      out["d"] = d;
      out["f_d"] = to_decimal(f);
      ordered_json arr = ordered_json::array();
      for (const auto& p : solutions) {
        ordered_json row;
        row["a"] = to_decimal(p.first);
        row["b"] = to_decimal(p.second);
        row["degree"] = to_decimal(p.first + p.second);
        row["effective"] = is_effective_pair(p);
        arr.push_back(std::move(row));
      }
      out["solutions"] = std::move(arr);
      return dump(out);
    }
    case OutputFormat::Csv: {
      std::vector<std::vector<std::string>> cells;
      cells.reserve(solutions.size());
      for (const auto& p : solutions) {
        cells.push_back({to_decimal(p.first), to_decimal(p.second),
                         to_decimal(p.first + p.second),
                         is_effective_pair(p) ? "yes" : "no"});
      }
      return csv("a,b,degree,effective", cells);
    }
  }
  throw std::invalid_argument("render_circle: unknown format");
}

std::string render_table(const std::vector<EliminationRecord>& records,
                         OutputFormat format) {
  switch (format) {
    case OutputFormat::Text: {
      std::vector<std::vector<std::string>> cells;
      cells.reserve(records.size());
      for (const auto& rec : records) {
        cells.push_back(table_row(rec, ",", "-"));
      }
      return layout({{"d", Align::Right},
                     {"F_d", Align::Right},
                     {"max_degree", Align::Right},
                     {"min_degree", Align::Right},
                     {"verdict", Align::Left},
                     {"rules", Align::Left}},
                    cells);
    }
    case OutputFormat::Json: {
      ordered_json arr = ordered_json::array();
      for (const auto& rec : records) {
        arr.push_back(record_to_json(rec));
      }
      return dump(arr);
    }
    case OutputFormat::Csv: {
      std::vector<std::vector<std::string>> cells;
      cells.reserve(records.size());
      for (const auto& rec : records) {
        cells.push_back(table_row(rec, ";", ""));
      }
      return csv("d,f_d,max_degree,min_degree,verdict,rules", cells);
    }
  }
  throw std::invalid_argument("render_table: unknown format");
}

std::string render_record(const EliminationRecord& rec, OutputFormat format) {
  switch (format) {
    case OutputFormat::Text: {
      std::ostringstream out;
      out << "d            " << rec.d << '\n';
      out << "F_d          " << to_decimal(rec.f_d) << '\n';
      out << "max degree   " << to_decimal(rec.max_degree) << '\n';
      out << "min degree   " << to_decimal(rec.min_degree)
          << (rec.min_degree_applies ? "" : "  (not applied: requires d > 2)")
          << '\n';
      std::vector<std::string> sols;
      sols.reserve(rec.all_solutions.size());
      for (const auto& p : rec.all_solutions) {
        sols.push_back(pair_str(p));
      }
      out << "solutions    " << join(sols, " ")
          << (rec.solutions_complete ? "" : "  [guaranteed only; scan skipped]")
          << '\n';
      std::vector<std::string> eff;
      eff.reserve(rec.effective_solutions.size());
      for (const auto& p : rec.effective_solutions) {
        eff.push_back(pair_str(p));
      }
      out << "effective    " << join(eff, " ") << '\n';
      for (const auto& c : rec.surviving_candidates) {
        out << "candidate    " << pair_str(c.pair) << "  degree "
            << to_decimal(c.degree) << "  h0 " << to_decimal(c.h0) << '\n';
        for (const auto& a : c.types) {
          out << "  type       " << parts_str(a.type) << "  "
              << type_status_name(a.status);
          if (a.rule) {
            out << " [" << rule_id_name(*a.rule) << "]";
          }
          if (!a.note.empty()) {
            out << "  " << a.note;
          }
          out << '\n';
        }
      }
      for (const auto& a : rec.rules_applied) {
        out << "rule         " << rule_id_name(a.rule_id) << " strikes "
            << parts_str(a.subject) << ", citing \"" << a.citation
            << "\"; conclusion: " << a.conclusion << '\n';
      }
      out << "verdict      " << verdict_name(rec.verdict) << '\n';
      return out.str();
    }
    case OutputFormat::Json:
      return dump(record_to_json(rec));
    case OutputFormat::Csv:
      return csv("d,f_d,max_degree,min_degree,verdict,rules",
                 {table_row(rec, ";", "")});
  }
  throw std::invalid_argument("render_record: unknown format");
}

std::string render_explain(const EliminationRecord& rec) {
  std::ostringstream out;
  out << "elimination trail for d = " << rec.d << '\n';
  int step = 0;
  auto emit = [&](const std::string& text) {
    out << "  " << ++step << ") " << text << '\n';
  };

  emit("F_" + std::to_string(rec.d) + " = " + to_decimal(rec.f_d) +
       ", the top Chern coefficient of the normal bundle");

  {
    std::vector<std::string> sols;
    sols.reserve(rec.all_solutions.size());
    for (const auto& p : rec.all_solutions) {
      sols.push_back(pair_str(p));
    }
    std::string text = "integer solutions of a^2 + b^2 = F(a + b): ";
    text += join(sols, ", ");
    if (!rec.solutions_complete) {
      text += " (guaranteed solutions only; the full scan is skipped since the "
              "counting bound already decides this dimension)";
    }
    emit(text);
  }

  {
    std::string text = "degree window: deg(A) <= 2F = " +
                       to_decimal(rec.max_degree);
    if (rec.min_degree_applies) {
      text += " and deg(A) >= 2(d+1)! = " + to_decimal(rec.min_degree) +
              " (the variety spans for d > 2)";
    } else {
      text += "; the lower bound 2(d+1)! = " + to_decimal(rec.min_degree) +
              " is recorded but needs d > 2 to apply";
    }
    emit(text);
  }

  if (rec.verdict == Verdict::ALLOWED_CLASSICAL) {
    for (const auto& c : rec.surviving_candidates) {
      emit("classical case: the class " + pair_str(c.pair) + " has degree " +
           to_decimal(c.degree) +
           " and is realized by an elliptic curve of bidegree (2,2) on the "
           "quadric surface");
    }
    emit("verdict: " + verdict_name(rec.verdict));
    return out.str();
  }

  if (rec.verdict == Verdict::ELIMINATED_BY_COUNTING) {
    emit("counting: 2(d+1)! = " + to_decimal(rec.min_degree) + " exceeds 2F = " +
         to_decimal(rec.max_degree) +
         ", so the degree window is empty and no candidate class exists");
    emit("verdict: " + verdict_name(rec.verdict));
    return out.str();
  }

  for (const auto& c : rec.surviving_candidates) {
    std::string text = "candidate " + pair_str(c.pair) + ": degree " +
                       to_decimal(c.degree);
    if (rec.min_degree_applies && rec.min_degree == rec.max_degree) {
      text += " (the bounds force degree exactly " + to_decimal(c.degree) + ")";
    }
    text += ", h^0 = " + to_decimal(c.h0) + ", polarization types: ";
    std::vector<std::string> types;
    types.reserve(c.types.size());
    for (const auto& a : c.types) {
      types.push_back(parts_str(a.type));
    }
    text += join(types, ", ");
    emit(text);
  }

  for (const auto& a : rec.rules_applied) {
    if (a.rule_id == RuleId::R3_LAZARSFELD_17) {
      const Int quadrics = quadric_space_dimension(2 * rec.d + 2);
      const Int sections = double_type(a.subject).second;
      emit("the candidate surface is not linearly normal; it lifts to a "
           "linearly normal abelian surface in projective " +
           std::to_string(2 * rec.d + 2) + "-space");
      emit("quadrics through the lift: " + to_decimal(quadrics) + " - " +
           to_decimal(sections) + " = " + to_decimal(quadrics - sections));
    }
    emit("rule " + rule_id_name(a.rule_id) + " strikes " +
         parts_str(a.subject) + ", citing \"" + a.citation +
         "\"; conclusion: " + a.conclusion);
  }

  for (const auto& c : rec.surviving_candidates) {
    for (const auto& a : c.types) {
      if (a.status == TypeStatus::PaperOmitted) {
        emit("type " + parts_str(a.type) + ": " + a.note);
      } else if (a.status == TypeStatus::Open) {
        emit("type " + parts_str(a.type) + ": open; no rule applies");
      }
    }
  }

  emit("verdict: " + verdict_name(rec.verdict));
  return out.str();
}

std::string render_fine(const std::vector<FineRow>& rows,
                        OutputFormat format) {
  switch (format) {
    case OutputFormat::Text: {
      std::vector<std::vector<std::string>> cells;
      cells.reserve(rows.size());
      for (const auto& row : rows) {
        cells.push_back({std::to_string(row.n), to_decimal(row.f_d),
                         to_decimal(row.fine_n)});
      }
      return layout({{"n", Align::Right},
                     {"F_n", Align::Right},
                     {"fine(n)", Align::Right}},
                    cells);
    }
    case OutputFormat::Json: {
      ordered_json arr = ordered_json::array();
      for (const auto& row : rows) {
        ordered_json r;
        r["n"] = row.n;
        r["f_d"] = to_decimal(row.f_d);
        r["fine"] = to_decimal(row.fine_n);
        arr.push_back(std::move(r));
      }
      return dump(arr);
    }
    case OutputFormat::Csv: {
      std::vector<std::vector<std::string>> cells;
      cells.reserve(rows.size());
      for (const auto& row : rows) {
        cells.push_back({std::to_string(row.n), to_decimal(row.f_d),
                         to_decimal(row.fine_n)});
      }
      return csv("n,f_d,fine", cells);
    }
  }
  throw std::invalid_argument("render_fine: unknown format");
}

}  // namespace avq
