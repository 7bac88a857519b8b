#include <exception>
#include <iostream>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>

#include "avq/chow.hpp"
#include "avq/errors.hpp"
#include "avq/feasibility.hpp"
#include "avq/render.hpp"
#include "avq/sequences.hpp"

namespace {

// "A..B" with 1 <= A <= B <= limit
std::pair<int, int> parse_range(const std::string& text, int limit) {
  const auto sep = text.find("..");
  if (sep == std::string::npos) {
    throw std::invalid_argument("range must look like A..B, got: " + text);
  }
  std::size_t used = 0;
  const int lo = std::stoi(text.substr(0, sep), &used);
  if (used != sep) {
    throw std::invalid_argument("bad range start: " + text);
  }
  const std::string tail = text.substr(sep + 2);
  const int hi = std::stoi(tail, &used);
  if (used != tail.size()) {
    throw std::invalid_argument("bad range end: " + text);
  }
  if (lo < 1 || hi < lo || hi > limit) {
    throw std::invalid_argument("range must satisfy 1 <= A <= B <= " +
                                std::to_string(limit));
  }
  return {lo, hi};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "avq: exact elimination tables for middle-dimensional abelian "
      "subvarieties of smooth quadrics"};
  app.require_subcommand(1);

  std::string format = "text";
  app.add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"text", "json", "csv"}))
      ->capture_default_str();

  int fd_d = 0;
  std::string fd_range;
  auto* cmd_fd = app.add_subcommand("fd", "Normal bundle coefficients F_d");
  cmd_fd->fallthrough();
  auto* opt_fd_d =
      cmd_fd->add_option("--d", fd_d, "Single dimension")->check(CLI::Range(1, 10000));
  auto* opt_fd_range =
      cmd_fd->add_option("--range", fd_range, "Dimension range A..B");
  opt_fd_d->excludes(opt_fd_range);
  cmd_fd->require_option(1);

  int chern_dim = 0;
  auto* cmd_chern =
      app.add_subcommand("chern", "Total Chern class of the quadric tangent bundle");
  cmd_chern->fallthrough();
  cmd_chern->add_option("--dim", chern_dim, "Quadric dimension n")
      ->required()
      ->check(CLI::Range(1, 1000));

  int circle_d = 0;
  auto* cmd_circle =
      app.add_subcommand("circle", "Solutions of a^2 + b^2 = F_d (a + b)");
  cmd_circle->fallthrough();
  cmd_circle->add_option("--d", circle_d, "Dimension d")
      ->required()
      ->check(CLI::Range(1, 200));

  int table_max = 0;
  auto* cmd_table = app.add_subcommand("table", "Elimination table for d = 1..max");
  cmd_table->fallthrough();
  cmd_table->add_option("--max-d", table_max, "Largest dimension")
      ->required()
      ->check(CLI::Range(3, 10000));

  int elim_d = 0;
  bool explain = false;
  auto* cmd_eliminate =
      app.add_subcommand("eliminate", "Full elimination record for one dimension");
  cmd_eliminate->fallthrough();
  cmd_eliminate->add_option("--d", elim_d, "Dimension d")
      ->required()
      ->check(CLI::Range(1, 10000));
  cmd_eliminate->add_flag("--explain", explain,
                          "Prose trail instead of the record (always text)");

  int fine_max = 0;
  auto* cmd_fine =
      app.add_subcommand("fine", "F_d next to the Fine numbers, no identity implied");
  cmd_fine->fallthrough();
  cmd_fine->add_option("--max", fine_max, "Largest index n")
      ->required()
      ->check(CLI::Range(1, 2000));

  cmd_fd->callback([&] {
    std::vector<std::pair<int, avq::Int>> rows;
    if (*opt_fd_d) {
      rows.emplace_back(fd_d, avq::f_closed(fd_d));
    } else {
      const auto [lo, hi] = parse_range(fd_range, 10000);
      for (int d = lo; d <= hi; ++d) {
        rows.emplace_back(d, avq::f_closed(d));
      }
    }
    std::cout << avq::render_fd(rows, avq::output_format_from_name(format));
  });

  cmd_chern->callback([&] {
    std::cout << avq::render_chern(
        chern_dim, avq::chern_total_tangent_quadric(chern_dim),
        avq::output_format_from_name(format));
  });

  cmd_circle->callback([&] {
    const avq::Int f = avq::f_closed(circle_d);
    std::cout << avq::render_circle(circle_d, f, avq::circle_solutions(f),
                                    avq::output_format_from_name(format));
  });

  cmd_table->callback([&] {
    std::vector<avq::EliminationRecord> records;
    records.reserve(static_cast<std::size_t>(table_max));
    for (int d = 1; d <= table_max; ++d) {
      records.push_back(avq::eliminate(d));
    }
    std::cout << avq::render_table(records, avq::output_format_from_name(format));
  });

  cmd_eliminate->callback([&] {
    const avq::EliminationRecord rec = avq::eliminate(elim_d);
    if (explain) {
      std::cout << avq::render_explain(rec);
    } else {
      std::cout << avq::render_record(rec, avq::output_format_from_name(format));
    }
  });

  cmd_fine->callback([&] {
    std::cout << avq::render_fine(avq::fine_comparison_report(fine_max),
                                  avq::output_format_from_name(format));
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const avq::InvariantError& e) {
    std::cerr << "invariant violation: " << e.what() << '\n';
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
