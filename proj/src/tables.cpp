#include "logint/tables.hpp"

#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <stdexcept>

#include "logint/constants.hpp"
#include "logint/primes.hpp"
#include "logint/quadrature.hpp"

namespace logint {

namespace {

std::string join_row(const std::vector<std::string>& cells, TableFormat format) {
  std::string out;
  if (format == TableFormat::Markdown) out += "| ";
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (i) out += format == TableFormat::Csv ? "," : " | ";
    out += cells[i];
  }
  if (format == TableFormat::Markdown) out += " |";
  out += '\n';
  return out;
}

std::string markdown_separator(std::size_t n) {
  std::string out = "|";
  for (std::size_t i = 0; i < n; ++i) out += " --- |";
  out += '\n';
  return out;
}

std::string table_text(const std::vector<std::string>& header,
                       const std::vector<std::vector<std::string>>& rows, TableFormat format) {
  std::string out = join_row(header, format);
  if (format == TableFormat::Markdown) out += markdown_separator(header.size());
  for (const auto& r : rows) out += join_row(r, format);
  return out;
}

// Integers render without a fractional part; 1280 not 1280.000000.
std::string format_abscissa(const Real& x, long digits) {
  if (floor(x) == x) return x.to_string(0);
  return x.to_string(digits);
}

std::vector<std::vector<std::string>> parse_csv(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open golden file " + path.string());
  std::vector<std::vector<std::string>> rows;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    std::vector<std::string> cells;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) cells.push_back(cell);
    if (line.back() == ',') cells.push_back("");
    rows.push_back(std::move(cells));
  }
  return rows;
}

}  // namespace

std::string render_li_table(const LiTable& table, const OutputSpec& spec) {
  std::vector<std::string> header = {"x",          "li",         "err_estimate",
                                     "li_printed", "pi_printed", "excess_printed"};
  std::vector<std::vector<std::string>> rows;
  for (const auto& r : table.rows) {
    rows.push_back({format_abscissa(r.x, spec.digits), r.li_value.to_string(spec.digits),
                    r.error_estimate.to_string_sig(3),
                    r.printed_li ? r.printed_li->to_string(6) : "",
                    r.printed_pi ? std::to_string(*r.printed_pi) : "",
                    r.printed_excess ? r.printed_excess->to_string(2) : ""});
  }
  return table_text(header, rows, spec.format);
}

std::string render_comparison_table(const std::vector<ComparisonRow>& rows,
                                    const OutputSpec& spec) {
  std::vector<std::string> header = {"n", "pi", "x_over_lnx", "legendre", "li"};
  std::vector<std::vector<std::string>> body;
  for (const auto& r : rows) {
    body.push_back({std::to_string(r.n), std::to_string(r.pi_n),
                    std::to_string(round_half_up(r.x_over_lnx)),
                    std::to_string(round_half_up(r.legendre)),
                    std::to_string(round_half_up(r.li_pv))});
  }
  return table_text(header, body, spec.format);
}

std::string render_gauss_demo(const Gauss1815Report& report, const OutputSpec& spec) {
  std::vector<std::string> header = {"nodes", "value", "abs_error", "rel_error", "reference"};
  std::vector<std::vector<std::string>> body;
  for (const auto& row : report.rows) {
    body.push_back({std::to_string(row.nodes), row.value.to_string(spec.digits),
                    row.abs_error.to_string_sig(3), row.rel_error.to_string_sig(3),
                    report.reference.to_string(spec.digits)});
  }
  return table_text(header, body, spec.format);
}

void emit(const std::string& rendered, const OutputSpec& spec) {
  if (!spec.path) {
    std::cout << rendered;
    return;
  }
  std::ofstream out(*spec.path, std::ios::trunc);
  if (!out) throw std::runtime_error("cannot open output file " + *spec.path);
  out << rendered;
}

VerifyReport verify_bessel_1810(const LiTable& computed, const std::filesystem::path& golden) {
  VerifyReport report;
  auto rows = parse_csv(golden);
  if (rows.empty() || rows[0] != std::vector<std::string>{"x", "li_printed", "primes_printed",
                                                          "excess_printed"})
    throw std::runtime_error("bessel_1810 golden: unexpected header");

  long d = Real::kDefaultDigits;
  Real li_tol = Real::from_string("5e-4", d);
  Real excess_tol = Real::from_string("0.01", d);

  std::map<long, const LiTableRow*> by_x;
  for (const auto& r : computed.rows) by_x[r.x.to_long()] = &r;

  // The printed 300000 value is a documented historical outlier: it
  // matches its own excess entry but not the true li (see VALIDATION.md).
  const long kKnownOutlierX = 300000;

  std::vector<std::uint64_t> xs;
  for (std::size_t i = 1; i < rows.size(); ++i) xs.push_back(std::stoull(rows[i][0]));
  auto modern_pi = primes::prime_pi_many(xs, primes::CountingConvention::Bessel1810);

  for (std::size_t i = 1; i < rows.size(); ++i) {
    const auto& cells = rows[i];
    long x = std::stol(cells[0]);
    auto it = by_x.find(x);
    if (it == by_x.end()) {
      report.failures.push_back("bessel1810 x=" + cells[0] + ": row missing from computation");
      continue;
    }
    const LiTableRow& c = *it->second;
    Real printed_li = Real::from_string(cells[1], d);
    Real dev = abs(c.li_value - printed_li);
    std::string dev_s = dev.to_string_sig(5);
    if (x == kKnownOutlierX) {
      report.info.push_back("INFO bessel1810 x=" + cells[0] + ": printed li deviates by " + dev_s +
                            " from the recomputation; the printed row is self-consistent with its "
                            "excess entry and is kept as historical data");
    } else if (dev > li_tol) {
      report.failures.push_back("bessel1810 x=" + cells[0] + ": li cell off by " + dev_s +
                                " (tolerance 5e-4)");
    } else {
      report.info.push_back("INFO bessel1810 x=" + cells[0] + ": printed li differs from the " +
                            "recomputation by " + dev_s + " (within the 5e-4 hand-computation band)");
    }

    if (!cells[2].empty()) {
      long printed_pi = std::stol(cells[2]);
      auto modern = static_cast<long>(modern_pi[i - 1]);
      if (printed_pi != modern)
        report.info.push_back("INFO bessel1810 x=" + cells[0] + ": printed prime count " +
                              std::to_string(printed_pi) + " vs modern count-with-1 " +
                              std::to_string(modern) + " (Vega table error, kept verbatim)");
    }
    if (!cells[2].empty() && !cells[3].empty()) {
      Real excess = Real::from_string(cells[3], d);
      Real internal = abs(printed_li - Real(std::stol(cells[2]), d) - excess);
      if (internal > excess_tol)
        report.failures.push_back("bessel1810 x=" + cells[0] +
                                  ": excess cell inconsistent with li and prime cells by " +
                                  internal.to_string_sig(3));
    }
  }
  return report;
}

VerifyReport verify_comparativa(const std::vector<ComparisonRow>& computed,
                                const std::filesystem::path& golden) {
  VerifyReport report;
  auto rows = parse_csv(golden);
  if (rows.empty() ||
      rows[0] != std::vector<std::string>{"n", "pi", "x_over_lnx", "legendre", "li"})
    throw std::runtime_error("comparativa golden: unexpected header");

  std::map<std::uint64_t, const ComparisonRow*> by_n;
  for (const auto& r : computed) by_n[r.n] = &r;

  for (std::size_t i = 1; i < rows.size(); ++i) {
    const auto& cells = rows[i];
    std::uint64_t n = std::stoull(cells[0]);
    auto it = by_n.find(n);
    if (it == by_n.end()) {
      report.failures.push_back("comparativa n=" + cells[0] + ": row missing from computation");
      continue;
    }
    const ComparisonRow& c = *it->second;
    if (c.pi_n != std::stoull(cells[1]))
      report.failures.push_back("comparativa n=" + cells[0] + ": pi cell " +
                                std::to_string(c.pi_n) + " != printed " + cells[1]);
    auto check = [&](const char* col, const Real& value, const std::string& printed) {
      long got = round_half_up(value);
      long want = std::stol(printed);
      if (std::labs(got - want) > 2)
        report.failures.push_back("comparativa n=" + cells[0] + ": " + col + " cell " +
                                  std::to_string(got) + " vs printed " + printed +
                                  " (tolerance 2)");
      else if (got != want)
        report.info.push_back("INFO comparativa n=" + cells[0] + ": " + col + " rounds to " +
                              std::to_string(got) + ", printed " + printed +
                              " (within the +-2 rounding band)");
    };
    check("x_over_lnx", c.x_over_lnx, cells[2]);
    check("legendre", c.legendre, cells[3]);
    check("li", c.li_pv, cells[4]);
  }
  return report;
}

VerifyReport verify_constants(const std::filesystem::path& golden) {
  VerifyReport report;
  auto rows = parse_csv(golden);
  if (rows.empty() ||
      rows[0] != std::vector<std::string>{"name", "decimals", "value", "first_wrong_decimal"})
    throw std::runtime_error("constants golden: unexpected header");

  for (std::size_t i = 1; i < rows.size(); ++i) {
    const auto& cells = rows[i];
    const std::string& name = cells[0];
    long decimals = std::stol(cells[1]);
    const std::string& printed = cells[2];
    int wrong_at = std::stoi(cells[3]);

    Real value(Real::kDefaultDigits);
    if (name.rfind("gamma", 0) == 0)
      value = euler_gamma(std::min(decimals + 6, 100L)).value;
    else if (name.rfind("mu", 0) == 0)
      value = soldner_mu(std::min(decimals + 6, 50L)).value;
    else {
      report.failures.push_back("constants " + name + ": unknown constant");
      continue;
    }
    std::string rendered = value.to_string(decimals, /*truncate=*/true);
    if (wrong_at == 0) {
      if (rendered != printed)
        report.failures.push_back("constants " + name + ": computed " + rendered +
                                  " != printed " + printed);
    } else {
      int divergence = first_divergent_decimal(rendered, printed);
      if (divergence != wrong_at)
        report.failures.push_back("constants " + name + ": printed string diverges at decimal " +
                                  std::to_string(divergence) + ", expected " +
                                  std::to_string(wrong_at));
      else
        report.info.push_back("INFO constants " + name + ": printed digits go wrong at decimal " +
                              std::to_string(wrong_at) + ", as documented");
    }
  }
  return report;
}

}  // namespace logint
