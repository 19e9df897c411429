#ifndef LOGINT_TABLES_HPP
#define LOGINT_TABLES_HPP

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "logint/approx.hpp"
#include "logint/historical.hpp"

namespace logint {

enum class TableFormat { Csv, Markdown };

// Where and how table output goes. CSV is UTF-8, comma-separated, '.'
// decimal separator, header row, no thousands separators.
struct OutputSpec {
  TableFormat format = TableFormat::Csv;
  std::optional<std::string> path;  // stdout when absent
  long digits = 6;                  // fractional digits for real columns
};

std::string render_li_table(const LiTable& table, const OutputSpec& spec);
std::string render_comparison_table(const std::vector<ComparisonRow>& rows,
                                    const OutputSpec& spec);
std::string render_gauss_demo(const struct Gauss1815Report& report, const OutputSpec& spec);

// Writes to spec.path or returns for stdout printing.
void emit(const std::string& rendered, const OutputSpec& spec);

// Cell-by-cell check of computed tables against the golden transcriptions
// under data/golden/. Failures list offending cells; info lines record
// historical-vs-modern deviations that are data, not defects.
struct VerifyReport {
  std::vector<std::string> failures;
  std::vector<std::string> info;
  bool passed() const { return failures.empty(); }
};

// Printed 1810 li column vs the recomputed chain, tolerance 5e-4 on li.
// Rows whose printed entries are documented historical outliers (the
// 300000 li value, the Vega prime counts) are reported as INFO.
VerifyReport verify_bessel_1810(const LiTable& computed, const std::filesystem::path& golden);

// Printed comparative-table cells vs recomputed columns, tolerance +-2
// after half-up integer rounding; the pi column must match exactly.
VerifyReport verify_comparativa(const std::vector<ComparisonRow>& computed,
                                const std::filesystem::path& golden);

// Digit-prefix checks of gamma and mu against the printed constant
// strings, including the positions where the historical strings go wrong.
VerifyReport verify_constants(const std::filesystem::path& golden);

}  // namespace logint

#endif  // LOGINT_TABLES_HPP
