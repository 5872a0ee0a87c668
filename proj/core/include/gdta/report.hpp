#pragma once

#include <string>
#include <vector>

#include "gdta/structure.hpp"

namespace gdta {

struct CornerRow {
  Color color;
  mpz_class quotient_dim;
  std::size_t nilpotency_index = 1;
};

/// Everything `analyze` reports for one parameter/characteristic cell.
struct AnalysisReport {
  std::vector<Factor> factors;
  std::uint64_t characteristic = 0;
  mpz_class vertex_count;
  mpz_class dim;
  mpz_class center_dimension;
  mpz_class center_radical_dim;
  bool semisimple = true;
  mpz_class radical_dimension;
  std::size_t nilpotency_index = 1;
  std::vector<CornerRow> corners;
  WedderburnReport wedderburn;
  double elapsed_ms = 0.0;
};

AnalysisReport analyze(const GDParams& params);

/// Canonical machine format; stable field order, no timing unless asked.
std::string report_json(const AnalysisReport& r, bool with_timing = false);
/// One header line plus one data line; blocks flattened as "s x m" runs.
std::string report_csv_header();
std::string report_csv_row(const AnalysisReport& r);
/// Human-readable rendering, includes the timing.
std::string report_text(const AnalysisReport& r);

std::string wedderburn_json(const GDParams& params, const WedderburnReport& w);

/// "4x1;2x4;1x4": block sizes with multiplicities, largest first.
std::string format_blocks(const WedderburnReport& w);

}  // namespace gdta
