#include <doctest.h>

#include <json.hpp>

#include "gdta/report.hpp"
#include "helpers.hpp"

using namespace gdta;
using namespace gdta::test;

TEST_CASE("analysis report invariants") {
  for (std::uint64_t p : {0ull, 2ull, 3ull, 5ull})
    for (const char* text : {"2x2", "3x3", "2x3,3x3"}) {
      AnalysisReport r = analyze(P(text, p));
      mpz_class blocks_sq = 0;
      for (const auto& [size, mult] : r.wedderburn.blocks())
        blocks_sq += mpz_class(static_cast<unsigned long>(size * size)) *
                     static_cast<unsigned long>(mult);
      CHECK(r.radical_dimension + blocks_sq == r.dim);
      CHECK(r.semisimple == (r.radical_dimension == 0));
      CHECK(r.corners.size() == enumerate_colors(P(text, p)).size());
    }
}

TEST_CASE("analysis values on the worked cells") {
  AnalysisReport a = analyze(P("2x2", 2));
  CHECK(a.dim == 10);
  CHECK(a.radical_dimension == 5);
  CHECK(a.nilpotency_index == 3);
  CHECK(format_blocks(a.wedderburn) == "2x1;1x1");

  AnalysisReport b = analyze(P("2x3,3x3", 3));
  CHECK(b.dim == 132);
  CHECK(b.nilpotency_index == 5);
  CHECK(format_blocks(b.wedderburn) == "4x1;2x4;1x4");
  CHECK(b.wedderburn.n_classes() == 9);

  AnalysisReport c = analyze(P("2x2", 0));
  CHECK(c.semisimple);
  CHECK(c.radical_dimension == 0);
  CHECK(c.center_radical_dim == 0);
}

TEST_CASE("json output is canonical and repeatable") {
  AnalysisReport r = analyze(P("2x3,3x3", 2));
  std::string a = report_json(r, false);
  std::string b = report_json(analyze(P("2x3,3x3", 2)), false);
  CHECK(a == b);
  CHECK(a.find("timing") == std::string::npos);
  CHECK(report_json(r, true).find("timing_ms") != std::string::npos);

  nlohmann::json j = nlohmann::json::parse(a);
  CHECK(j["dim_T"] == 132);
  CHECK(j["radical_dim"] == 108);
  CHECK(j["wedderburn"]["n_classes"] == 12);
  CHECK(j["wedderburn"]["blocks"][0]["size"] == 2);
  CHECK(j["wedderburn"]["blocks"][0]["multiplicity"] == 4);
  CHECK(j["irreducible_module_count"] == 12);
  CHECK(j["corners"].size() == 9);
}

TEST_CASE("csv projection") {
  AnalysisReport r = analyze(P("2x2", 2));
  CHECK(report_csv_header().find("params,char,n,") == 0);
  std::string row = report_csv_row(r);
  CHECK(row.find("2x2,2,1,4,10,2,1,false,5,3,2,2x1;1x1,2") == 0);

  // multi-factor parameter lists carry a comma and must be quoted
  std::string two = report_csv_row(analyze(P("2x3,3x3", 3)));
  CHECK(two.find("\"2x3,3x3\",3,2,54,132,") == 0);
}

TEST_CASE("wedderburn json contract") {
  GDParams params = P("2x2", 2);
  nlohmann::json j = nlohmann::json::parse(wedderburn_json(params, wedderburn(params)));
  CHECK(j["blocks"].size() == 2);
  CHECK(j["blocks"][0]["size"] == 2);
  CHECK(j["blocks"][0]["multiplicity"] == 1);
  CHECK(j["n_classes"] == 2);
  CHECK(j["radical_dim"] == 5);
  CHECK(j["nilpotency_index"] == 3);
}
