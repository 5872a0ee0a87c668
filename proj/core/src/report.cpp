#include "gdta/report.hpp"

#include <chrono>
#include <sstream>

#include <json.hpp>

namespace gdta {

namespace {

nlohmann::json mpz_json(const mpz_class& z) {
  if (z.fits_slong_p()) return nlohmann::json(z.get_si());
  return nlohmann::json(z.get_str());
}

nlohmann::json color_entries(const GDParams& params, const Color& c) {
  nlohmann::json a = nlohmann::json::array();
  for (std::size_t i = 0; i < params.n(); ++i) a.push_back(c.entry(i));
  return a;
}

}  // namespace

AnalysisReport analyze(const GDParams& params) {
  auto t0 = std::chrono::steady_clock::now();
  AnalysisReport r;
  r.factors = params.factors();
  r.characteristic = params.characteristic();
  r.vertex_count = params.vertex_count();
  r.dim = dim_T(params);
  r.center_dimension = center_dim(params);
  r.semisimple = is_semisimple(params);
  r.nilpotency_index = radical_nilpotency_index(params);

  mpz_class center_rad = 0;
  for (const CenterLabel& t : enumerate_center_labels(params))
    if (params.characteristic() != 0 && bad_set(params, t) != 0) ++center_rad;
  r.center_radical_dim = center_rad;

  for (const Color& g : enumerate_colors(params))
    r.corners.push_back(CornerRow{g, corner_quotient_dim(params, g),
                                  corner_nilpotency_index(params, g)});

  r.wedderburn = wedderburn(params);
  r.radical_dimension = r.dim - r.wedderburn.quotient_dim;
  if (r.radical_dimension + r.wedderburn.quotient_dim != r.dim)
    throw std::logic_error("report is internally inconsistent");

  auto t1 = std::chrono::steady_clock::now();
  r.elapsed_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
  return r;
}

std::string format_blocks(const WedderburnReport& w) {
  std::string s;
  for (const auto& [size, mult] : w.blocks()) {
    if (!s.empty()) s += ';';
    s += std::to_string(size) + "x" + std::to_string(mult);
  }
  return s;
}

std::string wedderburn_json(const GDParams& params, const WedderburnReport& w) {
  nlohmann::ordered_json j;
  nlohmann::ordered_json blocks = nlohmann::ordered_json::array();
  for (const auto& [size, mult] : w.blocks())
    blocks.push_back(nlohmann::ordered_json{{"size", size}, {"multiplicity", mult}});
  j["blocks"] = std::move(blocks);
  j["n_classes"] = w.n_classes();
  j["radical_dim"] = mpz_json(dim_T(params) - w.quotient_dim);
  j["nilpotency_index"] = radical_nilpotency_index(params);
  return j.dump();
}

namespace {

nlohmann::ordered_json report_to_json(const AnalysisReport& r, bool with_timing) {
  GDParams params(r.factors, r.characteristic);
  nlohmann::ordered_json j;
  j["params"] = format_factors(r.factors);
  nlohmann::ordered_json fs = nlohmann::ordered_json::array();
  for (const Factor& f : r.factors)
    fs.push_back(nlohmann::ordered_json{{"groups", f.groups}, {"group_size", f.group_size}});
  j["factors"] = std::move(fs);
  j["char"] = r.characteristic;
  j["n"] = r.factors.size();
  j["vertex_count"] = mpz_json(r.vertex_count);
  j["dim_T"] = mpz_json(r.dim);
  j["center_dim"] = mpz_json(r.center_dimension);
  j["center_radical_dim"] = mpz_json(r.center_radical_dim);
  j["is_semisimple"] = r.semisimple;
  j["radical_dim"] = mpz_json(r.radical_dimension);
  j["nilpotency_index"] = r.nilpotency_index;

  nlohmann::ordered_json corners = nlohmann::ordered_json::array();
  for (const CornerRow& row : r.corners)
    corners.push_back(nlohmann::ordered_json{{"color", color_entries(params, row.color)},
                                             {"quotient_dim", mpz_json(row.quotient_dim)},
                                             {"nilpotency_index", row.nilpotency_index}});
  j["corners"] = std::move(corners);

  nlohmann::ordered_json blocks = nlohmann::ordered_json::array();
  for (const auto& [size, mult] : r.wedderburn.blocks())
    blocks.push_back(nlohmann::ordered_json{{"size", size}, {"multiplicity", mult}});
  j["wedderburn"] = nlohmann::ordered_json{
      {"blocks", std::move(blocks)},
      {"n_classes", r.wedderburn.n_classes()},
      {"radical_dim", mpz_json(r.radical_dimension)},
      {"nilpotency_index", r.nilpotency_index}};
  j["irreducible_module_count"] = r.wedderburn.n_classes();
  if (with_timing) j["timing_ms"] = r.elapsed_ms;
  return j;
}

}  // namespace

std::string report_json(const AnalysisReport& r, bool with_timing) {
  return report_to_json(r, with_timing).dump(2);
}

std::string report_csv_header() {
  return "params,char,n,vertex_count,dim_T,center_dim,center_radical_dim,is_semisimple,"
         "radical_dim,nilpotency_index,n_classes,blocks,irreducible_module_count";
}

std::string report_csv_row(const AnalysisReport& r) {
  std::ostringstream os;
  std::string params = format_factors(r.factors);
  if (params.find(',') != std::string::npos) params = '"' + params + '"';
  os << params << ',' << r.characteristic << ',' << r.factors.size() << ','
     << r.vertex_count.get_str() << ',' << r.dim.get_str() << ','
     << r.center_dimension.get_str() << ',' << r.center_radical_dim.get_str() << ','
     << (r.semisimple ? "true" : "false") << ',' << r.radical_dimension.get_str() << ','
     << r.nilpotency_index << ',' << r.wedderburn.n_classes() << ',' << format_blocks(r.wedderburn)
     << ',' << r.wedderburn.n_classes();
  return os.str();
}

std::string report_text(const AnalysisReport& r) {
  GDParams params(r.factors, r.characteristic);
  std::ostringstream os;
  os << "params              " << format_factors(r.factors) << "\n";
  os << "characteristic      " << r.characteristic << "\n";
  os << "vertices            " << r.vertex_count.get_str() << "\n";
  os << "dim T               " << r.dim.get_str() << "\n";
  os << "center dim          " << r.center_dimension.get_str() << "\n";
  os << "center radical dim  " << r.center_radical_dim.get_str() << "\n";
  os << "semisimple          " << (r.semisimple ? "yes" : "no") << "\n";
  os << "radical dim         " << r.radical_dimension.get_str() << "\n";
  os << "nilpotency index    " << r.nilpotency_index << "\n";
  os << "wedderburn blocks   " << format_blocks(r.wedderburn) << "  (n_classes "
     << r.wedderburn.n_classes() << ")\n";
  os << "corners (color : quotient dim : nilpotency index)\n";
  for (const CornerRow& row : r.corners) {
    os << "  (";
    for (std::size_t i = 0; i < params.n(); ++i) {
      if (i) os << ',';
      os << row.color.entry(i);
    }
    os << ") : " << row.quotient_dim.get_str() << " : " << row.nilpotency_index << "\n";
  }
  os << "elapsed ms          " << r.elapsed_ms << "\n";
  return os.str();
}

}  // namespace gdta
