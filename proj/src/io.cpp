#include "flatkit/io.hpp"

#include <charconv>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <stdexcept>

#include "flatkit/version.hpp"

namespace flatkit {

std::string format_double(double value) {
  char buf[64];
  const auto result = std::to_chars(buf, buf + sizeof(buf), value);
  return std::string(buf, result.ptr);
}

std::uint64_t fnv1a64(const std::string& text) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : text) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

namespace {

Json alias_to_json(const std::optional<double>& alias) {
  if (alias) return *alias;
  return "exact";
}

std::optional<double> alias_from_json(const Json& j) {
  if (j.is_string()) return std::nullopt;
  return j.get<double>();
}

Json inequality_to_json(const MZInequality& ineq) {
  Json j;
  j["applicable"] = ineq.applicable;
  if (ineq.applicable) {
    j["lhs"] = ineq.lhs;
    j["rhs"] = ineq.rhs;
    j["satisfied"] = ineq.satisfied;
    j["slack"] = ineq.slack;
  }
  return j;
}

MZInequality inequality_from_json(const Json& j) {
  MZInequality ineq;
  ineq.applicable = j.at("applicable").get<bool>();
  if (ineq.applicable) {
    ineq.lhs = j.at("lhs").get<double>();
    ineq.rhs = j.at("rhs").get<double>();
    ineq.satisfied = j.at("satisfied").get<bool>();
    ineq.slack = j.at("slack").get<double>();
  }
  return ineq;
}

}  // namespace

Json to_json(const NormReport& report) {
  Json j;
  j["alpha"] = report.alpha;
  j["value"] = report.value;
  j["exact"] = report.exact;
  j["grid_size"] = report.grid_size;
  j["fft_size"] = report.fft_size;
  j["alias_error_bound"] = alias_to_json(report.alias_error_bound);
  j["scale"] = report.scale;
  return j;
}

NormReport norm_report_from_json(const Json& j) {
  NormReport report;
  report.alpha = j.at("alpha").get<double>();
  report.value = j.at("value").get<double>();
  report.exact = j.at("exact").get<bool>();
  report.grid_size = j.at("grid_size").get<std::int64_t>();
  report.fft_size = j.at("fft_size").get<std::int64_t>();
  report.alias_error_bound = alias_from_json(j.at("alias_error_bound"));
  report.scale = j.at("scale").get<double>();
  return report;
}

Json to_json(const MZReport& report) {
  Json j;
  j["alpha"] = report.alpha;
  j["n"] = report.n;
  j["a_prime"] = report.a_prime;
  if (std::isfinite(report.a_prime_alpha))
    j["a_prime_alpha"] = report.a_prime_alpha;
  else
    j["a_prime_alpha"] = nullptr;
  j["sampled_le_norm"] = inequality_to_json(report.sampled_le_norm);
  j["norm_le_sampled"] = inequality_to_json(report.norm_le_sampled);
  return j;
}

MZReport mz_report_from_json(const Json& j) {
  MZReport report;
  report.alpha = j.at("alpha").get<double>();
  report.n = j.at("n").get<std::int64_t>();
  report.a_prime = j.at("a_prime").get<double>();
  report.a_prime_alpha = j.at("a_prime_alpha").is_null()
                             ? std::numeric_limits<double>::quiet_NaN()
                             : j.at("a_prime_alpha").get<double>();
  report.sampled_le_norm = inequality_from_json(j.at("sampled_le_norm"));
  report.norm_le_sampled = inequality_from_json(j.at("norm_le_sampled"));
  return report;
}

Json to_json(const ConstantsReport& report) {
  Json j;
  j["p"] = report.p;
  j["delta_p"] = report.delta_p;
  j["remainder_regime"] = report.remainder_regime;
  j["alpha"] = report.alpha;
  j["pichorides_a_alpha"] = report.pichorides_a_alpha;
  j["a"] = report.a;
  j["a_prime"] = report.a_prime;
  j["a_prime_alpha"] = report.a_prime_alpha;
  j["c2"] = Json{{"x_star", report.c2.x_star}, {"value", report.c2.value}};
  j["even_bounds"] = Json{{"4", {report.even_bounds_4.first, report.even_bounds_4.second}},
                          {"6_plus", {report.even_bounds_6_plus.first, report.even_bounds_6_plus.second}}};
  j["quadrature_tolerance"] = report.quadrature_tolerance;
  j["a_note"] = report.a_note;
  return j;
}

ConstantsReport constants_report_from_json(const Json& j) {
  ConstantsReport report;
  report.p = j.at("p").get<double>();
  report.delta_p = j.at("delta_p").get<double>();
  report.remainder_regime = j.at("remainder_regime").get<std::string>();
  report.alpha = j.at("alpha").get<double>();
  report.pichorides_a_alpha = j.at("pichorides_a_alpha").get<double>();
  report.a = j.at("a").get<double>();
  report.a_prime = j.at("a_prime").get<double>();
  report.a_prime_alpha = j.at("a_prime_alpha").get<double>();
  report.c2.x_star = j.at("c2").at("x_star").get<double>();
  report.c2.value = j.at("c2").at("value").get<double>();
  report.even_bounds_4 = {j.at("even_bounds").at("4")[0].get<double>(),
                          j.at("even_bounds").at("4")[1].get<double>()};
  report.even_bounds_6_plus = {j.at("even_bounds").at("6_plus")[0].get<double>(),
                               j.at("even_bounds").at("6_plus")[1].get<double>()};
  report.quadrature_tolerance = j.at("quadrature_tolerance").get<double>();
  report.a_note = j.at("a_note").get<std::string>();
  return report;
}

Json to_json(const Arc& arc) {
  Json intervals = Json::array();
  for (const auto& iv : arc.intervals) intervals.push_back({iv.lo, iv.hi});
  return Json{{"intervals", intervals}, {"symmetric", arc.symmetric}};
}

Arc arc_from_json(const Json& j) {
  Arc arc;
  for (const auto& iv : j.at("intervals"))
    arc.intervals.push_back({iv[0].get<double>(), iv[1].get<double>()});
  arc.symmetric = j.at("symmetric").get<bool>();
  return arc;
}

Json to_json(const ConcentrationReport& report) {
  Json j;
  j["arc"] = to_json(report.arc);
  j["alpha"] = report.alpha;
  j["mass_ratio"] = report.mass_ratio;
  j["polynomial_id"] = report.polynomial_id;
  j["grid_size"] = report.grid_size;
  j["boundary_error"] = report.boundary_error;
  if (report.even_bounds)
    j["even_bounds"] = {report.even_bounds->first, report.even_bounds->second};
  else
    j["even_bounds"] = nullptr;
  return j;
}

ConcentrationReport concentration_report_from_json(const Json& j) {
  ConcentrationReport report;
  report.arc = arc_from_json(j.at("arc"));
  report.alpha = j.at("alpha").get<double>();
  report.mass_ratio = j.at("mass_ratio").get<double>();
  report.polynomial_id = j.at("polynomial_id").get<std::string>();
  report.grid_size = j.at("grid_size").get<std::int64_t>();
  report.boundary_error = j.at("boundary_error").get<double>();
  if (!j.at("even_bounds").is_null())
    report.even_bounds = {j.at("even_bounds")[0].get<double>(), j.at("even_bounds")[1].get<double>()};
  return report;
}

Json to_json(const FamilySpec& spec) {
  Json j;
  j["kind"] = family_kind_name(spec.kind);
  j["size"] = spec.size;
  if (spec.seed) j["seed"] = *spec.seed;
  if (spec.density) j["density"] = *spec.density;
  if (!spec.text.empty()) j["text"] = spec.text;
  return j;
}

FamilySpec family_spec_from_json(const Json& j) {
  FamilySpec spec;
  spec.kind = family_kind_from_name(j.at("kind").get<std::string>());
  spec.size = j.at("size").get<std::int64_t>();
  if (j.contains("seed")) spec.seed = j.at("seed").get<std::uint64_t>();
  if (j.contains("density")) spec.density = j.at("density").get<double>();
  if (j.contains("text")) spec.text = j.at("text").get<std::string>();
  return spec;
}

Json to_json(const SearchResult& result) {
  Json j;
  j["method"] = result.method;
  j["q"] = result.q;
  j["alpha"] = result.alpha;
  j["c"] = result.c;
  j["objective"] = result.objective;
  j["value"] = result.value;
  j["signs"] = result.best.size() > 0 ? result.best.to_string() : "";
  j["evaluations"] = result.evaluations;
  if (result.seed) j["seed"] = *result.seed;
  if (result.schedule)
    j["schedule"] = Json{{"t0", result.schedule->initial_temperature},
                         {"cooling", result.schedule->cooling},
                         {"steps", result.schedule->steps}};
  if (result.method == "exhaustive") {
    j["classes"] = result.classes;
    j["total"] = result.total;
  }
  j["rng"] = kRngAlgorithmId;
  return j;
}

SearchResult search_result_from_json(const Json& j) {
  SearchResult result;
  result.method = j.at("method").get<std::string>();
  result.q = j.at("q").get<std::int64_t>();
  result.alpha = j.at("alpha").get<double>();
  result.c = j.at("c").get<double>();
  result.objective = j.at("objective").get<std::string>();
  result.value = j.at("value").get<double>();
  const auto signs = j.at("signs").get<std::string>();
  if (!signs.empty()) result.best = SignSequence::from_string(signs);
  result.evaluations = j.at("evaluations").get<std::int64_t>();
  if (j.contains("seed")) result.seed = j.at("seed").get<std::uint64_t>();
  if (j.contains("schedule"))
    result.schedule = AnnealSchedule{j.at("schedule").at("t0").get<double>(),
                                     j.at("schedule").at("cooling").get<double>(),
                                     j.at("schedule").at("steps").get<std::int64_t>()};
  if (j.contains("classes")) result.classes = j.at("classes").get<std::int64_t>();
  if (j.contains("total")) result.total = j.at("total").get<std::int64_t>();
  return result;
}

Json to_json(const TrendTable& table) {
  Json j;
  j["name"] = table.name;
  j["columns"] = table.columns;
  j["rows"] = table.rows;
  if (table.fit) {
    j["fit"] = Json{{"metric", table.fit_metric},
                    {"slope", table.fit->slope},
                    {"intercept", table.fit->intercept},
                    {"residual", table.fit->residual},
                    {"predicted", table.fit->predicted}};
  } else {
    j["fit"] = nullptr;
  }
  return j;
}

TrendTable trend_table_from_json(const Json& j) {
  TrendTable table;
  table.name = j.at("name").get<std::string>();
  table.columns = j.at("columns").get<std::vector<std::string>>();
  table.rows = j.at("rows").get<std::vector<std::vector<double>>>();
  if (!j.at("fit").is_null()) {
    LogLogFit fit;
    fit.slope = j.at("fit").at("slope").get<double>();
    fit.intercept = j.at("fit").at("intercept").get<double>();
    fit.residual = j.at("fit").at("residual").get<double>();
    fit.predicted = j.at("fit").at("predicted").get<double>();
    table.fit = fit;
    table.fit_metric = j.at("fit").at("metric").get<std::string>();
  }
  return table;
}

namespace {

const std::vector<std::string>& witness_columns() {
  static const std::vector<std::string> cols = {
      "q",          "deviation",          "density",           "norm_ratio",
      "arc_mass",   "newman_ratio",       "tail_value",        "tail_bound_printed",
      "tail_bound_direct", "decomposition_gap"};
  return cols;
}

std::vector<double> witness_row_values(const WitnessRow& row) {
  return {static_cast<double>(row.q), row.deviation,  row.density,
          row.norm_ratio,             row.arc_mass,   row.newman_ratio,
          row.tail_value,             row.tail_bound_printed,
          row.tail_bound_direct,      row.decomposition_gap};
}

}  // namespace

Json to_json(const WitnessPanel& panel) {
  Json j;
  j["family"] = to_json(panel.family);
  j["p"] = panel.p;
  j["alpha"] = 2.0 * panel.p;
  j["delta"] = panel.delta;
  j["concentration_bounds"] = {panel.concentration_lower, panel.concentration_upper};
  j["columns"] = witness_columns();
  Json rows = Json::array();
  for (const auto& row : panel.rows) rows.push_back(witness_row_values(row));
  j["rows"] = rows;
  return j;
}

WitnessPanel witness_panel_from_json(const Json& j) {
  WitnessPanel panel;
  panel.family = family_spec_from_json(j.at("family"));
  panel.p = j.at("p").get<int>();
  panel.delta = j.at("delta").get<double>();
  panel.concentration_lower = j.at("concentration_bounds")[0].get<double>();
  panel.concentration_upper = j.at("concentration_bounds")[1].get<double>();
  for (const auto& values : j.at("rows")) {
    WitnessRow row;
    row.q = static_cast<std::int64_t>(values[0].get<double>());
    row.deviation = values[1].get<double>();
    row.density = values[2].get<double>();
    row.norm_ratio = values[3].get<double>();
    row.arc_mass = values[4].get<double>();
    row.newman_ratio = values[5].get<double>();
    row.tail_value = values[6].get<double>();
    row.tail_bound_printed = values[7].get<double>();
    row.tail_bound_direct = values[8].get<double>();
    row.decomposition_gap = values[9].get<double>();
    panel.rows.push_back(row);
  }
  return panel;
}

Json to_json(const ZeroDensityRecord& record) {
  Json j;
  j["q"] = record.q;
  j["support"] = record.support;
  j["density"] = record.density;
  j["alpha"] = record.alpha;
  j["c"] = record.c;
  j["single_node_term"] = record.single_node_term;
  j["norm_power"] = record.norm_power;
  return j;
}

ZeroDensityRecord zero_density_record_from_json(const Json& j) {
  ZeroDensityRecord record;
  record.q = j.at("q").get<std::int64_t>();
  record.support = j.at("support").get<std::int64_t>();
  record.density = j.at("density").get<double>();
  record.alpha = j.at("alpha").get<double>();
  record.c = j.at("c").get<double>();
  record.single_node_term = j.at("single_node_term").get<double>();
  record.norm_power = j.at("norm_power").get<double>();
  return record;
}

Json to_json(const std::vector<TailBoundRow>& rows) {
  Json j;
  j["columns"] = {"q", "alpha", "delta", "tail_value", "bound_printed", "bound_direct", "holds"};
  Json out = Json::array();
  for (const auto& row : rows)
    out.push_back({static_cast<double>(row.q), row.alpha, row.delta, row.tail_value,
                   row.bound_printed, row.bound_direct, row.holds ? 1.0 : 0.0});
  j["rows"] = out;
  return j;
}

Json polynomial_record(const IntPolynomial& poly, const std::string& kind) {
  Json coeffs = Json::array();
  for (std::int64_t c : poly.coeffs()) coeffs.push_back(c);
  return Json{{"kind", kind}, {"coeffs", coeffs}};
}

std::string to_csv(const TrendTable& table) {
  std::string out = "# " + table.name + "\n";
  if (table.fit) {
    out += "# fit: metric=" + table.fit_metric + " slope=" + format_double(table.fit->slope) +
           " intercept=" + format_double(table.fit->intercept) +
           " residual=" + format_double(table.fit->residual) +
           " predicted=" + format_double(table.fit->predicted) + "\n";
  }
  for (std::size_t i = 0; i < table.columns.size(); ++i) {
    out += table.columns[i];
    out += i + 1 < table.columns.size() ? ',' : '\n';
  }
  for (const auto& row : table.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      out += format_double(row[i]);
      out += i + 1 < row.size() ? ',' : '\n';
    }
  }
  return out;
}

std::string to_csv(const WitnessPanel& panel) {
  std::string out = "# witness panel: family=" + family_kind_name(panel.family.kind) +
                    " p=" + std::to_string(panel.p) + " delta=" + format_double(panel.delta) + "\n";
  out += "# concentration bounds: (" + format_double(panel.concentration_lower) + ", " +
         format_double(panel.concentration_upper) + ")\n";
  const auto& cols = witness_columns();
  for (std::size_t i = 0; i < cols.size(); ++i) {
    out += cols[i];
    out += i + 1 < cols.size() ? ',' : '\n';
  }
  for (const auto& row : panel.rows) {
    const auto values = witness_row_values(row);
    for (std::size_t i = 0; i < values.size(); ++i) {
      out += format_double(values[i]);
      out += i + 1 < values.size() ? ',' : '\n';
    }
  }
  return out;
}

std::string to_csv(const SearchResult& result) {
  std::string out = "q,alpha,objective,signs,method,seed\n";
  out += std::to_string(result.q) + "," + format_double(result.alpha) + "," + result.objective +
         "," + (result.best.size() > 0 ? result.best.to_string() : "") + "," + result.method + ",";
  out += result.seed ? std::to_string(*result.seed) : "";
  out += "\n";
  return out;
}

namespace {

std::vector<std::string> emit_series(const std::string& table_name,
                                     const std::vector<std::string>& columns,
                                     const std::vector<std::vector<double>>& rows,
                                     const std::vector<std::string>& series,
                                     const std::string& out_dir, const std::string& extra_header) {
  std::vector<std::string> written;
  if (series.empty()) return written;
  std::filesystem::create_directories(out_dir);
  for (const auto& name : series) {
    std::size_t col = columns.size();
    for (std::size_t i = 1; i < columns.size(); ++i)
      if (columns[i] == name) col = i;
    if (col == columns.size())
      throw std::invalid_argument("emit_plotdata: unknown series name: " + name);
    const std::string path = out_dir + "/" + table_name + "_" + name + ".dat";
    std::ofstream file(path);
    if (!file) throw std::runtime_error("emit_plotdata: cannot open " + path);
    file << "# " << kToolName << " " << kToolVersion << " : " << table_name << "\n";
    file << "# x = " << columns[0] << " (size parameter), y = " << name << "\n";
    if (!extra_header.empty()) file << "# " << extra_header << "\n";
    for (const auto& row : rows)
      file << format_double(row[0]) << " " << format_double(row[col]) << "\n";
    written.push_back(path);
  }
  return written;
}

}  // namespace

std::vector<std::string> emit_plotdata(const TrendTable& table,
                                       const std::vector<std::string>& series,
                                       const std::string& out_dir) {
  std::string extra;
  if (table.fit)
    extra = "fit slope=" + format_double(table.fit->slope) +
            ", predicted exponent=" + format_double(table.fit->predicted);
  return emit_series(table.name, table.columns, table.rows, series, out_dir, extra);
}

std::vector<std::string> emit_plotdata(const WitnessPanel& panel,
                                       const std::vector<std::string>& series,
                                       const std::string& out_dir) {
  std::vector<std::vector<double>> rows;
  for (const auto& row : panel.rows) rows.push_back(witness_row_values(row));
  return emit_series("witness_" + family_kind_name(panel.family.kind), witness_columns(), rows,
                     series, out_dir, "p=" + std::to_string(panel.p));
}

}  // namespace flatkit
