// Command-line surface: gen, norm, flat, split, dirichlet, constants, mz,
// conc, search, harness. Every run echoes its configuration into a results
// manifest; identical configuration and seed produce byte-identical output.

#include <CLI11.hpp>

#include <chrono>
#include <cstdlib>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "flatkit/concentration.hpp"
#include "flatkit/constants.hpp"
#include "flatkit/families.hpp"
#include "flatkit/harness.hpp"
#include "flatkit/io.hpp"
#include "flatkit/norms.hpp"
#include "flatkit/polynomial.hpp"
#include "flatkit/search.hpp"
#include "flatkit/version.hpp"

namespace {

using flatkit::Json;

struct CommonOpts {
  std::string format = "json";
  std::string out;
  std::vector<std::string> plot;
};

void add_common(CLI::App* sub, CommonOpts& opts) {
  sub->add_option("--format", opts.format, "Output format: json or csv")
      ->check(CLI::IsMember({"json", "csv"}));
  sub->add_option("--out", opts.out, "Write the report here instead of stdout");
}

std::vector<std::int64_t> parse_int_list(const std::string& text) {
  std::vector<std::int64_t> values;
  std::stringstream stream(text);
  std::string item;
  while (std::getline(stream, item, ',')) {
    if (item.empty()) continue;
    values.push_back(std::stoll(item));
  }
  if (values.empty()) throw CLI::ValidationError("--n", "needs a comma-separated integer list");
  return values;
}

flatkit::AnnealSchedule parse_schedule(const std::string& text) {
  flatkit::AnnealSchedule schedule;
  std::stringstream stream(text);
  std::string part;
  std::vector<std::string> parts;
  while (std::getline(stream, part, ':')) parts.push_back(part);
  if (parts.size() != 3)
    throw CLI::ValidationError("--schedule", "expected t0:cool:steps");
  schedule.initial_temperature = std::stod(parts[0]);
  schedule.cooling = std::stod(parts[1]);
  schedule.steps = std::stoll(parts[2]);
  return schedule;
}

// Polynomial input shared by norm/flat/split/mz/conc: an explicit sign or
// bit string, or a generated family. Sign inputs are normalized by
// 1/sqrt(q), bit inputs by 1/sqrt(|S|).
struct PolyInputOpts {
  std::string signs;
  std::string bits;
  std::string family;
  std::int64_t q = 0;
  std::int64_t k = 0;
  std::int64_t prime = 0;
  std::uint64_t seed = 0;
  bool seed_given = false;
  double density = 0.5;
};

void add_poly_input(CLI::App* sub, PolyInputOpts& opts) {
  sub->add_option("--signs", opts.signs, "Sign string, one of +- per coefficient");
  sub->add_option("--bits", opts.bits, "Bit string, one of 01 per coefficient");
  sub->add_option("--family", opts.family,
                  "dirichlet | random_sign | rudin_shapiro | fekete | binary_random");
  sub->add_option("--q", opts.q, "Length parameter");
  sub->add_option("--k", opts.k, "Recursion depth (rudin_shapiro)");
  sub->add_option("--prime", opts.prime, "Odd prime (fekete)");
  sub->add_option("--seed", opts.seed, "Seed for randomized families")
      ->each([&opts](const std::string&) { opts.seed_given = true; });
  sub->add_option("--density", opts.density, "Bernoulli density (binary_random)");
}

struct ResolvedInput {
  flatkit::IntPolynomial poly;
  double scale = 1.0;
  std::int64_t q = 0;
  std::string description;
};

ResolvedInput resolve_input(const PolyInputOpts& opts) {
  ResolvedInput input;
  if (!opts.signs.empty()) {
    const auto s = flatkit::SignSequence::from_string(opts.signs);
    input.poly = flatkit::from_signs(s);
    input.q = static_cast<std::int64_t>(s.size());
    input.scale = 1.0 / std::sqrt(static_cast<double>(input.q));
    input.description = "signs:" + s.to_string();
    return input;
  }
  if (!opts.bits.empty()) {
    const auto b = flatkit::BinarySequence::from_string(opts.bits);
    const std::int64_t support = b.support_size();
    if (support == 0) throw std::invalid_argument("bit input has empty support");
    input.poly = flatkit::from_bits(b);
    input.q = static_cast<std::int64_t>(b.size());
    input.scale = 1.0 / std::sqrt(static_cast<double>(support));
    input.description = "bits:" + b.to_string();
    return input;
  }
  if (opts.family.empty())
    throw std::invalid_argument("needs one of --signs, --bits, --family");

  const auto kind = flatkit::family_kind_from_name(opts.family);
  if (kind == flatkit::FamilyKind::binary_random) {
    if (opts.q < 1) throw std::invalid_argument("binary_random needs --q");
    const auto b = flatkit::random_binary(opts.q, opts.density, opts.seed);
    const std::int64_t support = b.support_size();
    if (support == 0) throw std::invalid_argument("drew an all-zero sample; change --seed");
    input.poly = flatkit::from_bits(b);
    input.q = opts.q;
    input.scale = 1.0 / std::sqrt(static_cast<double>(support));
    input.description = "binary_random q=" + std::to_string(opts.q);
    return input;
  }

  flatkit::FamilySpec spec;
  spec.kind = kind;
  if (opts.seed_given) spec.seed = opts.seed;
  std::int64_t size = 0;
  switch (kind) {
    case flatkit::FamilyKind::dirichlet:
    case flatkit::FamilyKind::random_sign:
      size = opts.q;
      break;
    case flatkit::FamilyKind::rudin_shapiro:
      size = opts.k;
      break;
    case flatkit::FamilyKind::fekete:
      size = opts.prime;
      break;
    default:
      break;
  }
  if (size < 1 && kind != flatkit::FamilyKind::rudin_shapiro)
    throw std::invalid_argument("family needs its size parameter (--q, --k, or --prime)");
  const auto s = flatkit::make_sign_family(spec, size);
  input.poly = flatkit::from_signs(s);
  input.q = static_cast<std::int64_t>(s.size());
  input.scale = 1.0 / std::sqrt(static_cast<double>(input.q));
  input.description = opts.family + " q=" + std::to_string(input.q);
  return input;
}

Json input_echo(const PolyInputOpts& opts) {
  Json j;
  if (!opts.signs.empty()) j["signs"] = opts.signs;
  if (!opts.bits.empty()) j["bits"] = opts.bits;
  if (!opts.family.empty()) j["family"] = opts.family;
  if (opts.q > 0) j["q"] = opts.q;
  if (opts.k > 0) j["k"] = opts.k;
  if (opts.prime > 0) j["prime"] = opts.prime;
  if (opts.seed_given) j["seed"] = opts.seed;
  return j;
}

std::string timestamp_utc() {
  const auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof(buf), "%Y%m%dT%H%M%S", &tm);
  return buf;
}

// results/<subcommand>/<timestamp>-<confighash>/ holds the manifest plus a
// copy of the report; FLATKIT_RESULTS_DIR=none disables persistence.
void persist_results(const std::string& subcommand, const Json& config,
                     const std::string& report_text, const std::string& extension) {
  const char* root_env = std::getenv("FLATKIT_RESULTS_DIR");
  std::string root = root_env ? root_env : "results";
  if (root == "none") return;

  Json manifest;
  manifest["tool"] = flatkit::kToolName;
  manifest["version"] = flatkit::kToolVersion;
  manifest["rng"] = flatkit::kRngAlgorithmId;
  manifest["subcommand"] = subcommand;
  manifest["config"] = config;

  const std::string hash = [&] {
    char buf[17];
    std::snprintf(buf, sizeof(buf), "%016llx",
                  static_cast<unsigned long long>(flatkit::fnv1a64(config.dump())));
    return std::string(buf);
  }();

  const std::filesystem::path dir =
      std::filesystem::path(root) / subcommand / (timestamp_utc() + "-" + hash);
  std::filesystem::create_directories(dir);
  std::ofstream(dir / "manifest.json") << manifest.dump(2) << "\n";
  std::ofstream(dir / ("report." + extension)) << report_text;
}

void emit(const CommonOpts& common, const std::string& subcommand, const Json& config,
          const Json& report_json, const std::string& csv_text = "") {
  std::string text;
  std::string extension;
  if (common.format == "csv" && !csv_text.empty()) {
    text = csv_text;
    extension = "csv";
  } else {
    text = report_json.dump(2) + "\n";
    extension = "json";
  }
  persist_results(subcommand, config, text, extension);
  if (common.out.empty()) {
    std::cout << text;
  } else {
    std::ofstream file(common.out);
    if (!file) throw std::runtime_error("cannot open --out file: " + common.out);
    file << text;
  }
}

int run(int argc, char** argv) {
  CLI::App app{"Norms, flatness deviations, densities and concentration "
               "functionals for +/-1 and 0/1 polynomials"};
  app.require_subcommand(1);

  // ---- gen ----
  auto* gen = app.add_subcommand("gen", "Generate a polynomial family member");
  PolyInputOpts gen_in;
  CommonOpts gen_common;
  add_poly_input(gen, gen_in);
  add_common(gen, gen_common);
  gen->callback([&] {
    const ResolvedInput input = resolve_input(gen_in);
    Json j;
    j["input"] = input.description;
    const bool binary = !gen_in.bits.empty() || gen_in.family == "binary_random" ||
                        gen_in.family == "binary";
    std::string kind = binary ? "binary" : "sign";
    j["record"] = flatkit::polynomial_record(input.poly, kind);
    std::string text;
    for (std::int64_t c : input.poly.coeffs())
      text.push_back(binary ? (c ? '1' : '0') : (c > 0 ? '+' : '-'));
    j["string"] = text;
    j["q"] = input.q;
    j["rng"] = flatkit::kRngAlgorithmId;
    emit(gen_common, "gen", input_echo(gen_in), j);
  });

  // ---- norm ----
  auto* norm = app.add_subcommand("norm", "L^alpha norm of a normalized polynomial");
  PolyInputOpts norm_in;
  CommonOpts norm_common;
  double norm_alpha = 2.0;
  std::int64_t norm_grid = 0;
  add_poly_input(norm, norm_in);
  add_common(norm, norm_common);
  norm->add_option("--alpha", norm_alpha, "Norm exponent > 0")->required();
  norm->add_option("--grid", norm_grid, "Explicit grid size (0 = auto)");
  norm->callback([&] {
    const ResolvedInput input = resolve_input(norm_in);
    flatkit::NormQuery query{norm_alpha, input.scale,
                             norm_grid > 0 ? std::optional<std::int64_t>(norm_grid) : std::nullopt};
    const auto report = flatkit::grid_norm(input.poly, query);
    Json config = input_echo(norm_in);
    config["alpha"] = norm_alpha;
    if (norm_grid > 0) config["grid"] = norm_grid;
    emit(norm_common, "norm", config, flatkit::to_json(report));
  });

  // ---- flat ----
  auto* flat = app.add_subcommand("flat", "Flatness deviation || |P| - c ||_alpha");
  PolyInputOpts flat_in;
  CommonOpts flat_common;
  double flat_alpha = 4.0;
  double flat_c = 1.0;
  std::int64_t flat_grid = 0;
  add_poly_input(flat, flat_in);
  add_common(flat, flat_common);
  flat->add_option("--alpha", flat_alpha, "Norm exponent > 0")->required();
  flat->add_option("--c", flat_c, "Target constant, default 1");
  flat->add_option("--grid", flat_grid, "Explicit grid size (0 = auto)");
  flat->callback([&] {
    const ResolvedInput input = resolve_input(flat_in);
    flatkit::NormQuery query{flat_alpha, input.scale,
                             flat_grid > 0 ? std::optional<std::int64_t>(flat_grid) : std::nullopt};
    const auto report = flatkit::flatness_deviation(input.poly, flat_c, query);
    Json j = flatkit::to_json(report);
    j["c"] = flat_c;
    j["q"] = input.q;
    Json config = input_echo(flat_in);
    config["alpha"] = flat_alpha;
    config["c"] = flat_c;
    if (flat_grid > 0) config["grid"] = flat_grid;
    emit(flat_common, "flat", config, j);
  });

  // ---- split ----
  auto* split = app.add_subcommand("split", "Sign split into 0/1 supports");
  PolyInputOpts split_in;
  CommonOpts split_common;
  add_poly_input(split, split_in);
  add_common(split, split_common);
  split->callback([&] {
    if (split_in.signs.empty() && split_in.family.empty())
      throw std::invalid_argument("split needs --signs or a sign family");
    const ResolvedInput input = resolve_input(split_in);
    std::vector<int> entries;
    for (std::int64_t c : input.poly.coeffs()) entries.push_back(static_cast<int>(c));
    const flatkit::SignSequence s(entries);
    const auto [eta, eta_prime] = flatkit::split_littlewood(s);
    const auto recon = flatkit::linear_combination(
        2, flatkit::from_bits(eta), -1, flatkit::dirichlet(static_cast<std::int64_t>(s.size())));
    Json j;
    j["signs"] = s.to_string();
    j["eta"] = eta.to_string();
    j["eta_prime"] = eta_prime.to_string();
    j["support"] = eta.support_size();
    j["density"] = eta.density();
    j["identity_2q_minus_d"] = recon == input.poly;
    emit(split_common, "split", input_echo(split_in), j);
  });

  // ---- dirichlet ----
  auto* diri = app.add_subcommand("dirichlet", "All-ones kernel D_N");
  CommonOpts diri_common;
  std::int64_t diri_q = 0;
  double diri_alpha = 0.0;
  diri->add_option("--q", diri_q, "Number of terms N")->required();
  diri->add_option("--alpha", diri_alpha, "Also report ||D_N/sqrt(N)||_alpha");
  add_common(diri, diri_common);
  diri->callback([&] {
    const auto poly = flatkit::dirichlet(diri_q);
    Json j;
    j["q"] = diri_q;
    j["record"] = flatkit::polynomial_record(poly, "binary");
    j["value_at_1"] = diri_q;
    if (diri_alpha > 0.0) {
      flatkit::NormQuery query{diri_alpha, 1.0 / std::sqrt(static_cast<double>(diri_q)),
                               std::nullopt};
      j["norm"] = flatkit::to_json(flatkit::grid_norm(poly, query));
    }
    Json config;
    config["q"] = diri_q;
    if (diri_alpha > 0.0) config["alpha"] = diri_alpha;
    emit(diri_common, "dirichlet", config, j);
  });

  // ---- constants ----
  auto* consts = app.add_subcommand("constants", "Named constants report");
  CommonOpts consts_common;
  double consts_p = 4.0;
  double consts_alpha = 4.0;
  double consts_tol = 1e-10;
  consts->add_option("--p,--delta-p", consts_p, "Exponent for the sinc-power constant");
  consts->add_option("--alpha", consts_alpha, "Exponent for the conjugate-function constant");
  consts->add_option("--tol", consts_tol, "Quadrature tolerance");
  add_common(consts, consts_common);
  consts->callback([&] {
    const auto report = flatkit::constants_report(consts_p, consts_alpha, consts_tol);
    Json config;
    config["p"] = consts_p;
    config["alpha"] = consts_alpha;
    config["tol"] = consts_tol;
    emit(consts_common, "constants", config, flatkit::to_json(report));
  });

  // ---- mz ----
  auto* mz = app.add_subcommand("mz", "Interpolation inequalities at the roots of unity");
  PolyInputOpts mz_in;
  CommonOpts mz_common;
  double mz_alpha = 2.0;
  add_poly_input(mz, mz_in);
  add_common(mz, mz_common);
  mz->add_option("--alpha", mz_alpha, "Norm exponent")->required();
  mz->callback([&] {
    const ResolvedInput input = resolve_input(mz_in);
    const auto report = flatkit::mz_check(input.poly, mz_alpha, input.scale);
    Json config = input_echo(mz_in);
    config["alpha"] = mz_alpha;
    emit(mz_common, "mz", config, flatkit::to_json(report));
  });

  // ---- conc ----
  auto* conc = app.add_subcommand("conc", "Arc-restricted mass functionals");
  conc->require_subcommand(1);

  auto* conc_mass = conc->add_subcommand("mass", "Mass ratio of |P|^alpha on an arc");
  PolyInputOpts cm_in;
  CommonOpts cm_common;
  double cm_alpha = 4.0, cm_delta = 0.05, cm_center = 0.0;
  std::int64_t cm_grid = 0;
  add_poly_input(conc_mass, cm_in);
  add_common(conc_mass, cm_common);
  conc_mass->add_option("--alpha", cm_alpha, "Mass exponent")->required();
  conc_mass->add_option("--delta", cm_delta, "Interval half-width in turn units")->required();
  conc_mass->add_option("--center", cm_center, "Interval center; mirrored when nonzero");
  conc_mass->add_option("--grid", cm_grid, "Explicit grid size (0 = auto)");
  conc_mass->callback([&] {
    const ResolvedInput input = resolve_input(cm_in);
    flatkit::Arc arc;
    if (cm_center == 0.0) {
      arc.intervals.push_back({-cm_delta, cm_delta});
      arc.symmetric = true;
    } else {
      arc = flatkit::Arc::symmetric_pair(cm_center, cm_delta);
    }
    const std::int64_t m =
        cm_grid > 0 ? cm_grid : flatkit::default_dense_grid(cm_alpha, input.poly.degree());
    const auto report = flatkit::arc_mass(input.poly, cm_alpha, arc, m, input.description);
    Json config = input_echo(cm_in);
    config["alpha"] = cm_alpha;
    config["delta"] = cm_delta;
    config["center"] = cm_center;
    emit(cm_common, "conc", config, flatkit::to_json(report));
  });

  auto* conc_wit = conc->add_subcommand("witness", "Dilated kernel mass around +/-1/M");
  CommonOpts cw_common;
  std::int64_t cw_m = 3, cw_n = 4096, cw_grid = 0;
  double cw_delta = 0.01, cw_alpha = 4.0;
  conc_wit->add_option("--k", cw_m, "Dilation M >= 2");
  conc_wit->add_option("--q", cw_n, "Kernel length N");
  conc_wit->add_option("--delta", cw_delta, "Interval half-width");
  conc_wit->add_option("--alpha", cw_alpha, "Mass exponent");
  conc_wit->add_option("--grid", cw_grid, "Explicit grid size (0 = auto)");
  add_common(conc_wit, cw_common);
  conc_wit->callback([&] {
    const auto report = flatkit::dilated_dirichlet_witness(
        cw_m, cw_n, cw_delta, cw_alpha,
        cw_grid > 0 ? std::optional<std::int64_t>(cw_grid) : std::nullopt);
    Json config;
    config["k"] = cw_m;
    config["q"] = cw_n;
    config["delta"] = cw_delta;
    config["alpha"] = cw_alpha;
    emit(cw_common, "conc", config, flatkit::to_json(report));
  });

  auto* conc_search = conc->add_subcommand("search", "Best catalog mass ratio on an arc");
  CommonOpts cs_common;
  double cs_delta = 0.05, cs_center = 0.0, cs_alpha = 4.0;
  std::int64_t cs_budget = 64;
  std::uint64_t cs_seed = 0;
  conc_search->add_option("--delta", cs_delta, "Interval half-width")->required();
  conc_search->add_option("--center", cs_center, "Interval center; mirrored when nonzero");
  conc_search->add_option("--alpha", cs_alpha, "Mass exponent")->required();
  conc_search->add_option("--budget", cs_budget, "Catalog evaluation budget");
  conc_search->add_option("--seed", cs_seed, "Seed for random catalog entries");
  add_common(conc_search, cs_common);
  conc_search->callback([&] {
    flatkit::Arc arc;
    if (cs_center == 0.0) {
      arc.intervals.push_back({-cs_delta, cs_delta});
      arc.symmetric = true;
    } else {
      arc = flatkit::Arc::symmetric_pair(cs_center, cs_delta);
    }
    const auto report = flatkit::concentration_search(arc, cs_alpha, cs_budget, cs_seed);
    Json config;
    config["delta"] = cs_delta;
    config["center"] = cs_center;
    config["alpha"] = cs_alpha;
    config["budget"] = cs_budget;
    config["seed"] = cs_seed;
    emit(cs_common, "conc", config, flatkit::to_json(report));
  });

  // ---- search ----
  auto* search = app.add_subcommand("search", "Flattest sign sequence search");
  search->require_subcommand(1);

  auto* se = search->add_subcommand("exhaustive", "One representative per symmetry class");
  CommonOpts se_common;
  std::int64_t se_q = 0;
  double se_alpha = 4.0, se_c = 1.0;
  std::string se_objective = "deviation";
  se->add_option("--q", se_q, "Sequence length (<= 24)")->required();
  se->add_option("--alpha", se_alpha, "Deviation exponent");
  se->add_option("--c", se_c, "Flatness target");
  se->add_option("--objective", se_objective, "deviation | l4")
      ->check(CLI::IsMember({"deviation", "l4"}));
  add_common(se, se_common);
  se->callback([&] {
    const auto objective = se_objective == "l4" ? flatkit::SearchObjective::l4_surrogate
                                                : flatkit::SearchObjective::flatness_deviation;
    const auto result =
        flatkit::flattest_exhaustive(static_cast<int>(se_q), se_alpha, se_c, objective);
    Json config;
    config["q"] = se_q;
    config["alpha"] = se_alpha;
    config["c"] = se_c;
    config["objective"] = se_objective;
    std::cerr << "wall_seconds=" << result.wall_seconds << "\n";
    emit(se_common, "search", config, flatkit::to_json(result), flatkit::to_csv(result));
  });

  auto* sa = search->add_subcommand("anneal", "Single-flip annealing");
  CommonOpts sa_common;
  std::int64_t sa_q = 0;
  double sa_alpha = 4.0, sa_c = 1.0;
  std::string sa_schedule = "1:0.999:10000";
  std::uint64_t sa_seed = 0;
  std::string sa_objective = "deviation";
  sa->add_option("--q", sa_q, "Sequence length >= 2")->required();
  sa->add_option("--alpha", sa_alpha, "Deviation exponent");
  sa->add_option("--c", sa_c, "Flatness target");
  sa->add_option("--schedule", sa_schedule, "t0:cool:steps");
  sa->add_option("--seed", sa_seed, "Run seed");
  sa->add_option("--objective", sa_objective, "deviation | l4")
      ->check(CLI::IsMember({"deviation", "l4"}));
  add_common(sa, sa_common);
  sa->callback([&] {
    const auto objective = sa_objective == "l4" ? flatkit::SearchObjective::l4_surrogate
                                                : flatkit::SearchObjective::flatness_deviation;
    const auto schedule = parse_schedule(sa_schedule);
    const auto result =
        flatkit::anneal(static_cast<int>(sa_q), sa_alpha, sa_c, schedule, sa_seed, objective);
    Json config;
    config["q"] = sa_q;
    config["alpha"] = sa_alpha;
    config["c"] = sa_c;
    config["schedule"] = sa_schedule;
    config["seed"] = sa_seed;
    config["objective"] = sa_objective;
    std::cerr << "wall_seconds=" << result.wall_seconds << "\n";
    emit(sa_common, "search", config, flatkit::to_json(result), flatkit::to_csv(result));
  });

  // ---- harness ----
  auto* harness = app.add_subcommand("harness", "Trend tables for the quantitative lemmas");
  harness->require_subcommand(1);

  auto* hd = harness->add_subcommand("dirichlet", "||D_N||_p^p / N^(p-1) against delta_p");
  CommonOpts hd_common;
  double hd_p = 4.0;
  std::string hd_n;
  hd->add_option("--p", hd_p, "Norm exponent > 1")->required();
  hd->add_option("--n", hd_n, "Comma list of kernel sizes")->required();
  hd->add_option("--plot", hd_common.plot, "Series names for two-column plot files")
      ->delimiter(',');
  add_common(hd, hd_common);
  hd->callback([&] {
    const auto table = flatkit::dirichlet_asymptotics(hd_p, parse_int_list(hd_n));
    Json config;
    config["p"] = hd_p;
    config["n"] = hd_n;
    if (!hd_common.plot.empty()) {
      const std::string dir = hd_common.out.empty() ? "plots" : hd_common.out;
      for (const auto& f : flatkit::emit_plotdata(table, hd_common.plot, dir))
        std::cerr << "wrote " << f << "\n";
      persist_results("harness", config, flatkit::to_csv(table), "csv");
      return;
    }
    emit(hd_common, "harness", config, flatkit::to_json(table), flatkit::to_csv(table));
  });

  auto* hg = harness->add_subcommand("density", "Norm growth of positive-density supports");
  CommonOpts hg_common;
  double hg_density = 0.5, hg_alpha = 4.0;
  std::string hg_n;
  std::uint64_t hg_seed = 1;
  std::int64_t hg_streams = 20;
  hg->add_option("--density", hg_density, "Bernoulli density in (0,1], 1 = all ones")->required();
  hg->add_option("--alpha", hg_alpha, "Norm exponent > 2")->required();
  hg->add_option("--n", hg_n, "Comma list of lengths")->required();
  hg->add_option("--seed", hg_seed, "Base seed");
  hg->add_option("--budget", hg_streams, "Independent streams per length");
  hg->add_option("--plot", hg_common.plot, "Series names for two-column plot files")
      ->delimiter(',');
  add_common(hg, hg_common);
  hg->callback([&] {
    const auto table = flatkit::density_growth(hg_density, hg_alpha, parse_int_list(hg_n),
                                               static_cast<int>(hg_streams), hg_seed);
    Json config;
    config["density"] = hg_density;
    config["alpha"] = hg_alpha;
    config["n"] = hg_n;
    config["seed"] = hg_seed;
    config["budget"] = hg_streams;
    if (!hg_common.plot.empty()) {
      const std::string dir = hg_common.out.empty() ? "plots" : hg_common.out;
      for (const auto& f : flatkit::emit_plotdata(table, hg_common.plot, dir))
        std::cerr << "wrote " << f << "\n";
      persist_results("harness", config, flatkit::to_csv(table), "csv");
      return;
    }
    emit(hg_common, "harness", config, flatkit::to_json(table), flatkit::to_csv(table));
  });

  auto* hz = harness->add_subcommand("zero-density", "Single-node bound at z = 1");
  CommonOpts hz_common;
  PolyInputOpts hz_in;
  double hz_alpha = 4.0;
  double hz_c = 1.0;
  add_poly_input(hz, hz_in);
  hz->add_option("--alpha", hz_alpha, "Exponent > 2")->required();
  hz->add_option("--c", hz_c, "Flat level context");
  add_common(hz, hz_common);
  hz->callback([&] {
    flatkit::BinarySequence bits;
    if (!hz_in.bits.empty()) {
      bits = flatkit::BinarySequence::from_string(hz_in.bits);
    } else if (hz_in.family == "binary_random" || hz_in.family == "binary") {
      if (hz_in.q < 1) throw std::invalid_argument("binary_random needs --q");
      bits = flatkit::random_binary(hz_in.q, hz_in.density, hz_in.seed);
    } else {
      throw std::invalid_argument("zero-density needs --bits or --family binary_random");
    }
    const auto record = flatkit::zero_density_bound(bits, hz_alpha, hz_c);
    Json config = input_echo(hz_in);
    config["alpha"] = hz_alpha;
    emit(hz_common, "harness", config, flatkit::to_json(record));
  });

  auto* hw = harness->add_subcommand("witness", "Per-q panel of proof-chain observables");
  CommonOpts hw_common;
  std::string hw_family = "random_sign";
  std::int64_t hw_p = 2;
  double hw_delta = 0.05;
  std::string hw_n;
  std::uint64_t hw_seed = 1;
  bool hw_seed_given = false;
  hw->add_option("--family", hw_family, "dirichlet | random_sign | rudin_shapiro | fekete");
  hw->add_option("--p", hw_p, "Half-exponent >= 2 (alpha = 2p)");
  hw->add_option("--delta", hw_delta, "Arc half-width in (0, 1/4)");
  hw->add_option("--n", hw_n, "Comma list of size parameters")->required();
  hw->add_option("--seed", hw_seed, "Seed for randomized families")
      ->each([&hw_seed_given](const std::string&) { hw_seed_given = true; });
  hw->add_option("--plot", hw_common.plot, "Series names for two-column plot files")
      ->delimiter(',');
  add_common(hw, hw_common);
  hw->callback([&] {
    flatkit::FamilySpec spec;
    spec.kind = flatkit::family_kind_from_name(hw_family);
    if (hw_seed_given || spec.kind == flatkit::FamilyKind::random_sign) spec.seed = hw_seed;
    const auto panel = flatkit::flatness_witness(spec, static_cast<int>(hw_p), hw_delta,
                                                 parse_int_list(hw_n));
    Json config;
    config["family"] = hw_family;
    config["p"] = hw_p;
    config["delta"] = hw_delta;
    config["n"] = hw_n;
    if (spec.seed) config["seed"] = *spec.seed;
    if (!hw_common.plot.empty()) {
      const std::string dir = hw_common.out.empty() ? "plots" : hw_common.out;
      for (const auto& f : flatkit::emit_plotdata(panel, hw_common.plot, dir))
        std::cerr << "wrote " << f << "\n";
      persist_results("harness", config, flatkit::to_csv(panel), "csv");
      return;
    }
    emit(hw_common, "harness", config, flatkit::to_json(panel), flatkit::to_csv(panel));
  });

  auto* ht = harness->add_subcommand("tail", "Dirichlet tail mass against the envelope bound");
  CommonOpts ht_common;
  std::string ht_n = "16,64,256,1024,4096";
  double ht_alpha = 0.0, ht_delta = 0.0;
  ht->add_option("--n", ht_n, "Comma list of kernel sizes");
  ht->add_option("--alpha", ht_alpha, "Single exponent (default sweeps 4 and 6)");
  ht->add_option("--delta", ht_delta, "Single half-width (default sweeps 0.05 0.1 0.2)");
  add_common(ht, ht_common);
  ht->callback([&] {
    const std::vector<double> alphas = ht_alpha > 0.0 ? std::vector<double>{ht_alpha}
                                                      : std::vector<double>{4.0, 6.0};
    const std::vector<double> deltas = ht_delta > 0.0 ? std::vector<double>{ht_delta}
                                                      : std::vector<double>{0.05, 0.1, 0.2};
    const auto rows = flatkit::dirichlet_tail_sweep(parse_int_list(ht_n), alphas, deltas);
    Json config;
    config["n"] = ht_n;
    if (ht_alpha > 0.0) config["alpha"] = ht_alpha;
    if (ht_delta > 0.0) config["delta"] = ht_delta;
    emit(ht_common, "harness", config, flatkit::to_json(rows));
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const std::invalid_argument& e) {
    std::cerr << "validation error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
