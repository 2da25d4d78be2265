#include <algorithm>
#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "zetalab/zetalab.hpp"

namespace zl = zetalab;
using zl::format_sig12;
using zl::int64;
using zl::ordered_json;

namespace {

std::vector<double> parse_list(const std::string& csv) {
  std::vector<double> out;
  std::stringstream ss(csv);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (!tok.empty()) out.push_back(std::stod(tok));
  }
  zl::require(!out.empty(), "expected a comma-separated list of numbers");
  return out;
}

std::vector<int64> parse_int_list(const std::string& csv) {
  std::vector<int64> out;
  std::stringstream ss(csv);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (!tok.empty()) out.push_back(std::stoll(tok));
  }
  zl::require(!out.empty(), "expected a comma-separated list of integers");
  return out;
}

// --config <file> takes a flat JSON object whose keys mirror long flags.
// The derived flags are spliced in right after the subcommand so anything
// passed explicitly on the command line wins (options take the last value).
std::vector<std::string> splice_config(std::vector<std::string> args) {
  std::string path;
  for (auto it = args.begin(); it != args.end(); ++it) {
    if (*it == "--config") {
      zl::require(std::next(it) != args.end(), "--config needs a file path");
      path = *std::next(it);
      args.erase(it, it + 2);
      break;
    }
    if (it->rfind("--config=", 0) == 0) {
      path = it->substr(9);
      args.erase(it);
      break;
    }
  }
  if (path.empty()) return args;
  std::ifstream in(path);
  zl::require(bool(in), "cannot open config file " + path);
  ordered_json j;
  in >> j;
  zl::require(j.is_object(), "config file must hold a flat JSON object");
  std::vector<std::string> extra;
  for (const auto& [key, value] : j.items()) {
    extra.push_back("--" + key);
    if (value.is_string())
      extra.push_back(value.get<std::string>());
    else
      extra.push_back(value.dump());
  }
  zl::require(!args.empty(), "config given without a subcommand");
  args.insert(args.begin() + 1, extra.begin(), extra.end());
  return args;
}

void print_json(const ordered_json& j) { std::cout << j.dump(2) << "\n"; }

std::string pred_cell(double sigma, double B) {
  // Prediction column: the sigma < 1 density formula when its regime
  // applies, the sigma = 1 formula otherwise; blank outside both domains.
  try {
    return format_sig12(sigma < 1.0 ? zl::lamzouri_prediction(sigma, B)
                                    : zl::gs_prediction(B));
  } catch (const std::exception&) {
    return "";
  }
}

struct Options {
  double sigma = 0.5;
  double sigma_im = 0.0;
  double sigma_c20 = 0.75;
  double tol = 1e-9;
  double tol_neg = 1e-11;
  double tol_dens = 1e-8;
  double bound = 1.0;
  double a1 = 0.0;
  double a2 = 0.0;
  double y = 1000.0;
  double L = 0.0;
  double hi = 0.0;
  double L_ident = 1.2;
  double hi_ident = 200.0;
  int64 x = 160;
  int64 d = 5;
  int64 l = 1;
  int64 n_res = 0;
  int64 samples = 100000;
  int64 sieve = 100000;
  int64 cutoff = 10000000;
  int n = 1;
  int k = 1;
  int degree = 2;
  int t = 0;
  int threads = 1;
  std::uint64_t seed = 1;
  std::string b_list = "0.5";
  std::string format = "csv";
  std::string support = "2,3,5";
  std::string regime = "center";
};

zl::ResonatorSpec spec_from(const Options& o) {
  zl::ResonatorSpec spec;
  spec.regime = o.regime == "right" ? zl::Regime::right : zl::Regime::center;
  spec.sigma = o.sigma;
  spec.N = o.n_res;
  spec.X = o.x;
  spec.L = o.L;
  spec.support_hi = o.hi;
  return spec;
}

}  // namespace

int main(int argc, char** argv) {
  const auto t0 = std::chrono::steady_clock::now();
  CLI::App app{"zetalab: quadratic L-function and number-field computations"};
  app.require_subcommand(1);
  app.option_defaults()->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);

  Options o;

  auto* c_const = app.add_subcommand("constants", "reference constants");
  c_const->add_option("--cutoff", o.cutoff, "prime cutoff for the products");
  c_const->add_option("--sigma", o.sigma_c20, "abscissa for the c20 entry");

  auto* c_ident = app.add_subcommand("identities", "multiplicative identity");
  c_ident->add_option("--support", o.support, "comma list of support primes");
  c_ident->add_option("--t", o.t, "log power t")->check(CLI::Range(0, 3));
  c_ident->add_option("--regime", o.regime)
      ->check(CLI::IsMember({"center", "right"}));
  c_ident->add_option("--sigma", o.sigma);
  c_ident->add_option("--L", o.L_ident);
  c_ident->add_option("--hi", o.hi_ident);
  c_ident->add_option("--x", o.x);
  c_ident->add_option("--n", o.n_res);

  auto* c_lval = app.add_subcommand("lvalue", "Dirichlet L value");
  c_lval->add_option("--sigma", o.sigma)->required();
  c_lval->add_option("--d", o.d)->required();
  c_lval->add_option("--tol", o.tol);

  auto* c_scan = app.add_subcommand("scan-min", "minimum |L(1/2)| over family");
  c_scan->add_option("--sigma", o.sigma)
      ->check(CLI::IsMember({"0.5"}))
      ->required();
  c_scan->add_option("--x", o.x)->required();
  c_scan->add_option("--tol", o.tol);
  c_scan->add_option("--threads", o.threads)->check(CLI::PositiveNumber);
  c_scan->add_option("--format", o.format)
      ->check(CLI::IsMember({"csv", "json"}));

  auto* c_mom = app.add_subcommand("moments", "resonated moments");
  c_mom->add_option("--regime", o.regime)
      ->check(CLI::IsMember({"center", "right"}));
  c_mom->add_option("--sigma", o.sigma);
  c_mom->add_option("--x", o.x)->required();
  c_mom->add_option("--n", o.n_res);
  c_mom->add_option("--L", o.L);
  c_mom->add_option("--hi", o.hi);
  c_mom->add_option("--tol", o.tol);
  c_mom->add_option("--sieve", o.sieve);

  auto* c_sono = app.add_subcommand("sono-m", "shifted moment sum");
  c_sono->add_option("--a1", o.a1)->required();
  c_sono->add_option("--a2", o.a2)->required();
  c_sono->add_option("--l", o.l)->required();
  c_sono->add_option("--x", o.x)->required();
  c_sono->add_option("--tol", o.tol);

  auto* c_inert = app.add_subcommand("build-inert", "inert-prime field");
  c_inert->add_option("--degree", o.degree)->required();
  c_inert->add_option("--inert", o.n)->required();
  c_inert->add_option("--sigma", o.sigma)->required();
  c_inert->add_option("--seed", o.seed);
  c_inert->add_option("--sieve", o.sieve);

  auto* c_split = app.add_subcommand("build-split", "multiquadratic field");
  c_split->add_option("--k", o.k)->required();
  c_split->add_option("--n", o.n)->required();
  c_split->add_option("--sigma", o.sigma)->required();
  c_split->add_option("--sieve", o.sieve);

  auto* c_neg = app.add_subcommand("neg-line", "Dedekind zeta at Re s < 0");
  c_neg->add_option("--sigma-re", o.sigma)->required();
  c_neg->add_option("--sigma-im", o.sigma_im);
  c_neg->add_option("--d", o.d)->required();
  c_neg->add_option("--tol", o.tol_neg);

  auto* c_nor = app.add_subcommand("northcott", "small |zeta_K| sweep");
  c_nor->add_option("--s", o.sigma)->required();
  c_nor->add_option("--s-im", o.sigma_im);
  c_nor->add_option("--bound", o.bound)->required();

  auto* c_rand = app.add_subcommand("rand-euler", "random Euler products");
  c_rand->add_option("--sigma", o.sigma)->required();
  c_rand->add_option("--y", o.y);
  c_rand->add_option("--samples", o.samples);
  c_rand->add_option("--seed", o.seed);
  c_rand->add_option("--b", o.b_list, "comma list of thresholds");

  auto* c_dens = app.add_subcommand("density", "empirical L-value density");
  c_dens->add_option("--sigma", o.sigma)->required();
  c_dens->add_option("--x", o.x)->required();
  c_dens->add_option("--b", o.b_list, "comma list of thresholds");
  c_dens->add_option("--tol", o.tol_dens);

  try {
    std::vector<std::string> args =
        splice_config({argv + 1, argv + argc});
    std::reverse(args.begin(), args.end());
    app.parse(std::move(args));
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }

  zl::RunManifest manifest;
  manifest.tolerances["tol"] = format_sig12(o.tol);

  try {
    if (c_const->parsed()) {
      manifest.config = {{"subcommand", "constants"},
                         {"cutoff", o.cutoff},
                         {"sigma", o.sigma_c20}};
      const auto c6 = zl::const_c6(o.cutoff);
      const auto c5 = zl::const_c5(o.cutoff);
      ordered_json j;
      j["c5"] = format_sig12(c5.value);
      j["c6"] = format_sig12(c6.value);
      j["c21"] = format_sig12(zl::const_c21());
      j["c20"][format_sig12(o.sigma_c20)] =
          format_sig12(zl::const_c20(o.sigma_c20));
      print_json(j);
    } else if (c_ident->parsed()) {
      manifest.config = {{"subcommand", "identities"},
                         {"support", o.support},
                         {"t", o.t}};
      const auto support = parse_int_list(o.support);
      auto spec = spec_from(o);
      spec.L = o.L_ident;
      spec.support_hi = o.hi_ident;
      const auto pair = zl::multiplicative_identity_check(support, o.t, spec);
      ordered_json j;
      j["support"] = support;
      j["t"] = o.t;
      j["lhs"] = format_sig12(pair.lhs);
      j["rhs"] = format_sig12(pair.rhs);
      j["abs_diff"] = format_sig12(std::abs(pair.lhs - pair.rhs));
      print_json(j);
    } else if (c_lval->parsed()) {
      manifest.config = {{"subcommand", "lvalue"},
                         {"sigma", o.sigma},
                         {"d", o.d},
                         {"tol", o.tol}};
      const auto r = zl::dirichlet_L(o.sigma, o.d, o.tol);
      ordered_json j;
      j["sigma"] = format_sig12(o.sigma);
      j["d"] = o.d;
      j["value"] = format_sig12(r.value);
      j["error"] = format_sig12(r.error_estimate);
      j["terms"] = r.terms_used;
      print_json(j);
    } else if (c_scan->parsed()) {
      manifest.config = {{"subcommand", "scan-min"},
                         {"x", o.x},
                         {"tol", o.tol},
                         {"threads", o.threads}};
      zl::cache_roundtrip("fd8", o.x);
      const auto res = zl::scan_min_L(o.x, o.tol, o.threads);
      if (o.format == "json") {
        ordered_json j;
        j["argmin_d"] = res.argmin_d;
        j["min_abs"] = format_sig12(res.min_abs);
        j["indeterminate"] = res.indeterminate;
        auto rows = ordered_json::array();
        for (const auto& e : res.entries)
          rows.push_back({{"d", e.d},
                          {"abs_L", format_sig12(e.abs_L)},
                          {"sign_certain", e.sign_certain}});
        j["entries"] = rows;
        print_json(j);
      } else {
        std::vector<std::vector<std::string>> rows;
        for (const auto& e : res.entries)
          rows.push_back({std::to_string(e.d), format_sig12(e.abs_L),
                          e.sign_certain ? "1" : "0"});
        zl::write_csv(std::cout, {"d", "abs_L", "sign_certain"}, rows);
      }
    } else if (c_mom->parsed()) {
      manifest.config = {{"subcommand", "moments"},
                         {"regime", o.regime},
                         {"x", o.x},
                         {"tol", o.tol}};
      const auto spec = spec_from(o);
      const zl::PrimeTable pt(o.sieve);
      const auto rep = zl::moment_report(spec, pt, o.tol);
      ordered_json j;
      j["empirical"] = {{"m1", format_sig12(rep.empirical.m1)},
                        {"m2", format_sig12(rep.empirical.m2)},
                        {"r2sum", format_sig12(rep.empirical.r2sum)},
                        {"count", rep.empirical.count}};
      j["predicted"] = {
          {"m1", format_sig12(rep.predicted.m1)},
          {"m2", format_sig12(rep.predicted.m2)},
          {"m1_up_to_constant", rep.predicted.m1_up_to_constant},
          {"m2_up_to_constant", rep.predicted.m2_up_to_constant}};
      print_json(j);
    } else if (c_sono->parsed()) {
      manifest.config = {{"subcommand", "sono-m"},
                         {"a1", o.a1},
                         {"a2", o.a2},
                         {"l", o.l},
                         {"x", o.x}};
      ordered_json j;
      j["value"] = format_sig12(
          zl::sono_M(o.a1, o.a2, o.l, static_cast<double>(o.x), o.tol));
      print_json(j);
    } else if (c_inert->parsed()) {
      manifest.config = {{"subcommand", "build-inert"},
                         {"degree", o.degree},
                         {"inert", o.n},
                         {"sigma", o.sigma},
                         {"seed", o.seed}};
      const auto spec = zl::build_inert_polynomial(o.degree, o.n, o.seed);
      const auto res = zl::zeta_field_sigma(spec, o.sigma, o.sieve);
      ordered_json j;
      j["type"] = "inert";
      j["degree"] = spec.degree;
      j["n"] = spec.n;
      auto coeffs = ordered_json::array();
      for (const auto& c : spec.coefficients) coeffs.push_back(c.str());
      j["coefficients"] = coeffs;
      j["inert_primes"] = spec.inert_primes;
      j["value"] = format_sig12(res.value);
      j["log_halfwidth"] = format_sig12(res.log_halfwidth);
      j["reference"] = format_sig12(res.reference);
      j["log_ratio"] = format_sig12(res.log_ratio);
      j["ratio_bound"] = format_sig12(res.ratio_bound);
      j["ramified_count"] = res.ramified_count;
      print_json(j);
    } else if (c_split->parsed()) {
      manifest.config = {{"subcommand", "build-split"},
                         {"k", o.k},
                         {"n", o.n},
                         {"sigma", o.sigma}};
      const auto spec = zl::find_split_primes(o.k, o.n);
      const auto res = zl::zeta_field_sigma(spec, o.sigma, o.sieve);
      int64 modulus = 4;
      for (int j = 0; j < spec.n; ++j)
        modulus *= zl::detail::small_primes_25[j];
      ordered_json j;
      j["type"] = "multiquadratic";
      j["k"] = spec.k;
      j["n"] = spec.n;
      j["modulus"] = modulus;
      j["q_list"] = spec.q_list;
      j["value"] = format_sig12(res.value);
      j["log_halfwidth"] = format_sig12(res.log_halfwidth);
      j["reference"] = format_sig12(res.reference);
      j["log_ratio"] = format_sig12(res.log_ratio);
      j["ratio_bound"] = format_sig12(res.ratio_bound);
      j["ramified_count"] = res.ramified_count;
      print_json(j);
    } else if (c_neg->parsed()) {
      manifest.config = {{"subcommand", "neg-line"},
                         {"sigma_re", o.sigma},
                         {"sigma_im", o.sigma_im},
                         {"d", o.d},
                         {"tol", o.tol_neg}};
      const auto rep =
          zl::zeta_neg_line(zl::cplx(o.sigma, o.sigma_im), o.d, o.tol_neg);
      ordered_json j;
      j["s"] = {format_sig12(rep.s.real()), format_sig12(rep.s.imag())};
      j["d"] = rep.d;
      j["value"] = {format_sig12(rep.zeta_value.real()),
                    format_sig12(rep.zeta_value.imag())};
      j["northcott_lower"] = format_sig12(rep.northcott_lower);
      j["zero_order"] = rep.zero_order;
      j["near_trivial_zero"] = rep.near_trivial_zero;
      print_json(j);
    } else if (c_nor->parsed()) {
      manifest.config = {{"subcommand", "northcott"},
                         {"s", o.sigma},
                         {"bound", o.bound}};
      const auto scan =
          zl::northcott_enumerate(zl::cplx(o.sigma, o.sigma_im), o.bound);
      ordered_json j;
      j["cutoff"] = format_sig12(scan.cutoff);
      j["checked"] = scan.checked;
      auto rows = ordered_json::array();
      for (const auto& [d, av] : scan.matches)
        rows.push_back({{"d", d}, {"abs", format_sig12(av)}});
      j["matches"] = rows;
      print_json(j);
    } else if (c_rand->parsed()) {
      manifest.config = {{"subcommand", "rand-euler"},
                         {"sigma", o.sigma},
                         {"y", o.y},
                         {"samples", o.samples},
                         {"seed", o.seed}};
      zl::RandomEulerSpec spec;
      spec.sigma = o.sigma;
      spec.y = o.y;
      spec.samples = o.samples;
      spec.seed = o.seed;
      std::vector<std::vector<std::string>> rows;
      for (const double B : parse_list(o.b_list)) {
        const auto rep = zl::mc_tail(spec, B, zl::TailSide::lower);
        rows.push_back({format_sig12(B), format_sig12(rep.empirical),
                        format_sig12(rep.half_width), pred_cell(o.sigma, B)});
      }
      zl::write_csv(std::cout, {"B", "empirical", "half_width", "prediction"},
                    rows);
    } else if (c_dens->parsed()) {
      manifest.config = {{"subcommand", "density"},
                         {"sigma", o.sigma},
                         {"x", o.x},
                         {"tol", o.tol_dens}};
      std::vector<std::vector<std::string>> rows;
      for (const double B : parse_list(o.b_list)) {
        const auto rep = zl::empirical_density(o.sigma, o.x, B, o.tol_dens);
        rows.push_back({format_sig12(B), format_sig12(rep.empirical),
                        format_sig12(rep.half_width), pred_cell(o.sigma, B)});
      }
      zl::write_csv(std::cout, {"B", "empirical", "half_width", "prediction"},
                    rows);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }

  manifest.wall_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() -
                                                t0)
          .count();
  zl::emit_manifest(manifest);
  return 0;
}
