// srw: stable-reduction workbench for three-point covers.
//
// Subcommands compute and verify the characteristic-p / p-adic invariants of
// the stable reduction: Hasse polynomial and supersingular points, the
// modular special deformation datum and its Cartier invariance, deformation-
// datum search, supersingular disks and tame degrees, the PSL_2(p)-action,
// and reduction-graph validation.
//
// Exit codes: 0 all checks pass, 1 a mathematical check failed, 2 bad input.

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "srw/exec.hpp"
#include "srw/graph.hpp"
#include "srw/modular.hpp"
#include "srw/padic.hpp"
#include "srw/psl2.hpp"
#include "srw/serialize.hpp"

namespace {

constexpr int64_t kDefaultPrimeCap = 23;
constexpr uint64_t kDefaultSeed = 0x5eed;

struct GlobalOpts {
  bool json = false;
  bool serial = false;
  bool allow_large = false;
  bool allow_a1 = false;
};

srw::Exec exec_of(const GlobalOpts& g) { return g.serial ? srw::Exec::serial : srw::Exec::parallel; }

uint64_t seed_from_env() {
  const char* env = std::getenv("SRW_SEED");
  if (!env || !*env) return kDefaultSeed;
  return std::strtoull(env, nullptr, 10);
}

void check_prime(int64_t p, int64_t min, const GlobalOpts& g) {
  if (!srw::is_prime(p)) throw std::invalid_argument("--prime " + std::to_string(p) + ": not prime");
  if (p < min)
    throw std::invalid_argument("--prime " + std::to_string(p) + ": need p >= " +
                                std::to_string(min));
  if (p > kDefaultPrimeCap && !g.allow_large)
    throw std::invalid_argument("--prime " + std::to_string(p) + " exceeds the default cap " +
                                std::to_string(kDefaultPrimeCap) +
                                " (pass --allow-large to override)");
  if (p > kDefaultPrimeCap)
    std::cerr << "warning: p = " << p << " is above the default cap; expect longer runtimes\n";
}

std::vector<int64_t> parse_signature(const std::string& s) {
  std::vector<int64_t> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    out.push_back(std::stoll(item));
  }
  if (out.empty()) throw std::invalid_argument("--signature: empty");
  return out;
}

// Reports carry command, echoed inputs, results, and named checks.  The JSON
// rendering is canonical (sorted keys) and contains nothing run-dependent;
// timing goes to stderr / text mode only.
int emit(const GlobalOpts& g, const std::string& command, srw::json inputs, srw::json results,
         srw::json checks, int64_t elapsed_ms) {
  bool all_ok = true;
  for (const auto& [key, value] : checks.items()) {
    (void)key;
    if (value.is_boolean() && !value.get<bool>()) all_ok = false;
  }
  if (g.json) {
    srw::json report{{"command", command},
                     {"inputs", std::move(inputs)},
                     {"results", std::move(results)},
                     {"checks", std::move(checks)}};
    std::cout << report.dump(2) << "\n";
    std::cerr << "elapsed-ms: " << elapsed_ms << "\n";
  } else {
    std::cout << "command: " << command << "\n";
    std::cout << "inputs:  " << inputs.dump() << "\n";
    std::cout << "results:\n";
    for (const auto& [key, value] : results.items())
      std::cout << "  " << key << " = " << value.dump() << "\n";
    std::cout << "checks:\n";
    for (const auto& [key, value] : checks.items())
      std::cout << "  " << (value.get<bool>() ? "[pass] " : "[FAIL] ") << key << "\n";
    std::cout << "elapsed: " << elapsed_ms << " ms\n";
  }
  return all_ok ? 0 : 1;
}

int cmd_hasse(int64_t p, const GlobalOpts& g) {
  check_prime(p, 5, g);
  auto start = std::chrono::steady_clock::now();

  srw::HassePolynomial hp = srw::hasse_polynomial(p);
  srw::Field f2(p, 2);
  srw::SupersingularScan scan = srw::supersingular_scan(f2, exec_of(g));
  srw::PolyRoots roots = srw::poly_roots(f2, srw::lift_to(f2, hp.poly));
  bool simple = true;
  for (int64_t m : roots.multiplicity)
    if (m != 1) simple = false;

  srw::json phi = srw::json::array();
  for (const auto& c : hp.poly.c) phi.push_back(c.c[0]);
  srw::json lambdas = srw::json::array();
  for (const auto& l : scan.lambdas) lambdas.push_back(srw::to_json(l));

  auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                     std::chrono::steady_clock::now() - start)
                     .count();
  return emit(g, "hasse", {{"prime", p}},
              {{"p", p},
               {"r", hp.r},
               {"phi", phi},
               {"field", srw::to_json(f2)},
               {"lambda_set", lambdas}},
              {{"oracle-agreement", scan.oracles_agree},
               {"count-is-r", static_cast<int64_t>(scan.lambdas.size()) == hp.r},
               {"roots-simple", simple},
               {"roots-match-scan", roots.roots == scan.lambdas}},
              elapsed);
}

int cmd_verify_x2p(int64_t p, const GlobalOpts& g) {
  check_prime(p, 5, g);
  auto start = std::chrono::steady_clock::now();

  srw::X2pReport rep = srw::verify_x2p_theorem(p, exec_of(g));
  int64_t degree = srw::modular_field_degree(p);
  srw::Signature all2{std::vector<int64_t>((p - 1) / 2, 2)};
  int64_t bound = srw::tame_degree_bound(p, all2.a);
  srw::ValQ exponent = srw::disk_exponent(p, 2);
  srw::SpecialDeformationDatum datum = srw::build_x2p_datum(p);
  srw::CyclicCoverDifferential omega = srw::sdd_differential(datum);

  auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                     std::chrono::steady_clock::now() - start)
                     .count();
  return emit(g, "verify-x2p", {{"prime", p}},
              {{"p", p},
               {"modular_degree", degree},
               {"tame_bound", bound},
               {"bound_to_degree_ratio", bound / degree},
               {"disk_exponent", srw::to_json(exponent)},
               {"datum", srw::to_json(datum)},
               {"omega", srw::to_json(datum.F, omega)}},
              {{"oracle-agreement", rep.oracle_agreement},
               {"count-is-r", rep.count_is_r},
               {"omega-logarithmic", rep.omega_logarithmic},
               {"lambdas-avoid-01", rep.lambdas_avoid_01},
               {"degree-ratio-2", bound == 2 * degree}},
              elapsed);
}

int cmd_search(int64_t p, const std::string& sig_str, int ext, const GlobalOpts& g) {
  check_prime(p, 3, g);
  srw::Signature sig{parse_signature(sig_str)};
  auto start = std::chrono::steady_clock::now();

  srw::SearchOptions opts;
  opts.allow_a1 = g.allow_a1;
  opts.exec = exec_of(g);
  srw::SearchResult res = srw::sdd_search(p, sig, ext, opts);

  // independent re-verification of everything the search returned
  srw::Field F(p, ext);
  bool reverify = true;
  for (const auto& tuple : res.tuples) {
    srw::SpecialDeformationDatum d{F, tuple, sig, F.one(), srw::CoverVariant::full};
    auto gamma = srw::sdd_eigenvalue(d, g.allow_a1);
    if (!gamma || gamma->is_zero()) reverify = false;
  }

  // S3-stability is meaningful when all exponents agree
  bool all_equal = true;
  for (int64_t a : sig.a)
    if (a != sig.a[0]) all_equal = false;
  bool s3_stable = true;
  if (all_equal) {
    auto sorted_tuples = res.tuples;
    for (srw::S3Map m : {srw::S3Map::swap01, srw::S3Map::swap0inf}) {
      for (const auto& tuple : res.tuples) {
        srw::SpecialDeformationDatum d{F, tuple, sig, F.one(), srw::CoverVariant::full};
        auto image = srw::sdd_s3_transform(d, m);
        if (!std::binary_search(sorted_tuples.begin(), sorted_tuples.end(), image.lambdas))
          s3_stable = false;
      }
    }
  }

  srw::json tuples = srw::json::array();
  for (const auto& tuple : res.tuples) {
    srw::json jt = srw::json::array();
    for (const auto& l : tuple) jt.push_back(srw::to_json(l));
    tuples.push_back(std::move(jt));
  }

  auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                     std::chrono::steady_clock::now() - start)
                     .count();
  srw::json checks{{"all-tuples-reverify", reverify}};
  if (all_equal) checks["s3-stable"] = s3_stable;
  return emit(g, "search", {{"prime", p}, {"signature", sig.a}, {"ext", ext}},
              {{"tuples", tuples},
               {"count", static_cast<int64_t>(res.tuples.size())},
               {"candidates", res.candidates}},
              std::move(checks), elapsed);
}

int cmd_disks(int64_t p, const std::string& sig_str, const GlobalOpts& g) {
  check_prime(p, 3, g);
  srw::Signature sig{parse_signature(sig_str)};
  auto start = std::chrono::steady_clock::now();

  srw::json exponents = srw::json::array();
  for (int64_t a : sig.a) exponents.push_back(srw::disk_exponent(p, a, g.allow_a1).str());
  int64_t bound = srw::tame_degree_bound(p, sig.a, g.allow_a1);

  srw::json results{{"p", p},
                    {"signature", sig.a},
                    {"disk_exponents", exponents},
                    {"tame_bound", bound}};
  srw::json checks = srw::json::object();
  if (p >= 5) {
    srw::KatzReport katz = srw::katz_consistency_check(p);
    int64_t degree = srw::modular_field_degree(p);
    srw::Signature all2{std::vector<int64_t>((p - 1) / 2, 2)};
    int64_t all2_bound = srw::tame_degree_bound(p, all2.a);
    results["modular_degree"] = degree;
    results["all2_tame_bound"] = all2_bound;
    results["bound_to_degree_ratio"] = all2_bound / degree;
    results["threshold"] = katz.threshold.str();
    checks["threshold-identity"] = katz.threshold_identity;
    checks["boundary-inside"] = katz.boundary_inside;
    checks["sampled-equivalence"] = katz.sampled_equivalence;
    checks["nesting"] = katz.nesting;
    checks["phi-roots-simple"] = katz.phi_roots_simple;
    checks["hasse-valuation-link"] = katz.hasse_valuation_link;
    checks["degree-ratio-2"] = all2_bound == 2 * degree;
  } else {
    checks["exponents-computed"] = true;
  }

  auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                     std::chrono::steady_clock::now() - start)
                     .count();
  return emit(g, "disks", {{"prime", p}, {"signature", sig.a}}, std::move(results),
              std::move(checks), elapsed);
}

int cmd_action(int64_t p, int64_t samples, const GlobalOpts& g) {
  check_prime(p, 5, g);
  auto start = std::chrono::steady_clock::now();

  srw::ActionReport rep = srw::verify_action_axioms(p, 2, samples, seed_from_env(), exec_of(g));

  auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                     std::chrono::steady_clock::now() - start)
                     .count();
  return emit(g, "action", {{"prime", p}, {"samples", samples}},
              {{"p", p},
               {"group_order", rep.group_order},
               {"genus", rep.genus},
               {"composition_samples", rep.composition_samples}},
              {{"symbolic-pass", rep.symbolic_pass},
               {"composition-pass", rep.composition_pass},
               {"minus-identity-trivial", rep.minus_identity_trivial},
               {"faithful", rep.faithful}},
              elapsed);
}

int cmd_graph_check(const std::string& path, const GlobalOpts& g) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("--input: cannot open '" + path + "'");
  srw::json j;
  try {
    in >> j;
  } catch (const std::exception& e) {
    throw std::invalid_argument("--input: bad JSON (" + std::string(e.what()) + ")");
  }
  auto start = std::chrono::steady_clock::now();

  srw::ReductionGraph graph = srw::graph_from_json(j);
  srw::GraphReport rep = srw::graph_validate_special_shape(graph, graph.F.p());

  srw::json checks = srw::json::object();
  srw::json details = srw::json::object();
  for (const auto& c : rep.checks) {
    checks[c.name] = c.passed;
    if (!c.passed) details[c.name] = c.detail;
  }

  auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                     std::chrono::steady_clock::now() - start)
                     .count();
  return emit(g, "graph-check", {{"input", path}},
              {{"p", graph.F.p()},
               {"nodes", static_cast<int64_t>(graph.nodes.size())},
               {"violations", details}},
              std::move(checks), elapsed);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"stable-reduction workbench for three-point covers"};
  app.require_subcommand(1);

  GlobalOpts g;
  app.add_flag("--json", g.json, "emit the canonical JSON report");
  app.add_flag("--serial", g.serial, "run the reference serial kernels");
  app.add_flag("--allow-large", g.allow_large, "lift the default prime cap of 23");
  app.add_flag("--allow-a1", g.allow_a1, "admit signature entries a_i = 1");

  int64_t prime = 0;
  int ext = 1;
  int64_t samples = 500;
  std::string signature;
  std::string input;

  auto* hasse = app.add_subcommand("hasse", "Hasse polynomial and supersingular lambda-invariants");
  hasse->fallthrough();
  hasse->add_option("--prime", prime, "odd prime >= 5")->required();

  auto* verify = app.add_subcommand("verify-x2p", "verify the modular-datum theorem at p");
  verify->fallthrough();
  verify->add_option("--prime", prime, "odd prime >= 5")->required();

  auto* search = app.add_subcommand("search", "brute-force special deformation data");
  search->fallthrough();
  search->add_option("--prime", prime, "odd prime")->required();
  search->add_option("--signature", signature, "comma-separated exponents a_i")->required();
  search->add_option("--ext", ext, "extension degree k of the search field");

  auto* disks = app.add_subcommand("disks", "supersingular disk exponents and tame degrees");
  disks->fallthrough();
  disks->add_option("--prime", prime, "odd prime")->required();
  disks->add_option("--signature", signature, "comma-separated exponents a_i")->required();

  auto* action = app.add_subcommand("action", "verify the PSL2(p)-action on the good components");
  action->fallthrough();
  action->add_option("--prime", prime, "odd prime >= 5")->required();
  action->add_option("--samples", samples, "composition triples to sample");

  auto* graph = app.add_subcommand("graph-check", "validate a reduction-graph JSON file");
  graph->fallthrough();
  graph->add_option("--input", input, "path to the graph JSON")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    // --help and --version are clean exits; anything else is a usage error
    return app.exit(e) == 0 ? 0 : 2;
  }

  try {
    if (hasse->parsed()) return cmd_hasse(prime, g);
    if (verify->parsed()) return cmd_verify_x2p(prime, g);
    if (search->parsed()) return cmd_search(prime, signature, ext, g);
    if (disks->parsed()) return cmd_disks(prime, signature, g);
    if (action->parsed()) return cmd_action(prime, samples, g);
    if (graph->parsed()) return cmd_graph_check(input, g);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const srw::OracleMismatch& e) {
    std::cerr << "oracle mismatch: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
