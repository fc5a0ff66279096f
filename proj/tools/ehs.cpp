#include <CLI11.hpp>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "ehs/cograph.hpp"
#include "ehs/eh_core.hpp"
#include "ehs/errors.hpp"
#include "ehs/geometry.hpp"
#include "ehs/json_io.hpp"
#include "ehs/pipeline.hpp"
#include "ehs/poset.hpp"
#include "ehs/rng.hpp"

namespace {

using namespace ehs;

enum ExitCode { kOk = 0, kValidation = 1, kBadInput = 2, kOracleRequired = 3, kRetryCap = 4 };

struct Options {
  std::string format = "json";
  std::optional<std::uint64_t> seed;
  std::string input;
  std::string graph_path;
  std::string cert_path;
  std::string from_poset;
  int n = 0;
  int dim = 2;
  int perm_n = 0;
  std::optional<double> alpha;
  double lambda = 0.01;
  bool default_eps = false;
  bool safe_eps = false;
  int exact_cap = 24;
  std::string family = "dim2";
  std::string n_range = "50..800";
  int trials = 5;
};

std::uint64_t resolve_seed(const Options& opt) {
  if (opt.seed) return *opt.seed;
  if (const char* env = std::getenv("EH_SEED")) {
    try {
      std::size_t used = 0;
      const auto value = std::stoull(env, &used, 0);
      if (used == std::string(env).size()) return value;
    } catch (const std::exception&) {
    }
    throw invalid_input(std::string("EH_SEED is not an unsigned integer: ") + env);
  }
  return 0;
}

PipelineConfig pipeline_config(const Options& opt) {
  PipelineConfig config;
  config.lambda = opt.lambda;
  config.algo.seed = resolve_seed(opt);
  config.algo.start_with_safe_epsilon = opt.safe_eps;
  config.validate();
  return config;
}

std::vector<int> random_permutation(int n, std::uint64_t seed) {
  std::vector<int> pi(static_cast<std::size_t>(n));
  std::iota(pi.begin(), pi.end(), 0);
  Rng rng(derive_seed(seed, 0x7065726d));
  rng.shuffle(std::span<int>(pi));
  return pi;
}

void emit(const json& doc) { std::cout << doc.dump(2) << '\n'; }

int cmd_gen_poset(const Options& opt) {
  if (opt.n < 1) throw invalid_input("--n must be positive");
  if (opt.dim < 1) throw invalid_input("--dim must be positive");
  const auto realized = random_realized_poset(opt.n, opt.dim, resolve_seed(opt));
  if (opt.format == "csv") {
    std::cout << "a,b\n";
    for (const auto& [a, b] : realized.poset.relations()) std::cout << a << ',' << b << '\n';
  } else {
    emit(to_json(realized.poset, &realized.realizer));
  }
  return kOk;
}

int cmd_gen_curves(const Options& opt) {
  std::vector<int> pi;
  if (!opt.from_poset.empty()) {
    const auto doc = poset_from_json([&] {
      try {
        return json::parse(read_file(opt.from_poset));
      } catch (const json::exception& e) {
        throw invalid_input(std::string("invalid JSON: ") + e.what());
      }
    }());
    if (!doc.realizer || doc.realizer->size() != 2)
      throw invalid_input("--from-poset needs a poset with a two-order \"realizer\"");
    // Relabel so the first order is the identity; pi is then the second order's ranks.
    const auto& first = (*doc.realizer)[0];
    const auto& second = (*doc.realizer)[1];
    std::vector<int> rank_second(first.size());
    for (std::size_t r = 0; r < second.size(); ++r) rank_second[static_cast<std::size_t>(second[r])] = static_cast<int>(r);
    pi.resize(first.size());
    for (std::size_t i = 0; i < first.size(); ++i) pi[i] = rank_second[static_cast<std::size_t>(first[i])];
  } else {
    if (opt.perm_n < 1) throw invalid_input("gen-curves needs --perm-n or --from-poset");
    pi = random_permutation(opt.perm_n, resolve_seed(opt));
  }
  const auto realization = permutation_to_segments(pi);
  if (opt.format == "csv") {
    std::cout << "curve,x,y\n";
    for (std::size_t i = 0; i < realization.curves.size(); ++i)
      for (const auto& p : realization.curves[i]) std::cout << i << ',' << p.x << ',' << p.y << '\n';
  } else {
    emit(to_json(realization.curves));
  }
  return kOk;
}

int cmd_extract(const Options& opt) {
  const auto input = load_input(opt.input);
  const auto config = pipeline_config(opt);
  json out{{"input_kind", to_string(input.kind)}, {"n", input.graph.n()}, {"lambda", config.lambda}};
  BlockCertificate cert;
  if (input.poset && opt.alpha) {
    const auto result = extract_blocks_incomparability(input.graph, *input.poset, *opt.alpha, config.algo);
    cert = result.certificate;
    out["route"] = to_string(result.route);
    out["epsilon"] = result.epsilon_used;
    out["alpha"] = *opt.alpha;
  } else {
    const auto witness = resolve_witness(input.curves ? &*input.curves : nullptr,
                                         input.poset ? &*input.poset : nullptr, config.witness_mode);
    const auto result = string_quasi_eh(input.graph, witness ? &*witness : nullptr, config);
    cert = result.certificate;
    out["route"] = to_string(result.branch);
  }
  const auto report = validate_certificate(input.graph, cert);
  out["certificate"] = to_json(cert);
  out["verdict"] = report.pass ? "pass" : report.violation;
  if (opt.format == "csv") {
    std::cout << "kind,t,c,host_n,min_block,route,verdict\n"
              << to_string(cert.kind) << ',' << cert.t() << ',' << cert.exponent << ',' << cert.host_n << ','
              << cert.min_block() << ',' << out["route"].get<std::string>() << ','
              << (report.pass ? "pass" : "fail") << '\n';
  } else {
    emit(out);
  }
  return report.pass ? kOk : kValidation;
}

int cmd_ramsey(const Options& opt) {
  const auto input = load_input(opt.input);
  json out;
  RamseyResult result;
  if (input.graph.n() <= opt.exact_cap) {
    result = brute_force_ramsey(input.graph, opt.exact_cap);
    out["method"] = "exact";
  } else {
    const auto config = pipeline_config(opt);
    const auto witness = resolve_witness(input.curves ? &*input.curves : nullptr,
                                         input.poset ? &*input.poset : nullptr, config.witness_mode);
    const auto hom = string_eh(input.graph, witness ? &*witness : nullptr, config);
    result = hom.ramsey;
    out["method"] = "recursion";
    out["c"] = pipeline_exponent(config);
    out["bound"] = hom.bound;
  }
  if (opt.format == "csv") {
    std::cout << "method,clique_size,independent_size\n"
              << out["method"].get<std::string>() << ',' << result.clique.size() << ',' << result.independent.size()
              << '\n';
  } else {
    out["result"] = to_json(result);
    emit(out);
  }
  return kOk;
}

int cmd_verify(const Options& opt) {
  const auto input = load_input(opt.graph_path);
  const auto doc = [&] {
    try {
      return json::parse(read_file(opt.cert_path));
    } catch (const json::exception& e) {
      throw invalid_input(std::string("invalid JSON: ") + e.what());
    }
  }();
  // Either a bare certificate or the output of extract.
  const auto cert = certificate_from_json(doc.contains("certificate") ? doc.at("certificate") : doc);
  const auto report = validate_certificate(input.graph, cert);
  if (opt.format == "csv")
    std::cout << "verdict,violation\n" << (report.pass ? "pass" : "fail") << ",\"" << report.violation << "\"\n";
  else
    emit({{"verdict", report.pass ? "pass" : "fail"}, {"violation", report.violation}});
  return report.pass ? kOk : kValidation;
}

std::vector<int> parse_range(const std::string& text) {
  const auto dots = text.find("..");
  int lo = 0, hi = 0;
  try {
    if (dots == std::string::npos) {
      lo = hi = std::stoi(text);
    } else {
      lo = std::stoi(text.substr(0, dots));
      hi = std::stoi(text.substr(dots + 2));
    }
  } catch (const std::exception&) {
    throw invalid_input("--n-range must look like a..b, got \"" + text + "\"");
  }
  if (lo < 2 || hi < lo) throw invalid_input("--n-range needs 2 <= a <= b");
  std::vector<int> out;
  for (long long n = lo; n <= hi; n *= 2) out.push_back(static_cast<int>(n));
  return out;
}

struct BenchRow {
  int n = 0;
  std::uint64_t seed = 0;
  RunRecord record;
  std::size_t t = 0;
  std::size_t min_block = 0;
  std::size_t homogeneous = 0;
};

BenchRow bench_trial(const std::string& family, int n, std::uint64_t seed, const PipelineConfig& base) {
  PipelineConfig config = base;
  config.algo.seed = seed;
  Graph g;
  Poset witness;
  if (family == "perm") {
    const auto real = permutation_to_segments(random_permutation(n, seed));
    g = intersection_graph(real.curves);
    witness = *two_line_witness(real.curves);
  } else {
    const int k = family == "dim2" ? 2 : 3;
    witness = random_realized_poset(n, k, seed).poset;
    g = incomparability_graph(witness);
  }
  const auto start = std::chrono::steady_clock::now();
  const auto quasi = string_quasi_eh(g, &witness, config);
  const auto hom = string_eh(g, &witness, config);
  const auto stop = std::chrono::steady_clock::now();

  BenchRow row{n, seed, {}, static_cast<std::size_t>(quasi.certificate.t()), quasi.certificate.min_block(),
               hom.ramsey.best().size()};
  auto& rec = row.record;
  rec.input_digest = input_digest(g);
  rec.seed = seed;
  rec.config = config;
  rec.certificates = {quasi.certificate};
  rec.ramsey = hom.ramsey;
  rec.exponent = pipeline_exponent(config);
  rec.wall_ms = std::chrono::duration<double, std::milli>(stop - start).count();
  const auto report = validate_certificate(g, quasi.certificate);
  rec.verdicts = {report.pass ? "pass" : report.violation};
  return row;
}

int cmd_bench(const Options& opt) {
  if (opt.family != "dim2" && opt.family != "dim3" && opt.family != "perm")
    throw invalid_input("--family must be dim2, dim3 or perm");
  if (opt.trials < 1) throw invalid_input("--trials must be positive");
  const auto config = pipeline_config(opt);
  std::vector<BenchRow> rows;
  for (int n : parse_range(opt.n_range))
    for (int trial = 0; trial < opt.trials; ++trial)
      rows.push_back(bench_trial(opt.family, n, derive_seed(config.algo.seed, static_cast<std::uint64_t>(trial)),
                                 config));
  bool all_pass = true;
  for (const auto& row : rows) all_pass = all_pass && row.record.verdicts.front() == "pass";
  if (opt.format == "csv") {
    std::cout << "n,seed,t,min_block,c,clique_or_indep_size,runtime_ms\n";
    for (const auto& row : rows)
      std::cout << row.n << ',' << row.seed << ',' << row.t << ',' << row.min_block << ',' << row.record.exponent
                << ',' << row.homogeneous << ',' << row.record.wall_ms << '\n';
  } else {
    json records = json::array();
    for (const auto& row : rows) {
      auto doc = to_json(row.record);
      doc["n"] = row.n;
      records.push_back(std::move(doc));
    }
    emit({{"family", opt.family}, {"records", std::move(records)}});
  }
  return all_pass ? kOk : kValidation;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Block certificates and homogeneous sets for incomparability and string graphs"};
  app.require_subcommand(1);
  Options opt;

  auto add_common = [&opt](CLI::App* sub) {
    sub->add_option("--format", opt.format, "Output format")->check(CLI::IsMember({"json", "csv"}));
  };
  auto add_seed = [&opt](CLI::App* sub) {
    sub->add_option("--seed", opt.seed, "Random seed (falls back to EH_SEED, then 0)");
  };

  auto* gen_poset = app.add_subcommand("gen-poset", "Random poset as the intersection of --dim linear orders");
  gen_poset->add_option("--n", opt.n, "Number of elements")->required();
  gen_poset->add_option("--dim", opt.dim, "Number of linear orders");
  add_seed(gen_poset);
  add_common(gen_poset);

  auto* gen_curves = app.add_subcommand("gen-curves", "Segment realization of a permutation graph");
  auto* perm_opt = gen_curves->add_option("--perm-n", opt.perm_n, "Random permutation length");
  auto* from_opt = gen_curves->add_option("--from-poset", opt.from_poset, "Poset JSON with a two-order realizer");
  perm_opt->excludes(from_opt);
  add_seed(gen_curves);
  add_common(gen_curves);

  auto* extract = app.add_subcommand("extract", "Block certificate for a graph, poset or curve family");
  extract->add_option("--input", opt.input, "Input file")->required();
  extract->add_option("--alpha", opt.alpha, "Incomparability density for direct poset extraction");
  extract->add_option("--lambda", opt.lambda, "Sparse/dense threshold");
  auto* nominal = extract->add_flag("--paper-eps", opt.default_eps, "Start with epsilon = 1/500 (default)");
  auto* safe = extract->add_flag("--safe-eps", opt.safe_eps, "Start with the safe epsilon");
  nominal->excludes(safe);
  add_seed(extract);
  add_common(extract);

  auto* ramsey = app.add_subcommand("ramsey", "Clique and independent set");
  ramsey->add_option("--input", opt.input, "Input file")->required();
  ramsey->add_option("--exact-cap", opt.exact_cap, "Largest n solved exactly")->check(CLI::Range(0, 64));
  ramsey->add_option("--lambda", opt.lambda, "Sparse/dense threshold");
  add_seed(ramsey);
  add_common(ramsey);

  auto* verify = app.add_subcommand("verify", "Validate a certificate against a graph");
  verify->add_option("--graph", opt.graph_path, "Graph, poset or curves file")->required();
  verify->add_option("--cert", opt.cert_path, "Certificate JSON")->required();
  add_common(verify);

  auto* bench = app.add_subcommand("bench", "Run the pipeline over a generated family");
  bench->add_option("--family", opt.family, "dim2, dim3 or perm");
  bench->add_option("--n-range", opt.n_range, "a..b, doubling from a");
  bench->add_option("--trials", opt.trials, "Trials per n");
  bench->add_option("--lambda", opt.lambda, "Sparse/dense threshold");
  bench->add_option("--out,--format", opt.format, "Output format")->check(CLI::IsMember({"json", "csv"}));
  add_seed(bench);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kBadInput;
  }

  try {
    if (*gen_poset) return cmd_gen_poset(opt);
    if (*gen_curves) return cmd_gen_curves(opt);
    if (*extract) return cmd_extract(opt);
    if (*ramsey) return cmd_ramsey(opt);
    if (*verify) return cmd_verify(opt);
    if (*bench) return cmd_bench(opt);
  } catch (const oracle_required& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kOracleRequired;
  } catch (const retry_cap_exhausted& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kRetryCap;
  } catch (const invalid_input& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kBadInput;
  } catch (const precondition_violation& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kBadInput;
  } catch (const oracle_contract_violation& e) {
    std::cerr << "error: " << e.what() << "\nrepro: " << e.repro() << '\n';
    return kValidation;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kValidation;
  }
  return kOk;
}
