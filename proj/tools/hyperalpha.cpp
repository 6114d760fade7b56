// Command-line front end: compute quantities of one hypergraph, generate
// instances, and batch-verify the analytic connectivity bounds.

#include <cstdio>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "hyperalpha/hyperalpha.hpp"

namespace {

using namespace hyperalpha;

enum ExitCode : int { kOk = 0, kInternal = 1, kValidation = 2, kGuard = 3 };

struct GeneratorFlags {
  std::string model;
  std::size_t n = 0;
  std::size_t k = 0;
  std::size_t edges = 0;
  std::string weights;  // "2:1,3:2"
  std::size_t overlap = 1;
};

void add_generator_flags(CLI::App* app, GeneratorFlags& g) {
  app->add_option("--model", g.model, "complete | uniform-random | nonuniform-random | hyperpath")
      ->check(CLI::IsMember({"complete", "uniform-random", "nonuniform-random", "hyperpath"}));
  app->add_option("--n", g.n, "vertex count");
  app->add_option("--k", g.k, "edge size (uniform models, hyperpath)");
  app->add_option("--edges", g.edges, "edge count (random models)");
  app->add_option("--weights", g.weights, "size weights for nonuniform-random, e.g. 2:1,3:2");
  app->add_option("--overlap", g.overlap, "shared vertices between consecutive hyperpath edges");
}

std::vector<double> parse_weights(const std::string& text) {
  std::vector<double> weights;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    const auto colon = item.find(':');
    if (colon == std::string::npos) throw Error(ErrorCode::InvalidArgument, "weight '" + item + "' is not size:weight");
    std::size_t size = 0;
    double weight = 0.0;
    try {
      size = std::stoul(item.substr(0, colon));
      weight = std::stod(item.substr(colon + 1));
    } catch (const std::exception&) {
      throw Error(ErrorCode::InvalidArgument, "weight '" + item + "' is not size:weight");
    }
    if (weights.size() <= size) weights.resize(size + 1, 0.0);
    weights[size] = weight;
  }
  if (weights.empty()) throw Error(ErrorCode::InvalidArgument, "--weights is required for nonuniform-random");
  return weights;
}

Model make_model(const GeneratorFlags& g) {
  if (g.model == "complete") return model::CompleteUniform{g.n, g.k};
  if (g.model == "uniform-random") return model::UniformRandom{g.n, g.k, g.edges};
  if (g.model == "nonuniform-random") return model::NonuniformRandom{g.n, parse_weights(g.weights), g.edges};
  if (g.model == "hyperpath") return model::Hyperpath{g.n, g.k, g.overlap};
  throw Error(ErrorCode::InvalidArgument, "--model is required");
}

void add_solver_flags(CLI::App* app, SolverConfig& s) {
  app->add_option("--restarts", s.restarts, "solver starts per fixed vertex")->capture_default_str();
  app->add_option("--max-iterations", s.max_iterations, "iteration cap per run")->capture_default_str();
  app->add_option("--tolerance", s.objective_tolerance, "relative decrease stopping threshold")->capture_default_str();
  app->add_option("--step", s.initial_step, "initial step size")->capture_default_str();
  app->add_option("--shrink", s.shrink, "backtracking shrink factor")->capture_default_str();
}

/// Flattens scalar leaves to dotted keys; arrays use the element index.
void flatten(const Json& j, const std::string& prefix, std::vector<std::pair<std::string, std::string>>& out) {
  if (j.is_object()) {
    for (const auto& [key, value] : j.items()) flatten(value, prefix.empty() ? key : prefix + "." + key, out);
  } else if (j.is_array()) {
    for (std::size_t i = 0; i < j.size(); ++i) flatten(j[i], prefix + "." + std::to_string(i), out);
  } else if (j.is_string()) {
    out.emplace_back(prefix, j.get<std::string>());
  } else {
    out.emplace_back(prefix, j.dump());
  }
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string quoted = "\"";
  for (char c : s) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  return quoted + "\"";
}

void emit(const Json& j, const std::string& format) {
  if (format == "json") {
    std::cout << j.dump() << '\n';
    return;
  }
  std::vector<std::pair<std::string, std::string>> rows;
  flatten(j, "", rows);
  if (format == "csv") {
    std::cout << "key,value\n";
    for (const auto& [k, v] : rows) std::cout << csv_field(k) << ',' << csv_field(v) << '\n';
  } else {
    for (const auto& [k, v] : rows) std::cout << k << ": " << v << '\n';
  }
}

struct ComputeOptions {
  std::string input;
  GeneratorFlags generator;
  std::uint64_t seed = 0;
  std::string what = "all";
  std::string format = "json";
  bool allow_singletons = false;
  int verbosity = 0;
  SolverConfig solver;
  VerifyConfig verify;
};

int run_compute(ComputeOptions& o) {
  const Hypergraph h = o.input.empty() ? generate(make_model(o.generator), o.seed)
                                       : read_file(o.input, {.allow_singletons = o.allow_singletons});
  o.solver.seed = o.seed;
  const bool all = o.what == "all";

  Json out{{"command", "compute"}, {"n", h.num_vertices()}, {"edges", h.num_edges()}, {"m", h.max_edge_size()}};
  if (all || o.what == "alpha") {
    const auto a = analytic_connectivity(h, o.solver);
    out["alpha"] = a.alpha;
    out["alpha_fixed_vertex"] = a.fixed_vertex + 1;
    out["alpha_witness"] = a.witness.vector();
    out["alpha_per_vertex"] = a.per_vertex;
    out["alpha_converged"] = a.all_converged();
  }
  if (all || o.what == "iso") out["isoperimetric"] = to_json(isoperimetric_number(h));
  if (all || o.what == "diameter") out["diameter"] = to_json(diameter(h));
  if (all || o.what == "lambda2") out["lambda2_clique"] = lambda2(clique_expansion(h));
  if (all || o.what == "bounds") {
    o.verify.solver = o.solver;
    const auto report = verify(h, o.verify);
    out["report"] = to_json(report);
    if (o.verbosity > 0 && report.violations() > 0)
      std::cerr << "warning: " << report.violations() << " bound check(s) violated\n";
  }
  emit(out, o.format);
  return kOk;
}

int run_generate(const GeneratorFlags& g, std::uint64_t seed, const std::string& path) {
  const auto h = generate(make_model(g), seed);
  if (path.empty())
    std::cout << serialize(h);
  else
    write_file(path, h);
  return kOk;
}

struct VerifyOptions {
  EnsembleSpec spec;
  VerifyConfig config;
  std::optional<std::size_t> threads;
  std::string mutate = "none";
  int verbosity = 0;
};

int run_verify(VerifyOptions& o) {
  static const std::map<std::string, Mutation> mutations{{"none", Mutation::None},
                                                         {"diameter_lower", Mutation::DiameterLower},
                                                         {"degree_upper", Mutation::DegreeUpper},
                                                         {"cheeger_lower", Mutation::CheegerLower},
                                                         {"cheeger_upper", Mutation::CheegerUpper}};
  o.config.mutation = mutations.at(o.mutate);
  const auto threads = resolve_threads(o.threads);

  const auto summary = run_ensemble(o.spec, o.config, threads, [&](const EnsembleEntry& e) {
    Json line{{"index", e.index}, {"seed", e.seed}};
    if (e.report) {
      line["report"] = to_json(*e.report);
    } else {
      line["skipped"] = e.error;
      std::cerr << "warning: instance " << e.index << " skipped: " << e.error << '\n';
    }
    std::cout << line.dump() << '\n';
    std::cout.flush();
  });

  std::cerr << "verified " << summary.instances << " instances: " << summary.checks_held << " checks held, "
            << summary.violations << " violated, " << summary.not_applicable << " not applicable, " << summary.skipped
            << " skipped";
  if (summary.worst_slack)
    std::cerr << "; worst slack " << Json(*summary.worst_slack).dump() << " (" << summary.worst_check << ", instance "
              << summary.worst_index << ")";
  std::cerr << '\n';
  return summary.violations == 0 ? kOk : kValidation;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Analytic connectivity of general hypergraphs"};
  app.require_subcommand(1);

  ComputeOptions compute;
  auto* cmd_compute = app.add_subcommand("compute", "compute quantities of one hypergraph");
  auto* in_opt = cmd_compute->add_option("--in", compute.input, "hypergraph file")->check(CLI::ExistingFile);
  add_generator_flags(cmd_compute, compute.generator);
  cmd_compute->get_option("--model")->excludes(in_opt);
  cmd_compute->add_option("--what", compute.what, "alpha | iso | diameter | lambda2 | bounds | all")
      ->check(CLI::IsMember({"alpha", "iso", "diameter", "lambda2", "bounds", "all"}))
      ->capture_default_str();
  cmd_compute->add_option("--format", compute.format, "json | csv | text")
      ->check(CLI::IsMember({"json", "csv", "text"}))
      ->capture_default_str();
  cmd_compute->add_option("--seed", compute.seed, "seed for generators and solver restarts")->capture_default_str();
  cmd_compute->add_flag("--allow-singletons", compute.allow_singletons, "accept edges with one vertex");
  cmd_compute->add_flag("-v,--verbose", compute.verbosity, "more diagnostics on standard error");
  add_solver_flags(cmd_compute, compute.solver);

  GeneratorFlags gen;
  std::uint64_t gen_seed = 0;
  std::string gen_out;
  auto* cmd_generate = app.add_subcommand("generate", "write a generated hypergraph");
  add_generator_flags(cmd_generate, gen);
  cmd_generate->get_option("--model")->required();
  cmd_generate->add_option("--seed", gen_seed, "generator seed")->capture_default_str();
  cmd_generate->add_option("--out", gen_out, "output path (standard output if omitted)");

  VerifyOptions ver;
  auto* cmd_verify = app.add_subcommand("verify", "check the bounds on a random ensemble");
  cmd_verify->add_option("--count", ver.spec.count, "number of instances")->capture_default_str();
  cmd_verify->add_option("--n-min", ver.spec.n_min)->capture_default_str();
  cmd_verify->add_option("--n-max", ver.spec.n_max)->capture_default_str();
  cmd_verify->add_option("--size-min", ver.spec.size_min)->capture_default_str();
  cmd_verify->add_option("--size-max", ver.spec.size_max)->capture_default_str();
  cmd_verify->add_option("--edges-min", ver.spec.edges_min)->capture_default_str();
  cmd_verify->add_option("--edges-max", ver.spec.edges_max)->capture_default_str();
  cmd_verify->add_option("--min-order", ver.spec.min_order, "smallest admissible largest-edge size")
      ->capture_default_str();
  cmd_verify->add_flag("--connected", ver.spec.connected_only, "resample until connected");
  cmd_verify->add_option("--seed", ver.spec.seed, "ensemble seed")->capture_default_str();
  cmd_verify->add_option("--threads", ver.threads, "worker count (default: HYPERALPHA_THREADS or all cores)");
  cmd_verify->add_option("--grid-steps", ver.config.grid_steps, "grid oracle denominator")->capture_default_str();
  cmd_verify->add_option("--grid-rounds", ver.config.grid_refine_rounds, "grid oracle refinement rounds")
      ->capture_default_str();
  cmd_verify->add_option("--oracle-max-n", ver.config.oracle_max_vertices, "largest n given to the grid oracle")
      ->capture_default_str()
      ->check(CLI::Range(0, 7));
  cmd_verify->add_option("--mutate", ver.mutate, "corrupt one bound (harness self-test)")
      ->check(CLI::IsMember({"none", "diameter_lower", "degree_upper", "cheeger_lower", "cheeger_upper"}))
      ->capture_default_str();
  cmd_verify->add_flag("-v,--verbose", ver.verbosity, "more diagnostics on standard error");
  add_solver_flags(cmd_verify, ver.config.solver);

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kValidation;
  }

  try {
    if (*cmd_compute) {
      if (compute.input.empty() && compute.generator.model.empty()) {
        std::cerr << "error: compute needs --in or --model\n";
        return kValidation;
      }
      return run_compute(compute);
    }
    if (*cmd_generate) return run_generate(gen, gen_seed, gen_out);
    if (*cmd_verify) return run_verify(ver);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return e.is_guard() ? kGuard : kValidation;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kInternal;
  }
  return kInternal;
}
