#include "hyperdrift/cli.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include <CLI11.hpp>
#include <fmt/format.h>
#include <fmt/ranges.h>
#include <json.hpp>

#include "hyperdrift/checks.hpp"
#include "hyperdrift/combinatorics.hpp"
#include "hyperdrift/drift.hpp"
#include "hyperdrift/error.hpp"
#include "hyperdrift/generators.hpp"
#include "hyperdrift/gf2.hpp"
#include "hyperdrift/hypergraph.hpp"
#include "hyperdrift/rng.hpp"
#include "hyperdrift/walksat.hpp"
#include "hyperdrift/xorsat.hpp"

namespace hyperdrift {

namespace {

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::ifstream open_in(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError(fmt::format("cannot open '{}' for reading", path));
  return in;
}

std::ofstream open_out(const std::string& path) {
  std::ofstream out(path);
  if (!out) throw IoError(fmt::format("cannot open '{}' for writing", path));
  return out;
}

template <class T, class Parse>
T load(const std::string& path, Parse parse) {
  auto in = open_in(path);
  try {
    return parse(in);
  } catch (const ParseError& e) {
    throw IoError(fmt::format("{}: {}", path, e.what()));
  }
}

XorSatInstance load_instance(const std::string& path) {
  return load<XorSatInstance>(path, [](std::istream& in) { return parse_instance(in); });
}
Hypergraph load_hypergraph(const std::string& path) {
  return load<Hypergraph>(path, [](std::istream& in) { return parse_hypergraph(in); });
}
Assignment load_assignment(const std::string& path) {
  return load<Assignment>(path, [](std::istream& in) { return parse_assignment(in); });
}

struct GraphInput {
  std::string path;
  bool dual = false;
  bool formula = false;
};

void add_graph_input(CLI::App* cmd, GraphInput& g) {
  cmd->add_option("file", g.path, "Hypergraph file, or instance file with --dual/--formula")->required();
  auto* d = cmd->add_flag("--dual", g.dual, "Read an instance and use its triadic dual");
  cmd->add_flag("--formula", g.formula, "Read an instance and use its formula hypergraph")->excludes(d);
}

Hypergraph resolve_graph(const GraphInput& g) {
  if (g.dual) return triadic_dual(load_instance(g.path));
  if (g.formula) return formula_hypergraph(load_instance(g.path));
  return load_hypergraph(g.path);
}

std::optional<Assignment> any_witness(const XorSatInstance& inst) {
  const auto r = gf2::solve(inst.system());
  if (r.status == gf2::SolveStatus::Inconsistent) return std::nullopt;
  return r.witness;
}

std::vector<std::size_t> parse_sizes(const std::string& spec) {
  std::vector<std::size_t> out;
  try {
    if (spec.find(':') != std::string::npos) {
      std::vector<std::size_t> parts;
      std::stringstream ss(spec);
      std::string item;
      while (std::getline(ss, item, ':')) parts.push_back(std::stoul(item));
      if (parts.size() < 2 || parts.size() > 3) throw UsageError("");
      const std::size_t step = parts.size() == 3 ? parts[2] : 1;
      if (step == 0 || parts[0] > parts[1]) throw UsageError("");
      for (std::size_t s = parts[0]; s <= parts[1]; s += step) out.push_back(s);
    } else {
      std::stringstream ss(spec);
      std::string item;
      while (std::getline(ss, item, ',')) out.push_back(std::stoul(item));
    }
  } catch (const std::logic_error&) {
    throw UsageError(fmt::format("bad size list '{}'", spec));
  } catch (const UsageError&) {
    throw UsageError(fmt::format("bad size list '{}' (use lo:hi[:step] or a,b,c)", spec));
  }
  if (out.empty()) throw UsageError("empty size list");
  return out;
}

SimpleGraph parse_graph_spec(const std::string& spec, std::optional<std::uint64_t> seed) {
  std::vector<std::string> parts;
  std::stringstream ss(spec);
  std::string item;
  while (std::getline(ss, item, ':')) parts.push_back(item);
  try {
    if (parts.size() == 1 && parts[0].size() > 1 && parts[0][0] == 'k') {
      return SimpleGraph::complete(std::stoul(parts[0].substr(1)));
    }
    if (parts.size() == 3 && parts[0] == "gnp") {
      if (!seed) throw UsageError("gnp graphs need --seed");
      Rng rng(derive_seed(*seed, 2));
      return SimpleGraph::gnp(std::stoul(parts[1]), std::stod(parts[2]), rng);
    }
    if (parts.size() == 2 && parts[0] == "sphere") return glued_hexagon_sphere(std::stoul(parts[1]));
  } catch (const std::logic_error&) {
  }
  throw UsageError(fmt::format("bad graph '{}' (use kN, gnp:N:P or sphere:S)", spec));
}

std::string fmt_double(double x) { return std::isnan(x) ? "nan" : fmt::format("{:.10g}", x); }

// ---------------------------------------------------------------- gen

struct GenArgs {
  std::string family;
  std::size_t k = 0, n = 0, m = 0, r = 0, side = 0;
  std::optional<std::uint64_t> seed;
  std::string graph;
  std::string z;
  std::string out;
  bool dual = false;
  bool emit_hypergraph = false;
};

int cmd_gen(const GenArgs& a, std::ostream& out, std::ostream& err) {
  const auto need_seed = [&]() -> std::uint64_t {
    if (!a.seed) throw UsageError(fmt::format("family '{}' needs --seed", a.family));
    return *a.seed;
  };
  const auto need = [&](std::size_t v, const char* flag) {
    if (v == 0) throw UsageError(fmt::format("family '{}' needs {}", a.family, flag));
    return v;
  };

  XorSatInstance inst;
  std::optional<Assignment> witness;
  std::optional<Assignment> initial;
  if (a.family == "complete") {
    const std::size_t k = need(a.k, "--k");
    const std::size_t n = need(a.n, "--n");
    Assignment z;
    if (!a.z.empty()) {
      z = BitVector::from_string(a.z);
    } else {
      Rng rng(need_seed());
      z = random_bits(n, rng);
    }
    if (z.size() != n) throw UsageError("--z must have n bits");
    inst = gen_complete(k, n, z);
    witness = z;
  } else if (a.family == "hnru") {
    const std::size_t n = need(a.n, "--n");
    const std::size_t r = need(a.r, "--r");
    Rng rng(need_seed());
    inst = gen_hnru(n, r, random_bits(static_cast<std::size_t>(binomial(static_cast<std::int64_t>(n), static_cast<std::int64_t>(r))), rng));
    witness = any_witness(inst);
  } else if (a.family == "triadic-cycle") {
    const std::size_t m = need(a.m, "--m");
    BitVector u(2 * m);
    if (a.seed) {
      Rng rng(*a.seed);
      u = random_bits(2 * m, rng);
    }
    inst = gen_triadic_cycle(m, u);
    witness = any_witness(inst);
  } else if (a.family == "ctd" || a.family == "sphere-hex") {
    const SimpleGraph g = a.family == "ctd"
                              ? parse_graph_spec(a.graph.empty() ? "k4" : a.graph, a.seed)
                              : glued_hexagon_sphere(need(a.side, "--side"));
    BitVector labels(g.edges.size());
    if (a.seed) {
      Rng rng(derive_seed(*a.seed, 1));
      labels = random_bits(g.edges.size(), rng);
    }
    auto ctd = gen_ctd(g, labels);
    inst = std::move(ctd.instance);
    initial = std::move(ctd.initial);
    witness = any_witness(inst);
  } else if (a.family == "random-k-uniform") {
    Rng rng(need_seed());
    auto planted = gen_random_k_uniform(need(a.n, "--n"), need(a.m, "--m"), need(a.k, "--k"), rng);
    inst = std::move(planted.instance);
    witness = std::move(planted.witness);
  } else {
    throw UsageError(fmt::format("unknown family '{}'", a.family));
  }

  const auto write_main = [&](std::ostream& os) {
    if (a.dual) {
      write_hypergraph(os, triadic_dual(inst));
    } else if (a.emit_hypergraph) {
      write_hypergraph(os, formula_hypergraph(inst));
    } else {
      write_instance(os, inst);
    }
  };
  if (a.out.empty()) {
    write_main(out);
    return kExitOk;
  }
  {
    auto os = open_out(a.out);
    write_main(os);
  }
  if (witness) {
    auto os = open_out(a.out + ".witness");
    write_assignment(os, *witness);
  } else {
    err << "instance is unsatisfiable; no witness written\n";
  }
  if (initial) {
    auto os = open_out(a.out + ".init");
    write_assignment(os, *initial);
  }
  err << fmt::format("wrote {} ({} variables, {} equations)\n", a.out, inst.num_variables(), inst.num_equations());
  return kExitOk;
}

// ---------------------------------------------------------------- solve

struct SolveArgs {
  std::string path;
  std::optional<std::uint64_t> seed;
  std::size_t trials = 1;
  std::uint64_t max_steps = 1000000;
  std::string start = "uniform";
  std::string witness;
  std::optional<std::size_t> distance;
  std::string format = "csv";
  std::string trajectory;
  std::string out;
};

StartPolicy make_policy(const SolveArgs& a, const XorSatInstance& inst) {
  if (a.start == "uniform") return StartPolicy::uniform();
  if (a.start == "distance") {
    Assignment w;
    if (!a.witness.empty()) {
      w = load_assignment(a.witness);
    } else {
      const auto sol = gf2::solve(inst.system());
      if (sol.status == gf2::SolveStatus::Inconsistent) throw UsageError("instance has no solution to measure distance from");
      w = *sol.witness;
    }
    if (w.size() != inst.num_variables()) throw UsageError("witness length differs from the variable count");
    const std::size_t d = a.distance.value_or((inst.num_variables() + 1) / 2);
    if (d > inst.num_variables()) throw UsageError("--distance exceeds the variable count");
    return StartPolicy::hamming(std::move(w), d);
  }
  if (a.start.rfind("file:", 0) == 0) {
    Assignment x = load_assignment(a.start.substr(5));
    if (x.size() != inst.num_variables()) throw UsageError("start assignment length differs from the variable count");
    return StartPolicy::fixed(std::move(x));
  }
  throw UsageError(fmt::format("bad --start '{}' (uniform, distance or file:PATH)", a.start));
}

int cmd_solve(const SolveArgs& a, std::ostream& out, std::ostream&) {
  if (!a.seed) throw UsageError("solve needs --seed");
  if (a.format != "csv" && a.format != "json") throw UsageError("--format must be csv or json");
  const XorSatInstance inst = load_instance(a.path);
  const StartPolicy policy = make_policy(a, inst);
  const HittingStats stats = mean_hitting_time(inst, policy, a.trials, *a.seed, a.max_steps);

  if (!a.trajectory.empty()) {
    const std::uint64_t ts = derive_seed(*a.seed, 0);
    Rng start_rng(derive_seed(ts, 0));
    const Assignment x0 = policy.draw(inst.num_variables(), start_rng);
    const auto run = walksat(inst, x0, derive_seed(ts, 1), a.max_steps, true);
    std::optional<Assignment> sol;
    if (gf2::is_uniquely_satisfiable(inst)) sol = gf2::solve(inst.system()).witness;
    auto os = open_out(a.trajectory);
    write_trajectory_csv(os, run, sol);
  }

  std::ofstream file;
  if (!a.out.empty()) file = open_out(a.out);
  std::ostream& os = a.out.empty() ? out : file;
  if (a.format == "json") {
    nlohmann::ordered_json j;
    j["trials"] = stats.trials;
    j["censored"] = stats.censored;
    j["max_steps"] = a.max_steps;
    j["mean"] = stats.all_censored ? nlohmann::ordered_json(nullptr) : nlohmann::ordered_json(stats.mean);
    j["median"] = stats.all_censored ? nlohmann::ordered_json(nullptr) : nlohmann::ordered_json(stats.median);
    j["mean_capped"] = stats.mean_capped;
    j["steps"] = stats.steps;
    std::vector<bool> flags(stats.censored_flags.begin(), stats.censored_flags.end());
    j["censored_flags"] = flags;
    os << j.dump(2) << '\n';
  } else {
    os << "trial,steps,censored\n";
    for (std::size_t i = 0; i < stats.steps.size(); ++i) {
      os << fmt::format("{},{},{}\n", i, stats.steps[i], stats.censored_flags[i] ? 1 : 0);
    }
    os << fmt::format("# trials={} censored={} mean={} median={} mean_capped={}\n", stats.trials, stats.censored,
                      fmt_double(stats.mean), fmt_double(stats.median), fmt_double(stats.mean_capped));
  }
  return kExitOk;
}

// ---------------------------------------------------------------- drift / tau / classify

struct DriftArgs {
  GraphInput input;
  bool exact = false;
  bool sampled = false;
  bool by_density = false;
  std::size_t samples = 1000;
  std::optional<std::uint64_t> seed;
  std::string out;
};

std::vector<double> density_grid() {
  std::vector<double> d;
  for (int i = 1; i <= 19; ++i) d.push_back(i * 0.05);
  return d;
}

bool exact_possible(const Hypergraph& h) {
  return h.num_vertices() <= kMaxEnumerationVertices || is_complete_uniform(h);
}

int cmd_drift(const DriftArgs& a, std::ostream& out, std::ostream& err) {
  const Hypergraph h = resolve_graph(a.input);
  const std::size_t n = h.num_vertices();
  if (n == 0) throw UsageError("hypergraph has no vertices");
  const bool exact = a.exact || (!a.sampled && exact_possible(h));
  if (exact && !exact_possible(h)) throw UsageError(fmt::format("exact enumeration needs n <= {}", kMaxEnumerationVertices));

  std::ofstream file;
  if (!a.out.empty()) file = open_out(a.out);
  std::ostream& os = a.out.empty() ? out : file;

  if (exact) {
    const DriftProfile profile = drift_profile_exact(h);
    if (a.by_density) {
      DriftProfile picked{n, {}};
      std::size_t last = 0;
      for (const double d : density_grid()) {
        const auto size = static_cast<std::size_t>(std::floor(d * static_cast<double>(n) + 1e-9));
        if (size == 0 || size == last) continue;
        picked.by_size.push_back(profile.at_size(size));
        last = size;
      }
      write_drift_csv(os, picked);
    } else {
      write_drift_csv(os, profile);
    }
    const auto lo = profile.min();
    const auto hi = profile.max();
    err << fmt::format("min={} max={}\n", lo ? fmt::format("{} ({})", to_string(*lo), fmt_double(to_double(*lo))) : "undefined",
                       hi ? fmt::format("{} ({})", to_string(*hi), fmt_double(to_double(*hi))) : "undefined");
    return kExitOk;
  }
  if (!a.seed) throw UsageError("sampled drift needs --seed");
  std::vector<double> deltas;
  if (a.by_density) {
    deltas = density_grid();
  } else {
    for (std::size_t s = 1; s <= n; ++s) deltas.push_back((static_cast<double>(s) + 0.5) / static_cast<double>(n));
    deltas.back() = 1.0;
  }
  write_sampled_csv(os, drift_profile_sampled(h, deltas, a.samples, *a.seed));
  return kExitOk;
}

struct TauArgs {
  GraphInput input;
  bool include_full = false;
  bool sampled = false;
  std::size_t samples = 1000;
  std::optional<std::uint64_t> seed;
};

int cmd_tau(const TauArgs& a, std::ostream& out, std::ostream&) {
  const Hypergraph h = resolve_graph(a.input);
  const FullSet full = a.include_full ? FullSet::Include : FullSet::Auto;
  TauResult t;
  if (a.sampled || !exact_possible(h)) {
    if (!a.seed) throw UsageError("sampled tau needs --seed");
    t = tau_odd_sampled(h, a.samples, *a.seed, full);
  } else {
    t = tau_odd(h, full);
  }
  if (t.value) {
    out << fmt::format("tau_odd{} = {} ({})\n", t.exact ? "" : " >=", to_string(*t.value), fmt_double(to_double(*t.value)));
  } else {
    out << "tau_odd = unbounded (some admissible subset has E- = 0)\n";
  }
  out << fmt::format("k = {}, min E- = {}, full set {}\n", t.k, t.min_e_minus, t.includes_full_set ? "included" : "excluded");
  return kExitOk;
}

struct ClassifyArgs {
  GraphInput input;
  double margin = 0.01;
  std::size_t samples = 1000;
  std::optional<std::uint64_t> seed;
};

int cmd_classify(const ClassifyArgs& a, std::ostream& out, std::ostream&) {
  const Hypergraph h = resolve_graph(a.input);
  if (a.input.dual) {
    const XorSatInstance inst = load_instance(a.input.path);
    out << fmt::format("acyclic: {}\n", gf2::is_acyclic(inst) ? "yes" : "no");
    out << fmt::format("uniquely satisfiable: {}\n", gf2::is_uniquely_satisfiable(inst) ? "yes" : "no");
  }
  if (!h.num_vertices()) throw UsageError("hypergraph has no vertices");
  out << fmt::format("odd-connected: {}\n", is_connected(h) && is_odd_connected(h) ? "yes" : "no");
  Classification c;
  if (exact_possible(h)) {
    c = classify(h);
  } else {
    if (!a.seed) throw UsageError("sampled classification needs --seed");
    c = classify_sampled(h, drift_profile_sampled(h, density_grid(), a.samples, *a.seed), a.margin);
  }
  out << describe(c) << '\n';
  return kExitOk;
}

// ---------------------------------------------------------------- check

struct CheckArgs {
  std::string name;
  CheckParams params;
};

int cmd_check(const CheckArgs& a, std::ostream& out, std::ostream&) {
  std::vector<std::string> names;
  if (a.name == "all") {
    names = check_names();
  } else {
    const auto known = check_names();
    if (std::find(known.begin(), known.end(), a.name) == known.end()) {
      throw UsageError(fmt::format("unknown check '{}' (one of {} or all)", a.name, fmt::join(known, ", ")));
    }
    names = {a.name};
  }
  bool ok = true;
  for (const auto& name : names) {
    const CheckReport r = run_check(name, a.params);
    out << fmt::format("{}: {} ({} cases, {} failures)\n", r.name, r.passed ? "PASS" : "FAIL", r.cases, r.failures);
    for (const auto& d : r.details) out << "  " << d << '\n';
    ok = ok && r.passed;
  }
  return ok ? kExitOk : kExitCheckFailure;
}

// ---------------------------------------------------------------- bench

struct BenchArgs {
  std::string family;
  std::string sizes;
  std::size_t trials = 100;
  std::optional<std::uint64_t> seed;
  std::uint64_t max_steps = 1000000;
  std::string start = "uniform";
  std::size_t k = 5;
  double p = 0.5;
  double ratio = 1.0;
  std::string out;
};

struct BenchCase {
  XorSatInstance inst;
  std::optional<Assignment> witness;
  std::optional<Assignment> initial;
};

BenchCase bench_case(const BenchArgs& a, std::size_t size, Rng& rng) {
  BenchCase c;
  if (a.family == "triadic-cycle") {
    c.inst = gen_triadic_cycle(size, random_bits(2 * size, rng));
  } else if (a.family == "complete") {
    const Assignment z = random_bits(size, rng);
    c.inst = gen_complete(a.k, size, z);
    c.witness = z;
    return c;
  } else if (a.family == "ctd") {
    const SimpleGraph g = SimpleGraph::gnp(size, a.p, rng);
    auto ctd = gen_ctd(g, random_bits(g.edges.size(), rng));
    c.inst = std::move(ctd.instance);
    c.initial = std::move(ctd.initial);
  } else if (a.family == "random-k-uniform") {
    const auto m = static_cast<std::size_t>(std::llround(a.ratio * static_cast<double>(size)));
    auto planted = gen_random_k_uniform(size, std::max<std::size_t>(1, m), a.k, rng);
    c.inst = std::move(planted.instance);
    c.witness = std::move(planted.witness);
    return c;
  } else {
    throw UsageError(fmt::format("unknown bench family '{}'", a.family));
  }
  c.witness = any_witness(c.inst);
  return c;
}

int cmd_bench(const BenchArgs& a, std::ostream& out, std::ostream&) {
  if (!a.seed) throw UsageError("bench needs --seed");
  const auto sizes = parse_sizes(a.sizes);
  std::size_t worst_of = 0;
  if (a.start.rfind("worst-of:", 0) == 0) {
    try {
      worst_of = std::stoul(a.start.substr(9));
    } catch (const std::logic_error&) {
      throw UsageError("bad worst-of count");
    }
    if (worst_of == 0) throw UsageError("bad worst-of count");
  } else if (a.start != "uniform" && a.start != "half" && a.start != "initial") {
    throw UsageError(fmt::format("bad --start '{}' (uniform, half, initial or worst-of:K)", a.start));
  }

  std::ofstream file;
  if (!a.out.empty()) file = open_out(a.out);
  std::ostream& os = a.out.empty() ? out : file;
  os << "size,variables,equations,trials,censored,mean_capped,mean,median\n";
  for (std::size_t idx = 0; idx < sizes.size(); ++idx) {
    const std::size_t size = sizes[idx];
    const std::uint64_t case_seed = derive_seed(*a.seed, idx);
    Rng rng(derive_seed(case_seed, 0));
    const BenchCase c = bench_case(a, size, rng);
    const std::size_t n = c.inst.num_variables();
    HittingStats stats;
    if (worst_of > 0) {
      Rng starts(derive_seed(case_seed, 1));
      for (std::size_t j = 0; j < worst_of; ++j) {
        const auto s = mean_hitting_time(c.inst, StartPolicy::fixed(random_bits(n, starts)), a.trials,
                                         derive_seed(case_seed, 2 + j), a.max_steps);
        if (j == 0 || s.mean_capped > stats.mean_capped) stats = s;
      }
    } else {
      StartPolicy policy = StartPolicy::uniform();
      if (a.start == "half") {
        if (!c.witness) throw UsageError("half-distance start needs a satisfiable instance");
        policy = StartPolicy::hamming(*c.witness, (n + 1) / 2);
      } else if (a.start == "initial") {
        if (!c.initial) throw UsageError("initial start is only defined for ctd");
        policy = StartPolicy::fixed(*c.initial);
      }
      stats = mean_hitting_time(c.inst, policy, a.trials, derive_seed(case_seed, 1), a.max_steps);
    }
    os << fmt::format("{},{},{},{},{},{},{},{}\n", size, n, c.inst.num_equations(), stats.trials, stats.censored,
                      fmt_double(stats.mean_capped), fmt_double(stats.mean), fmt_double(stats.median));
  }
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Hypergraph drift toolkit for WalkSAT on XOR-SAT"};
  app.name("hyperdrift");
  app.require_subcommand(1);
  app.set_version_flag("--version", "hyperdrift 0.1.0");

  std::function<int()> action;
  const auto bind = [&](CLI::App* cmd, std::function<int()> fn) { cmd->callback([&action, fn]() { action = fn; }); };

  GenArgs gen;
  auto* g = app.add_subcommand("gen", "Generate an instance (and witness) file");
  g->add_option("family", gen.family, "complete | hnru | triadic-cycle | ctd | random-k-uniform | sphere-hex")->required();
  g->add_option("-k,--k", gen.k, "Equation width");
  g->add_option("-n,--n", gen.n, "Number of variables");
  g->add_option("-m,--m", gen.m, "Number of equations");
  g->add_option("-r,--r", gen.r, "Subset size (hnru)");
  g->add_option("--side", gen.side, "Hexagon side (sphere-hex)");
  g->add_option("--graph", gen.graph, "Graph for ctd: kN, gnp:N:P or sphere:S");
  g->add_option("--z", gen.z, "Planted assignment as a bit string (complete)");
  g->add_option("--seed", gen.seed, "Seed for random parameters");
  g->add_option("-o,--out", gen.out, "Output path; also writes <out>.witness and <out>.init");
  auto* gd = g->add_flag("--dual", gen.dual, "Write the triadic dual hypergraph instead");
  g->add_flag("--emit-hypergraph", gen.emit_hypergraph, "Write the formula hypergraph instead")->excludes(gd);
  bind(g, [&] { return cmd_gen(gen, out, err); });

  SolveArgs solve;
  auto* s = app.add_subcommand("solve", "Run WalkSAT trials on an instance");
  s->add_option("instance", solve.path, "Instance file")->required();
  s->add_option("--seed", solve.seed, "Seed (required)");
  s->add_option("--trials", solve.trials, "Number of trials")->check(CLI::PositiveNumber);
  s->add_option("--max-steps", solve.max_steps, "Censoring cap");
  s->add_option("--start", solve.start, "uniform | distance | file:PATH");
  s->add_option("--witness", solve.witness, "Witness file for --start distance");
  s->add_option("--distance", solve.distance, "Hamming distance for --start distance (default ceil(n/2))");
  s->add_option("--format", solve.format, "csv | json");
  s->add_option("--trajectory", solve.trajectory, "Write the t,unsat,u trajectory of trial 0 here");
  s->add_option("-o,--out", solve.out, "Output path (default stdout)");
  bind(s, [&] { return cmd_solve(solve, out, err); });

  DriftArgs drift;
  auto* d = app.add_subcommand("drift", "Odd Cheeger drift profile as CSV");
  add_graph_input(d, drift.input);
  auto* de = d->add_flag("--exact", drift.exact, "Require exact enumeration or closed form");
  d->add_flag("--sampled", drift.sampled, "Sample subsets instead")->excludes(de);
  d->add_flag("--by-density", drift.by_density, "Report the density grid 0.05..0.95");
  d->add_option("--samples", drift.samples, "Samples per size when sampling");
  d->add_option("--seed", drift.seed, "Seed when sampling");
  d->add_option("-o,--out", drift.out, "Output path (default stdout)");
  bind(d, [&] { return cmd_drift(drift, out, err); });

  TauArgs tau;
  auto* t = app.add_subcommand("tau", "Odd Cheeger time of a regular hypergraph");
  add_graph_input(t, tau.input);
  t->add_flag("--include-full", tau.include_full, "Always include A = V");
  t->add_flag("--sampled", tau.sampled, "Sampled lower bound");
  t->add_option("--samples", tau.samples, "Samples per size when sampling");
  t->add_option("--seed", tau.seed, "Seed when sampling");
  bind(t, [&] { return cmd_tau(tau, out, err); });

  ClassifyArgs cls;
  auto* c = app.add_subcommand("classify", "Classify the drift regime");
  add_graph_input(c, cls.input);
  c->add_option("--margin", cls.margin, "Margin for sampled classification");
  c->add_option("--samples", cls.samples, "Samples per density when sampling");
  c->add_option("--seed", cls.seed, "Seed when sampling");
  bind(c, [&] { return cmd_classify(cls, out, err); });

  CheckArgs chk;
  auto* k = app.add_subcommand("check", "Run a brute-force invariant check");
  k->add_option("name", chk.name, "Check name or 'all'")->required();
  k->add_option("-n,--n", chk.params.n, "Largest vertex count");
  k->add_option("--trials", chk.params.trials, "Runs, schedules or instances");
  k->add_option("--graphs", chk.params.graphs, "Random hypergraphs");
  k->add_option("--seed", chk.params.seed, "Seed");
  k->add_option("--max-steps", chk.params.max_steps, "Censoring cap for stochastic checks");
  k->add_option("--eps", chk.params.eps, "Epsilon for d-epsilon");
  bind(k, [&] { return cmd_check(chk, out, err); });

  BenchArgs bench;
  auto* b = app.add_subcommand("bench", "Mean WalkSAT steps across instance sizes as CSV");
  b->add_option("family", bench.family, "triadic-cycle | complete | ctd | random-k-uniform")->required();
  b->add_option("--sizes", bench.sizes, "lo:hi[:step] or a,b,c")->required();
  b->add_option("--trials", bench.trials, "Trials per size")->check(CLI::PositiveNumber);
  b->add_option("--seed", bench.seed, "Seed (required)");
  b->add_option("--max-steps", bench.max_steps, "Censoring cap");
  b->add_option("--start", bench.start, "uniform | half | initial | worst-of:K");
  b->add_option("-k,--k", bench.k, "Equation width (complete, random-k-uniform)");
  b->add_option("--p", bench.p, "Edge probability (ctd)");
  b->add_option("--ratio", bench.ratio, "Equations per variable (random-k-uniform)");
  b->add_option("-o,--out", bench.out, "Output path (default stdout)");
  bind(b, [&] { return cmd_bench(bench, out, err); });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }
  try {
    return action();
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const IoError& e) {
    err << "error: " << e.what() << '\n';
    return kExitIo;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitCheckFailure;
  }
}

int run_cli(int argc, const char* const* argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return run_cli(args, std::cout, std::cerr);
}

}  // namespace hyperdrift
