// Acceptance suite: one PASS/FAIL line per criterion. All tolerances and
// sizes are fixed here.

#include <chrono>
#include <cmath>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <fmt/format.h>
#include <fmt/ranges.h>

#include "hyperdrift/checks.hpp"
#include "hyperdrift/drift.hpp"
#include "hyperdrift/generators.hpp"
#include "hyperdrift/gf2.hpp"
#include "hyperdrift/walksat.hpp"

using namespace hyperdrift;

namespace {

struct Outcome {
  bool passed = false;
  std::string detail;
};

struct Criterion {
  int id;
  std::string name;
  std::function<Outcome()> run;
};

constexpr std::uint64_t kSeed = 20240601;

Outcome from_report(const CheckReport& r) {
  std::string detail = fmt::format("{} cases, {} failures", r.cases, r.failures);
  for (const auto& d : r.details) detail += "; " + d;
  return {r.passed, detail};
}

Outcome unique_satisfiability() {
  Rng rng(derive_seed(kSeed, 1));
  int cases = 0, bad = 0;
  for (std::size_t n = 6; n <= 10; ++n) {
    for (int i = 0; i < 20; ++i) {
      const Assignment z = random_bits(n, rng);
      const auto r = gf2::solve(gen_complete(5, n, z).system());
      ++cases;
      if (r.status != gf2::SolveStatus::Unique || !r.witness || *r.witness != z) ++bad;
    }
  }
  return {bad == 0, fmt::format("{} instances of K5(Z_n), n = 6..10, {} without unique witness Z", cases, bad)};
}

Outcome figure_k5() {
  constexpr std::size_t n = 200;
  constexpr double tol = 0.02;
  const auto p = complete_uniform_profile(n, 5);
  double worst = 0;
  for (int i = 1; i <= 9; ++i) {
    const auto& s = p.at_size(static_cast<std::size_t>(i * 20));
    worst = std::max(worst, std::abs(s.mean - asymptotic_drift_k5(i / 10.0)));
  }
  bool neg = true, pos = true;
  std::optional<double> change;
  for (std::size_t a = 1; a <= n; ++a) {
    const double delta = static_cast<double>(a) / n;
    const auto& s = p.at_size(a);
    if (delta <= 0.45 && !(s.max && *s.max < Rational(0))) neg = false;
    if (delta >= 0.55 && !(s.min && *s.min > Rational(0))) pos = false;
    if (a > 1 && *p.at_size(a - 1).max < Rational(0) && *s.min >= Rational(0) && !change) change = delta;
  }
  const bool change_ok = change && *change > 0.45 && *change < 0.55;
  return {worst <= tol && neg && pos && change_ok,
          fmt::format("max |exact - limit| = {:.5f} (tol {}), negative for delta <= 0.45: {}, positive for delta >= 0.55: {}, "
                      "sign change at delta = {}",
                      worst, tol, neg, pos, change ? fmt::format("{:.3f}", *change) : "none")};
}

Outcome triadic_cycle_bound() {
  const auto h = triadic_dual(gen_triadic_cycle(18, BitVector(36)));
  const auto p = drift_profile_exact(h);
  const auto lo = p.min();
  const Rational bound(1, 3);
  std::optional<std::size_t> at;
  for (const auto& s : p.by_size) {
    if (s.min && lo && *s.min == *lo && !at) at = s.size;
  }
  return {lo && *lo >= bound, fmt::format("exhaustive min d_odd over 2^18 - 1 subsets = {} (at |A| = {}), required >= {}",
                                          lo ? to_string(*lo) : "undefined", at.value_or(0), to_string(bound))};
}

double loglog_slope(const std::vector<double>& x, const std::vector<double>& y) {
  double mx = 0, my = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    mx += std::log(x[i]);
    my += std::log(y[i]);
  }
  mx /= x.size();
  my /= y.size();
  double sxy = 0, sxx = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxy += (std::log(x[i]) - mx) * (std::log(y[i]) - my);
    sxx += (std::log(x[i]) - mx) * (std::log(x[i]) - mx);
  }
  return sxy / sxx;
}

Outcome case_i_scaling() {
  constexpr std::size_t starts = 50;
  constexpr std::size_t trials = 200;
  constexpr std::uint64_t cap = 10000000;
  constexpr double max_slope = 1.3;
  std::vector<double> ms, means;
  std::size_t censored = 0;
  for (std::size_t m = 6; m <= 60; m += 6) {
    const std::uint64_t seed = derive_seed(kSeed, 400 + m);
    Rng rng(derive_seed(seed, 0));
    const auto inst = gen_triadic_cycle(m, random_bits(2 * m, rng));
    double worst = 0;
    for (std::size_t j = 0; j < starts; ++j) {
      const auto s = mean_hitting_time(inst, StartPolicy::fixed(random_bits(2 * m, rng)), trials,
                                       derive_seed(seed, 1 + j), cap);
      censored += s.censored;
      worst = std::max(worst, s.mean_capped);
    }
    ms.push_back(static_cast<double>(m));
    means.push_back(worst);
  }
  const double slope = loglog_slope(ms, means);
  std::vector<std::string> cells;
  for (std::size_t i = 0; i < ms.size(); ++i) cells.push_back(fmt::format("{}:{:.1f}", ms[i], means[i]));
  return {slope <= max_slope && censored == 0,
          fmt::format("log-log slope = {:.3f} (max {}), censored = {}, worst-of-{} means [{}]", slope, max_slope, censored,
                      starts, fmt::join(cells, " "))};
}

Outcome exponential_case() {
  constexpr std::size_t trials = 50;
  constexpr std::uint64_t cap = 10000000;
  constexpr double factor = 3.0;
  std::vector<double> means;
  std::vector<std::string> cells;
  for (std::size_t n = 11; n <= 17; n += 2) {
    const std::uint64_t seed = derive_seed(kSeed, 500 + n);
    Rng rng(derive_seed(seed, 0));
    const Assignment z = random_bits(n, rng);
    const auto s = mean_hitting_time(gen_complete(5, n, z), StartPolicy::hamming(z, (n + 1) / 2), trials,
                                     derive_seed(seed, 1), cap);
    means.push_back(s.mean_capped);
    cells.push_back(fmt::format("n={}:{:.1f}{}", n, s.mean_capped, s.censored ? fmt::format(" ({} censored)", s.censored) : ""));
  }
  std::size_t run = 0, best = 0;
  std::vector<std::string> ratios;
  for (std::size_t i = 1; i < means.size(); ++i) {
    const double r = means[i] / means[i - 1];
    ratios.push_back(fmt::format("{:.2f}", r));
    run = r >= factor ? run + 1 : 0;
    best = std::max(best, run);
  }
  return {best >= 2, fmt::format("means [{}], ratios per +2 [{}], required >= {} on two consecutive increments",
                                 fmt::join(cells, " "), fmt::join(ratios, " "), factor)};
}

CheckParams params(std::size_t n, std::size_t trials, std::size_t graphs, std::uint64_t salt) {
  CheckParams p;
  p.n = n;
  p.trials = trials;
  p.graphs = graphs;
  p.seed = derive_seed(kSeed, salt);
  return p;
}

std::vector<Criterion> criteria() {
  return {
      {1, "unique satisfiability of K5(Z_n)", unique_satisfiability},
      {2, "K(200,5) drift profile vs limit curve", figure_k5},
      {3, "triadic-cycle dual drift bound (m = 18)", triadic_cycle_bound},
      {4, "case (i) scaling on triadic cycles", case_i_scaling},
      {5, "exponential growth on K5(Z_n)", exponential_case},
      {6, "coupling c_ann = c_coal", [] { return from_report(check_coupling(params(8, 1000, 50, 6))); }},
      {7, "forward/backward duality", [] { return from_report(check_duality(params(7, 500, 20, 7))); }},
      {8, "stabilizing characterization", [] { return from_report(check_stabilizing(params(10, 0, 30, 8))); }},
      {9, "reachability counterexamples", [] { return from_report(check_counterexamples(params(0, 0, 0, 9))); }},
      {10, "one-step drift lemma", [] { return from_report(check_drift_lemma(params(10, 0, 20, 10))); }},
      {11, "two-party recurrence", [] { return from_report(check_recurrence(params(10, 0, 20, 11))); }},
      {12, "acyclicity duality", [] { return from_report(check_acyclicity(params(12, 200, 0, 12))); }},
      {13, "D_eps sandwich and tail domination", [] { return from_report(check_d_epsilon(params(0, 1000, 0, 13))); }},
  };
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Acceptance criteria"};
  std::vector<int> selected;
  app.add_option("--criterion", selected, "Criterion number(s); all when omitted");
  CLI11_PARSE(app, argc, argv);

  bool all_passed = true;
  for (const auto& c : criteria()) {
    if (!selected.empty() && std::find(selected.begin(), selected.end(), c.id) == selected.end()) continue;
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, fmt::format("exception: {}", e.what())};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    fmt::print("criterion {:2}: {} {} ({:.1f} s) - {}\n", c.id, o.passed ? "PASS" : "FAIL", c.name, secs, o.detail);
    std::fflush(stdout);
    all_passed = all_passed && o.passed;
  }
  return all_passed ? 0 : 1;
}
