// Acceptance suite. Each check prints one PASS/FAIL line; `acceptance K` runs
// check K only, no argument runs all of them. Exit status is the number of
// failed checks (capped at 1).

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "heavytail/estimators.hpp"
#include "heavytail/graph.hpp"
#include "heavytail/graph_models.hpp"
#include "heavytail/montecarlo.hpp"
#include "heavytail/pair_models.hpp"
#include "heavytail/sampling.hpp"
#include "heavytail/theory.hpp"

using namespace heavytail;

namespace {

const unsigned kJobs = std::max(1U, std::thread::hardware_concurrency());

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void check(bool ok, const std::string& what) {
    pass = pass && ok;
    detail << (detail.tellp() > 0 ? "; " : "") << what << (ok ? "" : " [miss]");
  }
};

std::string fmt(double v, int digits = 4) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.*f", digits, v);
  return buf;
}

bool within(double value, double target, double tol) { return std::abs(value - target) <= tol; }

ModelConfig linear(const Eigen::Vector3d& alpha, const Eigen::Vector3d& beta, std::size_t n,
                   std::size_t reps, std::uint64_t seed = 1) {
  ModelConfig c;
  c.model = Model::linear;
  c.gamma = 1.1;
  c.alpha = alpha;
  c.beta = beta;
  c.n = n;
  c.reps = reps;
  c.seed = seed;
  return c;
}

ModelConfig model(Model m, std::size_t n, std::size_t reps, std::uint64_t seed = 1) {
  ModelConfig c;
  c.model = m;
  c.n = n;
  c.reps = reps;
  c.seed = seed;
  return c;
}

const std::array<Estimator, 2> kBoth{Estimator::pearson, Estimator::spearman};

const Eigen::Vector3d kRow1Alpha(0.5, 0.5, 0.0), kRow1Beta(0.0, 0.5, 0.5);

// Rank correlation of three linear-model coefficient rows at n = 1000.
void linear_rank_rows(Outcome& o) {
  struct Row {
    Eigen::Vector3d alpha, beta;
    double mean, sd;
  };
  const std::array<Row, 3> rows{{
      {kRow1Alpha, kRow1Beta, 0.4485, 0.0293},
      {{0.5, 1.0 / 3, 1.0 / 6}, {1.0 / 6, 1.0 / 3, 0.5}, 0.8850, 0.0073},
      {{0.5, -1.0 / 3, 1.0 / 6}, {1.0 / 6, 0.5, -1.0 / 3}, -0.3513, 0.0393},
  }};
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const auto& r = rows[i];
    const auto s = run_replications(linear(r.alpha, r.beta, 1000, 100), Estimator::spearman, kJobs);
    const std::string row = "row " + std::to_string(i + 1);
    o.check(within(s.mean, r.mean, 0.02), row + " mean " + fmt(s.mean) + " vs " + fmt(r.mean));
    o.check(s.std >= r.sd / 2 && s.std <= r.sd * 2,
            row + " sd " + fmt(s.std) + " vs " + fmt(r.sd));
  }
}

// The sample correlation keeps its spread as n grows; the rank correlation
// concentrates at rate about 1/sqrt(n).
void non_convergence(Outcome& o) {
  const auto small = run_replications(linear(kRow1Alpha, kRow1Beta, 1000, 100), kBoth, kJobs);
  const auto large = run_replications(linear(kRow1Alpha, kRow1Beta, 10000, 100), kBoth, kJobs);
  o.check(small[0].std > 0.2, "sd(pearson) n=1e3 " + fmt(small[0].std));
  o.check(large[0].std > 0.2, "sd(pearson) n=1e4 " + fmt(large[0].std));
  const double ratio = small[1].std / large[1].std;
  o.check(ratio >= 2 && ratio <= 5, "sd(spearman) ratio 1e3/1e4 " + fmt(ratio, 2));
}

// The law of the sample correlation hardly changes between n = 1e3 and 1e4.
void cdf_stability(Outcome& o) {
  const auto a = run_replications(linear(kRow1Alpha, kRow1Beta, 1000, 1000, 1),
                                  Estimator::pearson, kJobs);
  const auto b = run_replications(linear(kRow1Alpha, kRow1Beta, 10000, 1000, 2),
                                  Estimator::pearson, kJobs);
  const double d = ks_distance(a.values, b.values);
  o.check(d < 0.1, "KS distance " + fmt(d));
}

// Mixture pairs: the sample correlation vanishes, the rank correlation does not.
void mixture(Outcome& o) {
  ModelConfig c = model(Model::mixture, 10000, 100);
  c.gamma = 1.1;
  const auto at4 = run_replications(c, kBoth, kJobs);
  c.n = 100000;
  const auto at5 = run_replications(c, Estimator::pearson, kJobs);
  o.check(std::abs(at4[0].mean) < 0.02, "pearson n=1e4 " + fmt(at4[0].mean));
  o.check(std::abs(at5.mean) < 0.005, "pearson n=1e5 " + fmt(at5.mean));
  o.check(within(at4[1].mean, -0.4504, 0.02),
          "spearman n=1e4 " + fmt(at4[1].mean) + " vs -0.4504");
}

void random_graphs(Outcome& o) {
  const auto raw = run_replications(model(Model::cm_raw, 10000, 100), kBoth, kJobs);
  o.check(std::abs(raw[0].mean) < 0.01, "cm-raw assortativity " + fmt(raw[0].mean));
  o.check(std::abs(raw[1].mean) < 0.01, "cm-raw spearman " + fmt(raw[1].mean));

  const auto mid = run_replications(model(Model::cm_intermediate, 10000, 100), kBoth, kJobs);
  o.check(mid[1].mean >= -0.77 && mid[1].mean <= -0.73,
          "cm-intermediate spearman " + fmt(mid[1].mean));
  o.check(std::abs(mid[0].mean) < 0.09, "cm-intermediate assortativity n=1e4 " + fmt(mid[0].mean));
  const auto mid5 = run_replications(model(Model::cm_intermediate, 100000, 100),
                                     Estimator::pearson, kJobs);
  o.check(std::abs(mid5.mean) < 0.05, "cm-intermediate assortativity n=1e5 " + fmt(mid5.mean));

  const auto pam = run_replications(model(Model::pam, 10000, 100), kBoth, kJobs);
  o.check(pam[1].mean >= -0.44 && pam[1].mean <= -0.39, "pam spearman " + fmt(pam[1].mean));
  o.check(pam[0].mean >= -0.09 && pam[0].mean <= -0.03, "pam assortativity " + fmt(pam[0].mean));
}

void bipartite(Outcome& o) {
  const auto s = run_replications(model(Model::bipartite, 10000, 100), kBoth, kJobs);
  o.check(within(s[0].mean, 0.7877, 0.04), "assortativity " + fmt(s[0].mean) + " vs 0.7877");
  o.check(within(s[1].mean, 0.8577, 0.03), "spearman " + fmt(s[1].mean) + " vs 0.8577");

  const auto large = run_replications(model(Model::bipartite, 100000, 100), Estimator::pearson,
                                      kJobs);
  const auto [lo, hi] = bipartite_limit_interval(2.0);
  const auto inside = std::count_if(large.values.begin(), large.values.end(),
                                    [&](double v) { return v > lo && v < hi; });
  o.check(inside > 0, "n=1e5 values in (0.8, 1): " + std::to_string(inside) + "/" +
                          std::to_string(large.values.size()));
}

// Closed-form values that must hold exactly (up to rounding).
void oracles(Outcome& o) {
  auto exact = [&](std::optional<double> got, std::optional<double> want, const std::string& what) {
    const bool ok = got.has_value() == want.has_value() &&
                    (!got || std::abs(*got - *want) <= 1e-12 * std::max(1.0, std::abs(*want)));
    o.check(ok, what);
  };
  const Graph star(4, {{0, 1}, {0, 2}, {0, 3}});
  const Graph path(3, {{0, 1}, {1, 2}});
  const Graph triangle(3, {{0, 1}, {1, 2}, {2, 0}});
  const Graph k4(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
  exact(graph_assortativity(star), -1.0, "star");
  exact(graph_assortativity(path), -1.0, "path");
  exact(graph_assortativity(triangle), std::nullopt, "triangle undefined");
  exact(graph_assortativity(k4), std::nullopt, "K4 undefined");
  exact(assortativity_lower_bound(star), -4.0, "star lower bound");
  exact(assortativity_lower_bound(path), -9.0, "path lower bound");
  exact(support_lower_bound(kRow1Alpha, kRow1Beta), 0.0, "support row 1");
  exact(support_lower_bound(Eigen::Vector3d(0.5, 1.0 / 3, 1.0 / 6),
                            Eigen::Vector3d(1.0 / 6, 1.0 / 3, 0.5)),
        0.6, "support row 2");
  exact(mixture_rho_limit(1.5, 0.75), -0.6, "mixture gamma=3");
  exact(mixture_rho_limit(4.0 / 3, 2.0 / 9), -0.8, "mixture gamma=4");
  exact(intermediate_cm_rho_limit({3, 9, 27}), -1.0, "intermediate constant 3");
  exact(intermediate_cm_rho_limit({2, 5, 14}), -1.0 / 7, "intermediate {1,3}");
  exact(intermediate_cm_rho_limit({2, 4, 8}), std::nullopt, "intermediate constant 2");
  const auto [lo, hi] = bipartite_limit_interval(2.0);
  exact(lo, 0.8, "bipartite low");
  exact(hi, 1.0, "bipartite high");
}

// Invariants of the estimators, generators and normalised sums.
void properties(Outcome& o) {
  Rng rng(Seed{8, 0});

  // Range bounds, affine invariance, monotone invariance, closed form vs definition.
  bool range = true, affine = true, monotone = true, closed = true;
  for (int t = 0; t < 200; ++t) {
    const LinearModel m(Eigen::Vector3d(rng.uniform(), rng.uniform(), rng.uniform()),
                        Eigen::Vector3d(rng.uniform(), rng.uniform(), rng.uniform()),
                        ParetoLaw(1.1));
    const auto s = sample_linear_pairs(m, 200, rng);
    const auto r = pearson(s);
    const auto k = spearman(s, rng);
    range = range && r && k && std::abs(*r) <= 1 + 1e-12 && std::abs(*k) <= 1 + 1e-12;
    const auto ra = pearson((3.0 * s.x + 1.0).eval(), (0.5 * s.y - 2.0).eval());
    affine = affine && std::abs(*ra - *r) <= 1e-9;
    const Seed seed{9, static_cast<std::uint64_t>(t)};
    const auto k1 = spearman(s, seed);
    const auto k2 = spearman(PairedSample(s.x.log(), s.y.sqrt()), seed);
    monotone = monotone && *k1 == *k2;
    if (!has_ties(s.x) && !has_ties(s.y)) {
      const auto definitional = pearson(ranks_descending(s.x), ranks_descending(s.y));
      closed = closed && std::abs(*definitional - *k1) <= 1e-12;
    }
  }
  o.check(range, "range");
  o.check(affine, "pearson affine");
  o.check(monotone, "spearman monotone");
  o.check(closed, "closed form");

  // Degree preservation and handshake over 1000 seeds; lower bound on 1000 graphs.
  bool preserved = true, handshake = true, bound = true;
  for (std::uint64_t s = 0; s < 1000; ++s) {
    const auto seq = sample_degree_sequence(2.0, 50 + s % 150, Seed{10, s});
    const auto g = configuration_model(seq, Seed{11, s});
    preserved = preserved && g.degrees() == seq.degrees();
    const auto sum = std::accumulate(g.degrees().begin(), g.degrees().end(), std::int64_t{0});
    handshake = handshake && sum == 2 * static_cast<std::int64_t>(g.edge_count());
    const auto r = graph_assortativity(g);
    const auto lb = assortativity_lower_bound(g);
    if (r) bound = bound && lb && *lb <= *r + 1e-12;
  }
  o.check(preserved, "cm degrees preserved");
  o.check(handshake, "handshake");
  o.check(bound, "lower bound <= assortativity");

  // Support lower bound does not change when a coefficient vector is rescaled.
  const Eigen::Vector4d alpha(0.3, 0.1, 0.9, 0.2), beta(0.5, 0.8, 0.05, 0.3);
  const double a = support_lower_bound(alpha, beta);
  bool scale = true;
  for (const double c : {1e-3, 0.5, 7.0, 1e4})
    scale = scale && std::abs(support_lower_bound(c * alpha, beta) - a) <= 1e-14 &&
            std::abs(support_lower_bound(alpha, c * beta) - a) <= 1e-14;
  o.check(scale, "support scale invariance");

  // Normalised sums: sum U^2 / a_n has a non-degenerate limit, so its median
  // is stable in n; sum U1 U2 / a_n vanishes.
  auto medians = [](std::uint64_t n) {
    const ParetoLaw law(1.1);
    const double a_n = stable_norming_constant(1.1, n);
    std::vector<double> sq, pr;
    for (std::uint64_t r = 0; r < 400; ++r) {
      Rng g(Seed{12, r + 1000 * n});
      double s2 = 0, s11 = 0;
      for (std::uint64_t i = 0; i < n; ++i) {
        const double u1 = law.draw(g), u2 = law.draw(g);
        s2 += u1 * u1;
        s11 += u1 * u2;
      }
      sq.push_back(s2 / a_n);
      pr.push_back(s11 / a_n);
    }
    std::nth_element(sq.begin(), sq.begin() + 200, sq.end());
    std::nth_element(pr.begin(), pr.begin() + 200, pr.end());
    return std::pair{sq[200], pr[200]};
  };
  const auto [sq3, pr3] = medians(1000);
  const auto [sq4, pr4] = medians(10000);
  o.check(sq3 / sq4 >= 0.5 && sq3 / sq4 <= 2.0, "median ratio " + fmt(sq3 / sq4, 3));
  o.check(pr4 < 0.1 && pr4 < pr3, "cross median " + fmt(pr3) + " -> " + fmt(pr4));
}

struct Check {
  const char* name;
  std::function<void(Outcome&)> run;
};

}  // namespace

int main(int argc, char** argv) {
  const std::array<Check, 8> checks{{
      {"linear-model rank correlation", linear_rank_rows},
      {"non-convergence of the sample correlation", non_convergence},
      {"stability of the sample-correlation law", cdf_stability},
      {"mixture model", mixture},
      {"random graphs", random_graphs},
      {"complete bipartite collection", bipartite},
      {"oracle values", oracles},
      {"property suite", properties},
  }};

  std::vector<std::size_t> selected;
  for (int i = 1; i < argc; ++i) {
    const int k = std::atoi(argv[i]);
    if (k < 1 || k > static_cast<int>(checks.size())) {
      std::fprintf(stderr, "usage: %s [1-%zu ...]\n", argv[0], checks.size());
      return 2;
    }
    selected.push_back(static_cast<std::size_t>(k));
  }
  if (selected.empty())
    for (std::size_t k = 1; k <= checks.size(); ++k) selected.push_back(k);

  int failed = 0;
  for (const auto k : selected) {
    Outcome o;
    checks[k - 1].run(o);
    std::printf("%s criterion %zu (%s): %s\n", o.pass ? "PASS" : "FAIL", k, checks[k - 1].name,
                o.detail.str().c_str());
    std::fflush(stdout);
    failed += !o.pass;
  }
  return failed > 0 ? 1 : 0;
}
