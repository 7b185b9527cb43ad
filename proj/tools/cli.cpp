#include "cli.hpp"

#include <CLI11.hpp>

#include <charconv>
#include <fstream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "heavytail/estimators.hpp"
#include "heavytail/graph.hpp"
#include "heavytail/montecarlo.hpp"
#include "heavytail/theory.hpp"

namespace heavytail::cli {

namespace {

/// Argument problems detected after CLI11 parsing; always exit code 2.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ModelFlags {
  std::string model = "linear";
  std::size_t n = 1000;
  std::size_t reps = 100;
  std::uint64_t seed = 1;
  double gamma = 0;
  CLI::Option* gamma_opt = nullptr;
  std::string alpha = "1/2,1/2,0";
  std::string beta = "0,1/2,1/2";
  double degree_scale = 3.0;
  double b = 0.5;
  double a = 2.0;
  unsigned jobs = 1;
  std::string out;
};

double parse_real(std::string_view token, const std::string& flag) {
  auto trim = [](std::string_view s) {
    while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
    while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
    return s;
  };
  auto number = [&](std::string_view s) {
    s = trim(s);
    double v = 0;
    const auto* end = s.data() + s.size();
    auto [ptr, ec] = std::from_chars(s.data(), end, v);
    if (s.empty() || ec != std::errc() || ptr != end)
      throw UsageError(flag + ": cannot parse '" + std::string(token) + "' as a number");
    return v;
  };
  if (const auto slash = token.find('/'); slash != std::string_view::npos) {
    const double den = number(token.substr(slash + 1));
    if (den == 0) throw UsageError(flag + ": zero denominator in '" + std::string(token) + "'");
    return number(token.substr(0, slash)) / den;
  }
  return number(token);
}

/// Comma-separated reals; each entry may be a fraction such as 1/3.
Eigen::VectorXd parse_real_list(const std::string& text, const std::string& flag) {
  std::vector<double> values;
  std::string_view rest(text);
  while (true) {
    const auto comma = rest.find(',');
    values.push_back(parse_real(rest.substr(0, comma), flag));
    if (comma == std::string_view::npos) break;
    rest.remove_prefix(comma + 1);
  }
  return Eigen::Map<const Eigen::VectorXd>(values.data(), static_cast<Eigen::Index>(values.size()));
}

void add_model_flags(CLI::App* cmd, ModelFlags& f) {
  cmd->add_option("--model", f.model, "Model to simulate")
      ->check(CLI::IsMember({"linear", "mixture", "cm-raw", "cm-erased", "cm-intermediate",
                             "pam", "bipartite"}))
      ->capture_default_str();
  cmd->add_option("--n", f.n, "Sample size, vertex count, or number of bipartite blocks")
      ->check(CLI::Range(std::size_t{2}, std::size_t{100'000'000}))
      ->capture_default_str();
  cmd->add_option("--reps", f.reps, "Number of replications N")
      ->check(CLI::Range(std::size_t{1}, std::size_t{100'000'000}))
      ->capture_default_str();
  cmd->add_option("--seed", f.seed, "Master seed")->envname("HEAVYTAIL_SEED")->capture_default_str();
  f.gamma_opt = cmd->add_option("--gamma", f.gamma, "Tail exponent of the base law")
                    ->check(CLI::PositiveNumber);
  cmd->add_option("--alpha", f.alpha, "Linear-model X coefficients, comma separated")
      ->capture_default_str();
  cmd->add_option("--beta", f.beta, "Linear-model Y coefficients, comma separated")
      ->capture_default_str();
  cmd->add_option("--degree-scale", f.degree_scale,
                  "Configuration-model degrees are floor(scale * Pareto)")
      ->check(CLI::Range(1.0, 1e9))
      ->capture_default_str();
  cmd->add_option("--b", f.b, "Bipartite block scale b")->check(CLI::PositiveNumber)->capture_default_str();
  cmd->add_option("--a", f.a, "Bipartite asymmetry a")->check(CLI::Range(1.0, 1e9))->capture_default_str();
  cmd->add_option("--jobs", f.jobs, "Worker threads for replications")
      ->check(CLI::Range(1U, 1024U))
      ->capture_default_str();
  cmd->add_option("--out", f.out, "Output CSV path");
}

ModelConfig to_config(const ModelFlags& f) {
  ModelConfig c;
  c.model = *parse_model(f.model);
  c.n = f.n;
  c.reps = f.reps;
  c.seed = f.seed;
  if (f.gamma_opt->count() > 0) c.gamma = f.gamma;
  c.alpha = parse_real_list(f.alpha, "--alpha");
  c.beta = parse_real_list(f.beta, "--beta");
  c.degree_scale = f.degree_scale;
  c.bipartite_b = f.b;
  c.bipartite_a = f.a;
  try {
    c.validate();
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  return c;
}

std::string show(const std::optional<double>& v) { return v ? format_real(*v) : "undefined"; }

std::ofstream open_output(const std::string& path) {
  std::ofstream file(path);
  if (!file) throw UsageError("--out: cannot open '" + path + "' for writing");
  return file;
}

int simulate(const ModelFlags& flags, const std::string& estimator_name, std::ostream& out) {
  const auto config = to_config(flags);
  std::vector<Estimator> estimators;
  if (estimator_name == "both")
    estimators = {Estimator::pearson, Estimator::spearman};
  else
    estimators = {*parse_estimator(estimator_name)};

  const auto summaries = run_replications(config, estimators, flags.jobs);
  for (std::size_t i = 0; i < estimators.size(); ++i) {
    const auto& s = summaries[i];
    out << to_string(config.model) << ' ' << to_string(estimators[i])
        << ": mean=" << format_real(s.mean) << " std=" << format_real(s.std)
        << " n_undefined=" << s.n_undefined << '\n';
  }
  if (!flags.out.empty()) {
    auto file = open_output(flags.out);
    write_results_header(file);
    for (std::size_t i = 0; i < estimators.size(); ++i)
      write_results_row(file, config, estimators[i], summaries[i]);
  }
  return 0;
}

int cdf(const ModelFlags& flags, const std::string& estimator_name, std::size_t grid_points,
        std::ostream& out) {
  const auto config = to_config(flags);
  const auto summary = run_replications(config, *parse_estimator(estimator_name), flags.jobs);
  const auto grid = uniform_grid(-1.0, 1.0, grid_points);
  const auto points = empirical_cdf(summary.values, grid);
  if (flags.out.empty()) {
    write_cdf_csv(out, points);
  } else {
    auto file = open_output(flags.out);
    write_cdf_csv(file, points);
    out << to_string(config.model) << ' ' << estimator_name << ": " << summary.values.size()
        << " values, mean=" << format_real(summary.mean) << " std=" << format_real(summary.std)
        << " n_undefined=" << summary.n_undefined << '\n';
  }
  return 0;
}

struct TheoryFlags {
  std::string formula;
  std::string alpha, beta;
  double mean = 0, var = 0;
  double mu1 = 0, mu2 = 0, mu3 = 0;
  double gamma = 0;
  double a = 0;
  int p = 1;
  bool integer = false;
  CLI::Option *alpha_opt = nullptr, *beta_opt = nullptr, *mean_opt = nullptr, *var_opt = nullptr,
              *mu1_opt = nullptr, *mu2_opt = nullptr, *mu3_opt = nullptr, *gamma_opt = nullptr,
              *a_opt = nullptr;
};

void require(const CLI::Option* opt, const std::string& formula) {
  if (opt->count() == 0) throw UsageError(opt->get_name() + ": required by --formula " + formula);
}

int theory(const TheoryFlags& t, std::ostream& out) {
  try {
    if (t.formula == "support-a") {
      require(t.alpha_opt, t.formula);
      require(t.beta_opt, t.formula);
      out << format_real(support_lower_bound(parse_real_list(t.alpha, "--alpha"),
                                             parse_real_list(t.beta, "--beta")))
          << '\n';
    } else if (t.formula == "mixture-limit") {
      require(t.mean_opt, t.formula);
      require(t.var_opt, t.formula);
      out << format_real(mixture_rho_limit(t.mean, t.var)) << '\n';
    } else if (t.formula == "intermediate-limit") {
      MomentTriple m;
      if (t.gamma_opt->count() > 0) {
        m = integer_pareto_moments(t.gamma);
        if (!std::isfinite(m.mu3))
          throw UsageError("--gamma: third moment is infinite; need gamma > 3");
      } else {
        require(t.mu1_opt, t.formula);
        require(t.mu2_opt, t.formula);
        require(t.mu3_opt, t.formula);
        m = {t.mu1, t.mu2, t.mu3};
      }
      out << show(intermediate_cm_rho_limit(m)) << '\n';
    } else if (t.formula == "bipartite-interval") {
      require(t.a_opt, t.formula);
      const auto [lo, hi] = bipartite_limit_interval(t.a);
      out << format_real(lo) << ' ' << format_real(hi) << '\n';
    } else if (t.formula == "pareto-moment") {
      require(t.gamma_opt, t.formula);
      out << format_real(t.integer ? integer_pareto_moment(t.gamma, t.p)
                                   : pareto_moment(t.gamma, t.p))
          << '\n';
    }
  } catch (const std::invalid_argument& e) {
    throw UsageError("--formula " + t.formula + ": " + e.what());
  }
  return 0;
}

int graph_stats(const std::string& path, std::uint64_t seed, std::ostream& out) {
  Graph graph;
  try {
    graph = read_edge_list_file(path);
  } catch (const EdgeListError& e) {
    throw UsageError("--edges: " + path + ": " + e.what());
  } catch (const std::runtime_error& e) {
    throw UsageError(std::string("--edges: ") + e.what());
  }
  if (graph.edge_count() == 0) throw UsageError("--edges: " + path + " contains no edges");
  out << "vertices " << graph.vertex_count() << '\n';
  out << "edges " << graph.edge_count() << '\n';
  out << "assortativity " << show(graph_assortativity(graph)) << '\n';
  const Correlation rank = graph.edge_count() >= 2 ? graph_spearman(graph, Seed{seed, 0})
                                                   : Correlation{};
  out << "spearman " << show(rank) << '\n';
  out << "lower_bound " << show(assortativity_lower_bound(graph)) << '\n';
  return 0;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Heavy-tailed samples, scale-free random graphs and degree-degree dependence"};
  app.name("heavytail");
  app.require_subcommand(1);

  ModelFlags sim_flags;
  std::string sim_estimator = "both";
  auto* sim = app.add_subcommand("simulate", "Replicate a model and summarise the estimators");
  add_model_flags(sim, sim_flags);
  sim->add_option("--estimator", sim_estimator)
      ->check(CLI::IsMember({"pearson", "spearman", "both"}))
      ->capture_default_str();

  ModelFlags cdf_flags;
  std::string cdf_estimator = "pearson";
  std::size_t grid_points = 201;
  auto* cdf_cmd = app.add_subcommand("cdf", "Empirical CDF of an estimator on a grid over [-1, 1]");
  add_model_flags(cdf_cmd, cdf_flags);
  cdf_cmd->add_option("--estimator", cdf_estimator)
      ->check(CLI::IsMember({"pearson", "spearman"}))
      ->capture_default_str();
  cdf_cmd->add_option("--grid-points", grid_points)
      ->check(CLI::Range(std::size_t{2}, std::size_t{1'000'000}))
      ->capture_default_str();

  TheoryFlags t;
  auto* th = app.add_subcommand("theory", "Evaluate a closed-form limit or bound");
  th->add_option("--formula", t.formula)
      ->required()
      ->check(CLI::IsMember(
          {"support-a", "mixture-limit", "intermediate-limit", "bipartite-interval", "pareto-moment"}));
  t.alpha_opt = th->add_option("--alpha", t.alpha, "Comma-separated coefficients");
  t.beta_opt = th->add_option("--beta", t.beta, "Comma-separated coefficients");
  t.mean_opt = th->add_option("--mean", t.mean, "E[U]");
  t.var_opt = th->add_option("--var", t.var, "Var(U)");
  t.mu1_opt = th->add_option("--mu1", t.mu1, "E[D]");
  t.mu2_opt = th->add_option("--mu2", t.mu2, "E[D^2]");
  t.mu3_opt = th->add_option("--mu3", t.mu3, "E[D^3]");
  t.gamma_opt = th->add_option("--gamma", t.gamma, "Tail exponent")->check(CLI::PositiveNumber);
  t.a_opt = th->add_option("--a", t.a, "Bipartite asymmetry a");
  th->add_option("--p", t.p, "Moment order")->check(CLI::Range(1, 64))->capture_default_str();
  th->add_flag("--integer", t.integer, "Moment of the floored law P(D >= k) = k^-gamma");

  std::string edges_path;
  std::uint64_t graph_seed = 1;
  auto* gs = app.add_subcommand("graph-stats", "Assortativity and rank correlation of an edge list");
  gs->add_option("--edges", edges_path, "Edge list: one 'u v' pair per line")->required();
  gs->add_option("--seed", graph_seed, "Seed for the rank correlation")
      ->envname("HEAVYTAIL_SEED")
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::CallForVersion&) {
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }

  try {
    if (sim->parsed()) return simulate(sim_flags, sim_estimator, out);
    if (cdf_cmd->parsed()) return cdf(cdf_flags, cdf_estimator, grid_points, out);
    if (th->parsed()) return theory(t, out);
    if (gs->parsed()) return graph_stats(edges_path, graph_seed, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const DegenerateRunError& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  return 2;
}

}  // namespace heavytail::cli
