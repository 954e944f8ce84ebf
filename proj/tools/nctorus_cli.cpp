#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>

#include "CLI11.hpp"
#include "nctorus/errors.hpp"
#include "nctorus/io.hpp"
#include "nctorus/parallel.hpp"
#include "nctorus/verify.hpp"

namespace fs = std::filesystem;
using namespace nctorus;

namespace {

struct Options {
  std::string config;
  std::string out = "nctorus_out";
  int threads = -1;
  double tol_scale = 1.0;
  std::vector<double> eta;
};

void write_json(const fs::path& path, const Json& j) {
  std::ofstream out(path);
  if (!out) throw Error("cannot open " + path.string());
  out << j.dump(2) << '\n';
}

Json effective_tolerances(const ExperimentConfig& c, double scale) {
  Json t = Json::object();
  for (const auto& [name, v] : default_tolerances()) t[name] = suite_tolerance(c, name, scale);
  return t;
}

WeylElement element_of(const ExperimentConfig& c) {
  if (c.element) return *c.element;
  std::mt19937_64 rng(c.seed);
  return random_weyl_element(c.diffeo.alpha(), c.element_support, c.element_support, rng);
}

void write_element_csv(const fs::path& path, const WeylElement& f) {
  std::ofstream out(path);
  out << "m,n,re,im\n";
  for (const auto& [a, v] : f.support())
    out << a.m << ',' << a.n << ',' << format_double(v.real()) << ',' << format_double(v.imag()) << '\n';
}

struct Outcome {
  Json summary = Json::object();
  std::vector<SuiteResult> failures;
};

void check(Outcome& o, const ExperimentConfig& c, double scale, const std::string& name,
           double observed) {
  const double tol = suite_tolerance(c, name, scale);
  o.summary[name] = {{"tolerance", tol}, {"observed", observed}};
  if (!(observed <= tol)) o.failures.push_back({name, tol, observed, false, ""});
}

Outcome cmd_star(const ExperimentConfig& c, const Options& opt, const fs::path& out) {
  Outcome o;
  const double alpha = c.diffeo.alpha();
  const WeylElement f = element_of(c);
  const WeylElement fs_ = star_product(involution(f), f);
  write_element_csv(out / "element.csv", f);
  write_element_csv(out / "star_adjoint_product.csv", fs_);
  double rel = 0.0;
  for (int m = -3; m <= 3; ++m)
    for (int n = -3; n <= 3; ++n)
      for (int M = -3; M <= 3; ++M)
        for (int N = -3; N <= 3; ++N) rel = std::max(rel, weyl_relation_check({m, n}, {M, N}, alpha));
  std::mt19937_64 rng(c.seed + 1);
  double assoc = 0.0, star = 0.0;
  for (int t = 0; t < 100; ++t) {
    const WeylElement g = random_weyl_element(alpha, 2, 2, rng);
    const WeylElement h = random_weyl_element(alpha, 2, 2, rng);
    assoc = std::max(assoc, max_deviation(star_product(star_product(f, g), h),
                                          star_product(f, star_product(g, h))));
    star = std::max(star, max_deviation(involution(star_product(f, g)),
                                        star_product(involution(g), involution(f))));
  }
  check(o, c, opt.tol_scale, "weyl.relations", rel);
  check(o, c, opt.tol_scale, "weyl.associativity", assoc);
  check(o, c, opt.tol_scale, "weyl.involution", star);
  o.summary["trace_f_star_f"] = trace(fs_).real();
  return o;
}

Outcome cmd_represent(const ExperimentConfig& c, const Options& opt, const fs::path& out) {
  Outcome o;
  const WeylElement f = element_of(c);
  const GnsOperator A = represent(f, c.diffeo, c.box);
  write_element_csv(out / "element.csv", f);
  write_matrix_csv(out / "matrix.csv", A.to_dense(), c.box);
  write_vector_csv(out / "vector.csv", A.apply(cyclic_vector(c.box)));
  double ukl = 0.0;
  const int half = std::min(c.box.K, c.box.M) / 2;
  const GnsVector xi = cyclic_vector(c.box);
  for (int k = -half; k <= half; ++k)
    for (int l = -half; l <= half; ++l)
      ukl = std::max(ukl, (build_u_kl(k, l, c.diffeo, c.box).apply(xi) - basis_vector(k, l, c.box)).norm());
  check(o, c, opt.tol_scale, "gns.u_kl", ukl);
  o.summary["lost_shifts"] = A.lost_shifts();
  return o;
}

Outcome cmd_fourier(const ExperimentConfig& c, const Options& opt, const fs::path& out) {
  Outcome o;
  const WeylElement a = element_of(c);
  const EpsilonBasis eps{ModularData(c.diffeo, c.box)};
  const FourierCoeffs hat = hat_functional(a, c.diffeo, c.box);
  const ParenRoutes routes = paren_routes(a, eps);
  write_coeffs_csv(out / "coeffs.csv", {hat, routes.via_modular});
  const RiemannLebesgueProfile rl = riemann_lebesgue_profile(a, c.diffeo, c.box);
  std::ofstream csv(out / "rl_profile.csv");
  csv << "L,shell_max\n";
  for (std::size_t L = 0; L < rl.shell_max.size(); ++L) csv << L << ',' << format_double(rl.shell_max[L]) << '\n';
  check(o, c, opt.tol_scale, "fourier.paren_routes", routes.deviation);
  o.summary["vector_norm"] = rl.vector_norm;
  o.summary["injectivity_ok"] = rl.injectivity_ok;
  return o;
}

MeanSource mean_source(const ExperimentConfig& c) { return element_of(c); }

Outcome cmd_fejer(const ExperimentConfig& c, const Options&, const fs::path& out) {
  const EpsilonBasis eps{ModularData(c.diffeo, c.box)};
  const MeanSource src = mean_source(c);
  std::vector<ConvergenceRow> rows;
  for (int N : c.fejer_orders) {
    const MeanResult r = fejer_mean(src, N, c.mean_kind, eps);
    rows.push_back({static_cast<double>(N), r.l2_error, r.sup_coeff_error});
  }
  write_convergence_csv(out / "fejer.csv", "N", rows);
  return {};
}

Outcome cmd_abel(const ExperimentConfig& c, const Options&, const fs::path& out) {
  const EpsilonBasis eps{ModularData(c.diffeo, c.box)};
  const MeanSource src = mean_source(c);
  std::vector<ConvergenceRow> rows;
  for (double r : c.abel_radii) {
    const MeanResult m = abel_mean(src, r, c.mean_kind, eps);
    rows.push_back({r, m.l2_error, m.sup_coeff_error});
  }
  write_convergence_csv(out / "abel.csv", "r", rows);
  return {};
}

Outcome cmd_dirac(const ExperimentConfig& c, const Options& opt, const fs::path& out) {
  Outcome o;
  const DiracContext ctx(c.diffeo, c.box, c.growth_grid);
  const std::vector<double> etas = opt.eta.empty() ? c.etas : opt.eta;
  const int range = std::min({c.index_range, c.box.K, c.box.M});
  const int n_range = std::min(c.n_range, c.box.K - 1);
  std::vector<MatrixElementRow> elements;
  std::vector<ResolventRow> resolvent;
  std::vector<CommutatorRow> commutator;
  double master = 0.0;
  bool master_checked = false;
  for (double eta : etas) {
    if (eta == 0.0 || eta == 0.5 || eta == 1.0) {
      for (const auto& row : matrix_element_sweep(eta, range, ctx)) {
        master = std::max(master, row.deviation);
        elements.push_back(row);
      }
      master_checked = true;
    }
    for (const auto& row : resolvent_profile(eta, n_range, ctx)) resolvent.push_back(row);
    for (const auto& row : commutator_block(eta, ShiftGenerator::Lambda, n_range, ctx)) commutator.push_back(row);
  }
  write_matrix_elements_csv(out / "matrix_elements.csv", elements);
  write_resolvent_csv(out / "resolvent.csv", resolvent);
  write_commutator_csv(out / "commutator.csv", commutator);
  if (master_checked)
    check(o, c, opt.tol_scale, c.diffeo.is_rotation() ? "dirac.master.rotation" : "dirac.master", master);
  double worst = -1.0;
  for (const auto& r : resolvent) worst = std::max(worst, -r.margin / r.bound);
  o.summary["resolvent_worst_relative_excess"] = worst;
  if (worst > 0.0) o.failures.push_back({"dirac.resolvent", 0.0, worst, false, ""});
  return o;
}

Outcome cmd_growth(const ExperimentConfig& c, const Options&, const fs::path& out) {
  const GrowthSequence g = growth_sequence(c.diffeo, c.growth_max, c.growth_grid);
  const DiracCoefficients a = a_sequence(g, c.growth_max);
  std::ofstream csv(out / "growth.csv");
  csv << "n,Gamma,a,a_neg\n";
  for (int n = 0; n <= c.growth_max; ++n)
    csv << n << ',' << format_double(g[n]) << ',' << format_double(a[n]) << ',' << format_double(a[-n]) << '\n';
  Outcome o;
  o.summary["rotation_number"] = rotation_number(c.diffeo, 1000);
  return o;
}

Outcome cmd_verify(const ExperimentConfig& c, const Options& opt, const fs::path& out) {
  const VerifyReport report = run_invariant_suite(c, opt.tol_scale);
  write_json(out / "report.json", report.to_json());
  Outcome o;
  o.failures = report.failures();
  o.summary["suites"] = report.suites.size();
  return o;
}

int resolve_threads(int flag) {
  if (flag >= 0) return flag;
  if (const char* env = std::getenv("NCTORUS_THREADS")) {
    try {
      return std::max(0, std::stoi(env));
    } catch (const std::exception&) {
      throw ConfigError(std::string("NCTORUS_THREADS is not an integer: ") + env);
    }
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Numerical experiments on the noncommutative torus crossed by a circle diffeomorphism"};
  app.require_subcommand(1);
  app.fallthrough();
  Options opt;
  app.add_option("--config", opt.config, "JSON experiment config")->check(CLI::ExistingFile);
  app.add_option("--out", opt.out, "Output directory");
  app.add_option("--threads", opt.threads, "Worker threads (0 = auto)")->check(CLI::NonNegativeNumber);
  app.add_option("--tol-scale", opt.tol_scale, "Multiplier applied to every tolerance")->check(CLI::PositiveNumber);

  using Handler = Outcome (*)(const ExperimentConfig&, const Options&, const fs::path&);
  const std::vector<std::tuple<std::string, std::string, Handler>> commands = {
      {"star", "Weyl-algebra checks", cmd_star},
      {"represent", "GNS matrices", cmd_represent},
      {"fourier", "Hat/paren tables and the Riemann-Lebesgue profile", cmd_fourier},
      {"fejer", "Fejer convergence curve", cmd_fejer},
      {"abel", "Abel convergence curve", cmd_abel},
      {"dirac", "Matrix-element sweeps and resolvent profiles", cmd_dirac},
      {"growth", "Gamma_n and a_n tables", cmd_growth},
      {"verify", "Full invariant suite", cmd_verify},
  };
  std::map<CLI::App*, std::pair<std::string, Handler>> dispatch;
  for (const auto& [name, help, fn] : commands) {
    CLI::App* sub = app.add_subcommand(name, help);
    if (name == "dirac") sub->add_option("--eta", opt.eta, "Deformation parameters in [0, 1]");
    dispatch[sub] = {name, fn};
  }
  CLI11_PARSE(app, argc, argv);

  try {
    const ExperimentConfig config = opt.config.empty() ? ExperimentConfig{} : load_config(opt.config);
    for (double e : opt.eta)
      if (!(e >= 0.0 && e <= 1.0)) throw ConfigError("--eta must lie in [0, 1]");
    const int threads = resolve_threads(opt.threads);
    set_thread_count(threads);

    const fs::path out(opt.out);
    fs::create_directories(out);
    for (const auto& [sub, entry] : dispatch) {
      if (!sub->parsed()) continue;
      const Outcome o = entry.second(config, opt, out);
      Json meta;
      meta["command"] = entry.first;
      meta["config"] = config_to_json(config);
      meta["tol_scale"] = opt.tol_scale;
      meta["tolerances"] = effective_tolerances(config, opt.tol_scale);
      meta["threads"] = threads;
      meta["summary"] = o.summary;
      write_json(out / "metadata.json", meta);
      if (!o.failures.empty()) {
        Json f = Json::array();
        for (const auto& s : o.failures)
          f.push_back({{"name", s.name}, {"tolerance", s.tolerance}, {"observed", s.observed}});
        write_json(out / "failures.json", {{"command", entry.first}, {"failures", f}});
        std::cerr << entry.first << ": " << o.failures.size() << " check(s) above tolerance, see "
                  << (out / "failures.json").string() << '\n';
        return 2;
      }
      std::error_code ec;
      fs::remove(out / "failures.json", ec);
    }
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
