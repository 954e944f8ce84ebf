#include "nctorus/io.hpp"

#include <charconv>
#include <fstream>

#include "nctorus/errors.hpp"

namespace nctorus {

namespace {

template <class T>
T get_or(const Json& j, const char* key, T fallback) {
  if (!j.contains(key)) return fallback;
  try {
    return j.at(key).get<T>();
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(std::string("bad value for '") + key + "': " + e.what());
  }
}

std::vector<double> number_list(const Json& j, const char* key) {
  if (!j.contains(key)) return {};
  const Json& v = j.at(key);
  if (!v.is_array()) throw ConfigError(std::string("'") + key + "' must be an array");
  std::vector<double> out;
  for (const auto& x : v) {
    if (!x.is_number()) throw ConfigError(std::string("'") + key + "' must hold numbers");
    out.push_back(x.get<double>());
  }
  return out;
}

std::ofstream open_csv(const std::filesystem::path& path) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::ofstream out(path);
  if (!out) throw Error("cannot open " + path.string());
  return out;
}


}  // namespace

std::string format_double(double v) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

DiffeoSpec diffeo_from_json(const Json& j, bool classical_mode) {
  if (j.is_string()) {
    const auto name = j.get<std::string>();
    if (name == "benchmark") return DiffeoSpec::benchmark();
    throw ConfigError("unknown diffeo preset '" + name + "'");
  }
  if (!j.is_object()) throw ConfigError("diffeo must be an object or a preset name");
  if (!j.contains("alpha")) throw ConfigError("diffeo.alpha is required");
  const double alpha = get_or<double>(j, "alpha", 0.0);
  std::vector<double> sin_c, cos_c;
  if (j.contains("conjugator")) {
    const Json& c = j.at("conjugator");
    if (!c.is_object()) throw ConfigError("diffeo.conjugator must be an object");
    sin_c = number_list(c, "sin");
    cos_c = number_list(c, "cos");
  }
  try {
    return DiffeoSpec(ConjugatorLift(sin_c, cos_c), alpha, classical_mode);
  } catch (const ConfigError&) {
    throw;
  } catch (const Error& e) {
    throw ConfigError(std::string("invalid diffeo: ") + e.what());
  }
}

Json diffeo_to_json(const DiffeoSpec& d) {
  Json j;
  j["alpha"] = d.alpha();
  j["conjugator"] = {{"sin", d.conjugator().sin_coeffs()}, {"cos", d.conjugator().cos_coeffs()}};
  return j;
}

WeylElement weyl_from_json(const Json& j, std::optional<double> default_alpha) {
  if (!j.is_object()) throw ConfigError("element must be an object");
  const double alpha = j.contains("alpha") ? get_or<double>(j, "alpha", 0.0)
                       : default_alpha     ? *default_alpha
                                           : throw ConfigError("element.alpha is required");
  if (!j.contains("coeffs") || !j.at("coeffs").is_array())
    throw ConfigError("element.coeffs must be an array");
  int S1 = 0, S2 = 0;
  for (const auto& e : j.at("coeffs")) {
    S1 = std::max(S1, std::abs(get_or<int>(e, "m", 0)));
    S2 = std::max(S2, std::abs(get_or<int>(e, "n", 0)));
  }
  WeylElement f(alpha, S1, S2);
  for (const auto& e : j.at("coeffs")) {
    if (!e.contains("m") || !e.contains("n")) throw ConfigError("coefficient needs m and n");
    f.add({e.at("m").get<int>(), e.at("n").get<int>()},
          {get_or<double>(e, "re", 0.0), get_or<double>(e, "im", 0.0)});
  }
  return f;
}

Json weyl_to_json(const WeylElement& f) {
  Json coeffs = Json::array();
  for (const auto& [a, v] : f.support())
    coeffs.push_back({{"m", a.m}, {"n", a.n}, {"re", v.real()}, {"im", v.imag()}});
  return {{"alpha", f.alpha()}, {"coeffs", coeffs}};
}

ExperimentConfig config_from_json(const Json& j) {
  if (!j.is_object()) throw ConfigError("config must be a JSON object");
  ExperimentConfig c;
  c.raw = j;
  const bool classical = get_or<bool>(j, "classical_mode", false);
  if (j.contains("diffeo")) {
    Json dj = j.at("diffeo");
    if (j.contains("alpha") && dj.is_object()) dj["alpha"] = j.at("alpha");
    c.diffeo = diffeo_from_json(dj, classical);
  } else if (j.contains("alpha")) {
    c.diffeo = diffeo_from_json(Json{{"alpha", j.at("alpha")}}, classical);
  }
  if (c.diffeo.alpha() >= 0.5) throw ConfigError("alpha must lie in [0, 1/2)");
  if (c.diffeo.alpha() == 0.0 && !c.diffeo.classical_mode())
    throw ConfigError("alpha = 0 requires classical_mode");

  if (j.contains("truncation")) {
    const Json& t = j.at("truncation");
    const int K = get_or<int>(t, "K", 16);
    const int M = get_or<int>(t, "M", 16);
    if (K <= 0 || M <= 0) throw ConfigError("truncation bounds must be positive");
    const int G = get_or<int>(t, "G", default_grid_size(M));
    try {
      c.box = TruncationBox(K, M, G);
    } catch (const Error& e) {
      throw ConfigError(std::string("invalid truncation: ") + e.what());
    }
  }
  c.seed = get_or<std::uint64_t>(j, "seed", c.seed);
  if (j.contains("element")) c.element = weyl_from_json(j.at("element"), c.diffeo.alpha());
  c.element_support = get_or<int>(j, "element_support", c.element_support);
  if (c.element_support <= 0) throw ConfigError("element_support must be positive");

  if (j.contains("fejer")) {
    auto v = number_list(j.at("fejer"), "N");
    if (!v.empty()) c.fejer_orders.assign(v.begin(), v.end());
  }
  if (j.contains("abel")) {
    auto v = number_list(j.at("abel"), "r");
    if (!v.empty()) c.abel_radii = v;
  }
  for (double r : c.abel_radii)
    if (!(r > 0.0 && r < 1.0)) throw ConfigError("abel radii must lie in (0, 1)");
  for (int N : c.fejer_orders)
    if (N < 0) throw ConfigError("fejer orders must be non-negative");
  if (j.contains("dirac")) {
    const Json& dj = j.at("dirac");
    auto v = number_list(dj, "eta");
    if (!v.empty()) c.etas = v;
    c.index_range = get_or<int>(dj, "index_range", c.index_range);
    c.n_range = get_or<int>(dj, "n_range", c.n_range);
  }
  for (double eta : c.etas)
    if (!(eta >= 0.0 && eta <= 1.0)) throw ConfigError("eta must lie in [0, 1]");
  if (c.index_range <= 0 || c.n_range <= 0) throw ConfigError("dirac ranges must be positive");
  if (j.contains("growth")) {
    const Json& g = j.at("growth");
    c.growth_grid = get_or<int>(g, "grid", c.growth_grid);
    c.growth_max = get_or<int>(g, "n_max", c.growth_max);
  }
  if (c.growth_grid <= 0 || c.growth_max <= 0) throw ConfigError("growth settings must be positive");
  if (j.contains("dirichlet")) {
    auto v = number_list(j.at("dirichlet"), "n");
    if (!v.empty()) c.dirichlet_orders.assign(v.begin(), v.end());
  }
  if (j.contains("kind")) {
    const auto k = get_or<std::string>(j, "kind", "hat");
    if (k == "hat") c.mean_kind = TransformKind::Hat;
    else if (k == "paren") c.mean_kind = TransformKind::Paren;
    else throw ConfigError("kind must be 'hat' or 'paren'");
  }
  if (j.contains("tolerances")) {
    const Json& t = j.at("tolerances");
    if (!t.is_object()) throw ConfigError("tolerances must be an object");
    for (const auto& [k, v] : t.items()) {
      if (!v.is_number() || v.get<double>() <= 0.0)
        throw ConfigError("tolerance '" + k + "' must be a positive number");
      c.tolerances[k] = v.get<double>();
    }
  }
  return c;
}

ExperimentConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot read config " + path.string());
  Json j;
  try {
    j = Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw ConfigError("config parse error: " + std::string(e.what()));
  }
  return config_from_json(j);
}

Json config_to_json(const ExperimentConfig& c) {
  Json j;
  j["diffeo"] = diffeo_to_json(c.diffeo);
  j["classical_mode"] = c.diffeo.classical_mode();
  j["truncation"] = {{"K", c.box.K}, {"M", c.box.M}, {"G", c.box.G}};
  j["seed"] = c.seed;
  if (c.element) j["element"] = weyl_to_json(*c.element);
  j["element_support"] = c.element_support;
  j["fejer"] = {{"N", c.fejer_orders}};
  j["abel"] = {{"r", c.abel_radii}};
  j["dirac"] = {{"eta", c.etas}, {"index_range", c.index_range}, {"n_range", c.n_range}};
  j["growth"] = {{"grid", c.growth_grid}, {"n_max", c.growth_max}};
  j["dirichlet"] = {{"n", c.dirichlet_orders}};
  j["kind"] = kind_name(c.mean_kind);
  j["tolerances"] = Json::object();
  for (const auto& [k, v] : c.tolerances) j["tolerances"][k] = v;
  return j;
}

void write_vector_csv(const std::filesystem::path& path, const GnsVector& x) {
  auto out = open_csv(path);
  out << "k,l,re,im\n";
  const auto& b = x.box();
  for (int k = -b.K; k <= b.K; ++k)
    for (int l = -b.M; l <= b.M; ++l) {
      const cplx v = x.at(k, l);
      out << k << ',' << l << ',' << format_double(v.real()) << ',' << format_double(v.imag())
          << '\n';
    }
}

void write_coeffs_csv(const std::filesystem::path& path, const std::vector<FourierCoeffs>& tables) {
  auto out = open_csv(path);
  out << "kind,k,l,re,im,abs\n";
  for (const auto& t : tables)
    for (int k = -t.K(); k <= t.K(); ++k)
      for (int l = -t.M(); l <= t.M(); ++l) {
        const cplx v = t.at(k, l);
        out << kind_name(t.kind()) << ',' << k << ',' << l << ',' << format_double(v.real()) << ','
            << format_double(v.imag()) << ',' << format_double(std::abs(v)) << '\n';
      }
}

void write_matrix_csv(const std::filesystem::path& path, const Eigen::MatrixXcd& dense,
                      const TruncationBox& box) {
  auto out = open_csv(path);
  out << "k,l,r,s,re,im\n";
  for (int k = -box.K; k <= box.K; ++k)
    for (int l = -box.M; l <= box.M; ++l)
      for (int r = -box.K; r <= box.K; ++r)
        for (int s = -box.M; s <= box.M; ++s) {
          const cplx v = dense(box.index(k, l), box.index(r, s));
          if (v == cplx{}) continue;
          out << k << ',' << l << ',' << r << ',' << s << ',' << format_double(v.real()) << ','
              << format_double(v.imag()) << '\n';
        }
}

void write_convergence_csv(const std::filesystem::path& path, const std::string& parameter_name,
                           const std::vector<ConvergenceRow>& rows) {
  auto out = open_csv(path);
  out << parameter_name << ",l2_error,sup_coeff_error\n";
  for (const auto& r : rows)
    out << format_double(r.parameter) << ',' << format_double(r.l2_error) << ','
        << format_double(r.sup_coeff_error) << '\n';
}

void write_resolvent_csv(const std::filesystem::path& path, const std::vector<ResolventRow>& rows) {
  auto out = open_csv(path);
  out << "n,eta,sigma_min,bound,margin\n";
  for (const auto& r : rows)
    out << r.n << ',' << format_double(r.eta) << ',' << format_double(r.sigma_min) << ','
        << format_double(r.bound) << ',' << format_double(r.margin) << '\n';
}

void write_commutator_csv(const std::filesystem::path& path,
                          const std::vector<CommutatorRow>& rows) {
  auto out = open_csv(path);
  out << "n,eta,norm,bound\n";
  for (const auto& r : rows)
    out << r.n << ',' << format_double(r.eta) << ',' << format_double(r.norm) << ','
        << format_double(r.bound) << '\n';
}

void write_matrix_elements_csv(const std::filesystem::path& path,
                               const std::vector<MatrixElementRow>& rows) {
  auto out = open_csv(path);
  out << "eta,k,l,r,s,closed_re,closed_im,oracle_re,oracle_im,deviation\n";
  for (const auto& r : rows)
    out << format_double(r.eta) << ',' << r.k << ',' << r.l << ',' << r.r << ',' << r.s << ','
        << format_double(r.closed_form.real()) << ',' << format_double(r.closed_form.imag()) << ','
        << format_double(r.oracle.real()) << ',' << format_double(r.oracle.imag()) << ','
        << format_double(r.deviation) << '\n';
}

Json vector_to_json(const GnsVector& x) {
  Json coeffs = Json::array();
  const auto& b = x.box();
  for (int k = -b.K; k <= b.K; ++k)
    for (int l = -b.M; l <= b.M; ++l) {
      const cplx v = x.at(k, l);
      if (v != cplx{}) coeffs.push_back({{"k", k}, {"l", l}, {"re", v.real()}, {"im", v.imag()}});
    }
  return {{"K", b.K}, {"M", b.M}, {"G", b.G}, {"coeffs", coeffs}};
}

}  // namespace nctorus
