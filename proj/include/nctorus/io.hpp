#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "nctorus/dirac.hpp"
#include "nctorus/summation.hpp"

namespace nctorus {

using Json = nlohmann::ordered_json;

DiffeoSpec diffeo_from_json(const Json& j, bool classical_mode = false);
Json diffeo_to_json(const DiffeoSpec& d);
/// Missing "alpha" falls back to default_alpha.
WeylElement weyl_from_json(const Json& j, std::optional<double> default_alpha = std::nullopt);
Json weyl_to_json(const WeylElement& f);

struct ExperimentConfig {
  DiffeoSpec diffeo = DiffeoSpec::benchmark();
  TruncationBox box{16, 16, 256};
  std::uint64_t seed = 20240601;
  std::optional<WeylElement> element;
  int element_support = 2;
  std::vector<int> fejer_orders{1, 2, 4, 8, 16};
  std::vector<double> abel_radii{0.5, 0.9, 0.99, 0.999};
  std::vector<double> etas{0.0, 0.5, 1.0};
  std::vector<int> dirichlet_orders{1, 10, 100};
  TransformKind mean_kind = TransformKind::Hat;
  int index_range = 8;
  int n_range = 8;
  int growth_grid = 4096;
  int growth_max = 16;
  std::map<std::string, double> tolerances;
  Json raw = Json::object();
};

ExperimentConfig config_from_json(const Json& j);
ExperimentConfig load_config(const std::filesystem::path& path);
Json config_to_json(const ExperimentConfig& c);

/// Shortest round-trip decimal form.
std::string format_double(double v);

void write_vector_csv(const std::filesystem::path& path, const GnsVector& x);
void write_coeffs_csv(const std::filesystem::path& path, const std::vector<FourierCoeffs>& tables);
void write_matrix_csv(const std::filesystem::path& path, const Eigen::MatrixXcd& dense,
                      const TruncationBox& box);

struct ConvergenceRow {
  double parameter = 0.0;
  double l2_error = 0.0;
  double sup_coeff_error = 0.0;
};

void write_convergence_csv(const std::filesystem::path& path, const std::string& parameter_name,
                           const std::vector<ConvergenceRow>& rows);
void write_resolvent_csv(const std::filesystem::path& path, const std::vector<ResolventRow>& rows);
void write_commutator_csv(const std::filesystem::path& path, const std::vector<CommutatorRow>& rows);
void write_matrix_elements_csv(const std::filesystem::path& path,
                               const std::vector<MatrixElementRow>& rows);

Json vector_to_json(const GnsVector& x);

}  // namespace nctorus
