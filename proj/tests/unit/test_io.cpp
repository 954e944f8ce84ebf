#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>

#include "nctorus/errors.hpp"
#include "nctorus/io.hpp"
#include "nctorus/verify.hpp"

using namespace nctorus;

TEST(Io, DiffeoRoundTrip) {
  const DiffeoSpec d = DiffeoSpec::benchmark();
  const DiffeoSpec e = diffeo_from_json(diffeo_to_json(d));
  EXPECT_EQ(e.alpha(), d.alpha());
  EXPECT_EQ(e.conjugator().sin_coeffs(), d.conjugator().sin_coeffs());
  EXPECT_FALSE(e.is_rotation());
  EXPECT_EQ(diffeo_from_json(Json("benchmark")).alpha(), d.alpha());
}

TEST(Io, WeylRoundTrip) {
  WeylElement f(0.2, 2, 1);
  f.set({1, -1}, cplx(0.5, -2.0));
  f.set({-2, 0}, 3.0);
  const WeylElement g = weyl_from_json(weyl_to_json(f));
  EXPECT_EQ(max_deviation(f, g), 0.0);
  EXPECT_THROW(weyl_from_json(Json{{"coeffs", Json::array()}}), ConfigError);
}

TEST(Io, ConfigDefaultsAndOverrides) {
  const ExperimentConfig c = config_from_json(Json::parse(R"({
    "diffeo": {"alpha": 0.3},
    "truncation": {"K": 4, "M": 6},
    "seed": 5,
    "fejer": {"N": [1, 2]},
    "dirac": {"eta": [0.25]},
    "kind": "paren",
    "tolerances": {"gns.u_kl": 1e-6}
  })"));
  EXPECT_EQ(c.box.K, 4);
  EXPECT_EQ(c.box.G, 64);
  EXPECT_EQ(c.seed, 5u);
  EXPECT_EQ(c.fejer_orders, (std::vector<int>{1, 2}));
  EXPECT_EQ(c.etas, (std::vector<double>{0.25}));
  EXPECT_EQ(c.mean_kind, TransformKind::Paren);
  EXPECT_DOUBLE_EQ(suite_tolerance(c, "gns.u_kl", 10.0), 1e-5);
  EXPECT_EQ(suite_tolerance(c, "weyl.relations", 1.0), 1e-14);
  const ExperimentConfig back = config_from_json(config_to_json(c));
  EXPECT_EQ(config_to_json(back).dump(), config_to_json(c).dump());
}

TEST(Io, ConfigErrors) {
  auto bad = [](const char* text) { return config_from_json(Json::parse(text)); };
  EXPECT_THROW(bad(R"({"diffeo": {"alpha": 0.0}})"), ConfigError);
  EXPECT_NO_THROW(bad(R"({"diffeo": {"alpha": 0.0}, "classical_mode": true})"));
  EXPECT_THROW(bad(R"({"diffeo": {"alpha": 0.5}})"), ConfigError);
  EXPECT_THROW(bad(R"({"truncation": {"K": 0}})"), ConfigError);
  EXPECT_THROW(bad(R"({"truncation": {"K": 4, "M": 8, "G": 16}})"), ConfigError);
  EXPECT_THROW(bad(R"({"diffeo": {"alpha": 0.3, "conjugator": {"sin": [0.5]}}})"), ConfigError);
  EXPECT_THROW(bad(R"({"kind": "other"})"), ConfigError);
  EXPECT_THROW(bad(R"({"dirac": {"eta": [1.5]}})"), ConfigError);
  EXPECT_THROW(bad(R"({"tolerances": {"gns.u_kl": -1}})"), ConfigError);
  EXPECT_THROW(bad(R"([1, 2])"), ConfigError);
  const auto path = std::filesystem::temp_directory_path() / "nctorus_bad_config.json";
  std::ofstream(path) << "{ not json";
  EXPECT_THROW(load_config(path), ConfigError);
  EXPECT_THROW(load_config("/nonexistent/config.json"), ConfigError);
}

TEST(Io, CsvFormat) {
  const auto dir = std::filesystem::temp_directory_path() / "nctorus_csv_test";
  const TruncationBox box(1, 1, 16);
  GnsVector x(box);
  x.set(1, -1, cplx(0.1, -2.5));
  write_vector_csv(dir / "v.csv", x);
  std::ifstream in(dir / "v.csv");
  std::string header, line;
  std::getline(in, header);
  EXPECT_EQ(header, "k,l,re,im");
  int rows = 0;
  bool found = false;
  while (std::getline(in, line)) {
    ++rows;
    found = found || line == "1,-1,0.1,-2.5";
  }
  EXPECT_EQ(rows, 9);
  EXPECT_TRUE(found);
  EXPECT_EQ(format_double(0.1), "0.1");
  EXPECT_EQ(format_double(1e-300), "1e-300");
}
