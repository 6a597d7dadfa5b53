#include <cstdio>
#include <string>

#include <doctest.h>

#include "tdom/series_json.hpp"
#include "test_util.hpp"

using namespace tdom;

TEST_CASE("format_real17 round-trips doubles") {
  CHECK(format_real17(0.25) == "0.25");
  CHECK(std::stod(format_real17(1.0 / 3.0)) == 1.0 / 3.0);
  tdom::Rng rng(31);
  for (int i = 0; i < 200; ++i) {
    const double x = rng.uniform(-1e8, 1e8) * std::pow(10.0, rng.uniform(-30.0, 30.0));
    CHECK(std::stod(format_real17(x)) == x);
  }
}

TEST_CASE("series JSON round trip is exact") {
  tdom::Rng rng(32);
  const PowerSeries f = tdt::random_series(rng, 25, 500.0);
  const PowerSeries g = series_from_json(series_to_json(f));
  CHECK(g.label() == f.label());
  CHECK(g.order() == f.order());
  for (int k = 0; k <= f.order(); ++k) CHECK(g.coeff(k) == f.coeff(k));
}

TEST_CASE("series JSON file round trip") {
  tdom::Rng rng(33);
  const PowerSeries f = tdt::random_series(rng, 10, 100.0);
  const std::string path = "tdom_test_series.json";
  write_series_file(path, f);
  const PowerSeries g = read_series_file(path);
  for (int k = 0; k <= f.order(); ++k) CHECK(g.coeff(k) == f.coeff(k));
  std::remove(path.c_str());
}

TEST_CASE("series JSON rejects malformed input") {
  CHECK_THROWS_AS(series_from_json("not json"), std::runtime_error);
  CHECK_THROWS_AS(series_from_json(R"({"label":"x","order":1,"coeffs":[[1,0,0]]})"), std::runtime_error);
  CHECK_THROWS_AS(series_from_json(R"({"label":"x","order":0,"coeffs":[[1,0,0.5]]})"), std::runtime_error);
  CHECK_THROWS_AS(series_from_json(R"({"label":"x","order":0,"coeffs":[[1,0]]})"), std::runtime_error);
  CHECK_THROWS_AS(series_from_json(R"({"order":0,"coeffs":[[1,0,0]]})"), std::runtime_error);
  CHECK_THROWS_AS(series_from_json(R"({"label":"x","order":-1,"coeffs":[]})"), std::runtime_error);
}

TEST_CASE("loaded coefficients are normalized") {
  const PowerSeries f = series_from_json(R"({"label":"x","order":1,"coeffs":[[4,0,0],[0.25,0,2]]})");
  CHECK(f.coeff(0).re == 1.0);
  CHECK(f.coeff(0).exp2 == 2);
  CHECK(f.coeff(1).re == 1.0);
  CHECK(f.coeff(1).exp2 == 0);
}
