#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "descm/config.hpp"

using namespace descm;

TEST_CASE("builtin name expands with its exact ground state") {
  const StudyConfig cfg = parse_config(R"({"potential": "V1"})");
  CHECK(cfg.potential.coefficient(-2) == 2.0);
  CHECK(cfg.potential.coefficient(-1) == -16.0);
  CHECK(cfg.potential.coefficient(2) == 1.0 / 16);
  REQUIRE(cfg.exact_eigenvalues.size() == 1);
  CHECK(cfg.exact_eigenvalues[0] == -14.75);
  // defaults
  CHECK(cfg.tau == 1.0);
  CHECK(cfg.threshold == 5e-12);
  CHECK(cfg.rate_mode == RateMode::PaperRates);
  CHECK(cfg.map.variant() == MapVariant::Generalized);
  CHECK(cfg.map.a() == 1.05);
  CHECK(cfg.map.d() == 0.94);
  REQUIRE(cfg.N_grid.size() == 9);  // 10:50:5
  CHECK(cfg.N_grid.front() == 10);
  CHECK(cfg.N_grid.back() == 50);
  CHECK_FALSE(cfg.gamma_override.has_value());
  CHECK_FALSE(cfg.B_override.has_value());
}

TEST_CASE("explicit coefficient pairs") {
  const StudyConfig cfg = parse_config(
      R"({"potential": [[-2, 2.0], [2, 1.0]], "exact_eigenvalues": [5.0]})");
  CHECK(cfg.potential.degree() == 2);
  CHECK(cfg.potential.singular_coefficient() == 2.0);
  CHECK(cfg.exact_eigenvalues == std::vector<double>{5.0});
}

TEST_CASE("explicit exact_eigenvalues override the builtin ones") {
  const StudyConfig cfg =
      parse_config(R"({"potential": "V5", "exact_eigenvalues": [5.0, 9.0]})");
  CHECK(cfg.exact_eigenvalues == std::vector<double>({5.0, 9.0}));
}

TEST_CASE("map forms") {
  CHECK(parse_config(R"({"potential": "V5", "map": "simple"})").map.variant() ==
        MapVariant::Simple);
  const auto m =
      parse_config(R"({"potential": "V5", "map": {"variant": "general", "b": 2.0}})").map;
  CHECK(m.b() == 2.0);
  CHECK(m.a() == 1.05);  // untouched parameters keep their defaults
}

TEST_CASE("n_grid forms") {
  CHECK(parse_config(R"({"potential": "V5", "n_grid": "4:10:3"})").N_grid ==
        std::vector<int>({4, 7, 10}));
  CHECK(parse_config(R"({"potential": "V5", "n_grid": "25"})").N_grid ==
        std::vector<int>({25}));
  CHECK(parse_config(R"({"potential": "V5", "n_grid": [3, 9, 27]})").N_grid ==
        std::vector<int>({3, 9, 27}));
}

TEST_CASE("rate_mode, tau, threshold, overrides") {
  const StudyConfig cfg = parse_config(
      R"({"potential": "V5", "rate_mode": "carried", "tau": 2.5,
          "threshold": 1e-9, "gamma": 3.0, "big_b": 0.25})");
  CHECK(cfg.rate_mode == RateMode::ExponentCarried);
  CHECK(cfg.tau == 2.5);
  CHECK(cfg.threshold == 1e-9);
  REQUIRE(cfg.gamma_override.has_value());
  CHECK(*cfg.gamma_override == 3.0);
  CHECK(*cfg.B_override == 0.25);
  // and the profile reflects them, d_strip included
  const DecayProfile prof = study_profile(cfg);
  CHECK(prof.gamma == 3.0);
  CHECK(prof.B == 0.25);
  CHECK(prof.d_strip == doctest::Approx(M_PI / 6.0).epsilon(1e-15));
}

TEST_CASE("rejected configs") {
  CHECK_THROWS(parse_config("not json"));
  CHECK_THROWS(parse_config("[1, 2]"));                                   // not an object
  CHECK_THROWS(parse_config(R"({"potential": "V1", "bogus": 1})"));       // unknown key
  CHECK_THROWS(parse_config(R"({"tau": 2.0})"));                          // no potential
  CHECK_THROWS(parse_config(R"({"potential": "V99"})"));                  // unknown name
  CHECK_THROWS(parse_config(R"({"potential": [[0, 3.0], [2, 1.0]]})"));   // a_0 != 0
  CHECK_THROWS(parse_config(R"({"potential": [[2]]})"));                  // malformed pair
  CHECK_THROWS(parse_config(R"({"potential": "V5", "map": "fancy"})"));   // bad variant
  CHECK_THROWS(parse_config(R"({"potential": "V5", "map": {"e": 1}})"));  // bad map key
  CHECK_THROWS(parse_config(R"({"potential": "V5", "rate_mode": "x"})"));
  CHECK_THROWS(parse_config(R"({"potential": "V5", "n_grid": "10:5:1"})"));
}

TEST_CASE("parse_n_range") {
  CHECK(parse_n_range("10:50:5") ==
        std::vector<int>({10, 15, 20, 25, 30, 35, 40, 45, 50}));
  CHECK(parse_n_range("7:7:1") == std::vector<int>({7}));
  CHECK(parse_n_range("1:100:1").size() == 100);
  CHECK(parse_n_range("42") == std::vector<int>({42}));
  CHECK_THROWS(parse_n_range("10:50"));
  CHECK_THROWS(parse_n_range("10:50:0"));
  CHECK_THROWS(parse_n_range("50:10:5"));
  CHECK_THROWS(parse_n_range("a:b:c"));
}

TEST_CASE("parse_coeff_list") {
  const auto coeffs = parse_coeff_list("-2:2,-1:-16,1:2,2:0.0625");
  REQUIRE(coeffs.size() == 4);
  CHECK(coeffs[0] == std::pair<int, double>(-2, 2.0));
  CHECK(coeffs[3] == std::pair<int, double>(2, 0.0625));
  CHECK_THROWS(parse_coeff_list("1:2:3"));
  CHECK_THROWS(parse_coeff_list("x:1"));
  CHECK_THROWS(parse_coeff_list("1:y"));
}
