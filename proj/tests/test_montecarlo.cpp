#include <doctest.h>

#include <cmath>
#include <set>

#include "dde/error.hpp"
#include "dde/montecarlo.hpp"

using namespace dde;

TEST_CASE("simulation alternatives") {
  const auto normal = standard_alternatives(Family::Normal);
  REQUIRE(normal.size() == 4);
  CHECK(normal[0].family == Family::Laplace);
  CHECK(normal[1].family == Family::Logistic);
  CHECK(normal[2] == make_model(Family::Cauchy, {0.0, 1.0}));
  CHECK(normal[3].family == Family::ScaledStudentT);

  const auto gamma = standard_alternatives(Family::Gamma);
  REQUIRE(gamma.size() == 4);
  CHECK(gamma[2] == make_model(Family::InverseGaussian, {3.0, 9.0}));
  CHECK(mean_of(gamma[2]) == 3.0);
  CHECK(variance_of(gamma[2]) == 3.0);

  const auto expo = standard_alternatives(Family::Exponential);
  CHECK(expo[0].family == Family::Rayleigh);
  CHECK(mean_of(expo[0]) == doctest::Approx(3.8261).epsilon(1e-4));

  const auto laplace = standard_alternatives(Family::Laplace);
  CHECK(laplace[0] == make_model(Family::Normal, {0.0, 1.0}));
  CHECK(variance_of(simulated_null_member(Family::Laplace)) == doctest::Approx(1.0));

  CHECK_THROWS_AS(standard_alternatives(Family::Lognormal), Error);
  CHECK_THROWS_AS(simulated_null_member(Family::GeneralizedGamma), Error);
}

TEST_CASE("cell seeds separate cells") {
  const auto d = make_model(Family::Normal, {0.0, 1.0});
  std::set<std::uint64_t> seeds;
  for (std::size_t n : {50, 100, 250, 500}) {
    seeds.insert(cell_seed(1, Family::Normal, d, n));
    seeds.insert(cell_seed(1, Family::Laplace, d, n));
    seeds.insert(cell_seed(2, Family::Normal, d, n));
    seeds.insert(cell_seed(1, Family::Normal, make_model(Family::Normal, {0.0, 1.5}), n));
  }
  CHECK(seeds.size() == 16);
  CHECK(cell_seed(9, Family::Gamma, d, 70) == cell_seed(9, Family::Gamma, d, 70));
}

TEST_CASE("experiment preconditions") {
  ExperimentSpec spec;
  spec.dgp = make_model(Family::Normal, {0.0, 1.0});
  spec.n_grid = {50};
  spec.reps = 0;
  CHECK_THROWS_AS(run_experiment(spec), Error);
  spec.reps = 2;
  spec.n_grid = {2};
  CHECK_THROWS_AS(run_experiment(spec), Error);
  spec.n_grid = {};
  CHECK_THROWS_AS(run_experiment(spec), Error);
  spec.n_grid = {50};
  spec.null_family = Family::Cauchy;
  CHECK_THROWS_AS(run_experiment(spec), Error);
}

TEST_CASE("experiment cells are deterministic and well formed") {
  ExperimentSpec spec;
  spec.null_family = Family::Normal;
  spec.dgp = make_model(Family::Cauchy, {0.0, 1.0});
  spec.n_grid = {30, 60};
  spec.reps = 24;
  spec.n_boot = 49;
  spec.master_seed = 5;
  spec.threads = 1;
  const SimReport a = run_experiment(spec);
  spec.threads = 4;
  const SimReport b = run_experiment(spec);
  CHECK(a == b);
  REQUIRE(a.cells.size() == 2);
  for (const SimCell& c : a.cells) {
    CHECK(c.reps + c.failures == 24);
    CHECK(c.rate == static_cast<double>(c.rejections) / c.reps);
    CHECK(c.mc_se == doctest::Approx(std::sqrt(c.rate * (1 - c.rate) / c.reps)));
    CHECK(c.rate > 0.5);  // Cauchy against a Normal null
  }
  CHECK(a.cells[0].n == 30);
  CHECK(a.cells[1].n == 60);
}

TEST_CASE("single-replicate campaign") {
  ExperimentSpec spec;
  spec.null_family = Family::Gamma;
  spec.dgp = make_model(Family::Weibull, {1.7915, 3.3727});
  spec.n_grid = {40};
  spec.reps = 1;
  spec.n_boot = 20;
  const SimReport r = run_experiment(spec);
  REQUIRE(r.cells.size() == 1);
  CHECK(r.cells[0].reps == 1);
  CHECK((r.cells[0].rate == 0.0 || r.cells[0].rate == 1.0));
  CHECK(r.cells[0].mc_se == 0.0);
}
