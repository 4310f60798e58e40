#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <sstream>
#include <vector>

#include "landauer/dynamics.hpp"
#include "landauer/error.hpp"

using namespace landauer;

namespace {

CognitiveStructure basal(double s0, const char* shape = "01") {
  return CognitiveStructure({Subsumer{Shape::parse(shape), s0}});
}

double rel(double got, double want) { return std::abs(got - want) / std::abs(want); }

}  // namespace

TEST_CASE("differentiation rate examples") {
  const std::vector<InputChannel> one{{Shape::parse("10"), 1.0, std::nullopt}};
  CHECK(differentiation_rate(basal(1.0), one, 0.0)[0] == 1.0);

  const std::vector<InputChannel> silent{{Shape::parse("10"), 0.0, std::nullopt},
                                         {Shape::parse("01"), 0.0, std::nullopt}};
  CHECK(differentiation_rate(basal(4.0), silent, 0.0)[0] == 0.0);

  const std::vector<InputChannel> two{{Shape::parse("1010"), 1.0, std::nullopt},
                                      {Shape::parse("1001"), 0.5, std::nullopt}};
  CHECK(differentiation_rate(basal(2.0, "0101"), two, 0.0)[0] == doctest::Approx(2.5));
}

TEST_CASE("inputs only count inside their window") {
  const std::vector<InputChannel> windowed{
      {Shape::parse("10"), 1.0, ActiveWindow{0.5, 1.0}}};
  CHECK(differentiation_rate(basal(1.0), windowed, 0.25)[0] == 0.0);
  CHECK(differentiation_rate(basal(1.0), windowed, 0.5)[0] == 1.0);
  CHECK(differentiation_rate(basal(1.0), windowed, 1.0)[0] == 0.0);
}

TEST_CASE("differentiation rate rejects mismatched input length") {
  const std::vector<InputChannel> bad{{Shape::parse("100"), 1.0, std::nullopt}};
  CHECK_THROWS_AS(differentiation_rate(basal(1.0), bad, 0.0), ComparabilityError);
}

TEST_CASE("reconciliation rate examples") {
  CHECK(reconciliation_rate(CognitiveStructure({{Shape::parse("01"), 2.0}}, 5.0))[0] == 0.0);

  const CognitiveStructure off({{Shape::parse("01"), 1.0}, {Shape::parse("10"), 3.0}}, 0.0);
  CHECK(reconciliation_rate(off) == std::vector<double>{0.0, 0.0});

  const CognitiveStructure on({{Shape::parse("01"), 1.0}, {Shape::parse("10"), 3.0}}, 1.0);
  CHECK(reconciliation_rate(on) == std::vector<double>{3.0, 3.0});
}

TEST_CASE("structure invariants") {
  CHECK_THROWS_AS(CognitiveStructure({}), DomainError);
  CHECK_THROWS_AS(CognitiveStructure({{Shape::parse("01"), -1.0}}), DomainError);
  CHECK_THROWS_AS(CognitiveStructure({{Shape::parse("01"), 1.0}, {Shape::parse("011"), 1.0}}),
                  ComparabilityError);
}

TEST_CASE("basal solution") {
  CHECK(basal_solution(1, 1, 1, 0) == 1.0);
  CHECK(basal_solution(1, 1, 1, std::log(2.0)) == doctest::Approx(2.0).epsilon(1e-15));
  CHECK(basal_solution(3, 0, 7, 11) == 3.0);
  CHECK_THROWS_AS(basal_solution(0, 1, 1, 1), DomainError);
  CHECK_THROWS_AS(basal_solution(-1, 1, 1, 1), DomainError);
}

TEST_CASE("integrate reproduces the closed form") {
  const std::vector<InputChannel> in{{Shape::parse("10"), 1.0, std::nullopt}};
  const auto traj = integrate(basal(1.0), in, {1e-3, std::log(2.0)});
  CHECK(traj.times.front() == 0.0);
  CHECK(traj.times.back() == std::log(2.0));
  CHECK(rel(traj.final_strengths()[0], 2.0) < 1e-9);

  // D = 0.5 (0101 vs 1001), rate 2, t = 1: exponent 1.
  const std::vector<InputChannel> half{{Shape::parse("1001"), 2.0, std::nullopt}};
  const auto e = integrate(basal(1.0, "0101"), half, {1e-3, 1.0});
  CHECK(e.samples() == 1001);
  CHECK(rel(e.final_strengths()[0], std::exp(1.0)) < 1e-9);
}

TEST_CASE("sample count and grid") {
  const std::vector<InputChannel> none;
  const auto t = integrate(basal(1.0), none, {0.25, 1.0});
  CHECK(t.samples() == 5);
  CHECK(t.times == std::vector<double>{0.0, 0.25, 0.5, 0.75, 1.0});

  // A horizon that is not a whole number of steps gets one short final step.
  const auto p = integrate(basal(1.0), none, {0.3, 1.0});
  CHECK(p.samples() == 5);
  CHECK(p.times[3] == doctest::Approx(0.9));
  CHECK(p.times.back() == 1.0);
}

TEST_CASE("zero dynamics keeps the initial state") {
  const CognitiveStructure s({{Shape::parse("01"), 1.5}, {Shape::parse("10"), 0.5}}, 0.0);
  const std::vector<InputChannel> quiet{{Shape::parse("10"), 0.0, std::nullopt}};
  const auto traj = integrate(s, quiet, {1e-2, 1.0});
  for (const auto& row : traj.strengths) CHECK(row == std::vector<double>{1.5, 0.5});
}

TEST_CASE("oracle equivalence across D*I <= 2 and t_end <= 5") {
  const std::vector<std::pair<const char*, double>> cases{
      {"0101", 0.5}, {"0101", 2.0}, {"1010", 1.0}, {"1010", 2.0}, {"1101", 1.5}};
  for (auto [input, rate] : cases) {
    const auto sub = Shape::parse("0101");
    const auto in_shape = Shape::parse(input);
    const double d = matching_metric(sub, in_shape);
    const std::vector<InputChannel> in{{in_shape, rate, std::nullopt}};
    for (double t_end : {0.5, 2.0, 5.0}) {
      const auto traj = integrate(basal(0.7, "0101"), in, {1e-3, t_end});
      for (std::size_t k = 0; k < traj.samples(); k += 97) {
        CHECK(rel(traj.strengths[k][0], basal_solution(0.7, d, rate, traj.times[k])) < 1e-8);
      }
      CHECK(rel(traj.final_strengths()[0], basal_solution(0.7, d, rate, t_end)) < 1e-8);
    }
  }
}

TEST_CASE("fourth-order convergence") {
  const std::vector<InputChannel> in{{Shape::parse("10"), 1.0, std::nullopt}};
  auto max_error = [&](double dt) {
    const auto traj = integrate(basal(1.0), in, {dt, 2.0});
    double err = 0.0;
    for (std::size_t k = 0; k < traj.samples(); ++k) {
      err = std::max(err, std::abs(traj.strengths[k][0] - std::exp(traj.times[k])));
    }
    return err;
  };
  double prev = max_error(0.2);
  for (double dt : {0.1, 0.05, 0.025}) {
    const double cur = max_error(dt);
    const double ratio = prev / cur;
    CHECK(ratio > 14.0);
    CHECK(ratio < 18.0);
    prev = cur;
  }
}

TEST_CASE("monotone and nonnegative") {
  const CognitiveStructure s({{Shape::parse("0110"), 0.3},
                              {Shape::parse("1001"), 0.0},
                              {Shape::parse("1111"), 1.2}},
                             0.4);
  const std::vector<InputChannel> in{{Shape::parse("1000"), 0.8, std::nullopt},
                                     {Shape::parse("0011"), 0.2, ActiveWindow{0.1, 0.4}}};
  const auto traj = integrate(s, in, {1e-3, 1.0});
  for (const auto& row : traj.strengths) {
    for (double v : row) CHECK(v >= 0.0);
  }

  const std::vector<InputChannel> one{{Shape::parse("10"), 1.0, std::nullopt}};
  const auto b = integrate(basal(1.0), one, {1e-2, 1.0});
  for (std::size_t k = 1; k < b.samples(); ++k) {
    CHECK(b.strengths[k][0] > b.strengths[k - 1][0]);
  }
}

TEST_CASE("permuting subsumers permutes the trajectory") {
  const std::vector<Subsumer> subs{{Shape::parse("0110"), 0.3},
                                   {Shape::parse("1001"), 0.9},
                                   {Shape::parse("1100"), 1.2}};
  const std::vector<InputChannel> in{{Shape::parse("1000"), 0.8, std::nullopt}};
  const std::vector<std::size_t> perm{2, 0, 1};
  std::vector<Subsumer> permuted;
  for (auto i : perm) permuted.push_back(subs[i]);

  const auto a = integrate(CognitiveStructure(subs, 0.3), in, {1e-2, 1.0});
  const auto b = integrate(CognitiveStructure(permuted, 0.3), in, {1e-2, 1.0});
  REQUIRE(a.samples() == b.samples());
  for (std::size_t k = 0; k < a.samples(); ++k) {
    for (std::size_t j = 0; j < perm.size(); ++j) {
      CHECK(b.strengths[k][j] == doctest::Approx(a.strengths[k][perm[j]]).epsilon(1e-13));
    }
  }
}

TEST_CASE("blow-up is reported as divergence") {
  const std::vector<InputChannel> in{{Shape::parse("10"), 1000.0, std::nullopt}};
  try {
    integrate(basal(1.0), in, {0.01, 10.0});
    FAIL("expected divergence");
  } catch (const DivergenceError& e) {
    CHECK(e.time() > 0.0);
    CHECK(e.time() <= 10.0);
    CHECK(std::string(e.what()).find("t=") != std::string::npos);
  }
}

TEST_CASE("bad integration arguments") {
  const std::vector<InputChannel> none;
  CHECK_THROWS_AS(integrate(basal(1.0), none, {0.0, 1.0}), DomainError);
  CHECK_THROWS_AS(integrate(basal(1.0), none, {0.5, 0.1}), DomainError);
}

TEST_CASE("trajectory csv") {
  const CognitiveStructure s({{Shape::parse("01"), 1.0}, {Shape::parse("11"), 2.0}});
  const std::vector<InputChannel> none;
  const auto traj = integrate(s, none, {0.5, 1.0});
  std::ostringstream os;
  write_trajectory_csv(os, s, traj);
  CHECK(os.str() == "t,s_01,s_11\n0,1,2\n0.5,1,2\n1,1,2\n");
}
