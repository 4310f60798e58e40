#include <doctest.h>

#include <cmath>
#include <map>
#include <sstream>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "landauer/error.hpp"
#include "landauer/rng.hpp"
#include "landauer/szilard.hpp"

using namespace landauer;

namespace {

// Mutual information by enumerating the 2x2 joint distribution of
// (true side, measured side).
double joint_mutual_information(double eps) {
  double p[2][2];
  for (int x = 0; x < 2; ++x) {
    for (int m = 0; m < 2; ++m) p[x][m] = 0.5 * (x == m ? 1.0 - eps : eps);
  }
  double mi = 0.0;
  for (int x = 0; x < 2; ++x) {
    for (int m = 0; m < 2; ++m) {
      if (p[x][m] == 0.0) continue;
      const double px = p[x][0] + p[x][1];
      const double pm = p[0][m] + p[1][m];
      mi += p[x][m] * std::log(p[x][m] / (px * pm));
    }
  }
  return mi;
}

EngineConfig config(double eps, std::uint64_t cycles, std::uint64_t seed = 42) {
  EngineConfig c;
  c.temperature = 300.0;
  c.epsilon = eps;
  c.cycles = cycles;
  c.seed = seed;
  return c;
}

}  // namespace

TEST_CASE("mutual information matches the joint-distribution oracle") {
  CHECK(mutual_information(0.0) == doctest::Approx(0.6931471805599453).epsilon(1e-15));
  CHECK(mutual_information(0.1) == doctest::Approx(0.3680642071684971).epsilon(1e-14));
  CHECK(mutual_information(0.5) == doctest::Approx(0.0));
  for (double eps = 0.0; eps < 0.5; eps += 0.01) {
    CHECK(mutual_information(eps) == doctest::Approx(joint_mutual_information(eps)).epsilon(1e-12));
  }
}

TEST_CASE("counter rng is a pure function of its key") {
  const CounterRng a(1), b(1), c(2);
  CHECK(a.bits(5, 0) == b.bits(5, 0));
  CHECK(a.bits(5, 0) != a.bits(6, 0));
  CHECK(a.bits(5, 0) != a.bits(5, 1));
  CHECK(a.bits(5, 0) != c.bits(5, 0));

  // Rough uniformity: the mean of many draws is near 1/2.
  double sum = 0.0;
  const int n = 200000;
  for (int i = 0; i < n; ++i) {
    const double u = a.uniform(static_cast<std::uint64_t>(i), 0);
    CHECK_UNARY(u >= 0.0);
    CHECK_UNARY(u < 1.0);
    sum += u;
  }
  CHECK(sum / n == doctest::Approx(0.5).epsilon(5e-3));
}

TEST_CASE("noise-free cycle is reversible") {
  const auto cfg = config(0.0, 1);
  const double kT = cfg.context().kT();
  for (std::uint64_t i = 0; i < 50; ++i) {
    const auto r = run_cycle(cfg, i);
    CHECK(r.correct());
    CHECK(r.work_extracted() == doctest::Approx(kT * std::log(2.0)).epsilon(1e-15));
    CHECK(r.pointwise_info == doctest::Approx(std::log(2.0)).epsilon(1e-15));
    CHECK(r.erasure_heat() == doctest::Approx(kT * std::log(2.0)).epsilon(1e-15));
    CHECK(r.work_kT - r.erasure_heat_kT == 0.0);
  }
}

TEST_CASE("noisy cycle outcomes") {
  const auto cfg = config(0.1, 1);
  const double kT = cfg.context().kT();
  bool saw_right = false, saw_wrong = false;
  for (std::uint64_t i = 0; i < 200; ++i) {
    const auto r = run_cycle(cfg, i);
    if (r.correct()) {
      saw_right = true;
      CHECK(r.work_extracted() / kT == doctest::Approx(0.5877866649021191).epsilon(1e-14));
      CHECK(r.pointwise_info == doctest::Approx(std::log(1.8)).epsilon(1e-15));
    } else {
      saw_wrong = true;
      CHECK(r.work_extracted() / kT == doctest::Approx(-1.6094379124341003).epsilon(1e-14));
      CHECK(r.pointwise_info == doctest::Approx(std::log(0.2)).epsilon(1e-15));
    }
    CHECK(r.erasure_heat() >= kT * std::log(2.0) * (1 - 1e-15));
  }
  CHECK(saw_right);
  CHECK(saw_wrong);
}

TEST_CASE("run_cycle depends only on seed and index") {
  const auto cfg = config(0.25, 1, 99);
  const auto a = run_cycle(cfg, 12345);
  const auto b = run_cycle(cfg, 12345);
  CHECK(a.true_side == b.true_side);
  CHECK(a.measured_side == b.measured_side);
  CHECK(a.work_kT == b.work_kT);
}

TEST_CASE("config validation") {
  CHECK_THROWS_AS(config(0.5, 10).validate(), DomainError);
  CHECK_THROWS_AS(config(-0.1, 10).validate(), DomainError);
  CHECK_THROWS_AS(config(0.1, 0).validate(), DomainError);
  auto hot = config(0.1, 10);
  hot.temperature = 0.0;
  CHECK_THROWS_AS(hot.validate(), DomainError);
}

TEST_CASE("parallel kernel matches the serial reference") {
  const auto cfg = config(0.1, 20000, 7);
  const auto serial = simulate_cycles_serial(cfg);
  const auto parallel = simulate_cycles(cfg);
  REQUIRE(serial.size() == parallel.size());
  for (std::size_t i = 0; i < serial.size(); ++i) {
    CHECK(serial[i].index == parallel[i].index);
    CHECK(serial[i].true_side == parallel[i].true_side);
    CHECK(serial[i].measured_side == parallel[i].measured_side);
    CHECK(serial[i].work_kT == parallel[i].work_kT);
  }
  const auto ctx = cfg.context();
  const auto ls = aggregate_serial(serial, ctx);
  const auto lp = aggregate(parallel, ctx);
  CHECK(ls.cycles == lp.cycles);
  CHECK(lp.mean_work_kT == doctest::Approx(ls.mean_work_kT).epsilon(1e-12));
  CHECK(lp.mean_info == doctest::Approx(ls.mean_info).epsilon(1e-12));
  CHECK(lp.fluctuation_estimator == doctest::Approx(ls.fluctuation_estimator).epsilon(1e-12));
  CHECK(lp.work_stddev_kT == doctest::Approx(ls.work_stddev_kT).epsilon(1e-10));
}

#ifdef _OPENMP
TEST_CASE("ensemble is bit-identical across thread counts") {
  const auto cfg = config(0.05, 30001, 3);
  const int saved = omp_get_max_threads();
  omp_set_num_threads(1);
  const auto reference = run_ensemble(cfg);
  for (int threads : {2, 3, 8}) {
    omp_set_num_threads(threads);
    CHECK(run_ensemble(cfg) == reference);
  }
  omp_set_num_threads(saved);
}
#endif

TEST_CASE("ensemble statistics") {
  for (double eps : {0.0, 0.1, 0.25}) {
    const auto ledger = run_ensemble(config(eps, 50000, 11));
    const double mi = mutual_information(eps);
    CHECK(ledger.cycles == 50000);
    CHECK(std::abs(ledger.mean_work_kT - mi) <= 3.0 * ledger.work_standard_error_kT() + 1e-12);
    CHECK(std::abs(ledger.mean_info - mi) <= 3.0 * ledger.info_standard_error() + 1e-12);
    CHECK(std::abs(ledger.fluctuation_estimator - 1.0) <= 1e-12);
    CHECK(ledger.net_mean_kT <= 0.0);
    CHECK(ledger.mean_erasure_heat_kT == std::log(2.0));
    CHECK(ledger.mean_erasure_heat() == doctest::Approx(erase_memory(ThermalContext(300))).epsilon(1e-15));
  }
  const auto exact = run_ensemble(config(0.0, 100000, 1));
  CHECK(exact.mean_work_kT == std::log(2.0));
  CHECK(exact.work_stddev_kT == 0.0);
  CHECK(exact.net_mean_kT == 0.0);
  CHECK(exact.fluctuation_estimator == 1.0);
}

TEST_CASE("erasure equals the Landauer magnitude") {
  for (double t : {1.0, 77.0, 300.0, 310.0, 1000.0}) {
    const ThermalContext ctx(t);
    CHECK(erase_memory(ctx) == -landauer_bound(ctx));
    CHECK(erase_memory(ctx) == doctest::Approx(-energy_bound(2.0, -1.0, ctx)).epsilon(1e-15));
  }
  CHECK(erase_memory(ThermalContext(300)) == doctest::Approx(2.870978885078724e-21).epsilon(1e-12));
  CHECK(erase_memory(ThermalContext(310)) == doctest::Approx(2.9666781812480147e-21).epsilon(1e-12));
}

TEST_CASE("ledger csv and summary") {
  const auto cfg = config(0.0, 2, 5);
  const auto records = simulate_cycles(cfg);
  std::ostringstream os;
  write_ledger_csv(os, records);
  const std::string csv = os.str();
  CHECK(csv.rfind("cycle,true_side,measured_side,w_ext_kT,i_pt_nat,erase_heat_kT\n", 0) == 0);
  std::string expected_row = std::string("0,") + to_char(records[0].true_side) + "," +
                             to_char(records[0].measured_side) +
                             ",0.69314718056,0.69314718056,0.69314718056\n";
  CHECK(csv.find(expected_row) != std::string::npos);

  const auto ledger = aggregate(records, cfg.context());
  CHECK(summary_block(ledger, 0.0) ==
        "mean_w_kT=0.693147\nmutual_info_nat=0.693147\nfluct_estimator=1.000000\n"
        "net_mean_kT=0.000000\n");
}
