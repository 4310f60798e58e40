#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "landauer/cognition.hpp"

namespace landauer {

enum class Side : std::uint8_t { left, right };

inline char to_char(Side s) noexcept { return s == Side::left ? 'L' : 'R'; }

struct EngineConfig {
  double temperature = 300.0;
  double epsilon = 0.0;      // measurement error probability, [0, 1/2)
  std::uint64_t cycles = 1;
  std::uint64_t seed = 0;

  /// Throws DomainError when a field is out of range.
  void validate() const;
  ThermalContext context() const { return ThermalContext(temperature); }
};

/// Outcome of one measure / feedback / reset cycle. Work is positive when
/// extracted; heat is positive when dissipated to the bath. Energies are held
/// in units of k_B T (so the per-outcome identities stay exact) and exposed in
/// joules through the accessors.
struct CycleRecord {
  std::uint64_t index = 0;
  Side true_side = Side::left;
  Side measured_side = Side::left;
  double kT = 0.0;              // joules
  double work_kT = 0.0;
  double pointwise_info = 0.0;  // nats
  double erasure_heat_kT = 0.0;

  bool correct() const noexcept { return true_side == measured_side; }
  double work_extracted() const noexcept { return work_kT * kT; }
  double erasure_heat() const noexcept { return erasure_heat_kT * kT; }
};

/// Ensemble aggregates over exactly `cycles` records.
struct Ledger {
  std::uint64_t cycles = 0;
  double kT = 0.0;
  double mean_work_kT = 0.0;
  double mean_info = 0.0;
  double mean_erasure_heat_kT = 0.0;
  double fluctuation_estimator = 0.0;  // mean of exp(W/kT - i)
  double net_mean_kT = 0.0;            // mean of (W - Q_erase) / kT
  double work_stddev_kT = 0.0;         // sample standard deviation
  double info_stddev = 0.0;            // sample standard deviation, nats

  double mean_work() const noexcept { return mean_work_kT * kT; }
  double mean_erasure_heat() const noexcept { return mean_erasure_heat_kT * kT; }
  double net_mean() const noexcept { return net_mean_kT * kT; }
  double work_standard_error_kT() const noexcept;
  double info_standard_error() const noexcept;

  friend bool operator==(const Ledger&, const Ledger&) = default;
};

/// ln 2 - H(eps) in nats, the information a binary measurement with error
/// probability eps carries about the particle side. Defined on [0, 1/2].
double mutual_information(double epsilon);

/// One cycle, drawn from the stream keyed on (seed, index). The demon
/// measures the side, moves the partition quasi-statically to the posterior
/// fractions (1 - eps, eps) and resets its one-bit memory at the Landauer
/// cost.
CycleRecord run_cycle(const EngineConfig& config, std::uint64_t index);

/// Cycles [0, config.cycles), serial reference.
std::vector<CycleRecord> simulate_cycles_serial(const EngineConfig& config);

/// Same records as simulate_cycles_serial, computed with OpenMP.
std::vector<CycleRecord> simulate_cycles(const EngineConfig& config);

/// Straight left-to-right accumulation; the reference for `aggregate`.
Ledger aggregate_serial(const std::vector<CycleRecord>& records,
                        const ThermalContext& ctx);

/// Blocked parallel reduction. Partial sums are formed over fixed-size blocks
/// and combined in block order, so the result is bit-identical for any
/// number of threads.
Ledger aggregate(const std::vector<CycleRecord>& records,
                 const ThermalContext& ctx);

/// simulate_cycles followed by aggregate.
Ledger run_ensemble(const EngineConfig& config);

/// Heat of resetting one bit of demon memory, k_B T ln 2.
double erase_memory(const ThermalContext& ctx);

/// `cycle,true_side,measured_side,w_ext_kT,i_pt_nat,erase_heat_kT`, 12
/// significant digits.
void write_ledger_csv(std::ostream& os, const std::vector<CycleRecord>& records);

/// `mean_w_kT=`, `mutual_info_nat=`, `fluct_estimator=`, `net_mean_kT=`
/// lines, six decimals.
std::string summary_block(const Ledger& ledger, double epsilon);

}  // namespace landauer
