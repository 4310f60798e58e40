#pragma once

#include <string>
#include <string_view>

namespace landauer {

inline constexpr double kBoltzmann = 1.380649e-23;  // J/K, exact SI value
inline constexpr double kLn2 = 0.693147180559945309417232121458176568;

/// Temperature and Boltzmann constant; converts information in nats to
/// joules.
class ThermalContext {
public:
  explicit ThermalContext(double temperature_kelvin);

  double temperature() const noexcept { return temperature_; }
  double boltzmann() const noexcept { return kBoltzmann; }
  /// k_B * T in joules.
  double kT() const noexcept { return kBoltzmann * temperature_; }

private:
  double temperature_;
};

/// Knowledge eigenvalue K of a mind state. Always positive.
class MindState {
public:
  explicit MindState(double k);
  double k() const noexcept { return k_; }

private:
  double k_;
};

/// Identifies a subsumer strength s(t) with the knowledge eigenvalue K.
MindState mind_state_from_strength(double strength);

enum class Phase { retained, obliterated };

std::string_view to_string(Phase phase);

/// Before/after record of one state transition K(S) + I -> K(S + dS).
struct Transition {
  MindState before;
  MindState after;
  double delta_k = 0.0;      // after.k() - before.k()
  double duration = 1.0;     // dt of the transition
  double pending_info = 0.0; // information held in the dissociable product
  Phase phase = Phase::retained;

  double relative_change() const noexcept { return delta_k / before.k(); }
};

/// Anchors `info_units` of information in `state` without merging: K is
/// unchanged and the amount is held for obliteration.
Transition retain(const MindState& state, double info_units,
                  double duration = 1.0);

/// Merges a retained transition, compressing `states_before` distinguishable
/// states into `states_after`. The relative change is
/// states_after / states_before - 1 (-1/2 for the canonical two-into-one).
Transition obliterate(const Transition& retained, int states_before,
                      int states_after);

/// Information rate (nats per unit time) needed for the change K -> K + dK in
/// time dt at matching affinity D: ln(1 + dK/K) / (D * dt).
double capacity(double k, double delta_k, double affinity, double dt);

/// Rate bound obtained at perfect matching (D = 1).
double capacity_lower_bound(double k, double delta_k, double dt);

inline double nats_to_bits(double nats) noexcept { return nats / kLn2; }
inline double bits_to_nats(double bits) noexcept { return bits * kLn2; }

/// Minimum energy per unit of information, k_B T ln(1 + dK/K). Negative
/// values are heat released to the bath during a squeeze.
double energy_bound(double k, double delta_k, const ThermalContext& ctx);

/// -k_B T ln 2 joules per bit.
double landauer_bound(const ThermalContext& ctx);

/// -k_B T joules per nat.
double landauer_bound_per_nat(const ThermalContext& ctx);

enum class Regime { classical, quantum_indicated };

std::string_view to_string(Regime regime);

struct BoltzmannWeight {
  double factor = 1.0;
  Regime regime = Regime::classical;
};

inline constexpr double kDefaultClassicalThreshold = 10.0;

/// exp(-delta_e / k_B T); factors not above `classical_threshold` are
/// flagged quantum-indicated.
BoltzmannWeight boltzmann_factor(double delta_e, const ThermalContext& ctx,
                                 double classical_threshold =
                                     kDefaultClassicalThreshold);

/// Maximum Landauer-efficient operation rate P / (k_B T ln 2).
double ops_rate(double power_watts, const ThermalContext& ctx);

/// Text report of the Landauer constants at `ctx`: one `key=value` line each,
/// six significant digits.
std::string report_block(const ThermalContext& ctx);

/// %g-style formatting with `digits` significant digits and the exponent
/// written without a plus sign or padding (2.5e21, -2.87098e-21).
std::string format_sig(double value, int digits = 6);

}  // namespace landauer
