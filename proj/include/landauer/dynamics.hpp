#pragma once

#include <iosfwd>
#include <optional>
#include <span>
#include <vector>

#include "landauer/shape.hpp"

namespace landauer {

struct Subsumer {
  Shape shape;
  double strength = 0.0;

  friend bool operator==(const Subsumer&, const Subsumer&) = default;
};

/// Half-open activity interval [start, end).
struct ActiveWindow {
  double start = 0.0;
  double end = 0.0;

  bool contains(double t) const noexcept { return t >= start && t < end; }
  friend bool operator==(const ActiveWindow&, const ActiveWindow&) = default;
};

/// External input stream, in units of information per unit time. Channels
/// without a window are always on.
struct InputChannel {
  Shape shape;
  double rate = 0.0;
  std::optional<ActiveWindow> window;

  bool active_at(double t) const noexcept {
    return !window || window->contains(t);
  }

  friend bool operator==(const InputChannel&, const InputChannel&) = default;
};

/// A collection of subsumers sharing one shape length, plus the gain of the
/// pairwise subsumer-subsumer coupling. With a single subsumer or a zero gain
/// the coupling vanishes and the basal (one-subsumer) dynamics remain.
class CognitiveStructure {
public:
  explicit CognitiveStructure(std::vector<Subsumer> subsumers,
                              double reconciliation_gain = 0.0);

  std::span<const Subsumer> subsumers() const noexcept { return subsumers_; }
  std::size_t size() const noexcept { return subsumers_.size(); }
  std::size_t shape_length() const noexcept;
  double reconciliation_gain() const noexcept { return gain_; }

  std::vector<double> strengths() const;

private:
  std::vector<Subsumer> subsumers_;
  double gain_;
};

/// Uniformly sampled strengths. `times[k] = k * dt` except possibly for the
/// last sample, which always sits exactly at the horizon.
struct Trajectory {
  std::vector<double> times;
  // strengths[k][i] is subsumer i at times[k]
  std::vector<std::vector<double>> strengths;

  std::size_t samples() const noexcept { return times.size(); }
  const std::vector<double>& final_strengths() const { return strengths.back(); }
  /// Scalar rate-carrying quantity S(t) = sum of subsumer strengths.
  double total_at(std::size_t k) const;
};

/// Progressive-differentiation term: component i is
/// sum_j D(shape_i, input_j) * s_i * rate_j over inputs active at t.
std::vector<double> differentiation_rate(const CognitiveStructure& structure,
                                         std::span<const InputChannel> inputs,
                                         double t);

/// Integrative-reconciliation term: component i is
/// gain * sum_{k != i} D(shape_i, shape_k) * s_i * s_k.
std::vector<double> reconciliation_rate(const CognitiveStructure& structure);

/// Evaluates both terms for an arbitrary state vector, reusing the shapes and
/// gain of `structure`. Used by the integrator.
void total_rate(const CognitiveStructure& structure,
                std::span<const InputChannel> inputs, double t,
                std::span<const double> state, std::span<double> out);

struct IntegrationOptions {
  double dt = 1e-3;
  double t_end = 1.0;
};

/// Classical fixed-step RK4. When t_end is not a whole number of steps the
/// final step is shortened so the last sample lands on t_end. Throws
/// DivergenceError at the first non-finite state.
Trajectory integrate(const CognitiveStructure& structure,
                     std::span<const InputChannel> inputs,
                     const IntegrationOptions& options);

/// Closed form s0 * exp(D * I * t) of the one-subsumer system.
double basal_solution(double s0, double affinity, double rate, double t);

/// Writes `t,s_<shape>,...` with 12 significant digits.
void write_trajectory_csv(std::ostream& os, const CognitiveStructure& structure,
                          const Trajectory& trajectory);

}  // namespace landauer
