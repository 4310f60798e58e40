#include "landauer/dynamics.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>
#include <string>

#include "landauer/error.hpp"

namespace landauer {

CognitiveStructure::CognitiveStructure(std::vector<Subsumer> subsumers,
                                       double reconciliation_gain)
    : subsumers_(std::move(subsumers)), gain_(reconciliation_gain) {
  if (subsumers_.empty()) {
    throw DomainError("a cognitive structure needs at least one subsumer");
  }
  if (!(gain_ >= 0.0) || !std::isfinite(gain_)) {
    throw DomainError("reconciliation gain must be finite and >= 0");
  }
  const std::size_t len = subsumers_.front().shape.length();
  for (const auto& s : subsumers_) {
    if (s.shape.length() != len) {
      throw ComparabilityError("subsumer shapes must share one length");
    }
    if (!(s.strength >= 0.0) || !std::isfinite(s.strength)) {
      throw DomainError("subsumer strength must be finite and >= 0");
    }
  }
}

std::size_t CognitiveStructure::shape_length() const noexcept {
  return subsumers_.front().shape.length();
}

std::vector<double> CognitiveStructure::strengths() const {
  std::vector<double> out;
  out.reserve(subsumers_.size());
  for (const auto& s : subsumers_) out.push_back(s.strength);
  return out;
}

double Trajectory::total_at(std::size_t k) const {
  double sum = 0.0;
  for (double s : strengths.at(k)) sum += s;
  return sum;
}

namespace {

void differentiation_into(const CognitiveStructure& structure,
                          std::span<const InputChannel> inputs, double t,
                          std::span<const double> state, std::span<double> out) {
  const auto subs = structure.subsumers();
  for (std::size_t i = 0; i < subs.size(); ++i) {
    double acc = 0.0;
    for (const auto& in : inputs) {
      if (!in.active_at(t)) continue;
      acc += matching_metric(subs[i].shape, in.shape) * state[i] * in.rate;
    }
    out[i] = acc;
  }
}

void reconciliation_into(const CognitiveStructure& structure,
                         std::span<const double> state, std::span<double> out) {
  const auto subs = structure.subsumers();
  const double gain = structure.reconciliation_gain();
  for (std::size_t i = 0; i < subs.size(); ++i) {
    double acc = 0.0;
    if (gain != 0.0) {
      for (std::size_t k = 0; k < subs.size(); ++k) {
        if (k == i) continue;
        acc += matching_metric(subs[i].shape, subs[k].shape) * state[i] * state[k];
      }
    }
    out[i] = gain * acc;
  }
}

void check_inputs(const CognitiveStructure& structure,
                  std::span<const InputChannel> inputs) {
  for (const auto& in : inputs) {
    if (in.shape.length() != structure.shape_length()) {
      throw ComparabilityError("input shape " + in.shape.to_string() +
                               " does not match subsumer length " +
                               std::to_string(structure.shape_length()));
    }
    if (!(in.rate >= 0.0) || !std::isfinite(in.rate)) {
      throw DomainError("input rate must be finite and >= 0");
    }
    if (in.window && !(in.window->start < in.window->end)) {
      throw DomainError("input window must satisfy start < end");
    }
  }
}

}  // namespace

std::vector<double> differentiation_rate(const CognitiveStructure& structure,
                                         std::span<const InputChannel> inputs,
                                         double t) {
  check_inputs(structure, inputs);
  const auto state = structure.strengths();
  std::vector<double> out(structure.size());
  differentiation_into(structure, inputs, t, state, out);
  return out;
}

std::vector<double> reconciliation_rate(const CognitiveStructure& structure) {
  const auto state = structure.strengths();
  std::vector<double> out(structure.size());
  reconciliation_into(structure, state, out);
  return out;
}

void total_rate(const CognitiveStructure& structure,
                std::span<const InputChannel> inputs, double t,
                std::span<const double> state, std::span<double> out) {
  std::vector<double> coupling(state.size());
  differentiation_into(structure, inputs, t, state, out);
  reconciliation_into(structure, state, coupling);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] += coupling[i];
}

Trajectory integrate(const CognitiveStructure& structure,
                     std::span<const InputChannel> inputs,
                     const IntegrationOptions& options) {
  const double dt = options.dt;
  const double t_end = options.t_end;
  if (!(dt > 0.0) || !std::isfinite(dt)) throw DomainError("dt must be > 0");
  if (!(t_end >= dt) || !std::isfinite(t_end)) {
    throw DomainError("t_end must be finite and >= dt");
  }
  check_inputs(structure, inputs);

  auto full_steps = static_cast<std::size_t>(std::floor(t_end / dt));
  double remainder = t_end - static_cast<double>(full_steps) * dt;
  // Treat a remainder within rounding of zero as an exact multiple.
  const bool partial = remainder > 1e-12 * t_end;

  const std::size_t n = structure.size();
  Trajectory traj;
  const std::size_t samples = full_steps + 1 + (partial ? 1 : 0);
  traj.times.reserve(samples);
  traj.strengths.reserve(samples);
  traj.times.push_back(0.0);
  traj.strengths.push_back(structure.strengths());

  std::vector<double> y = structure.strengths();
  std::vector<double> k1(n), k2(n), k3(n), k4(n), tmp(n);

  auto step = [&](double t, double h) {
    total_rate(structure, inputs, t, y, k1);
    for (std::size_t i = 0; i < n; ++i) tmp[i] = y[i] + 0.5 * h * k1[i];
    total_rate(structure, inputs, t + 0.5 * h, tmp, k2);
    for (std::size_t i = 0; i < n; ++i) tmp[i] = y[i] + 0.5 * h * k2[i];
    total_rate(structure, inputs, t + 0.5 * h, tmp, k3);
    for (std::size_t i = 0; i < n; ++i) tmp[i] = y[i] + h * k3[i];
    total_rate(structure, inputs, t + h, tmp, k4);
    for (std::size_t i = 0; i < n; ++i) {
      y[i] += h / 6.0 * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
    }
  };

  auto record = [&](double t) {
    for (std::size_t i = 0; i < n; ++i) {
      if (!std::isfinite(y[i])) {
        char buf[64];
        std::snprintf(buf, sizeof buf, "%.12g", t);
        throw DivergenceError(t, "non-finite strength for subsumer " +
                                     std::to_string(i) + " at t=" + buf);
      }
    }
    traj.times.push_back(t);
    traj.strengths.push_back(y);
  };

  for (std::size_t k = 0; k < full_steps; ++k) {
    const double t = static_cast<double>(k) * dt;
    step(t, dt);
    const double t_next = (!partial && k + 1 == full_steps)
                              ? t_end
                              : static_cast<double>(k + 1) * dt;
    record(t_next);
  }
  if (partial) {
    const double t = static_cast<double>(full_steps) * dt;
    step(t, t_end - t);
    record(t_end);
  }
  return traj;
}

double basal_solution(double s0, double affinity, double rate, double t) {
  if (!(s0 > 0.0)) throw DomainError("basal solution requires s0 > 0");
  if (!(affinity >= 0.0 && affinity <= 1.0)) {
    throw DomainError("affinity must lie in [0, 1]");
  }
  if (!(rate >= 0.0)) throw DomainError("rate must be >= 0");
  if (!(t >= 0.0)) throw DomainError("time must be >= 0");
  return s0 * std::exp(affinity * rate * t);
}

void write_trajectory_csv(std::ostream& os, const CognitiveStructure& structure,
                          const Trajectory& trajectory) {
  os << 't';
  for (const auto& s : structure.subsumers()) os << ",s_" << s.shape.to_string();
  os << '\n';
  char buf[40];
  for (std::size_t k = 0; k < trajectory.samples(); ++k) {
    std::snprintf(buf, sizeof buf, "%.12g", trajectory.times[k]);
    os << buf;
    for (double v : trajectory.strengths[k]) {
      std::snprintf(buf, sizeof buf, "%.12g", v);
      os << ',' << buf;
    }
    os << '\n';
  }
}

}  // namespace landauer
