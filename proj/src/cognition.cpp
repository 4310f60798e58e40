#include "landauer/cognition.hpp"

#include <cmath>
#include <cstdio>
#include <string>

#include "landauer/error.hpp"

namespace landauer {

ThermalContext::ThermalContext(double temperature_kelvin)
    : temperature_(temperature_kelvin) {
  if (!(temperature_ > 0.0) || !std::isfinite(temperature_)) {
    throw DomainError("temperature must be finite and > 0 K");
  }
}

MindState::MindState(double k) : k_(k) {
  if (!(k_ > 0.0) || !std::isfinite(k_)) {
    throw DomainError("knowledge eigenvalue K must be finite and > 0");
  }
}

MindState mind_state_from_strength(double strength) {
  return MindState(strength);
}

std::string_view to_string(Phase phase) {
  return phase == Phase::retained ? "retained" : "obliterated";
}

std::string_view to_string(Regime regime) {
  return regime == Regime::classical ? "classical" : "quantum-indicated";
}

Transition retain(const MindState& state, double info_units, double duration) {
  if (!(info_units > 0.0) || !std::isfinite(info_units)) {
    throw DomainError("retained information must be finite and > 0");
  }
  if (!(duration > 0.0)) throw DomainError("transition duration must be > 0");
  return Transition{state, state, 0.0, duration, info_units, Phase::retained};
}

Transition obliterate(const Transition& retained, int states_before,
                      int states_after) {
  if (retained.phase != Phase::retained) {
    throw DomainError("only a retained transition can be obliterated");
  }
  if (states_before < 2 || states_after < 1) {
    throw DomainError("obliteration needs >= 2 states before and >= 1 after");
  }
  if (states_after >= states_before) {
    throw DomainError("obliteration must compress: " +
                      std::to_string(states_after) + " >= " +
                      std::to_string(states_before) + " is not a squeeze");
  }
  const double ratio =
      static_cast<double>(states_after) / static_cast<double>(states_before);
  const double k0 = retained.before.k();
  Transition out = retained;
  out.delta_k = k0 * (ratio - 1.0);
  out.after = MindState(k0 + out.delta_k);
  out.phase = Phase::obliterated;
  return out;
}

namespace {

double log_relative(double k, double delta_k) {
  if (!(k > 0.0)) throw DomainError("K must be > 0");
  const double x = delta_k / k;
  if (!(1.0 + x > 0.0) || !std::isfinite(x)) {
    throw DomainError("1 + dK/K must be > 0");
  }
  return std::log1p(x);
}

}  // namespace

double capacity(double k, double delta_k, double affinity, double dt) {
  if (affinity == 0.0) {
    throw DomainError("capacity undefined at zero affinity (D = 0)");
  }
  if (!(affinity > 0.0 && affinity <= 1.0)) {
    throw DomainError("affinity must lie in (0, 1]");
  }
  if (!(dt > 0.0)) throw DomainError("dt must be > 0");
  return log_relative(k, delta_k) / (affinity * dt);
}

double capacity_lower_bound(double k, double delta_k, double dt) {
  if (!(dt > 0.0)) throw DomainError("dt must be > 0");
  return log_relative(k, delta_k) / dt;
}

double energy_bound(double k, double delta_k, const ThermalContext& ctx) {
  return ctx.kT() * log_relative(k, delta_k);
}

double landauer_bound(const ThermalContext& ctx) { return -(ctx.kT() * kLn2); }

double landauer_bound_per_nat(const ThermalContext& ctx) { return -ctx.kT(); }

BoltzmannWeight boltzmann_factor(double delta_e, const ThermalContext& ctx,
                                 double classical_threshold) {
  BoltzmannWeight w;
  w.factor = std::exp(-delta_e / ctx.kT());
  w.regime = w.factor <= classical_threshold ? Regime::quantum_indicated
                                             : Regime::classical;
  return w;
}

double ops_rate(double power_watts, const ThermalContext& ctx) {
  if (!(power_watts > 0.0)) throw DomainError("power must be > 0");
  return power_watts / (ctx.kT() * kLn2);
}

std::string format_sig(double value, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", digits, value);
  std::string s(buf);
  const auto e = s.find('e');
  if (e == std::string::npos) return s;
  std::string mantissa = s.substr(0, e);
  std::string exp = s.substr(e + 1);
  bool negative = false;
  std::size_t i = 0;
  if (exp[i] == '+' || exp[i] == '-') negative = exp[i++] == '-';
  while (i + 1 < exp.size() && exp[i] == '0') ++i;
  return mantissa + 'e' + (negative ? "-" : "") + exp.substr(i);
}

std::string report_block(const ThermalContext& ctx) {
  const double per_bit = landauer_bound(ctx);
  const auto weight = boltzmann_factor(per_bit, ctx);
  std::string out;
  out += "temperature_K=" + format_sig(ctx.temperature()) + '\n';
  out += "landauer_J_per_bit=" + format_sig(per_bit) + '\n';
  out += "landauer_J_per_nat=" + format_sig(landauer_bound_per_nat(ctx)) + '\n';
  out += "boltzmann_factor=" + format_sig(weight.factor) + '\n';
  out += "regime=" + std::string(to_string(weight.regime)) + '\n';
  out += "ops_per_second_1W=" + format_sig(ops_rate(1.0, ctx)) + '\n';
  out += "ops_per_second=" + format_sig(ops_rate(20.0, ctx)) + '\n';
  return out;
}

}  // namespace landauer
