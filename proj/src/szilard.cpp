#include "landauer/szilard.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>

#include "landauer/error.hpp"
#include "landauer/rng.hpp"

namespace landauer {

namespace {

constexpr std::uint32_t kSideLane = 0;
constexpr std::uint32_t kFlipLane = 1;

// Fixed reduction block; changing it changes the low bits of every Ledger.
constexpr std::size_t kBlock = 4096;

Side flip(Side s) { return s == Side::left ? Side::right : Side::left; }

// Sums are taken of offsets from the first record. Identical records then
// sum to exactly zero and the degenerate (eps = 0) ensemble has exact means.
struct Origin {
  double work = 0.0;
  double info = 0.0;
  double heat = 0.0;
};

struct Sums {
  double work = 0.0;
  double info = 0.0;
  double heat = 0.0;
  double fluct = 0.0;
  double net = 0.0;

  void add(const Sums& o) {
    work += o.work;
    info += o.info;
    heat += o.heat;
    fluct += o.fluct;
    net += o.net;
  }
};

struct Squares {
  double work = 0.0;
  double info = 0.0;
};

Origin origin_of(const std::vector<CycleRecord>& records) {
  const auto& r = records.front();
  return {r.work_kT, r.pointwise_info, r.erasure_heat_kT};
}

Sums block_sums(const std::vector<CycleRecord>& records, std::size_t begin,
                std::size_t end, const Origin& o) {
  Sums s;
  for (std::size_t i = begin; i < end; ++i) {
    const auto& r = records[i];
    s.work += r.work_kT - o.work;
    s.info += r.pointwise_info - o.info;
    s.heat += r.erasure_heat_kT - o.heat;
    s.fluct += std::exp(r.work_kT - r.pointwise_info) - 1.0;
    s.net += (r.work_kT - r.erasure_heat_kT) - (o.work - o.heat);
  }
  return s;
}

Squares block_squares(const std::vector<CycleRecord>& records,
                      std::size_t begin, std::size_t end, double mean_work,
                      double mean_info) {
  Squares q;
  for (std::size_t i = begin; i < end; ++i) {
    const double dw = records[i].work_kT - mean_work;
    const double di = records[i].pointwise_info - mean_info;
    q.work += dw * dw;
    q.info += di * di;
  }
  return q;
}

struct Means {
  double work, info, heat, fluct, net;
};

Means means_of(std::size_t n, const Origin& o, const Sums& s) {
  const double dn = static_cast<double>(n);
  return {o.work + s.work / dn, o.info + s.info / dn, o.heat + s.heat / dn,
          1.0 + s.fluct / dn, (o.work - o.heat) + s.net / dn};
}

Ledger finish(std::size_t n, double kT, const Means& m, const Squares& q) {
  Ledger l;
  l.cycles = n;
  l.kT = kT;
  l.mean_work_kT = m.work;
  l.mean_info = m.info;
  l.mean_erasure_heat_kT = m.heat;
  l.fluctuation_estimator = m.fluct;
  l.net_mean_kT = m.net;
  if (n > 1) {
    const double dn = static_cast<double>(n);
    l.work_stddev_kT = std::sqrt(q.work / (dn - 1.0));
    l.info_stddev = std::sqrt(q.info / (dn - 1.0));
  }
  return l;
}

}  // namespace

void EngineConfig::validate() const {
  if (!(temperature > 0.0) || !std::isfinite(temperature)) {
    throw DomainError("temperature must be finite and > 0 K");
  }
  if (!(epsilon >= 0.0 && epsilon < 0.5)) {
    throw DomainError("epsilon must lie in [0, 0.5)");
  }
  if (cycles < 1) throw DomainError("cycles must be >= 1");
}

double Ledger::work_standard_error_kT() const noexcept {
  return work_stddev_kT / std::sqrt(static_cast<double>(cycles));
}

double Ledger::info_standard_error() const noexcept {
  return info_stddev / std::sqrt(static_cast<double>(cycles));
}

double mutual_information(double epsilon) {
  if (!(epsilon >= 0.0 && epsilon <= 0.5)) {
    throw DomainError("epsilon must lie in [0, 0.5]");
  }
  auto plogp = [](double p) { return p > 0.0 ? p * std::log(p) : 0.0; };
  const double entropy = -plogp(epsilon) - plogp(1.0 - epsilon);
  return std::max(0.0, kLn2 - entropy);
}

CycleRecord run_cycle(const EngineConfig& config, std::uint64_t index) {
  const CounterRng rng(config.seed);
  const double eps = config.epsilon;

  CycleRecord r;
  r.index = index;
  r.true_side = rng.uniform(index, kSideLane) < 0.5 ? Side::left : Side::right;
  const bool error = rng.uniform(index, kFlipLane) < eps;
  r.measured_side = error ? flip(r.true_side) : r.true_side;

  // The partition ends at volume fraction p on the side holding the particle:
  // p = 1 - eps after a correct reading, eps after a wrong one. Isothermal
  // expansion from 1/2 to p yields kT ln(2p), and the pointwise information
  // ln(P(m|x) / P(m)) is the same logarithm.
  const double p = error ? eps : 1.0 - eps;
  r.kT = kBoltzmann * config.temperature;
  r.pointwise_info = std::log(2.0 * p);
  r.work_kT = r.pointwise_info;
  r.erasure_heat_kT = kLn2;
  return r;
}

std::vector<CycleRecord> simulate_cycles_serial(const EngineConfig& config) {
  config.validate();
  std::vector<CycleRecord> records;
  records.reserve(config.cycles);
  for (std::uint64_t i = 0; i < config.cycles; ++i) {
    records.push_back(run_cycle(config, i));
  }
  return records;
}

std::vector<CycleRecord> simulate_cycles(const EngineConfig& config) {
  config.validate();
  std::vector<CycleRecord> records(config.cycles);
  const auto n = static_cast<std::int64_t>(config.cycles);
#pragma omp parallel for schedule(static)
  for (std::int64_t i = 0; i < n; ++i) {
    records[static_cast<std::size_t>(i)] =
        run_cycle(config, static_cast<std::uint64_t>(i));
  }
  return records;
}

Ledger aggregate_serial(const std::vector<CycleRecord>& records,
                        const ThermalContext& ctx) {
  if (records.empty()) throw DomainError("cannot aggregate zero cycles");
  const Origin o = origin_of(records);
  const Means m = means_of(records.size(), o, block_sums(records, 0, records.size(), o));
  const Squares q = block_squares(records, 0, records.size(), m.work, m.info);
  return finish(records.size(), ctx.kT(), m, q);
}

Ledger aggregate(const std::vector<CycleRecord>& records,
                 const ThermalContext& ctx) {
  if (records.empty()) throw DomainError("cannot aggregate zero cycles");
  const std::size_t n = records.size();
  const auto blocks = static_cast<std::int64_t>((n + kBlock - 1) / kBlock);
  const Origin o = origin_of(records);

  std::vector<Sums> partial(static_cast<std::size_t>(blocks));
#pragma omp parallel for schedule(static)
  for (std::int64_t b = 0; b < blocks; ++b) {
    const std::size_t begin = static_cast<std::size_t>(b) * kBlock;
    partial[static_cast<std::size_t>(b)] =
        block_sums(records, begin, std::min(n, begin + kBlock), o);
  }
  Sums s;
  for (const auto& p : partial) s.add(p);
  const Means m = means_of(n, o, s);

  std::vector<Squares> partial_sq(static_cast<std::size_t>(blocks));
#pragma omp parallel for schedule(static)
  for (std::int64_t b = 0; b < blocks; ++b) {
    const std::size_t begin = static_cast<std::size_t>(b) * kBlock;
    partial_sq[static_cast<std::size_t>(b)] = block_squares(
        records, begin, std::min(n, begin + kBlock), m.work, m.info);
  }
  Squares q;
  for (const auto& p : partial_sq) {
    q.work += p.work;
    q.info += p.info;
  }
  return finish(n, ctx.kT(), m, q);
}

Ledger run_ensemble(const EngineConfig& config) {
  return aggregate(simulate_cycles(config), config.context());
}

double erase_memory(const ThermalContext& ctx) { return ctx.kT() * kLn2; }

void write_ledger_csv(std::ostream& os, const std::vector<CycleRecord>& records) {
  os << "cycle,true_side,measured_side,w_ext_kT,i_pt_nat,erase_heat_kT\n";
  char buf[160];
  for (const auto& r : records) {
    std::snprintf(buf, sizeof buf, "%llu,%c,%c,%.12g,%.12g,%.12g\n",
                  static_cast<unsigned long long>(r.index), to_char(r.true_side),
                  to_char(r.measured_side), r.work_kT,
                  r.pointwise_info, r.erasure_heat_kT);
    os << buf;
  }
}

std::string summary_block(const Ledger& ledger, double epsilon) {
  auto fixed = [](double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6f", v);
    std::string s(buf);
    // "-0.000000" reads as a sign error; print zero without it.
    if (s.find_first_not_of("-0.") == std::string::npos && s.front() == '-') {
      s.erase(0, 1);
    }
    return s;
  };
  std::string out;
  out += "mean_w_kT=" + fixed(ledger.mean_work_kT) + '\n';
  out += "mutual_info_nat=" + fixed(mutual_information(epsilon)) + '\n';
  out += "fluct_estimator=" + fixed(ledger.fluctuation_estimator) + '\n';
  out += "net_mean_kT=" + fixed(ledger.net_mean_kT) + '\n';
  return out;
}

}  // namespace landauer
