#ifndef LRC_SIM_HPP
#define LRC_SIM_HPP

// Monte-Carlo erasure/repair harness.
//
// Each trial t draws from its own SplitMix64 substream (seed, t), in this
// fixed order: first kappa ranks for a uniform message, then the erasure
// pattern.  Erasure models:
//
//   iid        every position independently with probability epsilon
//              (erase iff next() < floor(epsilon * 2^64); epsilon >= 1
//              erases everything)
//   fixed      exactly `count` distinct positions via partial Fisher-Yates
//   line_burst one whole axis line in `direction`, through a uniformly
//              drawn center position
//
// Trials are independent, so reports are identical for a given (config,
// seed) regardless of thread count; only integer counters are accumulated
// and the rates are derived once at the end.

#include <cstdint>
#include <numeric>
#include <thread>
#include <vector>

#include "lrc/code.hpp"
#include "lrc/errors.hpp"
#include "lrc/recovery.hpp"
#include "lrc/rng.hpp"

namespace lrc {

enum class ErasureModel { Iid, FixedCount, LineBurst };

struct SimConfig {
  ErasureModel model = ErasureModel::Iid;
  double epsilon = 0.0;       // iid
  std::size_t count = 0;      // fixed
  std::size_t direction = 0;  // line_burst
  std::size_t trials = 1;
  std::uint64_t seed = 0;
};

struct SimReport {
  std::size_t trials = 0;
  std::size_t full_repairs = 0;
  std::size_t residual_erasures = 0;  // summed over trials
  std::size_t peeling_passes = 0;     // summed over trials
  std::vector<std::size_t> repairs_by_direction;

  double full_repair_rate() const { return trials ? double(full_repairs) / double(trials) : 0.0; }
  double mean_residual_erasures() const {
    return trials ? double(residual_erasures) / double(trials) : 0.0;
  }
  double mean_peeling_passes() const {
    return trials ? double(peeling_passes) / double(trials) : 0.0;
  }
};

namespace detail {

inline void validate(const CodeSpec& spec, const SimConfig& cfg) {
  if (cfg.trials < 1) throw ValidationError("trials must be >= 1");
  switch (cfg.model) {
    case ErasureModel::Iid:
      if (cfg.epsilon < 0.0 || cfg.epsilon > 1.0)
        throw ValidationError("epsilon must lie in [0, 1]");
      break;
    case ErasureModel::FixedCount:
      if (cfg.count > spec.length())
        throw ValidationError("erasure count exceeds code length");
      break;
    case ErasureModel::LineBurst:
      if (cfg.direction >= spec.availability())
        throw ValidationError("burst direction out of range");
      break;
  }
}

inline void erase_pattern(const CodeSpec& spec, const SimConfig& cfg, SplitMix64& rng,
                          ErasedWord& word) {
  const std::size_t m = spec.length();
  switch (cfg.model) {
    case ErasureModel::Iid: {
      const bool all = cfg.epsilon >= 1.0;
      const std::uint64_t threshold =
          all ? 0 : static_cast<std::uint64_t>(cfg.epsilon * 18446744073709551616.0);
      for (std::size_t j = 0; j < m; ++j) {
        const std::uint64_t u = rng.next();
        if (all || u < threshold) word[j].reset();
      }
      break;
    }
    case ErasureModel::FixedCount: {
      std::vector<std::size_t> idx(m);
      std::iota(idx.begin(), idx.end(), std::size_t{0});
      for (std::size_t s = 0; s < cfg.count; ++s) {
        const std::size_t pick = s + static_cast<std::size_t>(rng.below(m - s));
        std::swap(idx[s], idx[pick]);
        word[idx[s]].reset();
      }
      break;
    }
    case ErasureModel::LineBurst: {
      const std::size_t center = static_cast<std::size_t>(rng.below(m));
      for (std::size_t j : recovery_set(spec, center, cfg.direction).positions) word[j].reset();
      break;
    }
  }
}

struct Tally {
  std::size_t full = 0, residual = 0, passes = 0;
  std::vector<std::size_t> by_dir;
};

inline Tally run_range(const CodeSpec& spec, const SimConfig& cfg, std::size_t lo, std::size_t hi) {
  Tally t;
  t.by_dir.assign(spec.availability(), 0);
  std::vector<FieldElement> message(spec.dimension(), spec.field().zero());
  for (std::size_t trial = lo; trial < hi; ++trial) {
    SplitMix64 rng = SplitMix64::substream(cfg.seed, trial);
    for (auto& c : message) c = spec.field().element(static_cast<std::uint32_t>(rng.below(spec.field().order())));
    ErasedWord word = to_erased(encode(spec, message));
    erase_pattern(spec, cfg, rng, word);
    const RepairResult res = recover_all(spec, std::move(word));
    if (res.report.complete) ++t.full;
    t.residual += res.report.stuck.size();
    t.passes += res.report.passes;
    for (std::size_t i = 0; i < t.by_dir.size(); ++i)
      t.by_dir[i] += res.report.repairs_by_direction[i];
  }
  return t;
}

}  // namespace detail

/// Runs cfg.trials independent trials.  Bit-identical output for identical
/// (spec, cfg) regardless of `threads`.
inline SimReport run_simulation(const CodeSpec& spec, const SimConfig& cfg,
                                unsigned threads = 1) {
  detail::validate(spec, cfg);
  if (threads == 0) threads = 1;
  const std::size_t n = spec.availability();

  std::vector<detail::Tally> parts;
  if (threads == 1 || cfg.trials < 2 * threads) {
    parts.push_back(detail::run_range(spec, cfg, 0, cfg.trials));
  } else {
    parts.resize(threads);
    std::vector<std::thread> pool;
    const std::size_t chunk = (cfg.trials + threads - 1) / threads;
    for (unsigned w = 0; w < threads; ++w) {
      const std::size_t lo = std::min<std::size_t>(w * chunk, cfg.trials);
      const std::size_t hi = std::min<std::size_t>(lo + chunk, cfg.trials);
      pool.emplace_back([&, lo, hi, w] { parts[w] = detail::run_range(spec, cfg, lo, hi); });
    }
    for (auto& th : pool) th.join();
  }

  SimReport rep;
  rep.trials = cfg.trials;
  rep.repairs_by_direction.assign(n, 0);
  for (const auto& part : parts) {
    if (part.by_dir.empty()) continue;
    rep.full_repairs += part.full;
    rep.residual_erasures += part.residual;
    rep.peeling_passes += part.passes;
    for (std::size_t i = 0; i < n; ++i) rep.repairs_by_direction[i] += part.by_dir[i];
  }
  return rep;
}

}  // namespace lrc

#endif  // LRC_SIM_HPP
