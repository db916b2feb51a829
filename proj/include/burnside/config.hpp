// Runtime caps.  Defaults keep every operation at desk scale; each can be
// raised through an environment variable with an explicit cost to the caller.

#ifndef BURNSIDE_CONFIG_HPP
#define BURNSIDE_CONFIG_HPP

#include <cstdint>
#include <cstdlib>
#include <string>

namespace burnside {

inline std::uint64_t env_u64(const char* name, std::uint64_t fallback) {
  const char* v = std::getenv(name);
  if (!v || !*v) return fallback;
  return std::strtoull(v, nullptr, 10);
}

struct Config {
  // Cayley-table group order cap (BURNSIDE_MAX_GROUP_ORDER).
  std::uint64_t max_group_order = env_u64("BURNSIDE_MAX_GROUP_ORDER", 4096);
  // Largest |G| for which omega powers are materialized densely
  // (BURNSIDE_OMEGA_CAP); above it the filtration switches to the
  // subgroup-theoretic recursion.
  std::uint64_t omega_route_cap = env_u64("BURNSIDE_OMEGA_CAP", 1024);
  // Identity sweeps larger than this many tuples switch to seeded sampling
  // (BURNSIDE_SWEEP_CAP).
  std::uint64_t sweep_exhaustive_cap = env_u64("BURNSIDE_SWEEP_CAP", 1000000);
  std::uint64_t sweep_sample_count = env_u64("BURNSIDE_SWEEP_SAMPLES", 10000);
  // Symmetrized-sum budget: p^n above this is refused (BURNSIDE_PERM_BUDGET).
  std::uint64_t perm_budget = env_u64("BURNSIDE_PERM_BUDGET", 5);
  // Free-algebra total degree cap (BURNSIDE_MAX_DEGREE).
  std::uint64_t max_free_degree = env_u64("BURNSIDE_MAX_DEGREE", 6);
  // Seed for all sampled sweeps; printed in reports (BURNSIDE_SEED).
  std::uint64_t seed = env_u64("BURNSIDE_SEED", 271828);
};

inline const Config& config() {
  static Config c;
  return c;
}

}  // namespace burnside

#endif  // BURNSIDE_CONFIG_HPP
