#pragma once

// Random generation of valid polyhedral asymmetric norms and the encoded
// law suite L1..L14.  Every law failure carries the case seed, and a single
// case replays from that seed alone.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "asymgauge/norm.hpp"

namespace asymgauge {

struct SpaceGenConfig {
  int dim = 2;              // [2, 4]
  int n_vertices = 5;       // [3, 8]
  int n_rays = 2;           // [0, 3]
  long coordinate_bound = 4;
  std::uint64_t seed = 1;
};

struct GenerationError : std::runtime_error {
  std::uint64_t seed;
  GenerationError(const std::string& what, std::uint64_t s)
      : std::runtime_error(what), seed(s) {}
};

// Ball = conv(V united with +-delta e_i) + cone(R), delta = 1/coordinate_bound,
// rays drawn inside an open halfspace so the null cone stays pointed.
// Pure function of the config.
AsymNorm random_space(const SpaceGenConfig& cfg);

// Two random spaces: with share_rays they reuse the exact ray list (equal
// null cones by construction); otherwise the second norm gains an extra ray
// outside the first cone, keeping both cones pointed.
std::pair<AsymNorm, AsymNorm> random_space_pair(const SpaceGenConfig& cfg,
                                                bool share_rays);

enum class MutationHook { None, ScaleSymBallInSandwich };

struct LawFailure {
  std::uint64_t seed = 0;
  std::string witness;
};

struct LawResult {
  std::string id;
  std::string name;
  int cases = 0;
  std::vector<LawFailure> failures;
};

struct LawReport {
  SpaceGenConfig config;
  int cases = 0;
  std::vector<LawResult> laws;
  bool pass() const {
    for (const auto& l : laws)
      if (!l.failures.empty()) return false;
    return true;
  }
};

inline constexpr int kLawCount = 14;
const char* law_id(int index);    // "L1".."L14"
const char* law_name(int index);

// Evaluates one law on one case; the result is a pure function of
// (law_index, case_seed, cfg, hook).  Returns a witness string on failure.
std::optional<std::string> run_law_case(int law_index, std::uint64_t case_seed,
                                        const SpaceGenConfig& cfg,
                                        MutationHook hook = MutationHook::None);

LawReport run_laws(const SpaceGenConfig& cfg, int cases,
                   MutationHook hook = MutationHook::None);

}  // namespace asymgauge
