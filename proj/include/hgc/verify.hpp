#ifndef HGC_VERIFY_HPP
#define HGC_VERIFY_HPP

#include <functional>
#include <random>
#include <string>
#include <vector>

#include "hgc/fox.hpp"
#include "hgc/io.hpp"

namespace hgc {

struct CheckResult {
  std::string name;
  bool ok = false;
  std::string detail;  // filled on failure
};

struct VerifyReport {
  std::vector<CheckResult> checks;
  bool all_ok() const {
    for (const auto& c : checks)
      if (!c.ok) return false;
    return true;
  }
};

// Identity batteries. `trials` scales the randomized check counts; the
// defaults match the acceptance suite.
VerifyReport verify_diagram(const DiagramSpec& spec, int trials = 20, uint64_t seed = 2024);
VerifyReport verify_words(const WordSpec& spec, int trials = 40, uint64_t seed = 2024);

// Cross-pipeline and fixture-wide battery over all built-in examples.
VerifyReport verify_all_fixtures(int trials = 20, uint64_t seed = 2024);

// Shared fixtures for the twist checks: the hand-built bounding-pair style
// automorphism (nonzero first Johnson invariant) and friends.
std::vector<FreeWord> identity_automorphism(int genus);
std::vector<FreeWord> bounding_pair_automorphism(int genus);  // needs genus >= 2
std::vector<FreeWord> johnson_surrogate(int genus, uint64_t seed);

// Random helpers reused by tests.
FreeWord random_free_word(std::mt19937_64& rng, int genus, int length);
FreeWord random_gamma3(std::mt19937_64& rng, int genus);

}  // namespace hgc

#endif
