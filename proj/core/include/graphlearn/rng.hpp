#pragma once

#include <cstdint>
#include <random>

namespace graphlearn {

/// Deterministic random stream.
///
/// Stream-splitting rule: the engine is seeded with
/// splitmix64(seed ^ stream_tag), so the graph draw, the signal draw and
/// the solver initialization consume independent streams and any one of
/// them can be regenerated without replaying the others. All variates are
/// derived from raw mt19937_64 output (uniform via the top 53 bits,
/// normals via Box-Muller), so byte-identical reproduction does not depend
/// on standard-library distribution internals.
class Rng {
 public:
  enum class Stream : std::uint64_t {
    Graph = 0x67726170686c6e31ULL,
    Signals = 0x7369676e616c7331ULL,
    SolverInit = 0x736f6c7665726931ULL,
    Generic = 0x67656e6572696331ULL,
  };

  Rng(std::uint64_t seed, Stream stream);

  /// Uniform on [0, 1).
  double uniform01();

  /// Standard normal.
  double normal();

  /// Uniform integer in [0, bound).
  std::uint64_t uniform_below(std::uint64_t bound);

 private:
  std::mt19937_64 engine_;
  double spare_ = 0.0;
  bool has_spare_ = false;
};

}  // namespace graphlearn
