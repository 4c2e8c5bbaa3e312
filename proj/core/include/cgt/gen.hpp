#pragma once

#include <cstdint>
#include <random>

#include "cgt/graph.hpp"

namespace cgt {

/// Generator parameters. Equal specs give identical output on every platform:
/// the bit source is std::mt19937_64 (whose output sequence the standard fixes)
/// and all range reductions are done here, not by std distributions.
struct GenSpec {
  int n = 0;
  int m = 0;
  Weight wmax = 0;
  std::uint64_t seed = 0;
};

/// Portable seeded source of bounded integers.
class Rng {
 public:
  explicit Rng(std::uint64_t seed);

  std::uint64_t next();
  /// Uniform in [lo, hi]; requires lo <= hi.
  std::int64_t uniform(std::int64_t lo, std::int64_t hi);
  bool coin() { return (next() >> 63) != 0; }

 private:
  std::mt19937_64 engine_;
};

/// Random graph whose weights are w0 flipped on a minimum T-join for random
/// non-negative w0 and a random feasible T. Always conservative.
UndirectedGraph gen_conservative(const GenSpec& spec);

/// Random graph with +-1 weights whose negative edges form a matching.
UndirectedGraph gen_matching_negatives(const GenSpec& spec);

struct BfpInstance {
  Digraph digraph;
  VertexId s = 0;
  VertexId t = 0;
};

/// Random digraph (distinct arcs while possible) with s != t. Requires n >= 2.
BfpInstance gen_bfp(const GenSpec& spec);

/// Shared topology step: a random spanning tree first when m >= n - 1, then
/// further edges between distinct endpoints, simple while that is possible.
/// All weights are 0.
UndirectedGraph random_topology(int n, int m, Rng& rng);

}  // namespace cgt
