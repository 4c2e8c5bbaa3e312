#include "cgt/gen.hpp"

#include <algorithm>
#include <set>
#include <utility>
#include <vector>

#include "cgt/edge_set.hpp"
#include "cgt/error.hpp"
#include "cgt/graph_ops.hpp"
#include "cgt/tjoin.hpp"

namespace cgt {

Rng::Rng(std::uint64_t seed) : engine_(seed) {}

std::uint64_t Rng::next() { return engine_(); }

std::int64_t Rng::uniform(std::int64_t lo, std::int64_t hi) {
  const std::uint64_t span = static_cast<std::uint64_t>(hi) - static_cast<std::uint64_t>(lo);
  if (span == ~std::uint64_t{0}) return static_cast<std::int64_t>(next());
  const std::uint64_t range = span + 1;
  // Reject the top partial block so every residue is equally likely.
  const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % range + 1) % range;
  std::uint64_t x = next();
  while (x > limit) x = next();
  return lo + static_cast<std::int64_t>(x % range);
}

namespace {

template <typename T>
void shuffle(std::vector<T>& items, Rng& rng) {
  for (std::size_t i = items.size(); i > 1; --i) {
    const auto j = static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(i) - 1));
    std::swap(items[i - 1], items[j]);
  }
}

std::pair<VertexId, VertexId> random_pair(int n, Rng& rng) {
  const auto u = static_cast<VertexId>(rng.uniform(1, n));
  auto v = static_cast<VertexId>(rng.uniform(1, n - 1));
  if (v >= u) ++v;
  return {u, v};
}

}  // namespace

UndirectedGraph random_topology(int n, int m, Rng& rng) {
  UndirectedGraph g(std::max(n, 0));
  if (n < 2 || m <= 0) return g;
  using Key = std::pair<VertexId, VertexId>;
  std::set<Key> used;
  auto key = [](VertexId u, VertexId v) { return Key{std::min(u, v), std::max(u, v)}; };
  auto add = [&](VertexId u, VertexId v) {
    used.insert(key(u, v));
    g.add_edge(u, v, 0);
  };

  if (m >= n - 1) {
    for (VertexId v = 2; v <= n; ++v) {
      add(static_cast<VertexId>(rng.uniform(1, v - 1)), v);
    }
  }
  const std::int64_t max_simple = static_cast<std::int64_t>(n) * (n - 1) / 2;
  const std::int64_t want_simple = std::min<std::int64_t>(m, max_simple);
  const auto remaining = want_simple - g.num_edges();
  if (remaining > 0 && max_simple <= 4 * static_cast<std::int64_t>(m) + 16) {
    std::vector<Key> free;
    for (VertexId u = 1; u <= n; ++u) {
      for (VertexId v = u + 1; v <= n; ++v) {
        if (!used.contains({u, v})) free.push_back({u, v});
      }
    }
    shuffle(free, rng);
    for (std::int64_t i = 0; i < remaining; ++i) {
      auto [u, v] = free[static_cast<std::size_t>(i)];
      if (rng.coin()) std::swap(u, v);
      add(u, v);
    }
  } else {
    while (g.num_edges() < want_simple) {
      const auto [u, v] = random_pair(n, rng);
      if (!used.contains(key(u, v))) add(u, v);
    }
  }
  while (g.num_edges() < m) {
    const auto [u, v] = random_pair(n, rng);
    g.add_edge(u, v, 0);
  }
  return g;
}

UndirectedGraph gen_conservative(const GenSpec& spec) {
  Rng rng(spec.seed);
  UndirectedGraph g = random_topology(spec.n, spec.m, rng);
  const Weight wmax = std::max<Weight>(spec.wmax, 0);
  for (const Edge& e : std::vector<Edge>(g.edges().begin(), g.edges().end())) {
    g.set_weight(e.id, rng.uniform(0, wmax));
  }

  // Random T, then drop one member from each component with an odd count.
  const auto comp = connected_components(g);
  std::vector<VertexId> members;
  for (VertexId v = 1; v <= g.num_vertices(); ++v) {
    if (rng.coin()) members.push_back(v);
  }
  std::vector<int> count(static_cast<std::size_t>(g.num_vertices()) + 1, 0);
  for (VertexId v : members) ++count[static_cast<std::size_t>(comp[static_cast<std::size_t>(v)])];
  std::vector<VertexId> terminals;
  for (auto it = members.rbegin(); it != members.rend(); ++it) {
    auto& c = count[static_cast<std::size_t>(comp[static_cast<std::size_t>(*it)])];
    if (c % 2 == 1) {
      c = 0;  // drop this one; the rest of the component is now even
      continue;
    }
    terminals.push_back(*it);
  }
  const TerminalSet t(std::move(terminals));
  const TJoinResult f = min_tjoin_nonneg(g, t);
  return weight_flip(g, f.join);
}

UndirectedGraph gen_matching_negatives(const GenSpec& spec) {
  Rng rng(spec.seed);
  UndirectedGraph g = random_topology(spec.n, spec.m, rng);
  std::vector<EdgeId> order;
  for (const Edge& e : g.edges()) {
    g.set_weight(e.id, 1);
    order.push_back(e.id);
  }
  shuffle(order, rng);
  std::vector<char> covered(static_cast<std::size_t>(g.num_vertices()) + 1, false);
  for (EdgeId id : order) {
    const Edge& e = g.edge(id);
    const bool pick = rng.coin();
    auto& cu = covered[static_cast<std::size_t>(e.u)];
    auto& cv = covered[static_cast<std::size_t>(e.v)];
    if (pick && !cu && !cv) {
      g.set_weight(id, -1);
      cu = cv = true;
    }
  }
  return g;
}

BfpInstance gen_bfp(const GenSpec& spec) {
  if (spec.n < 2) throw Error(ErrorCode::kInvalidInput, "gen_bfp needs n >= 2");
  Rng rng(spec.seed);
  const int n = spec.n;
  BfpInstance out{Digraph(n), 0, 0};
  std::tie(out.s, out.t) = random_pair(n, rng);

  const std::int64_t max_simple = static_cast<std::int64_t>(n) * (n - 1);
  const std::int64_t want = std::max(spec.m, 0);
  std::set<std::pair<VertexId, VertexId>> used;
  if (std::min(want, max_simple) > 0 && max_simple <= 4 * want + 16) {
    std::vector<std::pair<VertexId, VertexId>> all;
    for (VertexId u = 1; u <= n; ++u) {
      for (VertexId v = 1; v <= n; ++v) {
        if (u != v) all.push_back({u, v});
      }
    }
    shuffle(all, rng);
    for (std::int64_t i = 0; i < std::min(want, max_simple); ++i) {
      const auto [u, v] = all[static_cast<std::size_t>(i)];
      out.digraph.add_arc(u, v);
    }
  } else {
    while (out.digraph.num_arcs() < std::min(want, max_simple)) {
      const auto arc = random_pair(n, rng);
      if (used.insert(arc).second) out.digraph.add_arc(arc.first, arc.second);
    }
  }
  while (out.digraph.num_arcs() < want) {
    const auto [u, v] = random_pair(n, rng);
    out.digraph.add_arc(u, v);
  }
  return out;
}

}  // namespace cgt
