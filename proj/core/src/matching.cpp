#include "cgt/matching.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "cgt/error.hpp"

namespace cgt {
namespace {

// Primal-dual weighted matching in general graphs with blossom shrinking.
//
// Edge k has endpoints 2k (the "u" side) and 2k+1 (the "v" side); endpoint p
// belongs to vertex endpoint_[p] and p^1 is the opposite end. Vertex dual
// variables are stored doubled so that slack(k) = dual[u] + dual[v] - 2w(k)
// stays integral for integer weights. Blossom ids are n..2n-1.
class BlossomMatcher {
 public:
  explicit BlossomMatcher(const MatchingProblem& p)
      : n_(p.n), m_(static_cast<int>(p.edges.size())), edges_(p.edges) {
    Weight max_w = 0;
    for (const auto& e : edges_) max_w = std::max(max_w, e.w);
    endpoint_.resize(2 * sz(m_));
    neighbend_.assign(sz(n_), {});
    for (int k = 0; k < m_; ++k) {
      const auto& e = edges_[sz(k)];
      if (e.u < 0 || e.u >= n_ || e.v < 0 || e.v >= n_ || e.u == e.v) {
        throw Error(ErrorCode::kInvalidInput, "bad matching edge " + std::to_string(k));
      }
      endpoint_[sz(2 * k)] = e.u;
      endpoint_[sz(2 * k + 1)] = e.v;
      neighbend_[sz(e.u)].push_back(2 * k + 1);
      neighbend_[sz(e.v)].push_back(2 * k);
    }
    mate_.assign(sz(n_), -1);
    label_.assign(2 * sz(n_), 0);
    labelend_.assign(2 * sz(n_), -1);
    inblossom_.resize(sz(n_));
    for (int v = 0; v < n_; ++v) inblossom_[sz(v)] = v;
    blossomparent_.assign(2 * sz(n_), -1);
    blossomchilds_.assign(2 * sz(n_), {});
    blossombase_.assign(2 * sz(n_), -1);
    for (int v = 0; v < n_; ++v) blossombase_[sz(v)] = v;
    blossomendps_.assign(2 * sz(n_), {});
    bestedge_.assign(2 * sz(n_), -1);
    blossombestedges_.assign(2 * sz(n_), {});
    has_bestedges_.assign(2 * sz(n_), 0);
    for (int b = 2 * n_ - 1; b >= n_; --b) unusedblossoms_.push_back(b);
    dualvar_.assign(2 * sz(n_), 0);
    for (int v = 0; v < n_; ++v) dualvar_[sz(v)] = max_w;
    allowedge_.assign(sz(m_), 0);
  }

  std::vector<int> run() {
    for (int stage = 0; stage < n_; ++stage) {
      std::fill(label_.begin(), label_.end(), 0);
      std::fill(bestedge_.begin(), bestedge_.end(), -1);
      for (int b = n_; b < 2 * n_; ++b) {
        blossombestedges_[sz(b)].clear();
        has_bestedges_[sz(b)] = 0;
      }
      std::fill(allowedge_.begin(), allowedge_.end(), 0);
      queue_.clear();

      for (int v = 0; v < n_; ++v) {
        if (mate_[sz(v)] == -1 && label_[sz(inblossom_[sz(v)])] == 0) assign_label(v, 1, -1);
      }

      bool augmented = false;
      for (;;) {
        while (!queue_.empty() && !augmented) {
          const int v = queue_.back();
          queue_.pop_back();
          check(label_[sz(inblossom_[sz(v)])] == 1, "queued vertex not S");
          for (int p : neighbend_[sz(v)]) {
            const int k = p / 2;
            const int w = endpoint_[sz(p)];
            if (inblossom_[sz(v)] == inblossom_[sz(w)]) continue;
            Weight kslack = 0;
            if (!allowedge_[sz(k)]) {
              kslack = slack(k);
              if (kslack <= 0) allowedge_[sz(k)] = 1;
            }
            if (allowedge_[sz(k)]) {
              if (label_[sz(inblossom_[sz(w)])] == 0) {
                assign_label(w, 2, p ^ 1);
              } else if (label_[sz(inblossom_[sz(w)])] == 1) {
                const int base = scan_blossom(v, w);
                if (base >= 0) {
                  add_blossom(base, k);
                } else {
                  augment_matching(k);
                  augmented = true;
                  break;
                }
              } else if (label_[sz(w)] == 0) {
                check(label_[sz(inblossom_[sz(w)])] == 2, "expected T-blossom");
                label_[sz(w)] = 2;
                labelend_[sz(w)] = p ^ 1;
              }
            } else if (label_[sz(inblossom_[sz(w)])] == 1) {
              const int b = inblossom_[sz(v)];
              if (bestedge_[sz(b)] == -1 || kslack < slack(bestedge_[sz(b)])) bestedge_[sz(b)] = k;
            } else if (label_[sz(w)] == 0) {
              if (bestedge_[sz(w)] == -1 || kslack < slack(bestedge_[sz(w)])) bestedge_[sz(w)] = k;
            }
          }
        }
        if (augmented) break;

        // No augmenting path on tight edges: adjust the duals.
        int deltatype = -1;
        Weight delta = 0;
        int deltaedge = -1;
        int deltablossom = -1;

        for (int v = 0; v < n_; ++v) {
          if (label_[sz(inblossom_[sz(v)])] == 0 && bestedge_[sz(v)] != -1) {
            const Weight d = slack(bestedge_[sz(v)]);
            if (deltatype == -1 || d < delta) {
              delta = d;
              deltatype = 2;
              deltaedge = bestedge_[sz(v)];
            }
          }
        }
        for (int b = 0; b < 2 * n_; ++b) {
          if (blossomparent_[sz(b)] == -1 && label_[sz(b)] == 1 && bestedge_[sz(b)] != -1) {
            const Weight kslack = slack(bestedge_[sz(b)]);
            check(kslack % 2 == 0, "odd slack between S-blossoms");
            const Weight d = kslack / 2;
            if (deltatype == -1 || d < delta) {
              delta = d;
              deltatype = 3;
              deltaedge = bestedge_[sz(b)];
            }
          }
        }
        for (int b = n_; b < 2 * n_; ++b) {
          if (blossombase_[sz(b)] >= 0 && blossomparent_[sz(b)] == -1 && label_[sz(b)] == 2 &&
              (deltatype == -1 || dualvar_[sz(b)] < delta)) {
            delta = dualvar_[sz(b)];
            deltatype = 4;
            deltablossom = b;
          }
        }
        if (deltatype == -1) {
          // Maximum cardinality reached; a final uniform step reaches optimality.
          deltatype = 1;
          delta = *std::min_element(dualvar_.begin(), dualvar_.begin() + n_);
          delta = std::max<Weight>(0, delta);
        }

        for (int v = 0; v < n_; ++v) {
          const int l = label_[sz(inblossom_[sz(v)])];
          if (l == 1) {
            dualvar_[sz(v)] -= delta;
          } else if (l == 2) {
            dualvar_[sz(v)] += delta;
          }
        }
        for (int b = n_; b < 2 * n_; ++b) {
          if (blossombase_[sz(b)] >= 0 && blossomparent_[sz(b)] == -1) {
            if (label_[sz(b)] == 1) {
              dualvar_[sz(b)] += delta;
            } else if (label_[sz(b)] == 2) {
              dualvar_[sz(b)] -= delta;
            }
          }
        }

        if (deltatype == 1) {
          break;
        } else if (deltatype == 2) {
          allowedge_[sz(deltaedge)] = 1;
          int i = edges_[sz(deltaedge)].u;
          int j = edges_[sz(deltaedge)].v;
          if (label_[sz(inblossom_[sz(i)])] == 0) std::swap(i, j);
          check(label_[sz(inblossom_[sz(i)])] == 1, "delta2 edge without S end");
          queue_.push_back(i);
        } else if (deltatype == 3) {
          allowedge_[sz(deltaedge)] = 1;
          const int i = edges_[sz(deltaedge)].u;
          check(label_[sz(inblossom_[sz(i)])] == 1, "delta3 edge without S end");
          queue_.push_back(i);
        } else {
          expand_blossom(deltablossom, false);
        }
      }

      if (!augmented) break;

      for (int b = n_; b < 2 * n_; ++b) {
        if (blossomparent_[sz(b)] == -1 && blossombase_[sz(b)] >= 0 && label_[sz(b)] == 1 &&
            dualvar_[sz(b)] == 0) {
          expand_blossom(b, true);
        }
      }
    }

    std::vector<int> matched_edge(sz(n_), -1);
    for (int v = 0; v < n_; ++v) {
      if (mate_[sz(v)] >= 0) matched_edge[sz(v)] = mate_[sz(v)] / 2;
    }
    return matched_edge;
  }

 private:
  static std::size_t sz(int x) { return static_cast<std::size_t>(x); }

  static void check(bool ok, const char* what) {
    if (!ok) throw std::logic_error(std::string("matching invariant violated: ") + what);
  }

  Weight slack(int k) const {
    const auto& e = edges_[sz(k)];
    return dualvar_[sz(e.u)] + dualvar_[sz(e.v)] - 2 * e.w;
  }

  void blossom_leaves(int b, std::vector<int>& out) const {
    if (b < n_) {
      out.push_back(b);
      return;
    }
    for (int t : blossomchilds_[sz(b)]) blossom_leaves(t, out);
  }

  std::vector<int> leaves(int b) const {
    std::vector<int> out;
    blossom_leaves(b, out);
    return out;
  }

  void assign_label(int w, int t, int p) {
    const int b = inblossom_[sz(w)];
    check(label_[sz(w)] == 0 && label_[sz(b)] == 0, "relabel of labeled vertex");
    label_[sz(w)] = label_[sz(b)] = t;
    labelend_[sz(w)] = labelend_[sz(b)] = p;
    bestedge_[sz(w)] = bestedge_[sz(b)] = -1;
    if (t == 1) {
      blossom_leaves(b, queue_);
    } else if (t == 2) {
      const int base = blossombase_[sz(b)];
      check(mate_[sz(base)] >= 0, "T-blossom base unmatched");
      assign_label(endpoint_[sz(mate_[sz(base)])], 1, mate_[sz(base)] ^ 1);
    }
  }

  // Trace back from v and w to find a common ancestor (new blossom base) or
  // -1 if the two trees are different (augmenting path found).
  int scan_blossom(int v, int w) {
    std::vector<int> path;
    int base = -1;
    while (v != -1 || w != -1) {
      int b = inblossom_[sz(v)];
      if (label_[sz(b)] & 4) {
        base = blossombase_[sz(b)];
        break;
      }
      check(label_[sz(b)] == 1, "scan hit non-S blossom");
      path.push_back(b);
      label_[sz(b)] = 5;
      if (labelend_[sz(b)] == -1) {
        v = -1;
      } else {
        v = endpoint_[sz(labelend_[sz(b)])];
        b = inblossom_[sz(v)];
        check(label_[sz(b)] == 2, "scan expected T-blossom");
        v = endpoint_[sz(labelend_[sz(b)])];
      }
      if (w != -1) std::swap(v, w);
    }
    for (int b : path) label_[sz(b)] = 1;
    return base;
  }

  void add_blossom(int base, int k) {
    int v = edges_[sz(k)].u;
    int w = edges_[sz(k)].v;
    const int bb = inblossom_[sz(base)];
    int bv = inblossom_[sz(v)];
    int bw = inblossom_[sz(w)];
    const int b = unusedblossoms_.back();
    unusedblossoms_.pop_back();
    blossombase_[sz(b)] = base;
    blossomparent_[sz(b)] = -1;
    blossomparent_[sz(bb)] = b;
    auto& path = blossomchilds_[sz(b)];
    auto& endps = blossomendps_[sz(b)];
    path.clear();
    endps.clear();
    while (bv != bb) {
      blossomparent_[sz(bv)] = b;
      path.push_back(bv);
      endps.push_back(labelend_[sz(bv)]);
      v = endpoint_[sz(labelend_[sz(bv)])];
      bv = inblossom_[sz(v)];
    }
    path.push_back(bb);
    std::reverse(path.begin(), path.end());
    std::reverse(endps.begin(), endps.end());
    endps.push_back(2 * k);
    while (bw != bb) {
      blossomparent_[sz(bw)] = b;
      path.push_back(bw);
      endps.push_back(labelend_[sz(bw)] ^ 1);
      w = endpoint_[sz(labelend_[sz(bw)])];
      bw = inblossom_[sz(w)];
    }
    check(label_[sz(bb)] == 1, "blossom base not S");
    label_[sz(b)] = 1;
    labelend_[sz(b)] = labelend_[sz(bb)];
    dualvar_[sz(b)] = 0;
    for (int leaf : leaves(b)) {
      if (label_[sz(inblossom_[sz(leaf)])] == 2) queue_.push_back(leaf);
      inblossom_[sz(leaf)] = b;
    }

    std::vector<int> bestedgeto(2 * sz(n_), -1);
    for (int child : path) {
      std::vector<int> candidates;
      if (!has_bestedges_[sz(child)]) {
        for (int leaf : leaves(child)) {
          for (int p : neighbend_[sz(leaf)]) candidates.push_back(p / 2);
        }
      } else {
        candidates = blossombestedges_[sz(child)];
      }
      for (int kk : candidates) {
        int i = edges_[sz(kk)].u;
        int j = edges_[sz(kk)].v;
        if (inblossom_[sz(j)] == b) std::swap(i, j);
        const int bj = inblossom_[sz(j)];
        if (bj != b && label_[sz(bj)] == 1 &&
            (bestedgeto[sz(bj)] == -1 || slack(kk) < slack(bestedgeto[sz(bj)]))) {
          bestedgeto[sz(bj)] = kk;
        }
      }
      blossombestedges_[sz(child)].clear();
      has_bestedges_[sz(child)] = 0;
      bestedge_[sz(child)] = -1;
    }
    auto& best = blossombestedges_[sz(b)];
    best.clear();
    for (int kk : bestedgeto) {
      if (kk != -1) best.push_back(kk);
    }
    has_bestedges_[sz(b)] = 1;
    bestedge_[sz(b)] = -1;
    for (int kk : best) {
      if (bestedge_[sz(b)] == -1 || slack(kk) < slack(bestedge_[sz(b)])) bestedge_[sz(b)] = kk;
    }
  }

  void expand_blossom(int b, bool endstage) {
    const std::vector<int> childs = blossomchilds_[sz(b)];
    for (int s : childs) {
      blossomparent_[sz(s)] = -1;
      if (s < n_) {
        inblossom_[sz(s)] = s;
      } else if (endstage && dualvar_[sz(s)] == 0) {
        expand_blossom(s, endstage);
      } else {
        for (int leaf : leaves(s)) inblossom_[sz(leaf)] = s;
      }
    }

    if (!endstage && label_[sz(b)] == 2) {
      // Relabel the children along the even-length path through the blossom.
      check(labelend_[sz(b)] >= 0, "T-blossom without labelend");
      const auto& endps = blossomendps_[sz(b)];
      const int len = static_cast<int>(childs.size());
      const int entrychild = inblossom_[sz(endpoint_[sz(labelend_[sz(b)] ^ 1)])];
      int j = static_cast<int>(std::find(childs.begin(), childs.end(), entrychild) - childs.begin());
      int jstep;
      int endptrick;
      if (j & 1) {
        j -= len;
        jstep = 1;
        endptrick = 0;
      } else {
        jstep = -1;
        endptrick = 1;
      }
      auto at = [len](const std::vector<int>& vec, int i) {
        return vec[static_cast<std::size_t>(((i % len) + len) % len)];
      };
      int p = labelend_[sz(b)];
      while (j != 0) {
        label_[sz(endpoint_[sz(p ^ 1)])] = 0;
        label_[sz(endpoint_[sz(at(endps, j - endptrick) ^ endptrick ^ 1)])] = 0;
        assign_label(endpoint_[sz(p ^ 1)], 2, p);
        allowedge_[sz(at(endps, j - endptrick) / 2)] = 1;
        j += jstep;
        p = at(endps, j - endptrick) ^ endptrick;
        allowedge_[sz(p / 2)] = 1;
        j += jstep;
      }
      int bv = at(childs, j);
      label_[sz(endpoint_[sz(p ^ 1)])] = label_[sz(bv)] = 2;
      labelend_[sz(endpoint_[sz(p ^ 1)])] = labelend_[sz(bv)] = p;
      bestedge_[sz(bv)] = -1;
      j += jstep;
      while (at(childs, j) != entrychild) {
        bv = at(childs, j);
        if (label_[sz(bv)] == 1) {
          j += jstep;
          continue;
        }
        int labeled = -1;
        for (int leaf : leaves(bv)) {
          if (label_[sz(leaf)] != 0) {
            labeled = leaf;
            break;
          }
        }
        if (labeled >= 0) {
          check(label_[sz(labeled)] == 2, "expected T leaf");
          check(inblossom_[sz(labeled)] == bv, "leaf not in child");
          label_[sz(labeled)] = 0;
          label_[sz(endpoint_[sz(mate_[sz(blossombase_[sz(bv)])])])] = 0;
          assign_label(labeled, 2, labelend_[sz(labeled)]);
        }
        j += jstep;
      }
    }

    label_[sz(b)] = labelend_[sz(b)] = -1;
    blossomchilds_[sz(b)].clear();
    blossomendps_[sz(b)].clear();
    blossombase_[sz(b)] = -1;
    blossombestedges_[sz(b)].clear();
    has_bestedges_[sz(b)] = 0;
    bestedge_[sz(b)] = -1;
    unusedblossoms_.push_back(b);
  }

  // Swap matched/unmatched edges along the alternating path inside blossom b
  // from vertex v to the base.
  void augment_blossom(int b, int v) {
    int t = v;
    while (blossomparent_[sz(t)] != b) t = blossomparent_[sz(t)];
    if (t >= n_) augment_blossom(t, v);
    auto& childs = blossomchilds_[sz(b)];
    auto& endps = blossomendps_[sz(b)];
    const int len = static_cast<int>(childs.size());
    auto at = [len](const std::vector<int>& vec, int i) {
      return vec[static_cast<std::size_t>(((i % len) + len) % len)];
    };
    const int i = static_cast<int>(std::find(childs.begin(), childs.end(), t) - childs.begin());
    int j = i;
    int jstep;
    int endptrick;
    if (i & 1) {
      j -= len;
      jstep = 1;
      endptrick = 0;
    } else {
      jstep = -1;
      endptrick = 1;
    }
    while (j != 0) {
      j += jstep;
      t = at(childs, j);
      const int p = at(endps, j - endptrick) ^ endptrick;
      if (t >= n_) augment_blossom(t, endpoint_[sz(p)]);
      j += jstep;
      t = at(childs, j);
      if (t >= n_) augment_blossom(t, endpoint_[sz(p ^ 1)]);
      mate_[sz(endpoint_[sz(p)])] = p ^ 1;
      mate_[sz(endpoint_[sz(p ^ 1)])] = p;
    }
    std::rotate(childs.begin(), childs.begin() + i, childs.end());
    std::rotate(endps.begin(), endps.begin() + i, endps.end());
    blossombase_[sz(b)] = blossombase_[sz(childs[0])];
    check(blossombase_[sz(b)] == v, "blossom base after augment");
  }

  void augment_matching(int k) {
    const int ends[2][2] = {{edges_[sz(k)].u, 2 * k + 1}, {edges_[sz(k)].v, 2 * k}};
    for (const auto& start : ends) {
      int s = start[0];
      int p = start[1];
      for (;;) {
        const int bs = inblossom_[sz(s)];
        check(label_[sz(bs)] == 1, "augment through non-S");
        if (bs >= n_) augment_blossom(bs, s);
        mate_[sz(s)] = p;
        if (labelend_[sz(bs)] == -1) break;
        const int t = endpoint_[sz(labelend_[sz(bs)])];
        const int bt = inblossom_[sz(t)];
        check(label_[sz(bt)] == 2, "augment expected T");
        s = endpoint_[sz(labelend_[sz(bt)])];
        const int j = endpoint_[sz(labelend_[sz(bt)] ^ 1)];
        if (bt >= n_) augment_blossom(bt, j);
        mate_[sz(j)] = labelend_[sz(bt)];
        p = labelend_[sz(bt)] ^ 1;
      }
    }
  }

  int n_;
  int m_;
  std::vector<MatchingEdge> edges_;
  std::vector<int> endpoint_;
  std::vector<std::vector<int>> neighbend_;
  std::vector<int> mate_;
  std::vector<int> label_;
  std::vector<int> labelend_;
  std::vector<int> inblossom_;
  std::vector<int> blossomparent_;
  std::vector<std::vector<int>> blossomchilds_;
  std::vector<int> blossombase_;
  std::vector<std::vector<int>> blossomendps_;
  std::vector<int> bestedge_;
  std::vector<std::vector<int>> blossombestedges_;
  std::vector<char> has_bestedges_;
  std::vector<int> unusedblossoms_;
  std::vector<Weight> dualvar_;
  std::vector<char> allowedge_;
  std::vector<int> queue_;
};

}  // namespace

std::vector<int> max_weight_max_cardinality_matching(const MatchingProblem& problem) {
  if (problem.n < 0) throw Error(ErrorCode::kInvalidInput, "negative vertex count");
  if (problem.n == 0) return {};
  const std::vector<int> matched_edge = BlossomMatcher(problem).run();
  std::vector<int> partner(matched_edge.size(), -1);
  for (std::size_t v = 0; v < matched_edge.size(); ++v) {
    if (matched_edge[v] < 0) continue;
    const auto& e = problem.edges[static_cast<std::size_t>(matched_edge[v])];
    partner[v] = static_cast<int>(v) == e.u ? e.v : e.u;
  }
  return partner;
}

Matching min_weight_perfect_matching(const MatchingProblem& problem) {
  if (problem.n % 2 != 0) {
    throw Error(ErrorCode::kNoPerfectMatching, "odd vertex count " + std::to_string(problem.n));
  }
  Matching result;
  if (problem.n == 0) return result;
  // Every perfect matching has n/2 edges, so maximizing (c - w) over
  // maximum-cardinality matchings minimizes w once the cardinality is n/2.
  Weight max_w = 0;
  for (const auto& e : problem.edges) max_w = std::max(max_w, e.w);
  MatchingProblem flipped = problem;
  for (auto& e : flipped.edges) e.w = max_w + 1 - e.w;
  const std::vector<int> matched_edge = BlossomMatcher(flipped).run();

  result.mate.assign(static_cast<std::size_t>(problem.n), -1);
  for (int v = 0; v < problem.n; ++v) {
    const int k = matched_edge[static_cast<std::size_t>(v)];
    if (k < 0) {
      throw Error(ErrorCode::kNoPerfectMatching, "vertex " + std::to_string(v) + " uncovered");
    }
    const auto& e = problem.edges[static_cast<std::size_t>(k)];
    result.mate[static_cast<std::size_t>(v)] = v == e.u ? e.v : e.u;
    if (v == std::min(e.u, e.v)) {
      result.edges.push_back(k);
      result.weight += e.w;
    }
  }
  std::sort(result.edges.begin(), result.edges.end());
  return result;
}

}  // namespace cgt
