#include <algorithm>
#include <map>
#include <mutex>
#include <thread>

#include "mcf/diagrams.hpp"
#include "union_find.hpp"

namespace mcf {

using detail::UnionFind;

namespace {

struct Strand {
  int tail;
  std::int64_t weight;
  auto operator<=>(const Strand&) const = default;
};

struct State {
  int k = 0;
  int floors = 0;
  int b1 = 0;
  std::vector<FloorVertexKind> kinds;
  std::vector<Strand> strands;
  std::vector<FloorEdge> edges;
  UnionFind whole;
  UnionFind hat;
};

void partitions(std::int64_t total, std::int64_t max_part, std::vector<std::int64_t>& cur,
                std::vector<std::vector<std::int64_t>>& out) {
  if (total == 0) {
    out.push_back(cur);
    return;
  }
  for (std::int64_t p = std::min(total, max_part); p >= 1; --p) {
    cur.push_back(p);
    partitions(total - p, p, cur, out);
    cur.pop_back();
  }
}

void compositions(std::int64_t total, int parts, std::vector<std::int64_t>& cur,
                  std::vector<std::vector<std::int64_t>>& out) {
  if (parts == 0) {
    if (total == 0) out.push_back(cur);
    return;
  }
  for (std::int64_t p = 1; p <= total - (parts - 1); ++p) {
    cur.push_back(p);
    compositions(total - p, parts - 1, cur, out);
    cur.pop_back();
  }
}

class FloorSweep {
 public:
  FloorSweep(int g0, int genus, std::int64_t a, std::vector<std::int64_t> w)
      : g0_(g0), genus_(genus), a_(a), w_(std::move(w)) {
    n_ = static_cast<int>(w_.size());
    positions_ = n_ + g0_ - 1;
    nv_ = positions_ + n_;
  }

  bool feasible() const { return positions_ >= 1; }

  State initial() const {
    State s;
    s.kinds.assign(positions_, FloorVertexKind::flat);
    s.whole = UnionFind(nv_);
    s.hat = UnionFind(nv_ + positions_);
    for (int i = 0; i < n_; ++i) {
      s.hat.mark_end(positions_ + i);
      if (w_[i] < 0) s.strands.push_back({positions_ + i, -w_[i]});
    }
    std::sort(s.strands.begin(), s.strands.end());
    return s;
  }

  std::vector<State> children(const State& s) const {
    std::vector<State> out;
    const int k = s.k;
    // Distinct strands; equal (tail, weight) strands are interchangeable and
    // two of them can never enter the same floor without closing a cycle.
    std::vector<Strand> distinct = s.strands;
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());

    for (const Strand& st : distinct) {
      State c = s;
      remove_one(c.strands, st);
      c.kinds[k] = FloorVertexKind::flat;
      if (!add_edge(c, st.tail, k, st.weight)) continue;
      c.strands.push_back({k, st.weight});
      std::sort(c.strands.begin(), c.strands.end());
      c.k = k + 1;
      out.push_back(std::move(c));
    }

    if (s.floors + 1 + s.b1 > g0_ || s.floors + 1 > a_) return out;
    const std::size_t m = distinct.size();
    if (m > 20) throw BoundExceeded("active strands", std::to_string(m));
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << m); ++mask) {
      State c = s;
      c.kinds[k] = FloorVertexKind::floor;
      ++c.floors;
      std::int64_t total = 0;
      bool ok = true;
      for (std::size_t i = 0; i < m && ok; ++i) {
        if (!(mask >> i & 1)) continue;
        remove_one(c.strands, distinct[i]);
        ok = add_edge(c, distinct[i].tail, k, distinct[i].weight);
        total += distinct[i].weight;
      }
      if (!ok || c.floors + c.b1 > g0_) continue;
      std::vector<std::vector<std::int64_t>> parts;
      std::vector<std::int64_t> cur;
      partitions(total, total, cur, parts);
      for (const auto& p : parts) {
        State cc = c;
        for (std::int64_t x : p) cc.strands.push_back({k, x});
        std::sort(cc.strands.begin(), cc.strands.end());
        cc.k = k + 1;
        out.push_back(std::move(cc));
      }
    }
    return out;
  }

  void explore(const State& s, std::map<std::string, FloorDiagram>& skeletons) const {
    if (s.k == positions_) {
      finish(s, skeletons);
      return;
    }
    for (const State& c : children(s)) explore(c, skeletons);
  }

  // Decorates a skeleton with degrees (and genera in the lambda refinement).
  void decorate(const FloorDiagram& skeleton, std::map<std::string, FloorDiagram>& out) const {
    std::vector<int> floors;
    for (int v = 0; v < skeleton.positions(); ++v)
      if (!skeleton.is_flat(v)) floors.push_back(v);
    const int nf = static_cast<int>(floors.size());
    std::vector<std::vector<std::int64_t>> degree_splits, genus_splits;
    std::vector<std::int64_t> cur;
    compositions(a_, nf, cur, degree_splits);
    compositions(genus_ - skeleton.first_betti(), nf, cur, genus_splits);
    for (const auto& ds : degree_splits)
      for (const auto& gs : genus_splits) {
        FloorDiagram d = skeleton;
        for (int i = 0; i < nf; ++i) {
          d.interior[floors[i]].a = ds[i];
          d.interior[floors[i]].genus = static_cast<int>(gs[i]);
        }
        out.emplace(d.canonical_key(), std::move(d));
      }
  }

 private:
  static void remove_one(std::vector<Strand>& v, const Strand& s) { v.erase(std::find(v.begin(), v.end(), s)); }

  bool is_flat(const State& s, int v) const { return v < positions_ && s.kinds[v] == FloorVertexKind::flat; }

  // Adds tail -> head; false when the cut at flats stops being a forest with
  // at most one end per component.
  bool add_edge(State& s, int tail, int head, std::int64_t weight) const {
    const int t = is_flat(s, tail) ? nv_ + tail : tail;
    if (s.hat.find(t) == s.hat.find(head)) return false;
    if (s.hat.ends(t) + s.hat.ends(head) > 1) return false;
    s.hat.unite(t, head);
    if (!s.whole.unite(tail, head)) ++s.b1;
    s.edges.push_back({tail, head, weight});
    return true;
  }

  void finish(const State& s, std::map<std::string, FloorDiagram>& skeletons) const {
    std::vector<int> sinks;
    for (int i = 0; i < n_; ++i)
      if (w_[i] > 0) sinks.push_back(i);
    if (s.strands.size() != sinks.size()) return;
    for (const Strand& st : s.strands)
      if (st.tail >= positions_) return;
    std::vector<bool> used(s.strands.size(), false);
    State c = s;
    assign(c, sinks, 0, used, skeletons);
  }

  void assign(State& s, const std::vector<int>& sinks, std::size_t i, std::vector<bool>& used,
              std::map<std::string, FloorDiagram>& skeletons) const {
    if (i == sinks.size()) {
      accept(s, skeletons);
      return;
    }
    const int label = sinks[i];
    const std::int64_t weight = w_[label];
    const Strand* previous = nullptr;
    for (std::size_t j = 0; j < s.strands.size(); ++j) {
      if (used[j] || s.strands[j].weight != weight) continue;
      if (previous != nullptr && *previous == s.strands[j]) continue;
      previous = &s.strands[j];
      State c = s;
      if (!add_edge(c, s.strands[j].tail, positions_ + label, weight)) continue;
      used[j] = true;
      assign(c, sinks, i + 1, used, skeletons);
      used[j] = false;
    }
  }

  void accept(State& s, std::map<std::string, FloorDiagram>& skeletons) const {
    if (s.b1 + s.floors != g0_) return;
    for (int v = 1; v < nv_; ++v)
      if (s.whole.find(v) != s.whole.find(0)) return;
    FloorDiagram d;
    d.profile = w_;
    for (int p = 0; p < positions_; ++p) {
      FloorVertex v;
      v.kind = s.kinds[p];
      if (v.kind == FloorVertexKind::floor) {
        v.a = 1;
        v.genus = 1;
      }
      d.interior.push_back(v);
    }
    d.edges = s.edges;
    std::sort(d.edges.begin(), d.edges.end());
    if (floor_diagram_defect(d)) return;
    skeletons.emplace(d.canonical_key(), std::move(d));
  }

  int g0_;
  int genus_;
  std::int64_t a_;
  std::vector<std::int64_t> w_;
  int n_ = 0;
  int positions_ = 0;
  int nv_ = 0;
};

template <class Diagram>
std::vector<Diagram> expand_labeled(const std::vector<Diagram>& diagrams, int max_edges) {
  std::map<std::string, Diagram> out;
  for (const Diagram& d : diagrams) {
    if (static_cast<int>(d.edges.size()) > max_edges)
      throw BoundExceeded("max_labeled_edges", std::to_string(d.edges.size()) + " edges");
    Diagram l = d;
    l.labeled = true;
    std::sort(l.edges.begin(), l.edges.end());
    do {
      out.emplace(l.canonical_key(), l);
    } while (std::next_permutation(l.edges.begin(), l.edges.end()));
  }
  std::vector<Diagram> v;
  for (auto& [k, d] : out) v.push_back(std::move(d));
  return v;
}

}  // namespace

namespace detail {

std::vector<FloorDiagram> expand_labeled_floors(const std::vector<FloorDiagram>& d, int max_edges) {
  return expand_labeled(d, max_edges);
}
std::vector<PearlDiagram> expand_labeled_pearls(const std::vector<PearlDiagram>& d, int max_edges) {
  return expand_labeled(d, max_edges);
}

}  // namespace detail

std::vector<FloorDiagram> enumerate_floor_diagrams(int g, std::int64_t a, const std::vector<std::int64_t>& w,
                                                   const EnumerationOptions& opts) {
  RamificationProfile{a, w}.validate();
  if (g < 0) throw std::domain_error("genus must be nonnegative");
  if (g > opts.max_genus) throw BoundExceeded("max_genus", "g = " + std::to_string(g));
  if (a > opts.max_floor_degree) throw BoundExceeded("max_degree", "a = " + std::to_string(a));
  const int g0 = opts.lambda_g0.value_or(g);
  if (g0 < 0 || g0 > g) throw std::domain_error("skeleton genus must lie in [0, g]");

  FloorSweep sweep(g0, g, a, w);
  std::map<std::string, FloorDiagram> skeletons;
  if (sweep.feasible()) {
    const State root = sweep.initial();
    std::vector<State> tops = sweep.children(root);
    const unsigned workers = std::max(1u, std::min<unsigned>(opts.workers, static_cast<unsigned>(tops.size())));
    std::vector<std::map<std::string, FloorDiagram>> partial(workers);
    std::vector<std::exception_ptr> errors(workers);
    auto work = [&](unsigned id) {
      try {
        for (std::size_t i = id; i < tops.size(); i += workers) sweep.explore(tops[i], partial[id]);
      } catch (...) {
        errors[id] = std::current_exception();
      }
    };
    if (workers == 1) {
      work(0);
    } else {
      std::vector<std::thread> pool;
      for (unsigned id = 0; id < workers; ++id) pool.emplace_back(work, id);
      for (auto& t : pool) t.join();
    }
    for (auto& e : errors)
      if (e) std::rethrow_exception(e);
    for (auto& p : partial) skeletons.merge(p);
  }

  std::map<std::string, FloorDiagram> decorated;
  for (const auto& [key, skel] : skeletons) sweep.decorate(skel, decorated);
  std::vector<FloorDiagram> out;
  for (auto& [key, d] : decorated) out.push_back(std::move(d));
  if (opts.mode == EnumerationMode::labeled) return expand_labeled(out, opts.max_labeled_edges);
  return out;
}

}  // namespace mcf
