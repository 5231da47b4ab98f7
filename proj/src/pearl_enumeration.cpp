#include <algorithm>
#include <map>
#include <set>
#include <thread>

#include "mcf/diagrams.hpp"
#include "union_find.hpp"

namespace mcf {

namespace detail {
std::vector<PearlDiagram> expand_labeled_pearls(const std::vector<PearlDiagram>& d, int max_edges);
}

namespace {

using detail::UnionFind;

void compositions(std::int64_t total, int parts, std::int64_t min_part, std::vector<std::int64_t>& cur,
                  std::vector<std::vector<std::int64_t>>& out) {
  if (parts == 0) {
    if (total == 0) out.push_back(cur);
    return;
  }
  for (std::int64_t p = min_part; p <= total - min_part * (parts - 1); ++p) {
    cur.push_back(p);
    compositions(total - p, parts - 1, min_part, cur, out);
    cur.pop_back();
  }
}

struct Task {
  int edges;
  std::uint32_t flat_mask;
};

class PearlSearch {
 public:
  PearlSearch(int g, int genus, DiagramDegree b) : g_(g), genus_(genus), b_(b) {}

  std::vector<Task> tasks() const {
    std::vector<Task> out;
    for (int eb = g_ - 1; eb <= 2 * g_ - 2; ++eb) {
      const int vm = 1 - g_ + eb;
      const int vf = g_ - vm;
      if (vm < 0 || vf < 1 || vf > b_.a) continue;
      for (std::uint32_t mask = 0; mask < (1u << g_); ++mask)
        if (__builtin_popcount(mask) == vm) out.push_back({eb, mask});
    }
    return out;
  }

  void run(const Task& t, std::map<std::string, PearlDiagram>& out) const {
    std::vector<int> pearls;
    for (int v = 0; v < g_; ++v)
      if (!(t.flat_mask >> v & 1)) pearls.push_back(v);
    const int vf = static_cast<int>(pearls.size());
    std::vector<std::vector<std::int64_t>> ins, outs;
    std::vector<std::int64_t> cur;
    compositions(g_ - 1, vf, 1, cur, ins);
    compositions(g_ - 1, vf, 1, cur, outs);
    std::set<std::vector<std::pair<int, int>>> structures;
    for (const auto& in_deg : ins)
      for (const auto& out_deg : outs) {
        std::vector<int> tails, heads;
        for (int v = 0; v < g_; ++v)
          if (t.flat_mask >> v & 1) {
            tails.push_back(v);
            heads.push_back(v);
          }
        for (int i = 0; i < vf; ++i) {
          for (std::int64_t j = 0; j < out_deg[i]; ++j) tails.push_back(pearls[i]);
          for (std::int64_t j = 0; j < in_deg[i]; ++j) heads.push_back(pearls[i]);
        }
        std::sort(tails.begin(), tails.end());
        std::sort(heads.begin(), heads.end());
        do {
          std::vector<std::pair<int, int>> edges;
          bool loop = false;
          for (std::size_t i = 0; i < tails.size(); ++i) {
            loop = loop || tails[i] == heads[i];
            edges.emplace_back(tails[i], heads[i]);
          }
          if (loop) continue;
          std::sort(edges.begin(), edges.end());
          if (!structures.insert(edges).second) continue;
          if (!cut_is_tree(t.flat_mask, edges)) continue;
          weigh(t.flat_mask, edges, out);
        } while (std::next_permutation(heads.begin(), heads.end()));
      }
  }

 private:
  bool cut_is_tree(std::uint32_t flats, const std::vector<std::pair<int, int>>& edges) const {
    UnionFind hat(2 * g_);
    int components = g_ + __builtin_popcount(flats);
    for (auto [t, h] : edges) {
      const int tn = (flats >> t & 1) ? g_ + t : t;
      if (!hat.unite(tn, h)) return false;
      --components;
    }
    return components == 1;
  }

  void weigh(std::uint32_t flats, const std::vector<std::pair<int, int>>& edges,
             std::map<std::string, PearlDiagram>& out) const {
    std::vector<std::int64_t> w(edges.size(), 0);
    assign_weight(flats, edges, 0, w, out);
  }

  bool balanced_so_far(const std::vector<std::pair<int, int>>& edges, const std::vector<std::int64_t>& w,
                       std::size_t assigned) const {
    for (int v = 0; v < g_; ++v) {
      std::int64_t bal = 0;
      bool complete = true;
      for (std::size_t i = 0; i < edges.size(); ++i) {
        if (edges[i].first != v && edges[i].second != v) continue;
        if (i >= assigned) {
          complete = false;
          break;
        }
        bal += (edges[i].first == v ? w[i] : -w[i]);
      }
      if (complete && bal != 0) return false;
    }
    return true;
  }

  void assign_weight(std::uint32_t flats, const std::vector<std::pair<int, int>>& edges, std::size_t i,
                     std::vector<std::int64_t>& w, std::map<std::string, PearlDiagram>& out) const {
    if (!balanced_so_far(edges, w, i)) return;
    if (i == edges.size()) {
      wind(flats, edges, w, out);
      return;
    }
    for (std::int64_t x = 1; x <= b_.norm; ++x) {
      w[i] = x;
      assign_weight(flats, edges, i + 1, w, out);
    }
    w[i] = 0;
  }

  void wind(std::uint32_t flats, const std::vector<std::pair<int, int>>& edges, const std::vector<std::int64_t>& w,
            std::map<std::string, PearlDiagram>& out) const {
    PearlDiagram d;
    d.vertices.resize(g_);
    for (std::size_t i = 0; i < edges.size(); ++i) d.edges.push_back({edges[i].first, edges[i].second, w[i], 0});
    std::int64_t base = 0;
    for (const auto& e : d.edges) base += e.weight * d.crossings(e, g_ - 1);
    if (base > b_.norm) return;
    std::vector<std::int64_t> r(edges.size(), 0);
    spread(d, flats, b_.norm - base, 0, r, out);
  }

  void spread(PearlDiagram& d, std::uint32_t flats, std::int64_t remaining, std::size_t i,
              std::vector<std::int64_t>& r, std::map<std::string, PearlDiagram>& out) const {
    if (i == d.edges.size()) {
      if (remaining != 0) return;
      for (std::size_t j = 0; j < r.size(); ++j) d.edges[j].winding = r[j];
      decorate(d, flats, out);
      return;
    }
    for (std::int64_t x = 0; x * d.edges[i].weight <= remaining; ++x) {
      r[i] = x;
      spread(d, flats, remaining - x * d.edges[i].weight, i + 1, r, out);
    }
  }

  void decorate(const PearlDiagram& skeleton, std::uint32_t flats, std::map<std::string, PearlDiagram>& out) const {
    std::vector<int> pearls;
    for (int v = 0; v < g_; ++v)
      if (!(flats >> v & 1)) pearls.push_back(v);
    const int vf = static_cast<int>(pearls.size());
    const int b1 = static_cast<int>(skeleton.edges.size()) - g_ + 1;
    std::vector<std::vector<std::int64_t>> degree_splits, genus_splits;
    std::vector<std::int64_t> cur;
    compositions(b_.a, vf, 1, cur, degree_splits);
    compositions(genus_ - b1, vf, 1, cur, genus_splits);
    for (const auto& ds : degree_splits)
      for (const auto& gs : genus_splits) {
        PearlDiagram d = skeleton;
        for (int i = 0; i < vf; ++i) d.vertices[pearls[i]] = {PearlVertexKind::pearl, ds[i], static_cast<int>(gs[i])};
        std::sort(d.edges.begin(), d.edges.end());
        if (pearl_diagram_defect(d)) continue;
        out.emplace(d.canonical_key(), std::move(d));
      }
  }

  int g_;
  int genus_;
  DiagramDegree b_;
};

}  // namespace

std::vector<PearlDiagram> enumerate_pearl_diagrams(int g, const DiagramDegree& b, const EnumerationOptions& opts) {
  b.validate();
  if (g < 2) throw std::domain_error("pearl diagrams need genus at least 2");
  if (g > opts.max_genus) throw BoundExceeded("max_genus", "g = " + std::to_string(g));
  if (b.norm > opts.max_pearl_norm) throw BoundExceeded("max_degree", "|B| = " + std::to_string(b.norm));
  if (b.a > opts.max_pearl_degree) throw BoundExceeded("max_degree", "a = " + std::to_string(b.a));
  const int g0 = opts.lambda_g0.value_or(g);
  if (g0 < 2 || g0 > g) throw std::domain_error("skeleton genus must lie in [2, g]");

  PearlSearch search(g0, g, b);
  const std::vector<Task> tasks = search.tasks();
  const unsigned workers = std::max(1u, std::min<unsigned>(opts.workers, static_cast<unsigned>(tasks.size())));
  std::vector<std::map<std::string, PearlDiagram>> partial(workers);
  std::vector<std::exception_ptr> errors(workers);
  auto work = [&](unsigned id) {
    try {
      for (std::size_t i = id; i < tasks.size(); i += workers) search.run(tasks[i], partial[id]);
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
  std::map<std::string, PearlDiagram> merged;
  for (auto& p : partial) merged.merge(p);
  std::vector<PearlDiagram> out;
  for (auto& [k, d] : merged) out.push_back(std::move(d));
  if (opts.mode == EnumerationMode::labeled) return detail::expand_labeled_pearls(out, opts.max_labeled_edges);
  return out;
}

}  // namespace mcf
