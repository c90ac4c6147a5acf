#include <algorithm>
#include <atomic>
#include <mutex>

#include "detail/parallel.hpp"
#include "kmatch/errors.hpp"
#include "kmatch/search.hpp"

namespace kmatch {
namespace {

using detail::NodeBudget;

// Rows without the diagonal.
std::vector<Bitset> open_rows(const CompatGraph& g) {
  std::vector<Bitset> rows;
  rows.reserve(g.order());
  for (std::size_t v = 0; v < g.order(); ++v) {
    rows.push_back(g.row(v));
    rows.back().reset(v);
  }
  return rows;
}

// Vertices in reverse degeneracy order: the last vertex peeled off comes first.
std::vector<std::size_t> degeneracy_order(const std::vector<Bitset>& adj) {
  const std::size_t n = adj.size();
  std::vector<std::size_t> deg(n);
  std::size_t maxdeg = 0;
  for (std::size_t v = 0; v < n; ++v) maxdeg = std::max(maxdeg, deg[v] = adj[v].count());
  std::vector<std::vector<std::size_t>> buckets(maxdeg + 1);
  for (std::size_t v = n; v-- > 0;) buckets[deg[v]].push_back(v);
  std::vector<char> removed(n, 0);
  std::vector<std::size_t> peeled;
  peeled.reserve(n);
  std::size_t low = 0;
  while (peeled.size() < n) {
    while (buckets[low].empty()) ++low;
    const std::size_t v = buckets[low].back();
    buckets[low].pop_back();
    if (removed[v] || deg[v] != low) continue;
    removed[v] = 1;
    peeled.push_back(v);
    adj[v].for_each([&](std::size_t w) {
      if (!removed[w]) {
        buckets[--deg[w]].push_back(w);
        low = std::min(low, deg[w]);
      }
    });
  }
  std::reverse(peeled.begin(), peeled.end());
  return peeled;
}

// Number of colour classes a greedy sequential colouring of `p` uses,
// stopping once `need` is reached.
std::size_t colour_bound(const std::vector<Bitset>& adj, const Bitset& p, std::size_t need, Bitset& u, Bitset& q) {
  u = p;
  std::size_t k = 0;
  while (k < need && u.any()) {
    ++k;
    q = u;
    for (std::size_t v = q.first(); v != Bitset::npos; v = q.next(v + 1)) {
      u.reset(v);
      q.subtract(adj[v]);
    }
  }
  return k;
}

struct BranchAndBound {
  const std::vector<Bitset>& adj;
  std::atomic<std::size_t>& best;
  NodeBudget& budget;

  struct Frame {
    std::vector<std::size_t> order;
    std::vector<std::size_t> colour;
  };

  // Vertices of p with colour >= kmin, in non-decreasing colour order.
  void colour_sort(const Bitset& p, std::size_t kmin, Frame& f) const {
    f.order.clear();
    f.colour.clear();
    Bitset u = p, q(p.size());
    std::size_t k = 0;
    while (u.any()) {
      ++k;
      q = u;
      for (std::size_t v = q.first(); v != Bitset::npos; v = q.next(v + 1)) {
        u.reset(v);
        q.subtract(adj[v]);
        if (k >= kmin) {
          f.order.push_back(v);
          f.colour.push_back(k);
        }
      }
    }
  }

  void raise_best(std::size_t size) const {
    std::size_t cur = best.load();
    while (size > cur && !best.compare_exchange_weak(cur, size)) {
    }
  }

  void expand(std::size_t depth, Bitset p, NodeBudget::Meter& meter) const {
    meter.tick();
    Frame f;
    const std::size_t b = best.load();
    const std::size_t kmin = b + 1 > depth ? b + 1 - depth : 1;
    colour_sort(p, kmin, f);
    Bitset np(p.size());
    for (std::size_t i = f.order.size(); i-- > 0;) {
      if (depth + f.colour[i] <= best.load()) return;
      const std::size_t v = f.order[i];
      np.assign_and(p, adj[v]);
      if (np.none())
        raise_best(depth + 1);
      else
        expand(depth + 1, np, meter);
      p.reset(v);
    }
  }
};

// Ascending search for cliques of exactly `target` vertices. `emit` returns
// false to stop the whole search.
template <class Emit>
bool ascend(const std::vector<Bitset>& adj, std::vector<std::size_t>& clique, const Bitset& p, std::size_t target,
            NodeBudget::Meter& meter, Emit& emit) {
  meter.tick();
  if (clique.size() == target) return emit(clique);
  const std::size_t need = target - clique.size();
  if (p.count() < need) return true;
  Bitset u(p.size()), q(p.size());
  if (colour_bound(adj, p, need, u, q) < need) return true;
  Bitset rest = p, np(p.size());
  for (std::size_t v = rest.first(); v != Bitset::npos; v = rest.next(v + 1)) {
    rest.reset(v);
    if (rest.count() + 1 < need) break;
    np.assign_and(rest, adj[v]);
    clique.push_back(v);
    const bool go = ascend(adj, clique, np, target, meter, emit);
    clique.pop_back();
    if (!go) return false;
  }
  return true;
}

}  // namespace

CliqueResult max_clique(const CompatGraph& g, const CliqueOptions& opt) {
  CliqueResult res;
  const std::size_t n = g.order();
  if (n == 0) return res;

  const std::vector<Bitset> adj0 = open_rows(g);
  const std::vector<std::size_t> order = degeneracy_order(adj0);
  std::vector<std::size_t> pos(n);
  for (std::size_t i = 0; i < n; ++i) pos[order[i]] = i;
  std::vector<Bitset> adj(n, Bitset(n));
  for (std::size_t i = 0; i < n; ++i) adj0[order[i]].for_each([&](std::size_t w) { adj[i].set(pos[w]); });

  NodeBudget budget(opt.node_budget);
  std::atomic<std::size_t> best{std::max<std::size_t>(1, std::min(opt.known_lower_bound, n))};
  BranchAndBound bb{adj, best, budget};

  // Root branches run in parallel; branch i sees the candidates left after the
  // branches above it in colour order have been removed.
  Bitset all(n);
  all.set_all();
  BranchAndBound::Frame root;
  bb.colour_sort(all, best.load() + 1, root);
  std::vector<Bitset> root_p;
  {
    Bitset p = all;
    root_p.resize(root.order.size());
    for (std::size_t i = root.order.size(); i-- > 0;) {
      root_p[i] = Bitset(n);
      root_p[i].assign_and(p, adj[root.order[i]]);
      p.reset(root.order[i]);
    }
  }
  std::atomic<std::size_t> next{0};
  const std::size_t m = root.order.size();
  detail::run_workers(opt.workers, [&](unsigned) {
    NodeBudget::Meter meter(budget);
    for (std::size_t k = next.fetch_add(1); k < m; k = next.fetch_add(1)) {
      const std::size_t i = m - 1 - k;
      if (root.colour[i] <= best.load()) break;
      meter.tick();
      if (root_p[i].none())
        bb.raise_best(1);
      else
        bb.expand(1, root_p[i], meter);
    }
    meter.flush();
  });
  res.size = best.load();

  // Canonical witness: first clique of that size in ascending vertex order.
  std::vector<std::size_t> clique;
  std::vector<std::size_t> found;
  auto take = [&](const std::vector<std::size_t>& c) {
    found = c;
    return false;
  };
  {
    NodeBudget::Meter meter(budget);
    ascend(adj0, clique, all, res.size, meter, take);
    meter.flush();
  }
  if (found.size() != res.size) {
    // known_lower_bound can claim more than the graph holds.
    if (opt.known_lower_bound > 0 && res.size == opt.known_lower_bound)
      throw DomainError("no clique of the claimed lower bound " + std::to_string(res.size) + " exists");
    throw InternalError("canonical witness search found no clique of size " + std::to_string(res.size));
  }
  res.witness = std::move(found);
  res.nodes = budget.used();
  return res;
}

std::vector<std::vector<std::size_t>> all_max_cliques(const CompatGraph& g, std::size_t size, std::uint64_t cap,
                                                      const CliqueOptions& opt) {
  const std::size_t n = g.order();
  std::vector<std::vector<std::size_t>> out;
  if (size == 0) {
    out.emplace_back();
    return out;
  }
  if (size > n) return out;
  const std::vector<Bitset> adj = open_rows(g);
  NodeBudget budget(opt.node_budget);
  std::atomic<std::uint64_t> total{0};
  std::atomic<bool> overflow{false};
  std::vector<std::vector<std::vector<std::size_t>>> per_top(n);
  std::atomic<std::size_t> next{0};

  detail::run_workers(opt.workers, [&](unsigned) {
    NodeBudget::Meter meter(budget);
    for (std::size_t v = next.fetch_add(1); v + size <= n && !overflow.load(); v = next.fetch_add(1)) {
      Bitset p = adj[v];
      p.reset_through(v);
      std::vector<std::size_t> clique{v};
      auto keep = [&](const std::vector<std::size_t>& c) {
        if (total.fetch_add(1) + 1 > cap) {
          overflow.store(true);
          return false;
        }
        per_top[v].push_back(c);
        return !overflow.load();
      };
      ascend(adj, clique, p, size, meter, keep);
    }
    meter.flush();
  });
  if (overflow.load())
    throw MaximaOverflow("more than " + std::to_string(cap) + " maximum cliques", std::min<std::uint64_t>(total.load(), cap));
  for (auto& bucket : per_top)
    for (auto& c : bucket) out.push_back(std::move(c));
  return out;
}

}  // namespace kmatch
