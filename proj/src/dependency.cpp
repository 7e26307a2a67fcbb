#include "grs/dependency.hpp"

#include <algorithm>
#include <cassert>
#include <functional>
#include <numeric>
#include <set>

namespace grs {

DependencyGraph DependencyGraph::build(const Program& p) {
  DependencyGraph g;
  const size_t n = p.preds.size();
  g.scc_of_.assign(n, -1);
  std::vector<std::set<PredId>> adj(n);
  std::vector<bool> present(n, false);
  for (const Rule& r : p.rules) {
    present[r.head.pred] = true;
    auto edge = [&](const Atom& a) {
      present[a.pred] = true;
      if (adj[r.head.pred].insert(a.pred).second) g.edges_.emplace_back(r.head.pred, a.pred);
    };
    for (const Atom& a : r.pos_body) edge(a);
    for (const Atom& a : r.neg_body) edge(a);
  }

  // Tarjan; SCCs come out in reverse topological order of the condensation
  // (every successor SCC is emitted before its predecessors), so ranks and
  // the reachability closure can be filled in emission order.
  std::vector<uint32_t> index(n, 0), low(n, 0);
  std::vector<bool> on_stack(n, false), visited(n, false);
  std::vector<PredId> stack;
  uint32_t counter = 1;
  std::vector<std::vector<PredId>> scc_members;
  std::vector<bool> scc_cyclic;

  std::function<void(PredId)> strongconnect = [&](PredId v) {
    visited[v] = true;
    index[v] = low[v] = counter++;
    stack.push_back(v);
    on_stack[v] = true;
    for (PredId w : adj[v]) {
      if (!visited[w]) {
        strongconnect(w);
        low[v] = std::min(low[v], low[w]);
      } else if (on_stack[w]) {
        low[v] = std::min(low[v], index[w]);
      }
    }
    if (low[v] == index[v]) {
      int32_t scc = static_cast<int32_t>(scc_members.size());
      scc_members.emplace_back();
      while (true) {
        PredId w = stack.back();
        stack.pop_back();
        on_stack[w] = false;
        g.scc_of_[w] = scc;
        scc_members.back().push_back(w);
        if (w == v) break;
      }
      scc_cyclic.push_back(scc_members.back().size() > 1 ||
                           adj[v].count(v) != 0);
    }
  };
  for (PredId v = 0; v < n; ++v)
    if (present[v] && !visited[v]) strongconnect(v);

  const size_t m = scc_members.size();
  g.scc_rank_.assign(m, 0);
  g.scc_reaches_.assign(m, std::vector<bool>(m, false));
  for (size_t s = 0; s < m; ++s) {
    for (PredId v : scc_members[s]) {
      for (PredId w : adj[v]) {
        size_t t = static_cast<size_t>(g.scc_of_[w]);
        if (t == s) continue;
        // successors were emitted earlier: t < s
        assert(t < s);
        g.scc_rank_[s] = std::max(g.scc_rank_[s], g.scc_rank_[t] + 1);
        g.scc_reaches_[s][t] = true;
        for (size_t u = 0; u < m; ++u)
          if (g.scc_reaches_[t][u]) g.scc_reaches_[s][u] = true;
      }
    }
    if (scc_cyclic[s]) g.scc_reaches_[s][s] = true;
  }
  return g;
}

bool DependencyGraph::has_node(PredId p) const {
  return p < scc_of_.size() && scc_of_[p] >= 0;
}

bool DependencyGraph::depends_on(PredId p, PredId q) const {
  if (!has_node(p) || !has_node(q)) return false;
  return scc_reaches_[static_cast<size_t>(scc_of_[p])][static_cast<size_t>(scc_of_[q])];
}

uint32_t DependencyGraph::rank(PredId p) const {
  if (!has_node(p)) return 0;
  return scc_rank_[static_cast<size_t>(scc_of_[p])];
}

std::vector<size_t> order_by_rank(std::span<const uint32_t> ranks) {
  std::vector<size_t> idx(ranks.size());
  std::iota(idx.begin(), idx.end(), size_t{0});
  std::stable_sort(idx.begin(), idx.end(),
                   [&](size_t a, size_t b) { return ranks[a] < ranks[b]; });
  return idx;
}

std::vector<Literal> order_goals(const DependencyGraph& g, std::vector<Literal> goals) {
  std::vector<uint32_t> ranks(goals.size());
  for (size_t i = 0; i < goals.size(); ++i) ranks[i] = g.rank(goals[i].atom.pred);
  std::vector<Literal> out;
  out.reserve(goals.size());
  for (size_t i : order_by_rank(ranks)) out.push_back(std::move(goals[i]));
  return out;
}

}  // namespace grs
