#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "grs/program.hpp"

namespace grs {

/// Predicate-level dependency graph of a program: an edge (p, q) exists iff
/// q occurs in the body of a rule with head p. Exposes the transitive
/// closure and the SCC condensation with a topological rank per predicate.
/// Ranks are antitone: if p depends on q and q does not depend on p, then
/// rank(q) < rank(p).
class DependencyGraph {
 public:
  static DependencyGraph build(const Program& p);

  bool has_node(PredId p) const;
  /// Transitive dependency (irreflexive unless p is on a cycle).
  bool depends_on(PredId p, PredId q) const;
  /// Topological rank of p's SCC; predicates absent from the graph get 0.
  uint32_t rank(PredId p) const;
  const std::vector<std::pair<PredId, PredId>>& edges() const { return edges_; }
  size_t scc_count() const { return scc_rank_.size(); }

 private:
  std::vector<std::pair<PredId, PredId>> edges_;      // direct, deduplicated
  std::vector<int32_t> scc_of_;                       // pred -> scc, -1 if absent
  std::vector<uint32_t> scc_rank_;                    // scc -> rank
  std::vector<std::vector<bool>> scc_reaches_;        // closure on condensation
};

/// Stable sort of goals by ascending dependency rank of their predicate;
/// goals of equal rank keep their input order. Output is a permutation of
/// the input.
std::vector<Literal> order_goals(const DependencyGraph& g, std::vector<Literal> goals);

/// Index permutation form used by the engine: returns indices into `ranks`
/// sorted stably by rank.
std::vector<size_t> order_by_rank(std::span<const uint32_t> ranks);

}  // namespace grs
