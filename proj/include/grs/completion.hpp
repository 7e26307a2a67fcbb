#pragma once

#include <memory>
#include <shared_mutex>
#include <unordered_map>
#include <vector>

#include "grs/atoms.hpp"
#include "grs/program.hpp"

namespace grs {

enum class Mode : uint8_t { Plain, Abductive };

/// Body of a completed definition in negation normal form, as a disjunction
/// of conjunctions of ground literals. An empty disjunction is F; an empty
/// conjunct is T. Negation occurs only at the literal level.
struct DefinitionBody {
  std::vector<std::vector<Lit>> disjuncts;

  bool false_body() const { return disjuncts.empty(); }
  static DefinitionBody f() { return {}; }
  static DefinitionBody t() { return {{{}}}; }

  friend bool operator==(const DefinitionBody&, const DefinitionBody&) = default;
};

/// De Morgan dual, re-normalized to a disjunction of conjunctions.
/// not F -> T, not T -> F; otherwise the cross product of complemented
/// literal picks, one per disjunct. Conjuncts are deduplicated but never
/// simplified further (a contradictory conjunct like {-p, p} is kept and
/// left to fail during rewriting).
DefinitionBody negate_body(const DefinitionBody& b);

/// Lazy, memoized ground completion of a program. Definitions are produced
/// per ground atom on demand by matching the atom against rule heads under
/// constant unification; the whole ground program is never materialized.
/// The memo admits concurrent readers; a returned body is immutable.
class DefinitionStore {
 public:
  DefinitionStore(std::shared_ptr<const Program> program, std::shared_ptr<AtomTable> atoms);

  /// Completed definition of a ground atom: one disjunct per matching rule
  /// instance with head bindings applied and `!=` constraints evaluated.
  /// No matching rule yields F; an empty body yields the T conjunct.
  /// In Abductive mode requesting an abducible atom is a contract error
  /// (abducibles are never expanded; callers leave them as residue).
  const DefinitionBody& completed(AtomId atom, Mode mode);

  /// Definition used to rewrite a literal: the completed definition for a
  /// positive literal, its negate_body for a negative one. Memoized per
  /// literal.
  const DefinitionBody& literal_body(Lit l, Mode mode);

  const Program& program() const { return *program_; }
  AtomTable& atoms() { return *atoms_; }

 private:
  std::shared_ptr<const Program> program_;
  std::shared_ptr<AtomTable> atoms_;
  std::unordered_map<PredId, std::vector<size_t>> rules_by_head_;

  mutable std::shared_mutex mu_;
  std::unordered_map<Lit, DefinitionBody> memo_;

  DefinitionBody compute_atom_body(AtomId atom);
};

}  // namespace grs
