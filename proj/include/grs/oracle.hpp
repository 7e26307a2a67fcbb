#pragma once

#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "grs/engine.hpp"
#include "grs/program.hpp"

namespace grs {

class OracleCapacityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// (atom text, positive) — the oracle's literal representation, kept
/// independent of the engine's interned codes.
using OracleLit = std::pair<std::string, bool>;
using OracleContext = std::set<OracleLit>;

struct PartialStableModel {
  std::set<std::string> true_atoms;
  std::set<std::string> false_atoms;  // remainder is undefined

  bool holds(const OracleLit& l) const {
    return l.second ? true_atoms.count(l.first) != 0 : false_atoms.count(l.first) != 0;
  }
  friend bool operator==(const PartialStableModel&, const PartialStableModel&) = default;
};

struct ModelSet {
  std::vector<PartialStableModel> psms;
  std::vector<std::set<std::string>> answer_sets;
};

struct OracleReport {
  std::string goal;
  bool pass = false;
  std::string witness;  // non-empty on failure
};

/// Brute-force ground semantics: the monotone derivation closure, the
/// alternating operator F_P, and exhaustive enumeration of partial stable
/// models and answer sets over all negation sets. Requires a fully ground
/// program; refuses universes above the cap rather than truncating.
class Oracle {
 public:
  explicit Oracle(const Program& ground_program,
                  const std::vector<std::string>& extra_atoms = {},
                  unsigned cap = 18);

  const std::vector<std::string>& universe() const { return universe_; }

  /// Least set of atoms closed under the rules, with default negations
  /// satisfied by membership of the atom in `negated`.
  std::set<std::string> derive_closure(const std::set<std::string>& negated) const;
  /// F_P: atoms not derivable under the assumptions, as a negation set.
  std::set<std::string> f_p(const std::set<std::string>& negated) const;
  /// Scans all 2^n negation sets. Throws OracleCapacityError if the
  /// universe exceeds the cap.
  ModelSet enumerate() const;

 private:
  std::vector<std::string> universe_;
  std::unordered_map<std::string, unsigned> atom_index_;
  struct BitRule {
    unsigned head;
    uint32_t pos_mask;
    uint32_t neg_mask;
  };
  std::vector<BitRule> rules_;
  unsigned cap_;

  uint32_t closure_mask(uint32_t negated) const;
  uint32_t mask_of(const std::set<std::string>& atoms) const;
  std::set<std::string> atoms_of(uint32_t mask) const;
};

/// Theorem-style checks. Soundness: every success context C must satisfy
/// g in C and C subseteq M for some partial stable model M. Completeness:
/// every partial stable model containing g must contain some success
/// context (with g in it). Failures carry a concrete witness.
OracleReport check_soundness(const OracleLit& goal, const std::vector<OracleContext>& contexts,
                             const ModelSet& models);
OracleReport check_completeness(const OracleLit& goal, const std::vector<OracleContext>& contexts,
                                const ModelSet& models);

/// Bridge from engine values to oracle literals.
OracleLit oracle_lit(const AtomTable& atoms, Lit l);
std::vector<OracleContext> oracle_contexts(const AtomTable& atoms, const NormalForm& nf);

}  // namespace grs
