#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <random>
#include <unordered_map>
#include <vector>

#include "grs/chain.hpp"
#include "grs/completion.hpp"

namespace grs {

/// One abducible hypothesis carried by a success record: the literal plus
/// the chain-set context it was abduced under (which includes the literal
/// itself, so complementary abducibles collide through ordinary
/// consistency merging).
struct ResidueEntry {
  Lit lit = 0;
  Context ctx;

  friend bool operator==(const ResidueEntry&, const ResidueEntry&) = default;
  friend auto operator<=>(const ResidueEntry&, const ResidueEntry&) = default;
};

using ResidueVec = boost::container::small_vector<ResidueEntry, 2>;

struct SuccessRecord {
  Context context;                          // the T(C) part
  ResidueVec residue;                       // sorted, unique; empty in plain mode
  /// Literal segments of loops that closed back on the initial goal
  /// (testing aid for the loop-rotation property; not part of identity).
  std::vector<std::vector<Lit>> loop_witnesses;

  bool same_value(const SuccessRecord& o) const {
    return context == o.context && residue.size() == o.residue.size() &&
           std::equal(residue.begin(), residue.end(), o.residue.begin());
  }
  uint64_t value_hash() const;
  /// All residue literals, sorted.
  std::vector<Lit> residue_lits() const;
};

/// Final value of a rewrite run: F (no records) or a disjunction of
/// deduplicated success records in discovery order.
struct NormalForm {
  std::vector<SuccessRecord> records;

  bool failed() const { return records.empty(); }
  static NormalForm f() { return {}; }
  /// Set equality on (context, residue) values, ignoring order.
  bool equivalent(const NormalForm& o) const;
};

/// Post-pass dropping subsumed records: a record is removed when another
/// record's residue literal set is a proper subset of its own, or the
/// residue sets are equal and the other's context is a proper subset. In
/// plain mode this reduces to dropping context supersets.
NormalForm minimize_records(const NormalForm& nf);

enum class StepKind : uint8_t {
  ProgramRule,  // literal rewriting by a completed definition
  LR1,
  LR2,
  RC,
  RCPrime,
  ComputedF,    // computed rule with body F
  Abduce,       // abducible moved to residue
  SR4,          // inconsistent context merge
};

const char* step_kind_name(StepKind k);

struct StepRecord {
  StepKind kind;
  Lit lit;
  uint32_t disjuncts_after;
};

struct Trace {
  bool enabled = false;
  std::vector<StepRecord> steps;
  uint64_t total_steps = 0;
  uint64_t literal_steps = 0;  // ProgramRule steps only
};

struct RewriteOptions {
  Mode mode = Mode::Plain;
  /// 0 selects the default strategy (leftmost open disjunct, leftmost
  /// pending literal); any other value drives a seeded random strategy.
  /// Normal forms are strategy-independent.
  uint64_t seed = 0;
  bool trace = false;
  /// Abandon a disjunct the moment its context or residue union becomes
  /// inconsistent. Turning this off defers the failure to disjunct
  /// completion; it changes the trace but never the normal form.
  bool prune = true;
};

/// Stored normal form for a literal, replacing its literal rewrite rule in
/// the system that carries it.
struct ComputedRule {
  Lit literal = 0;
  NormalForm body;
  uint32_t generation = 0;  // index of the system it was computed on
};

/// A rewrite system: a program plus zero or more computed rules. Immutable
/// once built; extension produces a fresh snapshot sharing the program,
/// atom table and definition memo, so records stay comparable across the
/// whole tower.
class RewriteSystem {
 public:
  /// R^0 over an instantiated program (every body variable occurs in the
  /// rule head). Throws std::invalid_argument otherwise.
  static RewriteSystem base(std::shared_ptr<const Program> program);

  uint32_t index() const { return index_; }
  const ComputedRule* computed_for(Lit l) const;
  const std::map<Lit, ComputedRule>& computed() const { return computed_; }
  size_t computed_count() const { return computed_.size(); }

  const Program& program() const { return *program_; }
  std::shared_ptr<const Program> program_ptr() const { return program_; }
  AtomTable& atoms() const { return *atoms_; }
  std::shared_ptr<AtomTable> atoms_ptr() const { return atoms_; }
  DefinitionStore& definitions() const { return *defs_; }

  friend RewriteSystem extend_system(const RewriteSystem& r, std::vector<ComputedRule> delta);

 private:
  std::shared_ptr<const Program> program_;
  std::shared_ptr<AtomTable> atoms_;
  std::shared_ptr<DefinitionStore> defs_;
  std::map<Lit, ComputedRule> computed_;
  uint32_t index_ = 0;
};

/// New system with index r.index()+1: delta entries override, prior
/// computed rules for other literals are retained. Throws on two delta
/// rules for the same literal or a generation mismatch.
RewriteSystem extend_system(const RewriteSystem& r, std::vector<ComputedRule> delta);

struct AnnotatedLiteral {
  Lit lit = 0;
  ChainPtr chain;  // ends at lit
};

using PendingVec = boost::container::small_vector<AnnotatedLiteral, 8>;

/// One DNF branch: pending literals still to prove, the accumulated
/// context, and the abducible residue. `closure` is context plus all
/// residue contexts and carries the consistency state of the branch (it is
/// only maintained in abductive mode; in plain mode it equals context).
struct Disjunct {
  PendingVec pending;
  Context context;
  ResidueVec residue;
  Context closure;
  std::vector<std::vector<Lit>> witnesses;
  bool dead = false;
};

struct RewriteResult {
  NormalForm nf;
  Trace trace;
};

/// Step-driven rewrite run. rewrite() below is the run-to-quiescence
/// wrapper; the stepper exists so single expansion steps can be observed.
///
/// Open disjuncts live on a stack explored depth-first; the default
/// strategy selects the most recently produced disjunct (the leftmost DNF
/// branch) and its leftmost pending literal.
class Rewriter {
 public:
  Rewriter(const RewriteSystem& sys, Lit query, RewriteOptions opts = {});

  /// Performs one expansion step (selection, exactly one of: loop rule,
  /// recycling, residue move, or literal rewriting, followed by eager
  /// simplification). Returns false once no open disjunct remains.
  bool step();
  RewriteResult run() &&;

  const std::vector<Disjunct>& live() const { return live_; }
  const std::vector<SuccessRecord>& done() const { return done_; }
  const Trace& trace() const { return trace_; }

 private:
  const RewriteSystem& sys_;
  RewriteOptions opts_;
  Lit query_;
  std::vector<Disjunct> live_;  // stack; back() explored next
  std::vector<SuccessRecord> done_;
  std::unordered_map<uint64_t, std::vector<size_t>> done_index_;
  Trace trace_;
  std::mt19937_64 rng_;
  bool has_computed_ = false;
  std::vector<uint8_t> abducible_pred_;            // flat view of the program's set
  std::vector<const DefinitionBody*> def_cache_;   // per-literal, lazily filled

  const DefinitionBody& body_for(Lit l);
  bool is_abducible_lit(Lit l) const;
  void note(StepKind kind, Lit lit);
  void settle(Disjunct&& d);
  void emit(Disjunct&& d);
  bool absorb(Disjunct& d, const Context& ctx);
  bool add_residue(Disjunct& d, ResidueEntry entry);
};

RewriteResult rewrite(const RewriteSystem& sys, Lit query, const RewriteOptions& opts = {});

}  // namespace grs
