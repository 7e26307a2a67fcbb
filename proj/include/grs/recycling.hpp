#pragma once

#include <iosfwd>
#include <span>
#include <utility>
#include <vector>

#include "grs/engine.hpp"

namespace grs {

/// Wraps an engine result verbatim as a computed rule. Validates that
/// abductive records have consistent context unions.
ComputedRule computed_rule_from_normal_form(Lit literal, const NormalForm& nf, uint32_t generation);

/// Recycling rules RC (plain) and RC' (abductive). `chain_set` is the set
/// G of literals on the live chain, including the current literal. Records
/// whose contexts (after augmentation with G) are inconsistent are dropped;
/// an F body or an empty selection yields F.
NormalForm apply_recycling(const Context& chain_set, const ComputedRule& rule, Mode mode);

enum class BatchPolicy : uint8_t { Recycle, NoRecycle };

struct BatchEntry {
  Lit goal = 0;
  NormalForm nf;
  Trace trace;
};

struct BatchOutcome {
  std::vector<BatchEntry> entries;      // input order
  RewriteSystem final_system;
};

/// Solves a batch of goals. NoRecycle solves each goal independently on the
/// given system. Recycle orders the goals by dependency rank and, after
/// each goal, extends the system with its computed rule for the benefit of
/// the goals that follow. Results are returned in input order.
BatchOutcome batch_solve(const RewriteSystem& base, std::span<const Lit> goals, Mode mode,
                         BatchPolicy policy, const RewriteOptions& opts = {});

/// Computed-rule store, one rule per line:
///
///   lit -> F
///   lit -> T({l1, l2}) v T({...})
///   lit -> [ab({...}), -ab2({...})]({l1}) v ...
///
/// save writes the system's rules sorted by literal; load parses rules
/// (interning atoms as needed) and stamps them with the given generation.
void save_computed_rules(const RewriteSystem& sys, std::ostream& out);
std::vector<ComputedRule> load_computed_rules(std::istream& in, AtomTable& atoms, uint32_t generation);

}  // namespace grs
