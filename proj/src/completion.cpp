#include "grs/completion.hpp"

#include <algorithm>
#include <cassert>
#include <set>
#include <stdexcept>

namespace grs {

DefinitionBody negate_body(const DefinitionBody& b) {
  DefinitionBody out;
  if (b.false_body()) return DefinitionBody::t();
  for (const auto& d : b.disjuncts) {
    if (d.empty()) return DefinitionBody::f();  // not T -> F
  }
  // De Morgan: one complemented literal pick per disjunct, every combination.
  std::vector<size_t> pick(b.disjuncts.size(), 0);
  std::set<std::vector<Lit>> seen;
  while (true) {
    std::vector<Lit> conj;
    for (size_t i = 0; i < pick.size(); ++i) {
      Lit l = complement(b.disjuncts[i][pick[i]]);
      if (std::find(conj.begin(), conj.end(), l) == conj.end()) conj.push_back(l);
    }
    std::vector<Lit> key = conj;
    std::sort(key.begin(), key.end());
    if (seen.insert(std::move(key)).second) out.disjuncts.push_back(std::move(conj));
    size_t i = 0;
    for (; i < pick.size(); ++i) {
      if (++pick[i] < b.disjuncts[i].size()) break;
      pick[i] = 0;
    }
    if (i == pick.size()) break;
  }
  return out;
}

DefinitionStore::DefinitionStore(std::shared_ptr<const Program> program,
                                 std::shared_ptr<AtomTable> atoms)
    : program_(std::move(program)), atoms_(std::move(atoms)) {
  for (size_t i = 0; i < program_->rules.size(); ++i)
    rules_by_head_[program_->rules[i].head.pred].push_back(i);
}

namespace {

constexpr SymbolId kUnbound = static_cast<SymbolId>(-1);

// Constant unification of a ground argument vector against a rule head.
bool match_head(const Rule& r, const GroundAtom& target, std::vector<SymbolId>& binding) {
  binding.assign(r.var_count, kUnbound);
  for (size_t i = 0; i < r.head.args.size(); ++i) {
    const Term& t = r.head.args[i];
    if (t.is_constant()) {
      if (t.id != target.args[i]) return false;
    } else {
      SymbolId& slot = binding[t.id];
      if (slot == kUnbound)
        slot = target.args[i];
      else if (slot != target.args[i])
        return false;
    }
  }
  return true;
}

SymbolId resolve(const Term& t, const std::vector<SymbolId>& binding) {
  if (t.is_constant()) return t.id;
  SymbolId v = binding[t.id];
  if (v == kUnbound)
    throw std::logic_error("rule has body variables outside the head; instantiate the program first");
  return v;
}

}  // namespace

DefinitionBody DefinitionStore::compute_atom_body(AtomId atom) {
  const GroundAtom& target = atoms_->atom(atom);
  DefinitionBody body;
  auto it = rules_by_head_.find(target.pred);
  if (it == rules_by_head_.end()) return body;  // F: no rule has this head
  std::vector<SymbolId> binding;
  std::vector<SymbolId> args;
  for (size_t idx : it->second) {
    const Rule& r = program_->rules[idx];
    if (!match_head(r, target, binding)) continue;
    bool constraints_hold = true;
    for (const InequalityConstraint& c : r.constraints) {
      if (resolve(c.lhs, binding) == resolve(c.rhs, binding)) {
        constraints_hold = false;
        break;
      }
    }
    if (!constraints_hold) continue;
    std::vector<Lit> conj;
    auto add_lit = [&](const Atom& a, bool positive) {
      args.clear();
      for (const Term& t : a.args) args.push_back(resolve(t, binding));
      Lit l = make_lit(atoms_->intern(a.pred, args), positive);
      if (std::find(conj.begin(), conj.end(), l) == conj.end()) conj.push_back(l);
    };
    for (const Atom& a : r.pos_body) add_lit(a, true);
    for (const Atom& a : r.neg_body) add_lit(a, false);
    body.disjuncts.push_back(std::move(conj));
  }
  return body;
}

const DefinitionBody& DefinitionStore::completed(AtomId atom, Mode mode) {
  return literal_body(positive_lit(atom), mode);
}

const DefinitionBody& DefinitionStore::literal_body(Lit l, Mode mode) {
  if (mode == Mode::Abductive && program_->is_abducible(atoms_->pred_of(lit_atom(l))))
    throw std::logic_error("abducibles are never expanded in abductive mode: " +
                           atoms_->render_lit(l));
  {
    std::shared_lock lock(mu_);
    auto it = memo_.find(l);
    if (it != memo_.end()) return it->second;
  }
  DefinitionBody body = compute_atom_body(lit_atom(l));
  if (!lit_positive(l)) body = negate_body(body);
  std::unique_lock lock(mu_);
  auto [it, inserted] = memo_.try_emplace(l, std::move(body));
  (void)inserted;
  return it->second;
}

}  // namespace grs
