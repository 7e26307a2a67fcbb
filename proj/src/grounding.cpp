#include "grs/grounding.hpp"

#include <algorithm>
#include <set>

namespace grs {

namespace {

std::set<VarId> head_variables(const Rule& r) {
  std::set<VarId> vars;
  for (const Term& t : r.head.args)
    if (t.is_variable()) vars.insert(t.id);
  return vars;
}

std::set<VarId> body_variables(const Rule& r) {
  std::set<VarId> vars;
  auto scan = [&](const Term& t) {
    if (t.is_variable()) vars.insert(t.id);
  };
  for (const Atom& a : r.pos_body)
    for (const Term& t : a.args) scan(t);
  for (const Atom& a : r.neg_body)
    for (const Term& t : a.args) scan(t);
  for (const InequalityConstraint& c : r.constraints) {
    scan(c.lhs);
    scan(c.rhs);
  }
  return vars;
}

/// Evaluates constant constraints: satisfied ones are removed, a violated
/// one makes the rule instance impossible (returns false).
bool filter_constant_constraints(Rule& r) {
  auto it = r.constraints.begin();
  while (it != r.constraints.end()) {
    if (it->lhs.is_constant() && it->rhs.is_constant()) {
      if (it->lhs.id == it->rhs.id) return false;
      it = r.constraints.erase(it);
    } else {
      ++it;
    }
  }
  return true;
}

Term substitute(const Term& t, const std::vector<std::optional<SymbolId>>& assignment) {
  if (t.is_variable() && t.id < assignment.size() && assignment[t.id])
    return Term::constant(*assignment[t.id]);
  return t;
}

Rule substitute(const Rule& r, const std::vector<std::optional<SymbolId>>& assignment) {
  Rule out = r;
  auto subst_atom = [&](Atom& a) {
    for (Term& t : a.args) t = substitute(t, assignment);
  };
  subst_atom(out.head);
  for (Atom& a : out.pos_body) subst_atom(a);
  for (Atom& a : out.neg_body) subst_atom(a);
  for (InequalityConstraint& c : out.constraints) {
    c.lhs = substitute(c.lhs, assignment);
    c.rhs = substitute(c.rhs, assignment);
  }
  return out;
}

/// Appends every instance of `r` with the given variables instantiated over
/// the domain and constant constraints filtered.
void expand_over_domain(const Rule& r, const std::vector<VarId>& vars,
                        const std::vector<SymbolId>& domain, std::vector<Rule>& out) {
  std::vector<size_t> odo(vars.size(), 0);
  while (true) {
    std::vector<std::optional<SymbolId>> assignment(r.var_count);
    for (size_t i = 0; i < vars.size(); ++i) assignment[vars[i]] = domain[odo[i]];
    Rule inst = substitute(r, assignment);
    if (filter_constant_constraints(inst)) out.push_back(std::move(inst));
    size_t i = 0;
    for (; i < odo.size(); ++i) {
      if (++odo[i] < domain.size()) break;
      odo[i] = 0;
    }
    if (i == odo.size()) break;
  }
}

}  // namespace

Program instantiate_body_only_variables(const Program& p) {
  Program out = p;
  out.rules.clear();
  for (const Rule& r : p.rules) {
    std::set<VarId> head = head_variables(r);
    std::vector<VarId> body_only;
    for (VarId v : body_variables(r))
      if (head.count(v) == 0) body_only.push_back(v);
    if (body_only.empty()) {
      Rule copy = r;
      if (filter_constant_constraints(copy)) out.rules.push_back(std::move(copy));
      continue;
    }
    if (p.domain.empty())
      throw GroundingError("rule has body-only variables but the domain is empty");
    expand_over_domain(r, body_only, p.domain, out.rules);
  }
  return out;
}

Program fully_ground(const Program& p) {
  Program inst = instantiate_body_only_variables(p);
  Program out = inst;
  out.rules.clear();
  for (const Rule& r : inst.rules) {
    std::set<VarId> head = head_variables(r);
    if (head.empty()) {
      Rule copy = r;
      if (filter_constant_constraints(copy)) out.rules.push_back(std::move(copy));
      continue;
    }
    if (inst.domain.empty())
      throw GroundingError("cannot ground head variables without a domain");
    expand_over_domain(r, {head.begin(), head.end()}, inst.domain, out.rules);
  }
  return out;
}

}  // namespace grs
