#include "grs/oracle.hpp"

#include <algorithm>

namespace grs {

namespace {

std::string render_oracle_lit(const OracleLit& l) { return l.second ? l.first : "-" + l.first; }

std::string render_oracle_context(const OracleContext& c) {
  std::string out = "{";
  bool first = true;
  for (const OracleLit& l : c) {
    if (!first) out += ", ";
    first = false;
    out += render_oracle_lit(l);
  }
  return out + "}";
}

std::string render_model(const PartialStableModel& m) {
  auto join = [](const std::set<std::string>& s) {
    std::string out = "{";
    bool first = true;
    for (const std::string& a : s) {
      if (!first) out += ",";
      first = false;
      out += a;
    }
    return out + "}";
  };
  return "+" + join(m.true_atoms) + " -" + join(m.false_atoms);
}

}  // namespace

Oracle::Oracle(const Program& gp, const std::vector<std::string>& extra_atoms, unsigned cap)
    : cap_(cap) {
  auto add_atom = [&](const std::string& name) -> unsigned {
    auto it = atom_index_.find(name);
    if (it != atom_index_.end()) return it->second;
    unsigned idx = static_cast<unsigned>(universe_.size());
    universe_.push_back(name);
    atom_index_.emplace(name, idx);
    return idx;
  };
  for (const Rule& r : gp.rules) {
    if (!r.head.ground()) throw std::invalid_argument("oracle requires a ground program");
    Rule copy = r;  // confirm constraints are decided
    for (const InequalityConstraint& c : copy.constraints) {
      if (!c.lhs.is_constant() || !c.rhs.is_constant())
        throw std::invalid_argument("oracle requires a ground program");
    }
    bool possible = true;
    for (const InequalityConstraint& c : copy.constraints)
      if (c.lhs.id == c.rhs.id) possible = false;
    if (!possible) continue;
    BitRule br{};
    br.head = add_atom(to_string(gp, r.head));
    br.pos_mask = br.neg_mask = 0;
    for (const Atom& a : r.pos_body) {
      if (!a.ground()) throw std::invalid_argument("oracle requires a ground program");
      br.pos_mask |= 1u << add_atom(to_string(gp, a));
    }
    for (const Atom& a : r.neg_body) {
      if (!a.ground()) throw std::invalid_argument("oracle requires a ground program");
      br.neg_mask |= 1u << add_atom(to_string(gp, a));
    }
    rules_.push_back(br);
  }
  for (const std::string& a : extra_atoms) add_atom(a);
  if (universe_.size() > 31)
    throw OracleCapacityError("oracle universe of " + std::to_string(universe_.size()) +
                              " atoms exceeds the representable limit");
}

uint32_t Oracle::closure_mask(uint32_t negated) const {
  uint32_t derived = 0;
  bool changed = true;
  while (changed) {
    changed = false;
    for (const BitRule& r : rules_) {
      if ((derived >> r.head) & 1u) continue;
      if ((r.pos_mask & ~derived) == 0 && (r.neg_mask & ~negated) == 0) {
        derived |= 1u << r.head;
        changed = true;
      }
    }
  }
  return derived;
}

uint32_t Oracle::mask_of(const std::set<std::string>& atoms) const {
  uint32_t mask = 0;
  for (const std::string& a : atoms) {
    auto it = atom_index_.find(a);
    if (it == atom_index_.end())
      throw std::invalid_argument("atom outside the oracle universe: " + a);
    mask |= 1u << it->second;
  }
  return mask;
}

std::set<std::string> Oracle::atoms_of(uint32_t mask) const {
  std::set<std::string> out;
  for (unsigned i = 0; i < universe_.size(); ++i)
    if ((mask >> i) & 1u) out.insert(universe_[i]);
  return out;
}

std::set<std::string> Oracle::derive_closure(const std::set<std::string>& negated) const {
  return atoms_of(closure_mask(mask_of(negated)));
}

std::set<std::string> Oracle::f_p(const std::set<std::string>& negated) const {
  const uint32_t full = universe_.empty() ? 0 : (uint32_t{1} << universe_.size()) - 1;
  return atoms_of(full & ~closure_mask(mask_of(negated)));
}

ModelSet Oracle::enumerate() const {
  if (universe_.size() > cap_)
    throw OracleCapacityError("oracle universe of " + std::to_string(universe_.size()) +
                              " atoms exceeds the enumeration cap of " + std::to_string(cap_));
  ModelSet out;
  const uint32_t full = universe_.empty() ? 0 : (uint32_t{1} << universe_.size()) - 1;
  for (uint64_t s64 = 0; s64 <= full; ++s64) {
    const uint32_t s = static_cast<uint32_t>(s64);
    const uint32_t f = full & ~closure_mask(s);
    if ((s & ~f) != 0) continue;  // requires S subseteq F_P(S)
    const uint32_t f2 = full & ~closure_mask(f);
    if (f2 != s) continue;
    PartialStableModel m{atoms_of(closure_mask(s)), atoms_of(s)};
    if (std::find(out.psms.begin(), out.psms.end(), m) == out.psms.end())
      out.psms.push_back(std::move(m));
    if (f == s) out.answer_sets.push_back(atoms_of(closure_mask(s)));
    if (full == 0) break;
  }
  return out;
}

OracleReport check_soundness(const OracleLit& goal, const std::vector<OracleContext>& contexts,
                             const ModelSet& models) {
  OracleReport rep;
  rep.goal = render_oracle_lit(goal);
  rep.pass = true;
  for (const OracleContext& c : contexts) {
    if (c.count(goal) == 0) {
      rep.pass = false;
      rep.witness = "success context " + render_oracle_context(c) + " does not contain the goal";
      return rep;
    }
    bool contained = false;
    for (const PartialStableModel& m : models.psms) {
      if (std::all_of(c.begin(), c.end(), [&](const OracleLit& l) { return m.holds(l); })) {
        contained = true;
        break;
      }
    }
    if (!contained) {
      rep.pass = false;
      rep.witness =
          "no partial stable model contains context " + render_oracle_context(c);
      return rep;
    }
  }
  return rep;
}

OracleReport check_completeness(const OracleLit& goal, const std::vector<OracleContext>& contexts,
                                const ModelSet& models) {
  OracleReport rep;
  rep.goal = render_oracle_lit(goal);
  rep.pass = true;
  for (const PartialStableModel& m : models.psms) {
    if (!m.holds(goal)) continue;
    bool covered = false;
    for (const OracleContext& c : contexts) {
      if (c.count(goal) != 0 &&
          std::all_of(c.begin(), c.end(), [&](const OracleLit& l) { return m.holds(l); })) {
        covered = true;
        break;
      }
    }
    if (!covered) {
      rep.pass = false;
      rep.witness = "model " + render_model(m) + " makes the goal true but no success context is inside it";
      return rep;
    }
  }
  return rep;
}

OracleLit oracle_lit(const AtomTable& atoms, Lit l) {
  return {atoms.render_atom(lit_atom(l)), lit_positive(l)};
}

std::vector<OracleContext> oracle_contexts(const AtomTable& atoms, const NormalForm& nf) {
  std::vector<OracleContext> out;
  out.reserve(nf.records.size());
  for (const SuccessRecord& r : nf.records) {
    OracleContext c;
    for (Lit l : r.context) c.insert(oracle_lit(atoms, l));
    out.push_back(std::move(c));
  }
  return out;
}

}  // namespace grs
