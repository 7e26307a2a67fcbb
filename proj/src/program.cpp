#include "grs/program.hpp"

#include <algorithm>
#include <sstream>

namespace grs {

SymbolId SymbolTable::intern(std::string_view text) {
  auto it = index_.find(std::string(text));
  if (it != index_.end()) return it->second;
  SymbolId id = static_cast<SymbolId>(names_.size());
  names_.emplace_back(text);
  index_.emplace(names_.back(), id);
  return id;
}

std::optional<SymbolId> SymbolTable::find(std::string_view text) const {
  auto it = index_.find(std::string(text));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

static std::string pred_key(std::string_view name, uint32_t arity) {
  std::string key(name);
  key.push_back('/');
  key += std::to_string(arity);
  return key;
}

PredId PredTable::intern(std::string_view name, uint32_t arity) {
  std::string key = pred_key(name, arity);
  auto it = index_.find(key);
  if (it != index_.end()) return it->second;
  PredId id = static_cast<PredId>(sigs_.size());
  sigs_.push_back(PredSig{std::string(name), arity});
  index_.emplace(std::move(key), id);
  return id;
}

std::optional<PredId> PredTable::find(std::string_view name, uint32_t arity) const {
  auto it = index_.find(pred_key(name, arity));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

bool Atom::ground() const {
  return std::all_of(args.begin(), args.end(), [](const Term& t) { return t.is_constant(); });
}

std::string to_string(const Program& p, const Term& t, const Rule* scope) {
  if (t.is_constant()) return p.consts.name(t.id);
  if (scope != nullptr && t.id < scope->var_names.size()) return scope->var_names[t.id];
  return "V" + std::to_string(t.id);
}

std::string to_string(const Program& p, const Atom& a, const Rule* scope) {
  std::string out = p.preds.sig(a.pred).name;
  if (!a.args.empty()) {
    out.push_back('(');
    for (size_t i = 0; i < a.args.size(); ++i) {
      if (i > 0) out.push_back(',');
      out += to_string(p, a.args[i], scope);
    }
    out.push_back(')');
  }
  return out;
}

std::string to_string(const Program& p, const Literal& l) {
  std::string body = to_string(p, l.atom);
  return l.positive ? body : "-" + body;
}

std::string to_string(const Program& p, const Rule& r) {
  std::string out = to_string(p, r.head, &r);
  bool first = true;
  auto sep = [&]() -> std::string {
    if (first) {
      first = false;
      return " :- ";
    }
    return ", ";
  };
  for (const Atom& a : r.pos_body) out += sep() + to_string(p, a, &r);
  for (const Atom& a : r.neg_body) out += sep() + "not " + to_string(p, a, &r);
  for (const InequalityConstraint& c : r.constraints)
    out += sep() + to_string(p, c.lhs, &r) + " != " + to_string(p, c.rhs, &r);
  out.push_back('.');
  return out;
}

std::string to_string(const Program& p) {
  std::ostringstream out;
  if (!p.domain.empty()) {
    out << "#domain " << p.consts.name(p.domain.front()) << ".." << p.consts.name(p.domain.back())
        << ".\n";
  }
  for (PredId a : p.abducibles) {
    const PredSig& sig = p.preds.sig(a);
    out << "#abducible " << sig.name << "/" << sig.arity << ".\n";
  }
  for (const Rule& r : p.rules) out << to_string(p, r) << "\n";
  return out.str();
}

}  // namespace grs
