#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace grs {

using SymbolId = uint32_t;
using PredId = uint32_t;
using VarId = uint32_t;

/// Interned constant symbols (identifiers and integers, kept as text).
class SymbolTable {
 public:
  SymbolId intern(std::string_view text);
  std::optional<SymbolId> find(std::string_view text) const;
  const std::string& name(SymbolId id) const { return names_[id]; }
  size_t size() const { return names_.size(); }

 private:
  std::vector<std::string> names_;
  std::unordered_map<std::string, SymbolId> index_;
};

struct PredSig {
  std::string name;
  uint32_t arity = 0;
};

/// Interned predicates; identity is the (name, arity) pair, so p/1 and p/3
/// are distinct predicates.
class PredTable {
 public:
  PredId intern(std::string_view name, uint32_t arity);
  std::optional<PredId> find(std::string_view name, uint32_t arity) const;
  const PredSig& sig(PredId id) const { return sigs_[id]; }
  size_t size() const { return sigs_.size(); }

 private:
  std::vector<PredSig> sigs_;
  std::unordered_map<std::string, PredId> index_;
};

/// A term is exactly one of: constant symbol or rule-scoped variable slot.
struct Term {
  enum class Kind : uint8_t { Constant, Variable };
  Kind kind = Kind::Constant;
  uint32_t id = 0;

  static Term constant(SymbolId c) { return {Kind::Constant, c}; }
  static Term variable(VarId v) { return {Kind::Variable, v}; }
  bool is_constant() const { return kind == Kind::Constant; }
  bool is_variable() const { return kind == Kind::Variable; }
  friend bool operator==(const Term&, const Term&) = default;
};

struct Atom {
  PredId pred = 0;
  std::vector<Term> args;

  bool ground() const;
  friend bool operator==(const Atom&, const Atom&) = default;
};

/// Ground literal at the syntax level (queries, oracle bridging).
struct Literal {
  Atom atom;
  bool positive = true;

  Literal complement() const { return {atom, !positive}; }
  friend bool operator==(const Literal&, const Literal&) = default;
};

/// lhs != rhs, the only built-in. Evaluated at grounding or head-match time.
struct InequalityConstraint {
  Term lhs;
  Term rhs;
  friend bool operator==(const InequalityConstraint&, const InequalityConstraint&) = default;
};

struct Rule {
  Atom head;
  std::vector<Atom> pos_body;
  std::vector<Atom> neg_body;
  std::vector<InequalityConstraint> constraints;
  uint32_t var_count = 0;
  std::vector<std::string> var_names;  // slot -> source name
};

struct Program {
  SymbolTable consts;
  PredTable preds;
  std::vector<Rule> rules;
  std::set<PredId> abducibles;
  std::vector<SymbolId> domain;  // ordered as declared

  bool is_abducible(PredId p) const { return abducibles.count(p) != 0; }
};

std::string to_string(const Program& p, const Term& t, const Rule* scope = nullptr);
std::string to_string(const Program& p, const Atom& a, const Rule* scope = nullptr);
std::string to_string(const Program& p, const Literal& l);
std::string to_string(const Program& p, const Rule& r);
std::string to_string(const Program& p);

}  // namespace grs
