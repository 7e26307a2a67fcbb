#pragma once

#include <compare>
#include <cstdint>
#include <deque>
#include <initializer_list>
#include <mutex>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include <boost/container/small_vector.hpp>

#include "grs/program.hpp"

namespace grs {

using AtomId = uint32_t;

/// Ground literal code: atom id shifted left, low bit set for negative.
/// Complementary literals differ only in the low bit.
using Lit = uint32_t;

constexpr Lit positive_lit(AtomId a) { return a << 1; }
constexpr Lit negative_lit(AtomId a) { return (a << 1) | 1u; }
constexpr Lit make_lit(AtomId a, bool positive) { return positive ? positive_lit(a) : negative_lit(a); }
constexpr Lit complement(Lit l) { return l ^ 1u; }
constexpr bool lit_positive(Lit l) { return (l & 1u) == 0; }
constexpr AtomId lit_atom(Lit l) { return l >> 1; }

struct GroundAtom {
  PredId pred = 0;
  std::vector<SymbolId> args;
};

/// Interning table for ground atoms. It owns copies of the program's symbol
/// and predicate tables so that queries and loaded rule stores can introduce
/// atoms without touching the (frozen) program. Interning is guarded by a
/// mutex; lookups of already-interned atoms return stable references.
class AtomTable {
 public:
  explicit AtomTable(const Program& program);

  AtomId intern(PredId pred, std::span<const SymbolId> args);
  AtomId intern(const Atom& ground_atom);  // atom using program symbol ids
  Lit intern(const Literal& ground_literal);

  const GroundAtom& atom(AtomId id) const { return atoms_[id]; }
  PredId pred_of(AtomId id) const { return atoms_[id].pred; }
  size_t size() const { return atoms_.size(); }

  std::string render_atom(AtomId id) const;
  std::string render_lit(Lit l) const;
  /// Parses `atom` or `-atom` into a literal code, interning as needed.
  Lit parse_lit(std::string_view text);

  SymbolTable& consts() { return consts_; }
  const SymbolTable& consts() const { return consts_; }
  PredTable& preds() { return preds_; }
  const PredTable& preds() const { return preds_; }

 private:
  mutable std::mutex mu_;
  SymbolTable consts_;
  PredTable preds_;
  std::deque<GroundAtom> atoms_;
  std::unordered_map<std::string, AtomId> index_;  // encoded key

  AtomId intern_unlocked(PredId pred, std::span<const SymbolId> args);
  static std::string key_of(PredId pred, std::span<const SymbolId> args);
};

/// Literal sets stay small in typical runs; keep them inline.
using LitVec = boost::container::small_vector<Lit, 24>;

/// Consistent set of ground literals, ordered by literal code. Because
/// complementary codes are adjacent, consistency is a single scan of the
/// merged vector.
class Context {
 public:
  Context() = default;
  Context(std::initializer_list<Lit> lits);
  static Context from_sorted_unique(LitVec lits);

  /// Adds a literal; returns false (and leaves the set unchanged) if the
  /// complement is present.
  bool add(Lit l);
  /// Unions another context in; returns false if the union has a
  /// complementary pair. On failure the content is unspecified but the
  /// object stays usable (callers discard or mark the owner failed).
  bool merge(const Context& other);

  bool contains(Lit l) const;
  bool subset_of(const Context& other) const;
  size_t size() const { return lits_.size(); }
  bool empty() const { return lits_.empty(); }
  auto begin() const { return lits_.begin(); }
  auto end() const { return lits_.end(); }
  const LitVec& lits() const { return lits_; }

  uint64_t hash() const;
  friend bool operator==(const Context& a, const Context& b) {
    return a.lits_.size() == b.lits_.size() &&
           std::equal(a.lits_.begin(), a.lits_.end(), b.lits_.begin());
  }
  friend std::strong_ordering operator<=>(const Context& a, const Context& b) {
    return std::lexicographical_compare_three_way(a.lits_.begin(), a.lits_.end(),
                                                  b.lits_.begin(), b.lits_.end());
  }

 private:
  LitVec lits_;  // sorted ascending, unique
};

}  // namespace grs
