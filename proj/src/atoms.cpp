#include "grs/atoms.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace grs {

AtomTable::AtomTable(const Program& program) : consts_(program.consts), preds_(program.preds) {}

std::string AtomTable::key_of(PredId pred, std::span<const SymbolId> args) {
  std::string key;
  key.reserve(4 + args.size() * 4);
  auto push = [&key](uint32_t v) {
    key.push_back(static_cast<char>(v & 0xff));
    key.push_back(static_cast<char>((v >> 8) & 0xff));
    key.push_back(static_cast<char>((v >> 16) & 0xff));
    key.push_back(static_cast<char>((v >> 24) & 0xff));
  };
  push(pred);
  for (SymbolId a : args) push(a);
  return key;
}

AtomId AtomTable::intern_unlocked(PredId pred, std::span<const SymbolId> args) {
  std::string key = key_of(pred, args);
  auto it = index_.find(key);
  if (it != index_.end()) return it->second;
  AtomId id = static_cast<AtomId>(atoms_.size());
  atoms_.push_back(GroundAtom{pred, {args.begin(), args.end()}});
  index_.emplace(std::move(key), id);
  return id;
}

AtomId AtomTable::intern(PredId pred, std::span<const SymbolId> args) {
  std::lock_guard<std::mutex> lock(mu_);
  return intern_unlocked(pred, args);
}

AtomId AtomTable::intern(const Atom& ground_atom) {
  std::vector<SymbolId> args;
  args.reserve(ground_atom.args.size());
  for (const Term& t : ground_atom.args) {
    if (!t.is_constant()) throw std::invalid_argument("cannot intern a non-ground atom");
    args.push_back(t.id);
  }
  return intern(ground_atom.pred, args);
}

Lit AtomTable::intern(const Literal& ground_literal) {
  return make_lit(intern(ground_literal.atom), ground_literal.positive);
}

std::string AtomTable::render_atom(AtomId id) const {
  const GroundAtom& a = atoms_[id];
  std::string out = preds_.sig(a.pred).name;
  if (!a.args.empty()) {
    out.push_back('(');
    for (size_t i = 0; i < a.args.size(); ++i) {
      if (i > 0) out.push_back(',');
      out += consts_.name(a.args[i]);
    }
    out.push_back(')');
  }
  return out;
}

std::string AtomTable::render_lit(Lit l) const {
  std::string body = render_atom(lit_atom(l));
  return lit_positive(l) ? body : "-" + body;
}

Context::Context(std::initializer_list<Lit> lits) {
  for (Lit l : lits) add(l);
}

Context Context::from_sorted_unique(LitVec lits) {
  assert(std::is_sorted(lits.begin(), lits.end()));
  Context c;
  c.lits_ = std::move(lits);
  return c;
}

bool Context::contains(Lit l) const { return std::binary_search(lits_.begin(), lits_.end(), l); }

bool Context::add(Lit l) {
  if (contains(complement(l))) return false;
  auto it = std::lower_bound(lits_.begin(), lits_.end(), l);
  if (it == lits_.end() || *it != l) lits_.insert(it, l);
  return true;
}

bool Context::merge(const Context& other) {
  if (other.lits_.empty() || &other == this) return true;
  if (lits_.empty()) {
    lits_ = other.lits_;
    return true;
  }
  // In-place backward merge; both inputs are sorted, unique and internally
  // consistent, so only cross pairs can collide, and complements end up
  // adjacent in the merged order.
  const size_t n = lits_.size();
  const size_t m = other.lits_.size();
  lits_.resize(n + m);
  std::ptrdiff_t i = static_cast<std::ptrdiff_t>(n) - 1;
  std::ptrdiff_t j = static_cast<std::ptrdiff_t>(m) - 1;
  std::ptrdiff_t k = static_cast<std::ptrdiff_t>(n + m) - 1;
  bool conflict = false;
  constexpr Lit kNone = static_cast<Lit>(-1);
  Lit last_written = kNone;
  while (j >= 0) {
    Lit take;
    if (i >= 0 && lits_[static_cast<size_t>(i)] >= other.lits_[static_cast<size_t>(j)]) {
      if (lits_[static_cast<size_t>(i)] == other.lits_[static_cast<size_t>(j)]) --j;
      take = lits_[static_cast<size_t>(i--)];
    } else {
      take = other.lits_[static_cast<size_t>(j--)];
    }
    if (last_written != kNone && (take ^ last_written) == 1u) conflict = true;
    lits_[static_cast<size_t>(k--)] = take;
    last_written = take;
  }
  if (i >= 0 && last_written != kNone && (lits_[static_cast<size_t>(i)] ^ last_written) == 1u)
    conflict = true;
  if (k > i)
    lits_.erase(lits_.begin() + (i + 1), lits_.begin() + (k + 1));
  return !conflict;
}

bool Context::subset_of(const Context& other) const {
  return std::includes(other.lits_.begin(), other.lits_.end(), lits_.begin(), lits_.end());
}

uint64_t Context::hash() const {
  uint64_t h = 14695981039346656037ull;
  for (Lit l : lits_) {
    h ^= l;
    h *= 1099511628211ull;
  }
  return h;
}

}  // namespace grs
