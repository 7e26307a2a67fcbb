#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "grs/atoms.hpp"

namespace grs {

/// Rewrite chains record the ancestor-descendant order of literal rewriting
/// from the initial goal down to the current literal. Nodes are immutable
/// after creation and shared between sibling branches.
///
/// Nodes come from a thread-local pool with non-atomic reference counts:
/// chains are confined to the thread that created them (a rewrite run is
/// sequential; concurrent runs on distinct queries each build their own
/// chains).
struct ChainNode {
  Lit lit = 0;
  uint32_t depth = 0;  // root has depth 0
  uint32_t rc = 0;
  ChainNode* parent = nullptr;
};

class ChainRef {
 public:
  ChainRef() = default;
  ChainRef(const ChainRef& o) noexcept : n_(o.n_) {
    if (n_) ++n_->rc;
  }
  ChainRef(ChainRef&& o) noexcept : n_(o.n_) { o.n_ = nullptr; }
  ChainRef& operator=(const ChainRef& o) noexcept {
    if (this != &o) {
      reset();
      n_ = o.n_;
      if (n_) ++n_->rc;
    }
    return *this;
  }
  ChainRef& operator=(ChainRef&& o) noexcept {
    if (this != &o) {
      reset();
      n_ = o.n_;
      o.n_ = nullptr;
    }
    return *this;
  }
  ~ChainRef() { reset(); }

  const ChainNode* get() const { return n_; }
  const ChainNode& operator*() const { return *n_; }
  const ChainNode* operator->() const { return n_; }
  explicit operator bool() const { return n_ != nullptr; }

  /// Takes ownership of a node that already carries a reference.
  static ChainRef adopt(ChainNode* n) { return ChainRef(n); }

 private:
  explicit ChainRef(ChainNode* n) : n_(n) {}
  void reset();
  ChainNode* n_ = nullptr;
};

using ChainPtr = ChainRef;

ChainPtr chain_root(Lit l);
ChainPtr chain_extend(const ChainPtr& chain, Lit l);
ChainPtr make_chain(std::span<const Lit> lits);

/// Root-to-tip literal sequence.
std::vector<Lit> chain_literals(const ChainPtr& chain);
/// The set of literals on the chain, including the tip.
Context chain_set(const ChainPtr& chain);

enum class LoopClass : uint8_t {
  NonLoop,
  FailPositive,      // same literal recurs through all-positive literals
  FailOdd,           // the complement recurs
  SucceedNegative,   // same negative literal recurs through all-negative literals
  SucceedEven,       // same literal recurs through mixed polarities
};

constexpr bool loop_fails(LoopClass c) {
  return c == LoopClass::FailPositive || c == LoopClass::FailOdd;
}
constexpr bool loop_succeeds(LoopClass c) {
  return c == LoopClass::SucceedNegative || c == LoopClass::SucceedEven;
}

struct LoopScan {
  LoopClass cls = LoopClass::NonLoop;
  int32_t ancestor_depth = -1;  // depth of the matched ancestor, -1 if none
};

/// Classifies the chain's last literal against its ancestors. The proper
/// prefix of a live chain is loop-free, so at most one ancestor can match;
/// the scan nevertheless inspects all of them and gives a failing
/// classification priority should several ever match.
LoopScan scan_loop(const ChainPtr& chain);
LoopClass classify_loop(const ChainPtr& chain);

}  // namespace grs
