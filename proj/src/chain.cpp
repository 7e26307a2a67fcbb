#include "grs/chain.hpp"

#include <algorithm>
#include <cassert>
#include <deque>

namespace grs {

namespace {

struct ChainPool {
  std::deque<ChainNode> storage;
  ChainNode* free_list = nullptr;

  ChainNode* alloc() {
    if (free_list != nullptr) {
      ChainNode* n = free_list;
      free_list = n->parent;
      return n;
    }
    storage.emplace_back();
    return &storage.back();
  }

  void release(ChainNode* n) {
    while (n != nullptr && --n->rc == 0) {
      ChainNode* parent = n->parent;
      n->parent = free_list;
      free_list = n;
      n = parent;
    }
  }
};

ChainPool& pool() {
  thread_local ChainPool p;
  return p;
}

}  // namespace

void ChainRef::reset() {
  if (n_ != nullptr) {
    pool().release(n_);
    n_ = nullptr;
  }
}

ChainPtr chain_root(Lit l) {
  ChainNode* n = pool().alloc();
  n->lit = l;
  n->depth = 0;
  n->rc = 1;
  n->parent = nullptr;
  return ChainRef::adopt(n);
}

ChainPtr chain_extend(const ChainPtr& chain, Lit l) {
  assert(chain);
  ChainNode* p = const_cast<ChainNode*>(chain.get());
  ++p->rc;
  ChainNode* n = pool().alloc();
  n->lit = l;
  n->depth = p->depth + 1;
  n->rc = 1;
  n->parent = p;
  return ChainRef::adopt(n);
}

ChainPtr make_chain(std::span<const Lit> lits) {
  assert(!lits.empty());
  ChainPtr c = chain_root(lits[0]);
  for (size_t i = 1; i < lits.size(); ++i) c = chain_extend(c, lits[i]);
  return c;
}

std::vector<Lit> chain_literals(const ChainPtr& chain) {
  std::vector<Lit> out(chain ? chain->depth + 1 : 0);
  for (const ChainNode* n = chain.get(); n != nullptr; n = n->parent) out[n->depth] = n->lit;
  return out;
}

Context chain_set(const ChainPtr& chain) {
  LitVec lits;
  for (const ChainNode* n = chain.get(); n != nullptr; n = n->parent) lits.push_back(n->lit);
  std::sort(lits.begin(), lits.end());
  lits.erase(std::unique(lits.begin(), lits.end()), lits.end());
  return Context::from_sorted_unique(std::move(lits));
}

LoopScan scan_loop(const ChainPtr& chain) {
  assert(chain);
  const Lit last = chain->lit;
  LoopScan best;
  bool seg_all_positive = lit_positive(last);
  bool seg_all_negative = !lit_positive(last);
  for (const ChainNode* n = chain->parent; n != nullptr; n = n->parent) {
    // the segment n..last grows as we walk up; track its polarity profile
    LoopClass cls = LoopClass::NonLoop;
    const bool n_positive = lit_positive(n->lit);
    const bool all_pos_here = seg_all_positive && n_positive;
    const bool all_neg_here = seg_all_negative && !n_positive;
    if (n->lit == complement(last)) {
      cls = LoopClass::FailOdd;
    } else if (n->lit == last) {
      if (all_pos_here)
        cls = LoopClass::FailPositive;
      else if (all_neg_here)
        cls = LoopClass::SucceedNegative;
      else
        cls = LoopClass::SucceedEven;
    }
    seg_all_positive = all_pos_here;
    seg_all_negative = all_neg_here;
    if (cls == LoopClass::NonLoop) continue;
    // A loop-free proper prefix admits at most one match; if several ever
    // appear, a failing loop takes priority.
    if (best.cls == LoopClass::NonLoop || (loop_fails(cls) && !loop_fails(best.cls))) {
      best.cls = cls;
      best.ancestor_depth = static_cast<int32_t>(n->depth);
    }
  }
  return best;
}

LoopClass classify_loop(const ChainPtr& chain) { return scan_loop(chain).cls; }

}  // namespace grs
