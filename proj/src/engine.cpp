#include "grs/engine.hpp"

#include <algorithm>
#include <cassert>
#include <set>
#include <stdexcept>

#include "grs/recycling.hpp"

namespace grs {

uint64_t SuccessRecord::value_hash() const {
  uint64_t h = context.hash();
  for (const ResidueEntry& e : residue) {
    h ^= e.lit + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    h ^= e.ctx.hash() * 1099511628211ull;
  }
  return h;
}

std::vector<Lit> SuccessRecord::residue_lits() const {
  std::vector<Lit> out;
  out.reserve(residue.size());
  for (const ResidueEntry& e : residue) out.push_back(e.lit);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

namespace {

bool record_value_less(const SuccessRecord& a, const SuccessRecord& b) {
  if (auto c = a.context <=> b.context; c != 0) return c < 0;
  return std::lexicographical_compare(a.residue.begin(), a.residue.end(), b.residue.begin(),
                                      b.residue.end());
}

}  // namespace

bool NormalForm::equivalent(const NormalForm& o) const {
  if (records.size() != o.records.size()) return false;
  std::vector<const SuccessRecord*> a, b;
  a.reserve(records.size());
  b.reserve(records.size());
  for (const SuccessRecord& r : records) a.push_back(&r);
  for (const SuccessRecord& r : o.records) b.push_back(&r);
  auto less = [](const SuccessRecord* x, const SuccessRecord* y) {
    return record_value_less(*x, *y);
  };
  std::sort(a.begin(), a.end(), less);
  std::sort(b.begin(), b.end(), less);
  for (size_t i = 0; i < a.size(); ++i)
    if (!a[i]->same_value(*b[i])) return false;
  return true;
}

namespace {

// a makes b redundant: its residue literal set is a proper subset, or the
// residue sets are equal and its context is a proper subset.
bool dominates(const SuccessRecord& a, const std::vector<Lit>& a_res, const SuccessRecord& b,
               const std::vector<Lit>& b_res) {
  if (!std::includes(b_res.begin(), b_res.end(), a_res.begin(), a_res.end())) return false;
  if (a_res.size() < b_res.size()) return true;
  return a.context.size() < b.context.size() && a.context.subset_of(b.context);
}

}  // namespace

NormalForm minimize_records(const NormalForm& nf) {
  const size_t n = nf.records.size();
  if (n <= 1) return nf;
  std::vector<std::vector<Lit>> res_lits(n);
  for (size_t i = 0; i < n; ++i) res_lits[i] = nf.records[i].residue_lits();
  std::vector<size_t> order(n);
  for (size_t i = 0; i < n; ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](size_t x, size_t y) {
    if (res_lits[x].size() != res_lits[y].size()) return res_lits[x].size() < res_lits[y].size();
    return nf.records[x].context.size() < nf.records[y].context.size();
  });
  std::vector<bool> drop(n, false);
  std::vector<size_t> survivors;
  for (size_t idx : order) {
    bool dominated = false;
    for (size_t s : survivors) {
      if (dominates(nf.records[s], res_lits[s], nf.records[idx], res_lits[idx])) {
        dominated = true;
        break;
      }
    }
    if (dominated)
      drop[idx] = true;
    else
      survivors.push_back(idx);
  }
  NormalForm out;
  for (size_t i = 0; i < n; ++i)
    if (!drop[i]) out.records.push_back(nf.records[i]);
  return out;
}

const char* step_kind_name(StepKind k) {
  switch (k) {
    case StepKind::ProgramRule: return "ProgramRule";
    case StepKind::LR1: return "LR1";
    case StepKind::LR2: return "LR2";
    case StepKind::RC: return "RC";
    case StepKind::RCPrime: return "RC'";
    case StepKind::ComputedF: return "ComputedF";
    case StepKind::Abduce: return "Abduce";
    case StepKind::SR4: return "SR4";
  }
  return "?";
}

RewriteSystem RewriteSystem::base(std::shared_ptr<const Program> program) {
  for (const Rule& r : program->rules) {
    std::set<VarId> head_vars;
    for (const Term& t : r.head.args)
      if (t.is_variable()) head_vars.insert(t.id);
    auto check = [&](const Term& t) {
      if (t.is_variable() && head_vars.count(t.id) == 0)
        throw std::invalid_argument(
            "rewrite system requires an instantiated program (body variables must occur in the "
            "head); run instantiate_body_only_variables first");
    };
    for (const Atom& a : r.pos_body)
      for (const Term& t : a.args) check(t);
    for (const Atom& a : r.neg_body)
      for (const Term& t : a.args) check(t);
    for (const InequalityConstraint& c : r.constraints) {
      check(c.lhs);
      check(c.rhs);
    }
  }
  RewriteSystem sys;
  sys.program_ = std::move(program);
  sys.atoms_ = std::make_shared<AtomTable>(*sys.program_);
  sys.defs_ = std::make_shared<DefinitionStore>(sys.program_, sys.atoms_);
  return sys;
}

const ComputedRule* RewriteSystem::computed_for(Lit l) const {
  auto it = computed_.find(l);
  return it == computed_.end() ? nullptr : &it->second;
}

RewriteSystem extend_system(const RewriteSystem& r, std::vector<ComputedRule> delta) {
  RewriteSystem out = r;
  out.index_ = r.index_ + 1;
  std::set<Lit> fresh;
  for (ComputedRule& cr : delta) {
    if (cr.generation != r.index_)
      throw std::invalid_argument("computed rule generation does not match the system index");
    if (!fresh.insert(cr.literal).second)
      throw std::invalid_argument("two delta rules for the same literal");
    out.computed_[cr.literal] = std::move(cr);
  }
  return out;
}

Rewriter::Rewriter(const RewriteSystem& sys, Lit query, RewriteOptions opts)
    : sys_(sys), opts_(opts), query_(query), rng_(opts.seed) {
  trace_.enabled = opts_.trace;
  has_computed_ = !sys_.computed().empty();
  abducible_pred_.assign(sys_.program().preds.size(), 0);
  for (PredId p : sys_.program().abducibles) abducible_pred_[p] = 1;
  Disjunct d;
  d.pending.push_back(AnnotatedLiteral{query, chain_root(query)});
  live_.push_back(std::move(d));
}

const DefinitionBody& Rewriter::body_for(Lit l) {
  if (l < def_cache_.size() && def_cache_[l] != nullptr) return *def_cache_[l];
  const DefinitionBody& body = sys_.definitions().literal_body(l, opts_.mode);
  if (l >= def_cache_.size()) def_cache_.resize(static_cast<size_t>(l) + 1, nullptr);
  def_cache_[l] = &body;
  return body;
}

bool Rewriter::is_abducible_lit(Lit l) const {
  const PredId p = sys_.atoms().pred_of(lit_atom(l));
  return p < abducible_pred_.size() && abducible_pred_[p] != 0;
}

void Rewriter::note(StepKind kind, Lit lit) {
  ++trace_.total_steps;
  if (kind == StepKind::ProgramRule) ++trace_.literal_steps;
  if (trace_.enabled)
    trace_.steps.push_back(StepRecord{kind, lit, static_cast<uint32_t>(live_.size())});
}

bool Rewriter::absorb(Disjunct& d, const Context& ctx) {
  bool ok = d.context.merge(ctx);
  if (opts_.mode == Mode::Abductive) ok = d.closure.merge(ctx) && ok;
  if (!ok) d.dead = true;
  return ok;
}

bool Rewriter::add_residue(Disjunct& d, ResidueEntry entry) {
  auto it = std::lower_bound(d.residue.begin(), d.residue.end(), entry);
  if (it != d.residue.end() && *it == entry) return true;
  bool ok = d.closure.merge(entry.ctx);
  d.residue.insert(it, std::move(entry));
  if (!ok) d.dead = true;
  return ok;
}

void Rewriter::settle(Disjunct&& d) {
  if (d.pending.empty())
    emit(std::move(d));
  else
    live_.push_back(std::move(d));
}

void Rewriter::emit(Disjunct&& d) {
  if (d.dead) return;
  SuccessRecord rec;
  rec.context = std::move(d.context);
  rec.residue = std::move(d.residue);
  rec.loop_witnesses = std::move(d.witnesses);
  if (opts_.mode == Mode::Plain) {
    assert(rec.residue.empty());
    assert(rec.context.contains(query_));
  }
  const uint64_t h = rec.value_hash();
  auto& bucket = done_index_[h];
  for (size_t i : bucket) {
    if (done_[i].same_value(rec)) {
      for (auto& w : rec.loop_witnesses) {
        auto& ws = done_[i].loop_witnesses;
        if (std::find(ws.begin(), ws.end(), w) == ws.end()) ws.push_back(std::move(w));
      }
      return;
    }
  }
  bucket.push_back(done_.size());
  done_.push_back(std::move(rec));
}

namespace {

/// Replaces pending[idx] by the conjunct's literals, chains extended from
/// the rewritten literal.
void splice_pending(Disjunct& d, size_t idx, const std::vector<Lit>& conj,
                    const ChainPtr& parent_chain) {
  if (conj.empty()) {
    d.pending.erase(d.pending.begin() + static_cast<std::ptrdiff_t>(idx));
    return;
  }
  d.pending[idx] = AnnotatedLiteral{conj[0], chain_extend(parent_chain, conj[0])};
  if (conj.size() > 1) {
    d.pending.insert(d.pending.begin() + static_cast<std::ptrdiff_t>(idx) + 1, conj.size() - 1,
                     AnnotatedLiteral{});
    for (size_t t = 1; t < conj.size(); ++t)
      d.pending[idx + t] = AnnotatedLiteral{conj[t], chain_extend(parent_chain, conj[t])};
  }
}

}  // namespace

bool Rewriter::step() {
  if (live_.empty()) return false;
  if (opts_.seed != 0) {
    const size_t pick = static_cast<size_t>(rng_() % live_.size());
    std::swap(live_[pick], live_.back());
  }
  Disjunct d = std::move(live_.back());
  live_.pop_back();
  assert(!d.pending.empty());
  size_t idx = 0;
  if (opts_.seed != 0) idx = static_cast<size_t>(rng_() % d.pending.size());
  const AnnotatedLiteral al = d.pending[idx];

  const LoopScan scan = scan_loop(al.chain);
  if (loop_fails(scan.cls)) {
    // LR1; the disjunct fails and is removed (SR2 then SR1).
    note(StepKind::LR1, al.lit);
    return true;
  }
  if (loop_succeeds(scan.cls)) {
    // LR2: the loop literal becomes T of the whole chain set.
    note(StepKind::LR2, al.lit);
    if (scan.ancestor_depth == 0) {
      std::vector<Lit> lits = chain_literals(al.chain);
      d.witnesses.emplace_back(lits.begin() + 1, lits.end() - 1);
    }
    d.pending.erase(d.pending.begin() + static_cast<std::ptrdiff_t>(idx));
    if (!absorb(d, chain_set(al.chain))) {
      note(StepKind::SR4, al.lit);
      if (opts_.prune) return true;
    }
    settle(std::move(d));
    return true;
  }

  if (has_computed_) {
    if (const ComputedRule* cr = sys_.computed_for(al.lit)) {
      if (cr->body.failed()) {
        note(StepKind::ComputedF, al.lit);
        return true;
      }
      note(opts_.mode == Mode::Abductive ? StepKind::RCPrime : StepKind::RC, al.lit);
      NormalForm rc = apply_recycling(chain_set(al.chain), *cr, opts_.mode);
      d.pending.erase(d.pending.begin() + static_cast<std::ptrdiff_t>(idx));
      // children are stacked in reverse so the first record is explored next
      for (size_t r = rc.records.size(); r-- > 0;) {
        SuccessRecord& rec = rc.records[r];
        Disjunct child = (r == 0) ? std::move(d) : d;
        bool ok = absorb(child, rec.context);
        for (ResidueEntry& e : rec.residue) ok = add_residue(child, std::move(e)) && ok;
        if (!ok) {
          note(StepKind::SR4, al.lit);
          if (opts_.prune) continue;
        }
        settle(std::move(child));
      }
      return true;
    }
  }

  if (opts_.mode == Mode::Abductive && is_abducible_lit(al.lit)) {
    // The abducible is not expanded; it moves to the residue with the
    // chain set (which includes the literal itself) as its context.
    note(StepKind::Abduce, al.lit);
    d.pending.erase(d.pending.begin() + static_cast<std::ptrdiff_t>(idx));
    if (!add_residue(d, ResidueEntry{al.lit, chain_set(al.chain)})) {
      note(StepKind::SR4, al.lit);
      if (opts_.prune) return true;
    }
    settle(std::move(d));
    return true;
  }

  // Literal rewriting by the completed definition; the disjunctive fan-out
  // realizes the SR5/SR5' distribution.
  const DefinitionBody& body = body_for(al.lit);
  note(StepKind::ProgramRule, al.lit);
  if (body.false_body()) return true;  // l -> F; SR2 kills the disjunct
  for (size_t c = body.disjuncts.size(); c-- > 0;) {
    const std::vector<Lit>& conj = body.disjuncts[c];
    Disjunct child = (c == 0) ? std::move(d) : d;
    splice_pending(child, idx, conj, al.chain);
    if (conj.empty()) {
      // T conjunct: the chain context is merged in (this also covers the
      // "not F becomes T(C)" replacement for negative literals).
      if (!absorb(child, chain_set(al.chain))) {
        note(StepKind::SR4, al.lit);
        if (opts_.prune) continue;
      }
    }
    settle(std::move(child));
  }
  return true;
}

RewriteResult Rewriter::run() && {
  while (step()) {
  }
  RewriteResult out;
  out.nf.records = std::move(done_);
  out.trace = std::move(trace_);
  return out;
}

RewriteResult rewrite(const RewriteSystem& sys, Lit query, const RewriteOptions& opts) {
  return Rewriter(sys, query, opts).run();
}

}  // namespace grs
