#include "grs/render.hpp"

#include <algorithm>
#include <span>

namespace grs {

namespace {

std::vector<Lit> canonical_order(const AtomTable& atoms, std::span<const Lit> lits) {
  std::vector<Lit> out(lits.begin(), lits.end());
  std::stable_sort(out.begin(), out.end(), [&](Lit a, Lit b) {
    const std::string sa = atoms.render_atom(lit_atom(a));
    const std::string sb = atoms.render_atom(lit_atom(b));
    if (sa != sb) return sa < sb;
    return lit_positive(a) && !lit_positive(b);
  });
  return out;
}

}  // namespace

std::string render_context(const AtomTable& atoms, const Context& c) {
  std::string out = "{";
  bool first = true;
  for (Lit l : canonical_order(atoms, c.lits())) {
    if (!first) out += ", ";
    first = false;
    out += atoms.render_lit(l);
  }
  out += "}";
  return out;
}

std::string render_record(const AtomTable& atoms, const SuccessRecord& r) {
  if (r.residue.empty()) return "T(" + render_context(atoms, r.context) + ")";
  std::string out = "[";
  bool first = true;
  for (Lit l : canonical_order(atoms, r.residue_lits())) {
    if (!first) out += ", ";
    first = false;
    out += atoms.render_lit(l);
  }
  out += "](" + render_context(atoms, r.context) + ")";
  return out;
}

std::string render_normal_form(const AtomTable& atoms, const NormalForm& nf) {
  if (nf.failed()) return "F";
  std::string out;
  for (size_t i = 0; i < nf.records.size(); ++i) {
    if (i > 0) out += " v ";
    out += render_record(atoms, nf.records[i]);
  }
  return out;
}

std::string render_trace(const AtomTable& atoms, const Trace& t) {
  std::string out;
  for (size_t i = 0; i < t.steps.size(); ++i) {
    const StepRecord& s = t.steps[i];
    out += "#" + std::to_string(i + 1) + " " + step_kind_name(s.kind) + " " +
           atoms.render_lit(s.lit) + " | disjuncts=" + std::to_string(s.disjuncts_after) + "\n";
  }
  return out;
}

}  // namespace grs
