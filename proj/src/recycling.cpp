#include "grs/recycling.hpp"

#include <algorithm>
#include <cctype>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "grs/dependency.hpp"
#include "grs/render.hpp"

namespace grs {

ComputedRule computed_rule_from_normal_form(Lit literal, const NormalForm& nf,
                                            uint32_t generation) {
  ComputedRule rule;
  rule.literal = literal;
  rule.generation = generation;
  rule.body = nf;
  for (SuccessRecord& r : rule.body.records) {
    r.loop_witnesses.clear();
    Context u = r.context;
    bool ok = true;
    for (const ResidueEntry& e : r.residue) ok = u.merge(e.ctx) && ok;
    if (!ok)
      throw std::logic_error("normal form record with inconsistent context union");
  }
  return rule;
}

NormalForm apply_recycling(const Context& chain_set, const ComputedRule& rule, Mode mode) {
  NormalForm out;
  if (rule.body.failed()) return out;
  for (const SuccessRecord& rec : rule.body.records) {
    SuccessRecord aug;
    aug.context = rec.context;
    if (!aug.context.merge(chain_set)) continue;  // D_i inconsistent with G: dropped
    Context closure = aug.context;
    bool ok = true;
    for (ResidueEntry e : rec.residue) {
      if (!e.ctx.merge(chain_set) || !closure.merge(e.ctx)) {
        ok = false;
        break;
      }
      auto it = std::lower_bound(aug.residue.begin(), aug.residue.end(), e);
      if (it == aug.residue.end() || !(*it == e)) aug.residue.insert(it, std::move(e));
    }
    if (!ok) continue;
    if (mode == Mode::Plain && !aug.residue.empty())
      throw std::logic_error("abductive computed rule applied in plain mode");
    out.records.push_back(std::move(aug));
  }
  return out;
}

BatchOutcome batch_solve(const RewriteSystem& base, std::span<const Lit> goals, Mode mode,
                         BatchPolicy policy, const RewriteOptions& opts) {
  RewriteOptions o = opts;
  o.mode = mode;
  BatchOutcome out{std::vector<BatchEntry>(goals.size()), base};
  for (size_t i = 0; i < goals.size(); ++i) out.entries[i].goal = goals[i];
  if (policy == BatchPolicy::NoRecycle) {
    for (size_t i = 0; i < goals.size(); ++i) {
      RewriteResult res = rewrite(base, goals[i], o);
      out.entries[i].nf = std::move(res.nf);
      out.entries[i].trace = std::move(res.trace);
    }
    return out;
  }
  DependencyGraph graph = DependencyGraph::build(base.program());
  std::vector<uint32_t> ranks(goals.size());
  for (size_t i = 0; i < goals.size(); ++i)
    ranks[i] = graph.rank(base.atoms().pred_of(lit_atom(goals[i])));
  for (size_t i : order_by_rank(ranks)) {
    RewriteResult res = rewrite(out.final_system, goals[i], o);
    out.final_system = extend_system(
        out.final_system,
        {computed_rule_from_normal_form(goals[i], res.nf, out.final_system.index())});
    out.entries[i].nf = std::move(res.nf);
    out.entries[i].trace = std::move(res.trace);
  }
  return out;
}

namespace {

std::string store_record(const AtomTable& atoms, const SuccessRecord& r) {
  if (r.residue.empty()) return "T(" + render_context(atoms, r.context) + ")";
  std::string out = "[";
  for (size_t i = 0; i < r.residue.size(); ++i) {
    if (i > 0) out += ", ";
    out += atoms.render_lit(r.residue[i].lit) + "(" + render_context(atoms, r.residue[i].ctx) + ")";
  }
  out += "](" + render_context(atoms, r.context) + ")";
  return out;
}

class StoreParser {
 public:
  StoreParser(std::string_view line, AtomTable& atoms) : s_(line), atoms_(atoms) {}

  NormalForm parse_body() {
    NormalForm nf;
    skip_ws();
    if (peek() == 'F' && at_end_after(1)) return nf;
    while (true) {
      nf.records.push_back(parse_record());
      skip_ws();
      if (i_ < s_.size() && s_[i_] == 'v') {
        ++i_;
        continue;
      }
      break;
    }
    if (i_ != s_.size()) fail("trailing input");
    return nf;
  }

 private:
  std::string_view s_;
  size_t i_ = 0;
  AtomTable& atoms_;

  [[noreturn]] void fail(const std::string& msg) const {
    throw std::runtime_error("computed-rule store: " + msg);
  }
  char peek() const { return i_ < s_.size() ? s_[i_] : '\0'; }
  void skip_ws() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
  }
  bool at_end_after(size_t k) {
    size_t j = i_ + k;
    while (j < s_.size() && std::isspace(static_cast<unsigned char>(s_[j]))) ++j;
    if (j == s_.size()) {
      i_ = s_.size();
      return true;
    }
    return false;
  }
  void expect(char c) {
    skip_ws();
    if (peek() != c) fail(std::string("expected '") + c + "'");
    ++i_;
  }

  std::string literal_text() {
    skip_ws();
    std::string t;
    if (peek() == '-') {
      t.push_back('-');
      ++i_;
    }
    while (i_ < s_.size() &&
           (std::isalnum(static_cast<unsigned char>(s_[i_])) || s_[i_] == '_'))
      t.push_back(s_[i_++]);
    if (t.empty() || t == "-") fail("expected literal");
    if (peek() == '(' && i_ + 1 < s_.size() && s_[i_ + 1] != '{') {
      t.push_back(s_[i_++]);
      while (i_ < s_.size() && s_[i_] != ')') t.push_back(s_[i_++]);
      if (peek() != ')') fail("unterminated argument list");
      t.push_back(s_[i_++]);
    }
    return t;
  }

  Context parse_context() {
    expect('{');
    Context c;
    skip_ws();
    if (peek() == '}') {
      ++i_;
      return c;
    }
    while (true) {
      if (!c.add(atoms_.parse_lit(literal_text()))) fail("inconsistent context");
      skip_ws();
      if (peek() == ',') {
        ++i_;
        continue;
      }
      expect('}');
      return c;
    }
  }

  SuccessRecord parse_record() {
    skip_ws();
    SuccessRecord r;
    if (peek() == 'T') {
      ++i_;
      expect('(');
      r.context = parse_context();
      expect(')');
      return r;
    }
    expect('[');
    while (true) {
      ResidueEntry e;
      e.lit = atoms_.parse_lit(literal_text());
      expect('(');
      e.ctx = parse_context();
      expect(')');
      auto it = std::lower_bound(r.residue.begin(), r.residue.end(), e);
      if (it == r.residue.end() || !(*it == e)) r.residue.insert(it, std::move(e));
      skip_ws();
      if (peek() == ',') {
        ++i_;
        continue;
      }
      expect(']');
      break;
    }
    expect('(');
    r.context = parse_context();
    expect(')');
    return r;
  }
};

}  // namespace

void save_computed_rules(const RewriteSystem& sys, std::ostream& out) {
  const AtomTable& atoms = sys.atoms();
  for (const auto& [lit, rule] : sys.computed()) {
    out << atoms.render_lit(lit) << " -> ";
    if (rule.body.failed()) {
      out << "F\n";
      continue;
    }
    for (size_t i = 0; i < rule.body.records.size(); ++i) {
      if (i > 0) out << " v ";
      out << store_record(atoms, rule.body.records[i]);
    }
    out << "\n";
  }
}

std::vector<ComputedRule> load_computed_rules(std::istream& in, AtomTable& atoms,
                                              uint32_t generation) {
  std::vector<ComputedRule> rules;
  std::string line;
  while (std::getline(in, line)) {
    size_t start = line.find_first_not_of(" \t\r");
    if (start == std::string::npos || line[start] == '%') continue;
    size_t arrow = line.find(" -> ");
    if (arrow == std::string::npos)
      throw std::runtime_error("computed-rule store: missing ' -> ' in line: " + line);
    Lit lit = atoms.parse_lit(std::string_view(line).substr(start, arrow - start));
    StoreParser parser(std::string_view(line).substr(arrow + 4), atoms);
    rules.push_back(
        computed_rule_from_normal_form(lit, parser.parse_body(), generation));
  }
  return rules;
}

}  // namespace grs
