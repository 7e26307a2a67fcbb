#include "grs/logistics.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

#include "grs/grounding.hpp"
#include "grs/parser.hpp"
#include "grs/recycling.hpp"
#include "grs/render.hpp"

namespace grs {

Program generate_logistics(unsigned locations) {
  if (locations < 2)
    throw std::invalid_argument("logistics domain needs at least 2 locations");
  std::string text =
      "% truck-and-package domain: successor-state predicates abduced from\n"
      "% initial-state propositions\n"
      "#domain 1.." + std::to_string(locations) + ".\n"
      "#abducible ta/1.\n"
      "#abducible pa/1.\n"
      "#abducible in/0.\n"
      "ta(X,X1,X).\n"
      "pa(X,X1,X2) :- ta(X,X1,X2), in(X1,X2).\n"
      "ta(X,X1,X2) :- X != X2, ta(X), not taol(X,X1,X2).\n"
      "taol(X,X1,X2) :- Y != X, ta(Y,X1,X2).\n"
      "pa(X,X1,X2) :- pa(X), not paol(X,X1,X2).\n"
      "paol(X,X1,X2) :- Y != X, pa(Y,X1,X2).\n"
      "in(X,Y) :- in.\n";
  return parse_program(text);
}

std::vector<std::string> default_bench_queries(unsigned locations) {
  static const int triples[][3] = {{1, 2, 3}, {3, 2, 3}, {1, 5, 7}, {7, 5, 1}, {7, 1, 7}};
  std::vector<std::string> out;
  for (const auto& t : triples) {
    if (static_cast<unsigned>(std::max({t[0], t[1], t[2]})) > locations) continue;
    std::string atom = "pa(" + std::to_string(t[0]) + "," + std::to_string(t[1]) + "," +
                       std::to_string(t[2]) + ")";
    out.push_back(atom);
    out.push_back("-" + atom);
  }
  return out;
}

namespace {

std::string residue_summary(const AtomTable& atoms, const NormalForm& nf) {
  if (nf.failed()) return "F";
  const NormalForm min = minimize_records(nf);
  std::vector<std::string> parts;
  for (const SuccessRecord& r : min.records) {
    std::string part;
    if (r.residue.empty()) {
      part = "T";
    } else {
      std::vector<std::string> lits;
      for (Lit l : r.residue_lits()) lits.push_back(atoms.render_lit(l));
      std::sort(lits.begin(), lits.end());
      for (size_t i = 0; i < lits.size(); ++i) part += (i ? ", " : "") + lits[i];
    }
    if (std::find(parts.begin(), parts.end(), part) == parts.end()) parts.push_back(part);
  }
  std::string out;
  for (size_t i = 0; i < parts.size(); ++i) out += (i ? " v " : "") + parts[i];
  return out;
}

/// Computed rules for all ground ta(x,y,z) and in(y,z) literals of both
/// polarities, computed on the given system.
std::vector<ComputedRule> ta_in_delta(const RewriteSystem& sys, unsigned locations) {
  const Program& p = sys.program();
  AtomTable& atoms = sys.atoms();
  RewriteOptions opts;
  opts.mode = Mode::Abductive;
  std::vector<SymbolId> consts;
  for (unsigned i = 1; i <= locations; ++i)
    consts.push_back(p.consts.find(std::to_string(i)).value());
  std::vector<ComputedRule> delta;
  auto add = [&](PredId pred, std::span<const SymbolId> args) {
    AtomId atom = atoms.intern(pred, args);
    for (bool positive : {true, false}) {
      Lit l = make_lit(atom, positive);
      delta.push_back(computed_rule_from_normal_form(l, rewrite(sys, l, opts).nf, sys.index()));
    }
  };
  if (auto ta3 = p.preds.find("ta", 3)) {
    for (SymbolId x : consts)
      for (SymbolId y : consts)
        for (SymbolId z : consts) add(*ta3, std::vector<SymbolId>{x, y, z});
  }
  if (auto in2 = p.preds.find("in", 2)) {
    for (SymbolId y : consts)
      for (SymbolId z : consts) add(*in2, std::vector<SymbolId>{y, z});
  }
  return delta;
}

}  // namespace

std::vector<BenchRow> run_benchmark(unsigned locations, std::span<const std::string> queries,
                                    bool with_nr, bool with_wr) {
  auto program = std::make_shared<const Program>(
      instantiate_body_only_variables(generate_logistics(locations)));
  RewriteSystem r0 = RewriteSystem::base(program);
  RewriteOptions opts;
  opts.mode = Mode::Abductive;

  std::vector<BenchRow> rows;
  auto run_rows = [&](const RewriteSystem& sys, const char* mode) {
    for (const std::string& q : queries) {
      Lit lit = sys.atoms().parse_lit(q);
      RewriteResult res = rewrite(sys, lit, opts);
      BenchRow row;
      row.query = q;
      row.mode = mode;
      row.steps_total = res.trace.total_steps;
      row.steps_literal = res.trace.literal_steps;
      row.records = res.nf.records.size();
      row.residues = residue_summary(sys.atoms(), res.nf);
      rows.push_back(std::move(row));
    }
  };
  if (with_nr) run_rows(r0, "NR");
  if (with_wr) {
    RewriteSystem wr = extend_system(r0, ta_in_delta(r0, locations));
    run_rows(wr, "WR");
  }
  return rows;
}

std::string bench_csv(std::span<const BenchRow> rows) {
  std::ostringstream out;
  out << "query,mode,steps_total,steps_literal,records,residues\n";
  for (const BenchRow& r : rows) {
    out << "\"" << r.query << "\"," << r.mode << "," << r.steps_total << "," << r.steps_literal
        << "," << r.records << ",\"" << r.residues << "\"\n";
  }
  return out.str();
}

std::string bench_table(std::span<const BenchRow> rows) {
  std::ostringstream out;
  size_t qw = 5;
  for (const BenchRow& r : rows) qw = std::max(qw, r.query.size());
  out << std::string(qw - 5, ' ') << "query mode  steps_total steps_literal  records  residues\n";
  for (const BenchRow& r : rows) {
    std::string total = std::to_string(r.steps_total);
    std::string lits = std::to_string(r.steps_literal);
    std::string recs = std::to_string(r.records);
    out << std::string(qw - r.query.size(), ' ') << r.query << "   " << r.mode << "  "
        << std::string(total.size() < 11 ? 11 - total.size() : 0, ' ') << total << " "
        << std::string(lits.size() < 13 ? 13 - lits.size() : 0, ' ') << lits << " "
        << std::string(recs.size() < 8 ? 8 - recs.size() : 0, ' ') << recs << "  " << r.residues
        << "\n";
  }
  return out.str();
}

}  // namespace grs
