#include "grs/cli.hpp"

#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include <json.hpp>

#include "grs/grounding.hpp"
#include "grs/logistics.hpp"
#include "grs/oracle.hpp"
#include "grs/parser.hpp"
#include "grs/recycling.hpp"
#include "grs/render.hpp"

namespace grs {

namespace {

constexpr int kExitOk = 0;
constexpr int kExitProofFailed = 1;
constexpr int kExitCheckFailed = 2;
constexpr int kExitUsage = 64;

const char* kUsage =
    "usage: grs <command> [options]\n"
    "\n"
    "commands:\n"
    "  solve FILE QUERY...       rewrite queries to their normal forms\n"
    "  abduce FILE QUERY...      abductive rewriting (residual hypotheses)\n"
    "  oracle FILE               enumerate partial stable models and answer sets\n"
    "  check FILE QUERY...       rewrite vs oracle soundness/completeness report\n"
    "  bench logistics --locations N [QUERY...]   recycling benchmark\n"
    "  confluence FILE QUERY... [--seeds K]       strategy-independence fuzz\n"
    "\n"
    "options:\n"
    "  --no-recycle      solve each query independently (no computed-rule reuse)\n"
    "  --minimize        drop subsumed success records from the output\n"
    "  --trace           print one line per rewrite step\n"
    "  --json PATH       write results as JSON\n"
    "  --csv PATH        write benchmark rows as CSV\n"
    "  --seeds K         confluence seeds (default 20)\n"
    "  --locations N     benchmark domain size\n"
    "  --oracle-cap N    enumeration cap in atoms (default 18)\n"
    "  --save-rules PATH export computed rules after a recycled batch\n"
    "  --load-rules PATH import computed rules before solving\n"
    "\n"
    "exit codes: 0 success, 1 proof failure (F), 2 check failure, 64 usage\n";

struct CliOptions {
  std::string command;
  std::vector<std::string> positional;
  bool recycle = true;
  bool minimize = false;
  bool trace = false;
  unsigned seeds = 20;
  unsigned locations = 0;
  unsigned oracle_cap = 18;
  std::string json_path;
  std::string csv_path;
  std::string save_rules;
  std::string load_rules;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

CliOptions parse_args(const std::vector<std::string>& args) {
  CliOptions o;
  if (args.empty()) throw UsageError("missing command");
  o.command = args[0];
  size_t i = 1;
  auto value = [&](const std::string& flag) -> std::string {
    if (i + 1 >= args.size()) throw UsageError(flag + " needs a value");
    return args[++i];
  };
  for (; i < args.size(); ++i) {
    const std::string& a = args[i];
    if (a.rfind("--", 0) != 0) {
      o.positional.push_back(a);  // note: "-lit" queries land here
      continue;
    }
    if (a == "--no-recycle")
      o.recycle = false;
    else if (a == "--minimize")
      o.minimize = true;
    else if (a == "--trace")
      o.trace = true;
    else if (a == "--json")
      o.json_path = value(a);
    else if (a == "--csv")
      o.csv_path = value(a);
    else if (a == "--seeds")
      o.seeds = static_cast<unsigned>(std::stoul(value(a)));
    else if (a == "--locations")
      o.locations = static_cast<unsigned>(std::stoul(value(a)));
    else if (a == "--oracle-cap")
      o.oracle_cap = static_cast<unsigned>(std::stoul(value(a)));
    else if (a == "--save-rules")
      o.save_rules = value(a);
    else if (a == "--load-rules")
      o.load_rules = value(a);
    else
      throw UsageError("unknown option " + a);
  }
  return o;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

RewriteSystem load_system(const std::string& path, const CliOptions& o) {
  auto program = std::make_shared<const Program>(
      instantiate_body_only_variables(parse_program(read_file(path))));
  RewriteSystem sys = RewriteSystem::base(program);
  if (!o.load_rules.empty()) {
    std::ifstream in(o.load_rules);
    if (!in) throw UsageError("cannot open " + o.load_rules);
    sys = extend_system(sys, load_computed_rules(in, sys.atoms(), sys.index()));
  }
  return sys;
}

nlohmann::json json_of(const AtomTable& atoms, const std::string& query, const NormalForm& nf) {
  nlohmann::json j;
  j["query"] = query;
  if (nf.failed()) {
    j["result"] = "F";
    return j;
  }
  nlohmann::json records = nlohmann::json::array();
  for (const SuccessRecord& r : nf.records) {
    nlohmann::json rec;
    nlohmann::json ctx = nlohmann::json::array();
    for (Lit l : r.context) ctx.push_back(atoms.render_lit(l));
    rec["context"] = std::move(ctx);
    nlohmann::json residue = nlohmann::json::array();
    for (const ResidueEntry& e : r.residue) {
      nlohmann::json item;
      item["lit"] = atoms.render_lit(e.lit);
      nlohmann::json ectx = nlohmann::json::array();
      for (Lit l : e.ctx) ectx.push_back(atoms.render_lit(l));
      item["context"] = std::move(ectx);
      residue.push_back(std::move(item));
    }
    rec["residue"] = std::move(residue);
    records.push_back(std::move(rec));
  }
  j["result"] = std::move(records);
  return j;
}

int cmd_solve(Mode mode, const CliOptions& o, std::ostream& out) {
  if (o.positional.size() < 2) throw UsageError("solve/abduce needs FILE and at least one QUERY");
  RewriteSystem sys = load_system(o.positional[0], o);
  std::vector<std::string> queries(o.positional.begin() + 1, o.positional.end());
  std::vector<Lit> goals;
  for (const std::string& q : queries) goals.push_back(sys.atoms().parse_lit(q));
  RewriteOptions ropts;
  ropts.trace = o.trace;
  BatchOutcome batch = batch_solve(sys, goals, mode,
                                   o.recycle ? BatchPolicy::Recycle : BatchPolicy::NoRecycle, ropts);
  nlohmann::json all = nlohmann::json::array();
  bool any_failed = false;
  for (size_t i = 0; i < batch.entries.size(); ++i) {
    const BatchEntry& e = batch.entries[i];
    NormalForm shown = o.minimize ? minimize_records(e.nf) : e.nf;
    if (o.trace) out << render_trace(sys.atoms(), e.trace);
    if (queries.size() == 1)
      out << render_normal_form(sys.atoms(), shown) << "\n";
    else
      out << queries[i] << ": " << render_normal_form(sys.atoms(), shown) << "\n";
    if (!o.json_path.empty()) all.push_back(json_of(sys.atoms(), queries[i], shown));
    any_failed = any_failed || e.nf.failed();
  }
  if (!o.json_path.empty()) {
    std::ofstream jf(o.json_path);
    if (!jf) throw UsageError("cannot open " + o.json_path);
    jf << (all.size() == 1 ? all[0] : all).dump(2) << "\n";
  }
  if (!o.save_rules.empty()) {
    std::ofstream rf(o.save_rules);
    if (!rf) throw UsageError("cannot open " + o.save_rules);
    save_computed_rules(batch.final_system, rf);
  }
  return any_failed ? kExitProofFailed : kExitOk;
}

int cmd_oracle(const CliOptions& o, std::ostream& out) {
  if (o.positional.size() != 1) throw UsageError("oracle needs exactly FILE");
  Program ground = fully_ground(parse_program(read_file(o.positional[0])));
  Oracle oracle(ground, {}, o.oracle_cap);
  ModelSet models = oracle.enumerate();
  auto join = [](const std::set<std::string>& s) {
    std::string r = "{";
    bool first = true;
    for (const std::string& a : s) {
      if (!first) r += ",";
      first = false;
      r += a;
    }
    return r + "}";
  };
  for (const PartialStableModel& m : models.psms)
    out << "PSM: +" << join(m.true_atoms) << " -" << join(m.false_atoms) << "\n";
  for (const std::set<std::string>& e : models.answer_sets) out << "AS: " << join(e) << "\n";
  return kExitOk;
}

int cmd_check(const CliOptions& o, std::ostream& out) {
  if (o.positional.size() < 2) throw UsageError("check needs FILE and at least one QUERY");
  Program parsed = parse_program(read_file(o.positional[0]));
  auto program = std::make_shared<const Program>(instantiate_body_only_variables(parsed));
  RewriteSystem sys = RewriteSystem::base(program);
  std::vector<std::string> queries(o.positional.begin() + 1, o.positional.end());
  std::vector<Lit> goals;
  std::vector<std::string> extra_atoms;
  for (const std::string& q : queries) {
    Lit l = sys.atoms().parse_lit(q);
    goals.push_back(l);
    extra_atoms.push_back(sys.atoms().render_atom(lit_atom(l)));
  }
  Oracle oracle(fully_ground(*program), extra_atoms, o.oracle_cap);
  ModelSet models = oracle.enumerate();
  bool all_pass = true;
  for (size_t i = 0; i < goals.size(); ++i) {
    RewriteResult res = rewrite(sys, goals[i]);
    std::vector<OracleContext> contexts = oracle_contexts(sys.atoms(), res.nf);
    OracleLit goal = oracle_lit(sys.atoms(), goals[i]);
    OracleReport sound = check_soundness(goal, contexts, models);
    OracleReport complete = check_completeness(goal, contexts, models);
    out << queries[i] << ": soundness " << (sound.pass ? "PASS" : "FAIL " + sound.witness)
        << " | completeness " << (complete.pass ? "PASS" : "FAIL " + complete.witness) << "\n";
    all_pass = all_pass && sound.pass && complete.pass;
  }
  return all_pass ? kExitOk : kExitCheckFailed;
}

int cmd_bench(const CliOptions& o, std::ostream& out) {
  if (o.positional.empty() || o.positional[0] != "logistics")
    throw UsageError("bench supports: bench logistics --locations N");
  if (o.locations < 2) throw UsageError("--locations N (N >= 2) is required");
  std::vector<std::string> queries(o.positional.begin() + 1, o.positional.end());
  if (queries.empty()) queries = default_bench_queries(o.locations);
  std::vector<BenchRow> rows = run_benchmark(o.locations, queries);
  out << bench_table(rows);
  if (!o.csv_path.empty()) {
    std::ofstream cf(o.csv_path);
    if (!cf) throw UsageError("cannot open " + o.csv_path);
    cf << bench_csv(rows);
  }
  return kExitOk;
}

int cmd_confluence(const CliOptions& o, std::ostream& out) {
  if (o.positional.size() < 2)
    throw UsageError("confluence needs FILE and at least one QUERY");
  RewriteSystem sys = load_system(o.positional[0], o);
  bool all_agree = true;
  for (size_t qi = 1; qi < o.positional.size(); ++qi) {
    const std::string& q = o.positional[qi];
    Lit goal = sys.atoms().parse_lit(q);
    NormalForm reference = rewrite(sys, goal).nf;
    bool agree = true;
    for (unsigned seed = 1; seed <= o.seeds; ++seed) {
      RewriteOptions ropts;
      ropts.seed = seed;
      if (!rewrite(sys, goal, ropts).nf.equivalent(reference)) {
        agree = false;
        break;
      }
    }
    out << q << ": " << (agree ? "OK" : "MISMATCH") << " (" << o.seeds << " seeds, "
        << reference.records.size() << " records)\n";
    all_agree = all_agree && agree;
  }
  return all_agree ? kExitOk : kExitCheckFailed;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CliOptions o;
  try {
    o = parse_args(args);
    if (o.command == "solve") return cmd_solve(Mode::Plain, o, out);
    if (o.command == "abduce") return cmd_solve(Mode::Abductive, o, out);
    if (o.command == "oracle") return cmd_oracle(o, out);
    if (o.command == "check") return cmd_check(o, out);
    if (o.command == "bench") return cmd_bench(o, out);
    if (o.command == "confluence") return cmd_confluence(o, out);
    throw UsageError("unknown command " + o.command);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n\n" << kUsage;
    return kExitUsage;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const OracleCapacityError& e) {
    err << "oracle error: " << e.what() << "\n";
    return kExitCheckFailed;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}

}  // namespace grs
