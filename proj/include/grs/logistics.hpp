#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "grs/engine.hpp"

namespace grs {

/// The logistics action-effect program over `locations` locations: a truck
/// and a package, successor-state predicates ta/3, pa/3, in/2 abduced in
/// terms of the initial-state abducibles ta/1, pa/1, in/0. Throws
/// std::invalid_argument for fewer than two locations.
Program generate_logistics(unsigned locations);

struct BenchRow {
  std::string query;
  std::string mode;  // "NR" or "WR"
  uint64_t steps_total = 0;
  uint64_t steps_literal = 0;
  size_t records = 0;       // records in the raw normal form
  std::string residues;     // minimized distinct residue sets, " v "-joined
};

/// Runs the abductive query suite. NR rows solve on the base system; WR
/// rows solve on a system pre-extended with computed rules for every
/// ground ta(x,y,z) and in(y,z) literal of both polarities. Step counters
/// cover the query runs only, not the WR pre-computation.
std::vector<BenchRow> run_benchmark(unsigned locations, std::span<const std::string> queries,
                                    bool with_nr = true, bool with_wr = true);

/// Default query set for a domain: the representative pa queries (both
/// polarities) whose constants all lie within 1..locations.
std::vector<std::string> default_bench_queries(unsigned locations);

std::string bench_csv(std::span<const BenchRow> rows);
std::string bench_table(std::span<const BenchRow> rows);

}  // namespace grs
