#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace timcoop::cli {

struct ClaimRow {
  std::string claim;
  std::string expected;
  std::string observed;
  bool pass = false;
};

struct ReproOptions {
  std::vector<int> k_list;  // empty: the case's default list
  int trials = 50;
  std::uint64_t seed = 0;
  int exhaustive_limit = 12;
};

/// Known case names: theorem1, lemma2, fullyconnected, coherence.
bool is_repro_case(const std::string& name);
std::vector<ClaimRow> run_repro(const std::string& name, const ReproOptions& opts);

void print_table(std::ostream& out, const std::vector<ClaimRow>& rows);

}  // namespace timcoop::cli
