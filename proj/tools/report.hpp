#pragma once

#include <cstdint>
#include <iosfwd>

#include "timcoop/bounds.hpp"
#include "timcoop/serialization.hpp"
#include "timcoop/topology.hpp"

namespace timcoop::cli {

struct AnalysisReport {
  int k = 0;
  std::size_t link_count = 0;
  std::size_t nondefault_coherence = 0;
  DofCertificate lower;
  DofCertificate upper;
  bool tight = false;
  Rational per_user_lower;
  Rational per_user_upper;
  std::string version;
  std::uint64_t seed = 0;
};

AnalysisReport analyze(const Topology& t, int exhaustive_limit, std::uint64_t seed);

Json to_json(const AnalysisReport& r);
void print_summary(std::ostream& out, const AnalysisReport& r);

/// One-line human rendering of a certificate and its evidence.
std::string describe(const DofCertificate& c);

}  // namespace timcoop::cli
