#include "report.hpp"

#include <ostream>
#include <sstream>

#include "cli.hpp"
#include "timcoop/scheduler.hpp"

namespace timcoop::cli {

AnalysisReport analyze(const Topology& t, int exhaustive_limit, std::uint64_t seed) {
  AnalysisReport r;
  r.k = t.k();
  r.link_count = t.links().size();
  for (const Link& l : t.links()) {
    if (!(t.coherence(l.rx, l.tx) == Coherence{})) ++r.nondefault_coherence;
  }
  r.lower = achievable_dof(t);
  r.upper = upper_bound(t, exhaustive_limit);
  r.tight = r.lower.value == r.upper.value;
  r.per_user_lower = r.lower.value / Rational(t.k());
  r.per_user_upper = r.upper.value / Rational(t.k());
  r.version = version();
  r.seed = seed;
  return r;
}

Json to_json(const AnalysisReport& r) {
  return Json{{"topology", {{"k", r.k}, {"links", r.link_count}, {"nondefault_coherence", r.nondefault_coherence}}},
              {"lower", timcoop::to_json(r.lower)},
              {"upper", timcoop::to_json(r.upper)},
              {"tight", r.tight},
              {"per_user", timcoop::to_json(r.per_user_lower)},
              {"per_user_upper", timcoop::to_json(r.per_user_upper)},
              {"version", r.version},
              {"seed", r.seed}};
}

std::string describe(const DofCertificate& c) {
  std::ostringstream os;
  os << to_string(c.value) << " (" << to_string(c.kind);
  if (const auto* s = std::get_if<Schedule>(&c.evidence)) {
    os << ":";
    for (const auto& p : s->pairs) os << " " << p.msg << "<-" << p.tx;
    if (s->pairs.empty()) os << " none";
  } else if (const auto* cc = std::get_if<Condition1Certificate>(&c.evidence)) {
    os << ": A={";
    for (std::size_t i = 0; i < cc->a.members().size(); ++i) os << (i ? "," : "") << cc->a.members()[i];
    os << "}, matching";
    for (const auto& m : cc->matching) os << " " << m.tx << "->" << m.rx;
  } else if (const auto* g = std::get_if<NeighborGrouping>(&c.evidence)) {
    os << ":";
    for (const auto& grp : g->groups) {
      if (grp.size() < 2 && !grp.empty()) continue;
      os << " {";
      for (std::size_t i = 0; i < grp.size(); ++i) os << (i ? "," : "") << grp[i];
      os << "}";
    }
  }
  os << ")";
  return os.str();
}

void print_summary(std::ostream& out, const AnalysisReport& r) {
  out << "topology: K=" << r.k << ", " << r.link_count << " links";
  if (r.nondefault_coherence > 0) out << ", " << r.nondefault_coherence << " with non-unit coherence";
  out << "\n"
      << "lower bound:  " << describe(r.lower) << "\n"
      << "upper bound:  " << describe(r.upper) << "\n"
      << "tight:        " << (r.tight ? "yes" : "no") << "\n"
      << "per-user DoF: " << to_string(r.per_user_lower);
  if (!r.tight) out << " .. " << to_string(r.per_user_upper);
  out << "\n";
}

}  // namespace timcoop::cli
