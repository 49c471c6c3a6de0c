#include "repro.hpp"

#include <algorithm>
#include <iomanip>
#include <ostream>
#include <stdexcept>

#include "timcoop/bounds.hpp"
#include "timcoop/scheduler.hpp"
#include "timcoop/verifier.hpp"

namespace timcoop::cli {

namespace {

std::vector<int> or_default(const std::vector<int>& ks, std::vector<int> fallback) {
  return ks.empty() ? fallback : ks;
}

std::string k_label(const char* family, int k) { return std::string(family) + "(" + std::to_string(k) + ")"; }

std::vector<ClaimRow> theorem1(const ReproOptions& o) {
  std::vector<ClaimRow> rows;
  for (int k : or_default(o.k_list, {3, 6, 9, 12, 15, 18, 21, 24, 27, 30})) {
    const Topology t = wyner(k);
    const auto lower = achievable_dof(t);
    const auto upper = upper_bound(t, o.exhaustive_limit);
    ClaimRow row;
    row.claim = k_label("wyner", k) + " lower = upper";
    row.observed = to_string(lower.value) + " / " + to_string(upper.value) + " (per-user " +
                   to_string(lower.value / Rational(k)) + ")";
    if (k % 3 == 0) {
      const Rational target(2 * k, 3);
      row.expected = to_string(target) + " / " + to_string(target);
      row.pass = lower.value == target && upper.value == target;
    } else {
      row.expected = "lower <= upper";
      row.pass = lower.value <= upper.value;
    }
    rows.push_back(row);

    if (k % 3 != 0 || k < 3) continue;
    if (k <= o.exhaustive_limit) {
      const Topology c = cyclic_wyner(k);
      const auto c_lower = achievable_dof(c);
      const auto c_upper = upper_bound(c, o.exhaustive_limit);
      rows.push_back({k_label("cyclic", k) + " bounds match wyner", to_string(lower.value) + " / " + to_string(upper.value),
                      to_string(c_lower.value) + " / " + to_string(c_upper.value),
                      c_lower.value == lower.value && c_upper.value == upper.value});
    }
    if (k >= 6 && k <= 9) {
      // Cooperation order 2: each message on both transmitters its receiver hears.
      const MessageAssignment coop = connected_assignment(t);
      Rational worst(0);
      const std::pair<int, int> shapes[] = {{1, 1}, {2, 1}, {3, 1}, {3, 2}, {4, 2}};
      std::uint64_t cfg = 0;
      for (auto [n, m] : shapes) {
        const LinearScheme s = random_scheme(coop, n, m, o.seed + 104729 * ++cfg);
        const auto v = monte_carlo_dof(t, s, o.trials, o.seed);
        worst = std::max(worst, v.max_dof);
      }
      const Rational cap(2 * k, 3);
      rows.push_back({k_label("wyner", k) + " N=2 schemes", "max DoF <= " + to_string(cap), to_string(worst),
                      worst <= cap});
    }
  }
  return rows;
}

std::vector<ClaimRow> lemma2(const ReproOptions& o) {
  std::vector<ClaimRow> rows;
  for (int k : or_default(o.k_list, {6, 9})) {
    if (k < 4) throw std::invalid_argument("lemma2 needs K >= 4, got " + std::to_string(k));
    const Topology t = wyner(k);
    const MessageAssignment coop = connected_assignment(t);
    int trials = 0, failed = 0, skipped = 0, mono = 0;
    std::uint64_t cfg = 0;
    for (int i = 3; i <= k - 1; ++i) {
      for (int n = 2; n <= 4; ++n) {
        for (int m = 1; m <= n; ++m) {
          ++cfg;
          const LinearScheme s = random_scheme(coop, n, m, o.seed + 7919 * cfg);
          const auto rep = check_lemma2(t, s, i, o.trials, o.seed + cfg * static_cast<std::uint64_t>(o.trials));
          trials += rep.trials;
          failed += rep.failed;
          skipped += rep.hypothesis_not_met;
          mono += rep.monotonicity_failures;
        }
      }
    }
    rows.push_back({k_label("wyner", k) + " interference rank >= m_i", "0 failures",
                    std::to_string(failed) + " failures / " + std::to_string(trials) + " trials (" +
                        std::to_string(skipped) + " untested)",
                    failed == 0 && skipped == 0});
    rows.push_back({k_label("wyner", k) + " rank([A B]) >= rank(A+B)", "0 violations",
                    std::to_string(mono) + " violations", mono == 0});
  }
  return rows;
}

std::vector<ClaimRow> fully_connected_case(const ReproOptions& o) {
  std::vector<ClaimRow> rows;
  for (int k : or_default(o.k_list, {2, 3, 4, 5, 6, 7, 8, 9, 10})) {
    const Topology t = fully_connected(k);
    const auto lower = achievable_dof(t);
    const auto upper = upper_bound(t, o.exhaustive_limit);
    rows.push_back({k_label("full", k) + " lower = upper", "1 / 1 (identical-neighbors)",
                    to_string(lower.value) + " / " + to_string(upper.value) + " (" + to_string(upper.kind) + ")",
                    lower.value == Rational(1) && upper.value == Rational(1) && upper.kind == CertificateKind::identical_neighbors});
  }
  return rows;
}

std::vector<ClaimRow> coherence(const ReproOptions& o) {
  const Topology mixed = figure4_example();
  const Topology uniform = mixed.with_uniform_coherence(Coherence::slots(1));
  const LinearScheme s = figure4_repetition_scheme();

  int mixed_ok = 0, uniform_rx3_down = 0;
  for (int trial = 0; trial < o.trials; ++trial) {
    const std::uint64_t seed = o.seed + static_cast<std::uint64_t>(trial);
    const auto a = zf_decodability(mixed, s, sample_channel(mixed, s.n(), seed));
    if (a.dof == Rational(3, 2)) ++mixed_ok;
    const auto b = zf_decodability(uniform, s, sample_channel(uniform, s.n(), seed));
    if (b.status[2] == ReceiverStatus::undecodable && b.dof == Rational(1)) ++uniform_rx3_down;
  }
  const std::string of = "/" + std::to_string(o.trials);
  return {
      {"figure4 mixed coherence: repetition scheme", "DoF 3/2 in " + std::to_string(o.trials) + of,
       "DoF 3/2 in " + std::to_string(mixed_ok) + of, mixed_ok == o.trials},
      {"figure4 unit coherence: same scheme", "rx3 fails, DoF 1 in " + std::to_string(o.trials) + of,
       "rx3 fails, DoF 1 in " + std::to_string(uniform_rx3_down) + of, uniform_rx3_down == o.trials},
  };
}

}  // namespace

bool is_repro_case(const std::string& name) {
  return name == "theorem1" || name == "lemma2" || name == "fullyconnected" || name == "coherence";
}

std::vector<ClaimRow> run_repro(const std::string& name, const ReproOptions& opts) {
  if (name == "theorem1") return theorem1(opts);
  if (name == "lemma2") return lemma2(opts);
  if (name == "fullyconnected") return fully_connected_case(opts);
  if (name == "coherence") return coherence(opts);
  throw std::invalid_argument("unknown repro case '" + name + "'");
}

void print_table(std::ostream& out, const std::vector<ClaimRow>& rows) {
  std::size_t wc = 5, we = 8, wo = 8;
  for (const auto& r : rows) {
    wc = std::max(wc, r.claim.size());
    we = std::max(we, r.expected.size());
    wo = std::max(wo, r.observed.size());
  }
  auto line = [&](const std::string& a, const std::string& b, const std::string& c, const std::string& d) {
    out << std::left << std::setw(static_cast<int>(wc)) << a << "  " << std::setw(static_cast<int>(we)) << b << "  "
        << std::setw(static_cast<int>(wo)) << c << "  " << d << "\n";
  };
  line("claim", "expected", "observed", "verdict");
  for (const auto& r : rows) line(r.claim, r.expected, r.observed, r.pass ? "PASS" : "FAIL");
}

}  // namespace timcoop::cli
