#include "timcoop/verifier.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace timcoop {

namespace {

void check_dimensions(const Topology& t, const LinearScheme& s, const ChannelRealization& h) {
  if (s.k() != t.k()) {
    throw std::invalid_argument("scheme K=" + std::to_string(s.k()) + " does not match topology K=" +
                                std::to_string(t.k()));
  }
  if (h.k() != t.k()) {
    throw std::invalid_argument("channel K=" + std::to_string(h.k()) + " does not match topology K=" +
                                std::to_string(t.k()));
  }
  if (h.n() != s.n()) {
    throw std::invalid_argument("channel block length " + std::to_string(h.n()) + " does not match scheme n=" +
                                std::to_string(s.n()));
  }
}

// diag(h) * v, row-scaled.
Matrix scale_rows(std::span<const double> h, const Matrix& v) {
  Matrix out = v;
  for (Eigen::Index r = 0; r < out.rows(); ++r) out.row(r) *= h[static_cast<std::size_t>(r)];
  return out;
}

Matrix footprint_unchecked(const Topology& t, const LinearScheme& s, const ChannelRealization& h, int msg, int rx) {
  Matrix out = Matrix::Zero(s.n(), s.symbols(msg));
  if (s.symbols(msg) == 0) return out;
  for (int tx : s.assignment().transmit_set(msg)) {
    if (!t.has_link(rx, tx)) continue;
    out += scale_rows(h.sequence(rx, tx), *s.precoder(tx, msg));
  }
  return out;
}

// diag(H_{rx,tx}) V_{tx,msg}, or zeros when tx does not carry msg.
Matrix single_term(const Topology& t, const LinearScheme& s, const ChannelRealization& h, int rx, int tx, int msg) {
  const Matrix* v = s.precoder(tx, msg);
  if (v == nullptr || !t.has_link(rx, tx)) return Matrix::Zero(s.n(), s.symbols(msg));
  return scale_rows(h.sequence(rx, tx), *v);
}

bool is_wyner_shape(const Topology& t) {
  const Topology ref = wyner(t.k());
  return std::ranges::equal(t.links(), ref.links());
}

}  // namespace

Matrix footprint(const Topology& t, const LinearScheme& s, const ChannelRealization& h, int msg, int rx) {
  check_dimensions(t, s, h);
  if (msg < 1 || msg > t.k()) throw std::invalid_argument("footprint: message " + std::to_string(msg) + " out of range");
  if (rx < 1 || rx > t.k()) throw std::invalid_argument("footprint: receiver " + std::to_string(rx) + " out of range");
  return footprint_unchecked(t, s, h, msg, rx);
}

Lemma2Report check_lemma2(const Topology& t, const LinearScheme& s, int msg, int trials, std::uint64_t seed) {
  const int k = t.k();
  if (!is_wyner_shape(t)) throw std::invalid_argument("check_lemma2: topology is not a Wyner chain");
  if (s.k() != k) throw std::invalid_argument("check_lemma2: scheme K does not match topology");
  if (msg < 3 || msg > k - 1) {
    throw std::invalid_argument("check_lemma2: message index " + std::to_string(msg) + " outside 3..K-1 = 3.." +
                                std::to_string(k - 1));
  }
  for (int tx : s.assignment().transmit_set(msg)) {
    if (tx != msg && tx != msg - 1) {
      throw std::invalid_argument("check_lemma2: T_" + std::to_string(msg) + " contains transmitter " +
                                  std::to_string(tx) + ", expected a subset of {i-1, i}");
    }
  }
  const int mi = s.symbols(msg);
  if (mi < 1) throw std::invalid_argument("check_lemma2: m_" + std::to_string(msg) + " must be >= 1");
  if (trials < 1) throw std::invalid_argument("check_lemma2: trials must be >= 1");

  Lemma2Report report;
  report.message = msg;
  report.trials = trials;
  for (int trial = 0; trial < trials; ++trial) {
    const std::uint64_t trial_seed = seed + static_cast<std::uint64_t>(trial);
    const ChannelRealization h = sample_channel(t, s.n(), trial_seed);

    const Matrix a = single_term(t, s, h, msg - 1, msg - 1, msg);
    const Matrix b = single_term(t, s, h, msg + 1, msg, msg);
    const Matrix ab[] = {a, b};
    if (numerical_rank(hstack(ab, s.n())) < numerical_rank(a + b)) ++report.monotonicity_failures;

    const Matrix desired = footprint_unchecked(t, s, h, msg, msg);
    if (numerical_rank(desired) < mi) {
      ++report.hypothesis_not_met;
      continue;
    }
    const Matrix stack[] = {footprint_unchecked(t, s, h, msg, msg - 1), footprint_unchecked(t, s, h, msg, msg + 1)};
    if (numerical_rank(hstack(stack, s.n())) >= mi) {
      ++report.passed;
    } else {
      ++report.failed;
      report.counterexample_seeds.push_back(trial_seed);
    }
  }
  return report;
}

ZfResult zf_decodability(const Topology& t, const LinearScheme& s, const ChannelRealization& h) {
  check_dimensions(t, s, h);
  const int k = t.k();
  ZfResult result;
  result.status.assign(static_cast<std::size_t>(k), ReceiverStatus::inactive);
  std::int64_t decoded = 0;
  for (int rx = 1; rx <= k; ++rx) {
    const int mi = s.symbols(rx);
    if (mi == 0) continue;
    const Matrix desired = footprint_unchecked(t, s, h, rx, rx);
    std::vector<Matrix> blocks{desired};
    for (int other = 1; other <= k; ++other) {
      if (other == rx || s.symbols(other) == 0) continue;
      blocks.push_back(footprint_unchecked(t, s, h, other, rx));
    }
    const Matrix interference = hstack(std::span<const Matrix>(blocks).subspan(1), s.n());
    const bool ok = numerical_rank(desired) == mi &&
                    numerical_rank(hstack(blocks, s.n())) == mi + numerical_rank(interference);
    result.status[static_cast<std::size_t>(rx - 1)] = ok ? ReceiverStatus::decodable : ReceiverStatus::undecodable;
    if (ok) decoded += mi;
  }
  result.dof = Rational(decoded, s.n());
  return result;
}

MonteCarloVerdict monte_carlo_dof(const Topology& t, const LinearScheme& s, int trials, std::uint64_t seed) {
  if (trials < 1) throw std::invalid_argument("monte_carlo_dof: trials must be >= 1");
  std::vector<ZfResult> outcomes;
  outcomes.reserve(static_cast<std::size_t>(trials));
  for (int trial = 0; trial < trials; ++trial) {
    const ChannelRealization h = sample_channel(t, s.n(), seed + static_cast<std::uint64_t>(trial));
    outcomes.push_back(zf_decodability(t, s, h));
  }

  std::vector<std::pair<std::size_t, int>> tally;  // (first index, count)
  for (std::size_t i = 0; i < outcomes.size(); ++i) {
    auto it = std::find_if(tally.begin(), tally.end(), [&](const auto& e) { return outcomes[e.first] == outcomes[i]; });
    if (it == tally.end()) {
      tally.emplace_back(i, 1);
    } else {
      ++it->second;
    }
  }
  const auto mode = std::max_element(tally.begin(), tally.end(),
                                     [](const auto& a, const auto& b) { return a.second < b.second; });

  MonteCarloVerdict v;
  v.trials = trials;
  v.seed = seed;
  v.outcome = outcomes[mode->first];
  v.min_dof = outcomes.front().dof;
  v.max_dof = outcomes.front().dof;
  for (std::size_t i = 0; i < outcomes.size(); ++i) {
    const auto& o = outcomes[i];
    v.min_dof = std::min(v.min_dof, o.dof);
    v.max_dof = std::max(v.max_dof, o.dof);
    if (!(o == v.outcome)) v.dissenting_seeds.push_back(seed + i);
    if (std::ranges::none_of(o.status, [](ReceiverStatus st) { return st == ReceiverStatus::undecodable; })) {
      ++v.all_decodable_trials;
    }
  }
  v.generic = v.dissenting_seeds.empty();
  return v;
}

Matrix random_full_rank(int n, int m, std::mt19937_64& rng) {
  if (n < 1 || m < 0) throw std::invalid_argument("random_full_rank: bad shape");
  std::normal_distribution<double> normal(0.0, 1.0);
  Matrix out(n, m);
  do {
    for (Eigen::Index r = 0; r < out.rows(); ++r) {
      for (Eigen::Index c = 0; c < out.cols(); ++c) out(r, c) = normal(rng);
    }
  } while (numerical_rank(out) < std::min(n, m));
  return out;
}

LinearScheme random_scheme(const MessageAssignment& a, int n, int m, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<int> symbols(static_cast<std::size_t>(a.k()), 0);
  std::map<PrecoderKey, Matrix> precoders;
  for (int i = 1; i <= a.k(); ++i) {
    const auto& ts = a.transmit_set(i);
    if (ts.empty() || m == 0) continue;
    symbols[static_cast<std::size_t>(i - 1)] = m;
    for (int tx : ts) precoders.emplace(PrecoderKey{tx, i}, random_full_rank(n, m, rng));
  }
  return LinearScheme(n, std::move(symbols), a, std::move(precoders));
}

}  // namespace timcoop
