#include "timcoop/scheme.hpp"

#include <stdexcept>
#include <string>

namespace timcoop {

namespace {

std::string key_str(const PrecoderKey& key) {
  return "V(tx=" + std::to_string(key.tx) + ", msg=" + std::to_string(key.msg) + ")";
}

}  // namespace

LinearScheme::LinearScheme(int n, std::vector<int> m, MessageAssignment assignment,
                           std::map<PrecoderKey, Matrix> precoders)
    : n_(n), m_(std::move(m)), assignment_(std::move(assignment)), precoders_(std::move(precoders)) {
  const int k = assignment_.k();
  if (n_ < 1) throw std::invalid_argument("scheme: block length n must be >= 1");
  if (m_.size() != static_cast<std::size_t>(k)) {
    throw std::invalid_argument("scheme: m has " + std::to_string(m_.size()) + " entries, expected K=" +
                                std::to_string(k));
  }
  for (int i = 1; i <= k; ++i) {
    const int mi = m_[static_cast<std::size_t>(i - 1)];
    const auto& ts = assignment_.transmit_set(i);
    if (mi < 0) throw std::invalid_argument("scheme: m[" + std::to_string(i) + "] is negative");
    if (mi > 0 && ts.empty()) {
      throw std::invalid_argument("scheme: message " + std::to_string(i) + " has m_i > 0 but an empty transmit set");
    }
    for (int tx : ts) {
      if (tx < 1 || tx > k) {
        throw std::invalid_argument("scheme: message " + std::to_string(i) + " transmit set names transmitter " +
                                    std::to_string(tx) + " outside 1.." + std::to_string(k));
      }
      if (mi == 0) continue;
      const PrecoderKey key{tx, i};
      auto it = precoders_.find(key);
      if (it == precoders_.end()) throw std::invalid_argument("scheme: missing precoder " + key_str(key));
      if (it->second.rows() != n_ || it->second.cols() != mi) {
        throw std::invalid_argument("scheme: precoder " + key_str(key) + " is " + std::to_string(it->second.rows()) +
                                    "x" + std::to_string(it->second.cols()) + ", expected " + std::to_string(n_) +
                                    "x" + std::to_string(mi));
      }
    }
  }
  for (const auto& [key, mat] : precoders_) {
    if (key.msg < 1 || key.msg > k || m_[static_cast<std::size_t>(key.msg - 1)] == 0 ||
        !assignment_.carries(key.msg, key.tx)) {
      throw std::invalid_argument("scheme: unexpected precoder " + key_str(key));
    }
  }
}

int LinearScheme::symbols(int msg) const {
  if (msg < 1 || msg > k()) throw std::out_of_range("message " + std::to_string(msg) + " out of range");
  return m_[static_cast<std::size_t>(msg - 1)];
}

const Matrix* LinearScheme::precoder(int tx, int msg) const {
  auto it = precoders_.find(PrecoderKey{tx, msg});
  return it == precoders_.end() ? nullptr : &it->second;
}

Rational LinearScheme::nominal_dof() const {
  std::int64_t total = 0;
  for (int mi : m_) total += mi;
  return Rational(total, n_);
}

LinearScheme figure4_repetition_scheme() {
  Matrix repeat(2, 1);
  repeat << 1.0, 1.0;
  Matrix once(2, 1);
  once << 1.0, 0.0;
  std::map<PrecoderKey, Matrix> precoders{
      {{1, 1}, repeat},
      {{2, 2}, repeat},
      {{3, 3}, once},
  };
  return LinearScheme(2, {1, 1, 1}, MessageAssignment(3, {{1}, {2}, {3}}), std::move(precoders));
}

}  // namespace timcoop
