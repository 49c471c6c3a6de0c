#pragma once

#include <map>
#include <utility>
#include <vector>

#include "timcoop/assignment.hpp"
#include "timcoop/linalg.hpp"
#include "timcoop/rational.hpp"

namespace timcoop {

/// Key for a precoder: (transmitter, message).
struct PrecoderKey {
  int tx = 0;
  int msg = 0;
  friend auto operator<=>(const PrecoderKey&, const PrecoderKey&) = default;
};

/// A linear cooperation scheme over an n-slot block. Message i carries m_i
/// symbols; each transmitter j in T_i sends V_{j,i} w_i with V_{j,i} an
/// n x m_i precoder.
class LinearScheme {
 public:
  /// Throws std::invalid_argument naming the offending index when a precoder
  /// is missing, extra, or mis-shaped, or when m_i > 0 with T_i empty.
  LinearScheme(int n, std::vector<int> m, MessageAssignment assignment, std::map<PrecoderKey, Matrix> precoders);

  int n() const { return n_; }
  int k() const { return assignment_.k(); }
  int symbols(int msg) const;
  const std::vector<int>& symbols() const { return m_; }
  const MessageAssignment& assignment() const { return assignment_; }
  const std::map<PrecoderKey, Matrix>& precoders() const { return precoders_; }
  /// nullptr when transmitter `tx` does not carry message `msg`.
  const Matrix* precoder(int tx, int msg) const;

  /// (sum of m_i) / n: what the scheme achieves if every receiver decodes.
  Rational nominal_dof() const;

 private:
  int n_;
  std::vector<int> m_;
  MessageAssignment assignment_;
  std::map<PrecoderKey, Matrix> precoders_;
};

/// Two-slot repetition scheme for figure4_example(): every transmitter sends
/// its own message in slot 1 and transmitters 1 and 2 repeat in slot 2.
/// Decodes everywhere only when receiver 3's interfering links stay fixed
/// across both slots.
LinearScheme figure4_repetition_scheme();

}  // namespace timcoop
