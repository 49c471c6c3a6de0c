#pragma once

#include <stdexcept>
#include <string>

#include <nlohmann/json.hpp>

#include "timcoop/assignment.hpp"
#include "timcoop/bounds.hpp"
#include "timcoop/certificate.hpp"
#include "timcoop/rational.hpp"
#include "timcoop/scheme.hpp"
#include "timcoop/topology.hpp"
#include "timcoop/verifier.hpp"

namespace timcoop {

using Json = nlohmann::json;

/// Malformed document. `field()` is a JSON-pointer-like path to the offender.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::string field, const std::string& what)
      : std::runtime_error(field + ": " + what), field_(std::move(field)) {}
  const std::string& field() const { return field_; }

 private:
  std::string field_;
};

// {"k": K, "links": [[rx, tx], ...], "coherence": [[rx, tx, c], ...]}
// Links sorted; only non-default (!= 1) coherence entries are written.
Json to_json(const Topology& t);
Topology topology_from_json(const Json& j);

// {"k": K, "transmit_sets": [[...], ...]}
Json to_json(const MessageAssignment& a);
MessageAssignment assignment_from_json(const Json& j);

// {"num": p, "den": q}
Json to_json(const Rational& r);
Rational rational_from_json(const Json& j, const std::string& path = "value");

// {"pairs": [[msg, tx], ...]}
Json to_json(const Schedule& s);
Schedule schedule_from_json(const Json& j, int k);

// {"kind": ..., "value": {...}, "evidence": {...}}
Json to_json(const DofCertificate& c);
DofCertificate certificate_from_json(const Json& j, int k);

Json to_json(const Condition1Failure& f);

// {"n": n, "m": [...], "transmit_sets": [[...]], "precoders": [{"tx", "msg", "matrix"}]}
// Matrix entries are reals or [re, im] pairs, row-major.
Json to_json(const LinearScheme& s);
LinearScheme scheme_from_json(const Json& j);

Json to_json(const ZfResult& r);
Json to_json(const MonteCarloVerdict& v);
Json to_json(const Lemma2Report& r);

std::string to_string(ReceiverStatus s);

}  // namespace timcoop
