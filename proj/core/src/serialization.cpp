#include "timcoop/serialization.hpp"

#include <map>

namespace timcoop {

namespace {

std::string at(const std::string& path, std::size_t i) { return path + "[" + std::to_string(i) + "]"; }
std::string field(const std::string& path, const char* key) { return path.empty() ? key : path + "." + key; }

const Json& require(const Json& j, const char* key, const std::string& path) {
  if (!j.is_object()) throw ParseError(path.empty() ? "<root>" : path, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) throw ParseError(field(path, key), "missing required field");
  return *it;
}

int as_int(const Json& j, const std::string& path) {
  if (!j.is_number_integer()) throw ParseError(path, "expected an integer, got " + std::string(j.type_name()));
  return j.get<int>();
}

const Json& as_array(const Json& j, const std::string& path) {
  if (!j.is_array()) throw ParseError(path, "expected an array, got " + std::string(j.type_name()));
  return j;
}

std::vector<int> int_list(const Json& j, const std::string& path) {
  std::vector<int> out;
  for (std::size_t i = 0; i < as_array(j, path).size(); ++i) out.push_back(as_int(j[i], at(path, i)));
  return out;
}

std::vector<std::vector<int>> int_lists(const Json& j, const std::string& path) {
  std::vector<std::vector<int>> out;
  for (std::size_t i = 0; i < as_array(j, path).size(); ++i) out.push_back(int_list(j[i], at(path, i)));
  return out;
}

template <class F>
auto rethrow_as_parse_error(const std::string& path, F&& f) {
  try {
    return f();
  } catch (const ParseError&) {
    throw;
  } catch (const std::exception& e) {
    throw ParseError(path, e.what());
  }
}

Json matrix_to_json(const Matrix& m) {
  Json rows = Json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
      const Complex v = m(r, c);
      if (v.imag() == 0.0) {
        row.push_back(v.real());
      } else {
        row.push_back(Json::array({v.real(), v.imag()}));
      }
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

Matrix matrix_from_json(const Json& j, const std::string& path) {
  as_array(j, path);
  const auto rows = static_cast<Eigen::Index>(j.size());
  Eigen::Index cols = -1;
  Matrix m;
  for (std::size_t r = 0; r < j.size(); ++r) {
    const auto rp = at(path, r);
    const Json& row = as_array(j[r], rp);
    if (cols < 0) {
      cols = static_cast<Eigen::Index>(row.size());
      m.resize(rows, cols);
    } else if (static_cast<Eigen::Index>(row.size()) != cols) {
      throw ParseError(rp, "ragged matrix: expected " + std::to_string(cols) + " entries");
    }
    for (std::size_t c = 0; c < row.size(); ++c) {
      const Json& e = row[c];
      const auto ep = at(rp, c);
      if (e.is_number()) {
        m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = Complex(e.get<double>(), 0.0);
      } else if (e.is_array() && e.size() == 2 && e[0].is_number() && e[1].is_number()) {
        m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = Complex(e[0].get<double>(), e[1].get<double>());
      } else {
        throw ParseError(ep, "expected a number or [re, im] pair");
      }
    }
  }
  if (cols < 0) m.resize(0, 0);
  return m;
}

}  // namespace

Json to_json(const Topology& t) {
  Json links = Json::array();
  Json coherence = Json::array();
  for (const Link& l : t.links()) {
    links.push_back({l.rx, l.tx});
    const Coherence c = t.coherence(l.rx, l.tx);
    if (c.is_constant()) {
      coherence.push_back({l.rx, l.tx, "constant"});
    } else if (c.period() != 1) {
      coherence.push_back({l.rx, l.tx, c.period()});
    }
  }
  return Json{{"k", t.k()}, {"links", std::move(links)}, {"coherence", std::move(coherence)}};
}

Topology topology_from_json(const Json& j) {
  const int k = as_int(require(j, "k", ""), "k");
  std::vector<Link> links;
  if (j.contains("links")) {
    const Json& arr = as_array(j["links"], "links");
    for (std::size_t i = 0; i < arr.size(); ++i) {
      const auto p = at("links", i);
      if (!arr[i].is_array() || arr[i].size() != 2) throw ParseError(p, "expected [rx, tx]");
      links.push_back({as_int(arr[i][0], at(p, 0)), as_int(arr[i][1], at(p, 1))});
    }
  }
  std::map<Link, Coherence> coherence;
  if (j.contains("coherence")) {
    const Json& arr = as_array(j["coherence"], "coherence");
    for (std::size_t i = 0; i < arr.size(); ++i) {
      const auto p = at("coherence", i);
      if (!arr[i].is_array() || arr[i].size() != 3) throw ParseError(p, "expected [rx, tx, c]");
      const Link l{as_int(arr[i][0], at(p, 0)), as_int(arr[i][1], at(p, 1))};
      const Json& c = arr[i][2];
      Coherence value;
      if (c.is_string() && c.get<std::string>() == "constant") {
        value = Coherence::constant();
      } else if (c.is_number_integer() && c.get<int>() >= 1) {
        value = Coherence::slots(c.get<int>());
      } else {
        throw ParseError(at(p, 2), "expected a positive integer or \"constant\"");
      }
      if (!coherence.emplace(l, value).second) throw ParseError(p, "duplicate coherence entry");
    }
  }
  return rethrow_as_parse_error("links", [&] { return Topology(k, std::move(links), coherence); });
}

Json to_json(const MessageAssignment& a) {
  return Json{{"k", a.k()}, {"transmit_sets", a.transmit_sets()}};
}

MessageAssignment assignment_from_json(const Json& j) {
  const int k = as_int(require(j, "k", ""), "k");
  auto sets = int_lists(require(j, "transmit_sets", ""), "transmit_sets");
  return rethrow_as_parse_error("transmit_sets", [&] { return MessageAssignment(k, std::move(sets)); });
}

Json to_json(const Rational& r) { return Json{{"num", r.numerator()}, {"den", r.denominator()}}; }

Rational rational_from_json(const Json& j, const std::string& path) {
  const Json& num = require(j, "num", path);
  const Json& den = require(j, "den", path);
  if (!num.is_number_integer()) throw ParseError(field(path, "num"), "expected an integer");
  if (!den.is_number_integer() || den.get<std::int64_t>() == 0) throw ParseError(field(path, "den"), "expected a nonzero integer");
  return Rational(num.get<std::int64_t>(), den.get<std::int64_t>());
}

Json to_json(const Schedule& s) {
  Json pairs = Json::array();
  for (const auto& p : s.pairs) pairs.push_back({p.msg, p.tx});
  return Json{{"pairs", std::move(pairs)}};
}

Schedule schedule_from_json(const Json& j, int k) {
  Schedule s{k, {}};
  for (const auto& p : int_lists(require(j, "pairs", "evidence"), "evidence.pairs")) {
    if (p.size() != 2) throw ParseError("evidence.pairs", "expected [msg, tx] pairs");
    s.pairs.push_back({p[0], p[1]});
  }
  std::sort(s.pairs.begin(), s.pairs.end());
  return s;
}

Json to_json(const DofCertificate& c) {
  Json evidence = Json::object();
  if (const auto* s = std::get_if<Schedule>(&c.evidence)) {
    evidence = to_json(*s);
  } else if (const auto* cc = std::get_if<Condition1Certificate>(&c.evidence)) {
    Json matching = Json::array();
    for (const auto& m : cc->matching) matching.push_back({m.tx, m.rx});
    evidence = Json{{"a", std::vector<int>(cc->a.members().begin(), cc->a.members().end())},
                    {"matching", std::move(matching)},
                    {"bound", to_json(cc->bound)}};
  } else if (const auto* g = std::get_if<NeighborGrouping>(&c.evidence)) {
    evidence = Json{{"groups", g->groups}};
  }
  return Json{{"kind", to_string(c.kind)}, {"value", to_json(c.value)}, {"evidence", std::move(evidence)}};
}

DofCertificate certificate_from_json(const Json& j, int k) {
  const Json& kind_j = require(j, "kind", "");
  auto kind = kind_j.is_string() ? certificate_kind_from_string(kind_j.get<std::string>()) : std::nullopt;
  if (!kind) throw ParseError("kind", "unknown certificate kind");
  DofCertificate c;
  c.kind = *kind;
  c.value = rational_from_json(require(j, "value", ""), "value");
  const Json empty = Json::object();
  const Json& ev = j.contains("evidence") ? j["evidence"] : empty;
  switch (c.kind) {
    case CertificateKind::schedule: c.evidence = schedule_from_json(ev, k); break;
    case CertificateKind::condition1: {
      Condition1Certificate cc;
      auto members = int_list(require(ev, "a", "evidence"), "evidence.a");
      cc.a = rethrow_as_parse_error("evidence.a", [&] { return ReceiverSet(k, std::move(members)); });
      for (const auto& p : int_lists(require(ev, "matching", "evidence"), "evidence.matching")) {
        if (p.size() != 2) throw ParseError("evidence.matching", "expected [tx, rx] pairs");
        cc.matching.push_back({p[0], p[1]});
      }
      cc.bound = rational_from_json(require(ev, "bound", "evidence"), "evidence.bound");
      c.evidence = std::move(cc);
      break;
    }
    case CertificateKind::identical_neighbors:
      c.evidence = NeighborGrouping{int_lists(require(ev, "groups", "evidence"), "evidence.groups")};
      break;
    case CertificateKind::trivial: break;
  }
  return c;
}

Json to_json(const Condition1Failure& f) {
  return Json{{"reason", f.reason == Condition1Failure::Reason::overlap ? "overlap" : "matching-deficiency"},
              {"witness", f.witness},
              {"detail", f.detail}};
}

Json to_json(const LinearScheme& s) {
  Json precoders = Json::array();
  for (const auto& [key, mat] : s.precoders()) {
    precoders.push_back(Json{{"tx", key.tx}, {"msg", key.msg}, {"matrix", matrix_to_json(mat)}});
  }
  return Json{{"n", s.n()},
              {"m", s.symbols()},
              {"transmit_sets", s.assignment().transmit_sets()},
              {"precoders", std::move(precoders)}};
}

LinearScheme scheme_from_json(const Json& j) {
  const int n = as_int(require(j, "n", ""), "n");
  auto m = int_list(require(j, "m", ""), "m");
  auto sets = int_lists(require(j, "transmit_sets", ""), "transmit_sets");
  if (m.size() != sets.size()) {
    throw ParseError("m", "has " + std::to_string(m.size()) + " entries but transmit_sets has " + std::to_string(sets.size()));
  }
  const int k = static_cast<int>(m.size());
  std::map<PrecoderKey, Matrix> precoders;
  if (j.contains("precoders")) {
    const Json& arr = as_array(j["precoders"], "precoders");
    for (std::size_t i = 0; i < arr.size(); ++i) {
      const auto p = at("precoders", i);
      const PrecoderKey key{as_int(require(arr[i], "tx", p), field(p, "tx")), as_int(require(arr[i], "msg", p), field(p, "msg"))};
      Matrix mat = matrix_from_json(require(arr[i], "matrix", p), field(p, "matrix"));
      if (!precoders.emplace(key, std::move(mat)).second) throw ParseError(p, "duplicate precoder");
    }
  }
  auto a = rethrow_as_parse_error("transmit_sets", [&] { return MessageAssignment(k, std::move(sets)); });
  return rethrow_as_parse_error("precoders", [&] {
    return LinearScheme(n, std::move(m), std::move(a), std::move(precoders));
  });
}

std::string to_string(ReceiverStatus s) {
  switch (s) {
    case ReceiverStatus::inactive: return "inactive";
    case ReceiverStatus::decodable: return "decodable";
    case ReceiverStatus::undecodable: return "undecodable";
  }
  return "unknown";
}

Json to_json(const ZfResult& r) {
  Json status = Json::array();
  for (auto s : r.status) status.push_back(to_string(s));
  return Json{{"receivers", std::move(status)}, {"dof", to_json(r.dof)}};
}

Json to_json(const MonteCarloVerdict& v) {
  return Json{{"trials", v.trials},
              {"seed", v.seed},
              {"outcome", to_json(v.outcome)},
              {"generic", v.generic},
              {"dissenting_seeds", v.dissenting_seeds},
              {"min_dof", to_json(v.min_dof)},
              {"max_dof", to_json(v.max_dof)},
              {"all_decodable_trials", v.all_decodable_trials}};
}

Json to_json(const Lemma2Report& r) {
  return Json{{"message", r.message},
              {"trials", r.trials},
              {"passed", r.passed},
              {"failed", r.failed},
              {"hypothesis_not_met", r.hypothesis_not_met},
              {"monotonicity_failures", r.monotonicity_failures},
              {"counterexample_seeds", r.counterexample_seeds}};
}

}  // namespace timcoop
