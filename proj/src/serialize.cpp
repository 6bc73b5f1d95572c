#include "nncirc/serialize.hpp"

#include <sstream>

namespace nncirc {

namespace {

Json gate_to_json(const ThresholdGate& g) {
  Json jg;
  Json weights = Json::array();
  for (const Int& w : g.weights) weights.push_back(w.convert_to<long long>());
  jg["weights"] = std::move(weights);
  jg["bias"] = rat_to_string(g.bias);
  jg["kind"] = g.kind == GateKind::Linear ? "linear" : "exact";
  return jg;
}

ThresholdGate gate_from_json(const Json& jg) {
  ThresholdGate g;
  for (const auto& w : jg.at("weights")) g.weights.push_back(Int(w.get<long long>()));
  g.bias = rat_from_string(jg.at("bias").get<std::string>());
  std::string kind = jg.at("kind").get<std::string>();
  if (kind == "linear")
    g.kind = GateKind::Linear;
  else if (kind == "exact")
    g.kind = GateKind::Exact;
  else
    throw std::invalid_argument("unknown gate kind: " + kind);
  return g;
}

Json gates_to_json(const std::vector<ThresholdGate>& gates) {
  Json out = Json::array();
  for (const auto& g : gates) out.push_back(gate_to_json(g));
  return out;
}

}  // namespace

Json circuit_to_json(const Depth2Circuit& c) {
  Json j;
  j["n"] = c.n();
  j["gates"] = gates_to_json(c.gates);
  j["top"] = Json{{"profile", c.top.values}};
  return j;
}

Json circuit_to_json(const DecisionList& l) {
  Json j;
  j["n"] = l.n();
  j["gates"] = gates_to_json(l.gates);
  j["top"] = Json{{"list", Json{{"outputs", l.outputs}, {"default", l.default_output}}}};
  return j;
}

CircuitDoc circuit_from_json(const Json& j) {
  std::vector<ThresholdGate> gates;
  for (const auto& jg : j.at("gates")) gates.push_back(gate_from_json(jg));
  size_t n = j.at("n").get<size_t>();
  for (const auto& g : gates)
    if (g.arity() != n) throw std::invalid_argument("gate arity disagrees with n");
  const Json& top = j.at("top");
  if (top.contains("profile")) {
    Depth2Circuit c;
    c.gates = std::move(gates);
    c.top.values = top.at("profile").get<std::vector<int>>();
    if (c.top.values.size() != c.gates.size() + 1)
      throw std::invalid_argument("profile length must be m+1");
    return c;
  }
  if (top.contains("list")) {
    DecisionList l;
    l.gates = std::move(gates);
    l.outputs = top.at("list").at("outputs").get<std::vector<int>>();
    l.default_output = top.at("list").at("default").get<int>();
    if (l.outputs.size() != l.gates.size())
      throw std::invalid_argument("outputs length must equal list depth");
    bool all_exact = true;
    for (const auto& g : l.gates) all_exact = all_exact && g.kind == GateKind::Exact;
    l.kind = all_exact ? ListKind::EDL : ListKind::LDL;
    return l;
  }
  throw std::invalid_argument("top must hold a profile or a list");
}

Json anchors_to_json(const AnchorSet& a) {
  Json j;
  j["n"] = a.n();
  Json rows = Json::array();
  for (size_t i = 0; i < a.size(); ++i) {
    Json row = Json::array();
    for (size_t k = 0; k < a.n(); ++k) row.push_back(rat_to_string(a.anchors(i, k)));
    rows.push_back(std::move(row));
  }
  j["anchors"] = std::move(rows);
  j["labels"] = a.labels;
  if (a.types)
    j["types"] = *a.types;
  else
    j["types"] = nullptr;
  Json cs = Json::array();
  for (const Rat& c : a.c) cs.push_back(rat_to_string(c));
  j["meta"] = Json{{"construction", a.construction}, {"d", rat_to_string(a.d)}, {"c", std::move(cs)}};
  return j;
}

AnchorSet anchors_from_json(const Json& j) {
  AnchorSet a;
  size_t n = j.at("n").get<size_t>();
  const Json& rows = j.at("anchors");
  a.anchors = RatMatrix(rows.size(), n);
  for (size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != n) throw std::invalid_argument("anchor row length disagrees with n");
    for (size_t k = 0; k < n; ++k)
      a.anchors(i, k) = rat_from_string(rows[i][k].get<std::string>());
  }
  a.labels = j.at("labels").get<std::vector<int>>();
  if (a.labels.size() != rows.size())
    throw std::invalid_argument("labels length disagrees with anchor count");
  if (j.contains("types") && !j.at("types").is_null())
    a.types = j.at("types").get<std::vector<int>>();
  if (j.contains("meta")) {
    const Json& meta = j.at("meta");
    a.construction = meta.value("construction", "");
    if (meta.contains("d")) a.d = rat_from_string(meta.at("d").get<std::string>());
    if (meta.contains("c"))
      for (const auto& c : meta.at("c")) a.c.push_back(rat_from_string(c.get<std::string>()));
  }
  return a;
}

std::string anchors_to_csv(const AnchorSet& a) {
  std::ostringstream os;
  for (size_t i = 0; i < a.size(); ++i) {
    for (size_t k = 0; k < a.n(); ++k) os << rat_to_string(a.anchors(i, k)) << ",";
    os << a.labels[i] << "\n";
  }
  return os.str();
}

Json report_to_json(const VerificationReport& r) {
  Json j;
  j["pass"] = r.pass;
  j["total"] = r.total;
  Json fails = Json::array();
  for (const auto& f : r.failures) {
    std::string bits;
    for (int b : f.x) bits += static_cast<char>('0' + b);
    fails.push_back(Json{{"x", bits}, {"expected", f.expected}, {"got", f.got}, {"anchor", f.anchor}});
  }
  j["failures"] = std::move(fails);
  j["min_margin"] = rat_to_string(r.min_margin);
  j["ties"] = r.tie_violations;
  if (r.type_trace_ok)
    j["type_trace_ok"] = *r.type_trace_ok;
  else
    j["type_trace_ok"] = nullptr;
  return j;
}

Oracle make_oracle(const CircuitDoc& doc) {
  return std::visit([](const auto& artifact) { return make_oracle(artifact); }, doc);
}

}  // namespace nncirc
