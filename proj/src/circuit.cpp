#include "nncirc/circuit.hpp"

namespace nncirc {

Int ThresholdGate::weighted_sum(const Bits& x) const {
  if (x.size() != weights.size()) throw DimensionMismatch();
  Int s = 0;
  for (size_t i = 0; i < weights.size(); ++i)
    if (x[i]) s += weights[i];
  return s;
}

int ThresholdGate::eval(const Bits& x) const {
  Rat s(weighted_sum(x));
  return kind == GateKind::Linear ? (s >= bias ? 1 : 0) : (s == bias ? 1 : 0);
}

std::vector<int> SymmetricProfile::intervals() const {
  std::vector<int> right;
  for (size_t i = 0; i + 1 < values.size(); ++i)
    if (values[i] != values[i + 1]) right.push_back(static_cast<int>(i));
  right.push_back(static_cast<int>(values.size()) - 1);
  return right;
}

int SymmetricProfile::interval_of(size_t ones) const {
  auto right = intervals();
  for (size_t l = 0; l < right.size(); ++l)
    if (static_cast<int>(ones) <= right[l]) return static_cast<int>(l) + 1;
  throw std::out_of_range("popcount beyond profile length");
}

SymmetricProfile profile_from_intervals(const std::vector<int>& boundaries, int first_value) {
  SymmetricProfile p;
  int v = first_value;
  int prev = -1;
  for (int b : boundaries) {
    for (int i = prev + 1; i <= b; ++i) p.values.push_back(v);
    v = 1 - v;
    prev = b;
  }
  return p;
}

size_t Depth2Circuit::popcount_z(const Bits& x) const {
  size_t ones = 0;
  for (const auto& g : gates) ones += g.eval(x);
  return ones;
}

int Depth2Circuit::eval(const Bits& x) const {
  if (top.values.size() != gates.size() + 1)
    throw std::invalid_argument("top profile length must be m+1");
  return top.eval_popcount(popcount_z(x));
}

int DecisionList::eval(const Bits& x) const {
  if (outputs.size() != gates.size())
    throw std::invalid_argument("outputs length must equal list depth");
  for (size_t i = 0; i < gates.size(); ++i)
    if (gates[i].eval(x)) return outputs[i];
  return default_output;
}

int DomCircuit::eval(const Bits& x) const {
  Int s = 0;
  for (size_t i = 0; i < gates.size(); ++i)
    if (gates[i].eval(x)) s += top_weights[i];
  return s >= threshold ? 1 : 0;
}

DomCircuit dl_to_dom_circuit(const DecisionList& l) {
  DomCircuit c;
  c.gates = l.gates;
  size_t m = l.depth();
  for (size_t i = 0; i < m; ++i) {
    Int w = Int(1) << (m - 1 - i);
    c.top_weights.push_back(l.outputs[i] == 1 ? w : -w);
  }
  c.threshold = 1 - l.default_output;
  return c;
}

Bits index_to_bits(uint64_t idx, size_t n) {
  Bits x(n);
  for (size_t i = 0; i < n; ++i) x[i] = (idx >> i) & 1u;
  return x;
}

}  // namespace nncirc
