#include "nncirc/families.hpp"

namespace nncirc {

namespace {

// Binary solution of w^T x = b within one gate's block, by enumeration.
Bits block_xstar(const ThresholdGate& g) {
  size_t k = g.arity();
  for (uint64_t idx = 0; idx < (uint64_t(1) << k); ++idx) {
    Bits x = index_to_bits(idx, k);
    if (Rat(g.weighted_sum(x)) == g.bias) return x;
  }
  throw std::runtime_error("gate template has no binary point on its hyperplane");
}

DecisionList compose_disjoint_list(const ThresholdGate& gate, size_t m,
                                   std::vector<int> outputs, int def, ListKind kind) {
  size_t k = gate.arity();
  DecisionList l;
  l.kind = kind;
  l.outputs = std::move(outputs);
  l.default_output = def;
  Bits star = block_xstar(gate);
  Bits xstar;
  for (size_t i = 0; i < m; ++i) {
    ThresholdGate g;
    g.kind = gate.kind;
    g.bias = gate.bias;
    g.weights.assign(m * k, 0);
    for (size_t j = 0; j < k; ++j) g.weights[i * k + j] = gate.weights[j];
    l.gates.push_back(std::move(g));
    xstar.insert(xstar.end(), star.begin(), star.end());
  }
  l.xstar_hint = xstar;
  return l;
}

}  // namespace

ThresholdGate build_eq(size_t n) {
  ThresholdGate g;
  g.kind = GateKind::Exact;
  for (size_t i = 0; i < n; ++i) g.weights.push_back(Int(1) << (n - 1 - i));
  for (size_t i = 0; i < n; ++i) g.weights.push_back(-(Int(1) << (n - 1 - i)));
  g.bias = 0;
  return g;
}

ThresholdGate build_comp(size_t n) {
  ThresholdGate g = build_eq(n);
  g.kind = GateKind::Linear;
  return g;
}

ThresholdGate build_and2() {
  return ThresholdGate{{1, 1}, Rat(2), GateKind::Linear};
}

SymmetricProfile build_parity(size_t m) {
  SymmetricProfile p;
  for (size_t i = 0; i <= m; ++i) p.values.push_back(static_cast<int>(i % 2));
  return p;
}

SymmetricProfile build_or(size_t m) {
  SymmetricProfile p;
  p.values.assign(m + 1, 1);
  p.values[0] = 0;
  return p;
}

SymmetricProfile build_and(size_t m) {
  SymmetricProfile p;
  p.values.assign(m + 1, 0);
  p.values[m] = 1;
  return p;
}

Depth2Circuit compose_disjoint(const SymmetricProfile& top, const ThresholdGate& gate, size_t m) {
  if (top.values.size() != m + 1)
    throw std::invalid_argument("top profile length must be m+1");
  size_t k = gate.arity();
  Depth2Circuit c;
  c.top = top;
  Bits star = block_xstar(gate);
  Bits xstar;
  for (size_t i = 0; i < m; ++i) {
    ThresholdGate g;
    g.kind = gate.kind;
    g.bias = gate.bias;
    g.weights.assign(m * k, 0);
    for (size_t j = 0; j < k; ++j) g.weights[i * k + j] = gate.weights[j];
    c.gates.push_back(std::move(g));
    xstar.insert(xstar.end(), star.begin(), star.end());
  }
  c.xstar_hint = xstar;
  return c;
}

DecisionList build_omb_list(size_t m) {
  ThresholdGate unit{{1}, Rat(1), GateKind::Exact};
  std::vector<int> outs;
  for (size_t i = 0; i < m; ++i) outs.push_back(i % 2 == 0 ? 1 : 0);
  return compose_disjoint_list(unit, m, std::move(outs), 0, ListKind::EDL);
}

Depth2Circuit family_and_eq(size_t m, size_t n) {
  return compose_disjoint(build_and(m), build_eq(n), m);
}
Depth2Circuit family_or_eq(size_t m, size_t n) {
  return compose_disjoint(build_or(m), build_eq(n), m);
}
Depth2Circuit family_parity_eq(size_t m, size_t n) {
  return compose_disjoint(build_parity(m), build_eq(n), m);
}
Depth2Circuit family_parity_comp(size_t m, size_t n) {
  return compose_disjoint(build_parity(m), build_comp(n), m);
}
Depth2Circuit family_ip2(size_t n) {
  return compose_disjoint(build_parity(n), build_and2(), n);
}

DecisionList family_omb_eq(size_t m, size_t n) {
  std::vector<int> outs;
  for (size_t i = 0; i < m; ++i) outs.push_back(i % 2 == 0 ? 1 : 0);
  return compose_disjoint_list(build_eq(n), m, std::move(outs), 0, ListKind::EDL);
}

DecisionList ldl_from_symmetric(const SymmetricProfile& f) {
  auto right = f.intervals();
  size_t n = f.fan_in();
  DecisionList l;
  l.kind = ListKind::LDL;
  for (size_t j = 0; j + 1 < right.size(); ++j) {
    // 1{|X| <= I_j} as 1{-sum x_i >= -I_j}
    ThresholdGate g;
    g.kind = GateKind::Linear;
    g.weights.assign(n, Int(-1));
    g.bias = Rat(-right[j]);
    l.gates.push_back(std::move(g));
    l.outputs.push_back(f.values[right[j]]);
  }
  l.default_output = f.values[n];
  return l;
}

}  // namespace nncirc
