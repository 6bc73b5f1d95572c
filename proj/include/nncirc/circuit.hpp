#pragma once

#include "nncirc/rational.hpp"

#include <optional>
#include <vector>

namespace nncirc {

using Bits = std::vector<int>;  // binary vector, entries 0/1

struct DimensionMismatch : std::invalid_argument {
  DimensionMismatch() : std::invalid_argument("input length does not match gate arity") {}
};

enum class GateKind { Linear, Exact };

// One first-layer neuron: 1{w^T X >= b} (linear) or 1{w^T X = b} (exact).
// Weights are integers; the bias may be a half-integer after perturbation.
struct ThresholdGate {
  IntVec weights;
  Rat bias = 0;
  GateKind kind = GateKind::Linear;

  size_t arity() const { return weights.size(); }
  Int weighted_sum(const Bits& x) const;
  int eval(const Bits& x) const;
  Rat norm_sq() const {
    Rat s = 0;
    for (const Int& w : weights) s += Rat(w * w);
    return s;
  }
};

// Value vector of a symmetric function g over |Z| = 0..m.
struct SymmetricProfile {
  std::vector<int> values;

  size_t fan_in() const { return values.size() - 1; }
  int eval_popcount(size_t ones) const { return values.at(ones); }

  // Right endpoints I_1 < ... < I_{I(g)} of the maximal constant runs.
  std::vector<int> intervals() const;
  // Index l (1-based) of the interval containing |Z| = ones.
  int interval_of(size_t ones) const;
};

SymmetricProfile profile_from_intervals(const std::vector<int>& boundaries, int first_value);

struct Depth2Circuit {
  std::vector<ThresholdGate> gates;  // m gates over a shared n-variable input
  SymmetricProfile top;              // length m+1
  std::optional<Bits> xstar_hint;    // binary X* with WX* = b, when known analytically

  size_t n() const { return gates.empty() ? 0 : gates[0].arity(); }
  size_t m() const { return gates.size(); }
  size_t popcount_z(const Bits& x) const;
  int eval(const Bits& x) const;
};

enum class ListKind { LDL, EDL };

// Ordered cascade: the first firing gate k outputs z_k, none firing
// outputs the default z_{m+1}.
struct DecisionList {
  std::vector<ThresholdGate> gates;
  std::vector<int> outputs;  // z_1..z_m
  int default_output = 0;    // z_{m+1}
  ListKind kind = ListKind::LDL;
  std::optional<Bits> xstar_hint;

  size_t n() const { return gates.empty() ? 0 : gates[0].arity(); }
  size_t depth() const { return gates.size(); }
  int eval(const Bits& x) const;
};

// Depth-2 compilation of a decision list with a DOM top gate:
// 1{ sum_i (-1)^{z_i - 1} 2^{m-i} f_i(X) >= 1 - z_{m+1} }.
struct DomCircuit {
  std::vector<ThresholdGate> gates;
  IntVec top_weights;  // +-2^{m-i}
  Int threshold = 0;

  int eval(const Bits& x) const;
};

DomCircuit dl_to_dom_circuit(const DecisionList& l);

// Enumeration helper: the i-th binary vector of n bits, bit 0 first.
Bits index_to_bits(uint64_t idx, size_t n);

}  // namespace nncirc
