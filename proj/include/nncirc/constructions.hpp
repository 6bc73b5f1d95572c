#pragma once

#include "nncirc/anchors.hpp"
#include "nncirc/circuit.hpp"

namespace nncirc {

struct RegularityViolated : std::runtime_error {
  explicit RegularityViolated(const std::string& what) : std::runtime_error(what) {}
};
struct XStarNotFound : std::runtime_error {
  XStarNotFound() : std::runtime_error("no binary X* with WX* = b") {}
};
struct DepthExceedsArity : std::runtime_error {
  DepthExceedsArity() : std::runtime_error("list depth m exceeds input arity n") {}
};

struct RegularityReport {
  bool equal_norms = false;
  bool mutually_orthogonal = false;
  std::optional<Bits> xstar;
  Rat shared_norm = 0;  // ||w||^2 when equal_norms holds
};

// Checks the three regularity conditions for a first-layer weight matrix.
// X* comes from the hint when provided, else exhaustive search (n <= 24).
RegularityReport check_regularity(const std::vector<ThresholdGate>& gates,
                                  const std::optional<Bits>& xstar_hint = std::nullopt,
                                  bool need_xstar = true);
RegularityReport check_regularity(const Depth2Circuit& c, bool need_xstar = true);

// Two-anchor representation of a constant function over {0,1}^n.
AnchorSet constant_representation(size_t n, int value);

// Reflection construction for 1{AX <= b}: one interior positive anchor,
// one reflected negative anchor per half-space.
AnchorSet construct_polytope(const std::vector<IntVec>& a_rows, const IntVec& b, size_t n);

// 1{AX = b} via paired half-spaces with biases perturbed by 1/2: 2m+1 anchors.
AnchorSet construct_equality_system(const std::vector<IntVec>& a_rows, const IntVec& b, size_t n);

// Symmetric top over exact gates: anchors X* + d u for all sign patterns
// over (m-t)-subsets of the weight rows, t ranging over the left interval
// boundaries of the top profile.
AnchorSet construct_sym_elt(const Depth2Circuit& c);

// Symmetric top over linear gates: all-minus sign patterns only, t ranging
// over both sides of every interior interval boundary.
AnchorSet construct_sym_lt(const Depth2Circuit& c);

// Linear decision list under regularity conditions: m+1 anchors with
// geometrically shrinking coefficients (domination principle).
AnchorSet construct_ldl_regular(const DecisionList& l);

// Linear decision list, general case (m <= n): X* from the Moore-Penrose
// inverse, rank-deficient W repaired by an epsilon sub-identity bump.
AnchorSet construct_ldl_general(const DecisionList& l);

// Exact decision list under regularity conditions: (m+1)2^m anchors.
AnchorSet construct_edl(const DecisionList& l);

// Left interval boundaries {I_0+1, ..., I_{I(g)-1}+1} of a profile.
std::vector<int> elt_types(const SymmetricProfile& p);
// Both-sided interior boundary types {I_j, I_j+1 : 1 <= j < I(g)}, deduplicated.
std::vector<int> lt_types(const SymmetricProfile& p);

// Lexicographic k-subsets of {0,...,m-1}.
std::vector<std::vector<int>> subsets_lex(int m, int k);

}  // namespace nncirc
