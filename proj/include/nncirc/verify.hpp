#pragma once

#include "nncirc/anchors.hpp"
#include "nncirc/circuit.hpp"

#include <functional>

namespace nncirc {

struct EmptyAnchorSet : std::runtime_error {
  EmptyAnchorSet() : std::runtime_error("anchor set is empty") {}
};
struct InputSpaceTooLarge : std::runtime_error {
  InputSpaceTooLarge() : std::runtime_error("input cube exceeds the verification cap") {}
};

using Oracle = std::function<int(const Bits&)>;
// Given the input and the nearest anchor's recorded type, report whether
// the type matches the construction's claim.
using TypeChecker = std::function<bool(const Bits&, int type)>;

struct NearestResult {
  size_t index;  // lowest index achieving the minimum squared distance
  Rat dist_sq;
  bool strict;  // no opposite-label anchor ties the minimum
};

struct Failure {
  Bits x;
  int expected;
  int got;
  size_t anchor;
};

struct VerificationReport {
  bool pass = false;
  uint64_t total = 0;
  std::vector<Failure> failures;
  Rat min_margin = 0;  // min over inputs of d^2(nearest opposite) - d^2(nearest correct)
  uint64_t tie_violations = 0;
  std::optional<bool> type_trace_ok;
};

Rat squared_distance(const AnchorSet& a, size_t row, const Bits& x);
NearestResult nearest_anchor(const AnchorSet& a, const Bits& x);

VerificationReport verify_exhaustive(const AnchorSet& a, const Oracle& oracle, int max_bits = 24,
                                     const TypeChecker& type_checker = nullptr);

std::pair<size_t, int> size_and_resolution(const AnchorSet& a);

// Reference oracles.
Oracle make_oracle(const Depth2Circuit& c);
Oracle make_oracle(const DecisionList& l);
Oracle make_oracle(const DomCircuit& c);

// Type-trace claims for the symmetric constructions: the nearest anchor's
// type is the left boundary of the interval of |Z(X)| (exact gates), or
// one of the two boundaries (linear gates).
TypeChecker make_elt_type_checker(const Depth2Circuit& c);
TypeChecker make_lt_type_checker(const Depth2Circuit& c);

}  // namespace nncirc
