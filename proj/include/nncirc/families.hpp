#pragma once

#include "nncirc/circuit.hpp"

namespace nncirc {

// EQ_2n(X,Y) = 1{X = Y} for n-bit integers: exact gate with weights
// (2^{n-1},...,1, -2^{n-1},...,-1) and bias 0.
ThresholdGate build_eq(size_t n);

// COMP_2n(X,Y) = 1{X >= Y}: the linear analogue of build_eq.
ThresholdGate build_comp(size_t n);

// AND_2 as a threshold gate: 1{x1 + x2 >= 2}.
ThresholdGate build_and2();

SymmetricProfile build_parity(size_t m);
SymmetricProfile build_or(size_t m);
SymmetricProfile build_and(size_t m);

// m copies of a gate template on disjoint variable blocks; gate i owns
// block [i*k, (i+1)*k). Attaches a binary X* found per block.
Depth2Circuit compose_disjoint(const SymmetricProfile& top, const ThresholdGate& gate, size_t m);

// ODD-MAX-BIT over m direct inputs as a decision list: gate i tests
// x_i = 1, labels alternate 1,0,1,..., default 0.
DecisionList build_omb_list(size_t m);

// Named families used by the CLI and the result table.
Depth2Circuit family_and_eq(size_t m, size_t n);
Depth2Circuit family_or_eq(size_t m, size_t n);
Depth2Circuit family_parity_eq(size_t m, size_t n);
Depth2Circuit family_parity_comp(size_t m, size_t n);
Depth2Circuit family_ip2(size_t n);
DecisionList family_omb_eq(size_t m, size_t n);

// A symmetric function as an LDL of |X| <= I_j tests, one gate per
// interval boundary except the last (depth I(f) - 1).
DecisionList ldl_from_symmetric(const SymmetricProfile& f);

}  // namespace nncirc
