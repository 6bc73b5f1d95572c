#include "nncirc/families.hpp"

#include <doctest.h>

#include <random>

using namespace nncirc;

namespace {

// Figure-style 5-input list: x1+x2>=1 -> 1; 2x1+x3+x4>=2 -> 0; x2-x5>=0 -> 1; else 0.
DecisionList depth3_list() {
  DecisionList l;
  l.kind = ListKind::LDL;
  l.gates.push_back({{1, 1, 0, 0, 0}, Rat(1), GateKind::Linear});
  l.gates.push_back({{2, 0, 1, 1, 0}, Rat(2), GateKind::Linear});
  l.gates.push_back({{0, 1, 0, 0, -1}, Rat(0), GateKind::Linear});
  l.outputs = {1, 0, 1};
  l.default_output = 0;
  return l;
}

}  // namespace

TEST_CASE("threshold gate evaluation") {
  ThresholdGate and2{{1, 1}, Rat(2), GateKind::Linear};
  CHECK(and2.eval({1, 1}) == 1);
  CHECK(and2.eval({1, 0}) == 0);

  ThresholdGate eq1{{1, -1}, Rat(0), GateKind::Exact};
  CHECK(eq1.eval({1, 0}) == 0);
  CHECK(eq1.eval({1, 1}) == 1);
  CHECK(eq1.eval({0, 0}) == 1);

  CHECK_THROWS_AS(and2.eval({1}), DimensionMismatch);
}

TEST_CASE("depth-2 evaluation against direct formulas") {
  Depth2Circuit parity_eq = family_parity_eq(2, 1);
  CHECK(parity_eq.eval({0, 0, 0, 0}) == 0);  // both EQs fire, parity of 2

  Depth2Circuit f_and = family_and_eq(2, 1);
  CHECK(f_and.eval({0, 0, 1, 0}) == 0);

  Depth2Circuit f_or = family_or_eq(2, 1);
  CHECK(f_or.eval({1, 0, 0, 1}) == 0);  // no gate fires

  // full enumeration vs boolean formulas
  for (uint64_t idx = 0; idx < 16; ++idx) {
    Bits x = index_to_bits(idx, 4);
    int e1 = (x[0] == x[1]), e2 = (x[2] == x[3]);
    CHECK(parity_eq.eval(x) == (e1 ^ e2));
    CHECK(f_and.eval(x) == (e1 & e2));
    CHECK(f_or.eval(x) == (e1 | e2));
  }
}

TEST_CASE("interval boundaries of symmetric profiles") {
  SymmetricProfile p{{0, 1, 1, 0, 1, 1}};
  CHECK(p.intervals() == std::vector<int>{0, 2, 3, 5});

  SymmetricProfile q{{1, 0, 1, 1, 1, 1, 1, 0, 1}};
  CHECK(q.intervals() == std::vector<int>{0, 1, 6, 7, 8});

  SymmetricProfile c{{1, 1, 1}};
  CHECK(c.intervals() == std::vector<int>{2});

  // boundaries reconstruct the profile
  for (const auto& prof : {p, q, c}) {
    SymmetricProfile back = profile_from_intervals(prof.intervals(), prof.values[0]);
    CHECK(back.values == prof.values);
  }
}

TEST_CASE("decision list evaluation") {
  DecisionList l = depth3_list();
  CHECK(l.eval({1, 0, 0, 0, 0}) == 1);  // first gate fires
  CHECK(l.eval({0, 0, 0, 0, 1}) == 0);  // nothing fires
  CHECK(l.eval({0, 0, 1, 1, 0}) == 0);  // second gate fires

  DecisionList single;
  single.gates.push_back({{1}, Rat(1), GateKind::Linear});
  single.outputs = {1};
  single.default_output = 0;
  CHECK(single.eval({1}) == 1);
  CHECK(single.eval({0}) == 0);
}

TEST_CASE("DOM compilation matches the list on every input") {
  DecisionList l = depth3_list();
  DomCircuit dom = dl_to_dom_circuit(l);
  CHECK(dom.top_weights == IntVec{4, -2, 1});
  CHECK(dom.threshold == 1);
  for (uint64_t idx = 0; idx < 32; ++idx) {
    Bits x = index_to_bits(idx, 5);
    CHECK(dom.eval(x) == l.eval(x));
  }

  DecisionList single;
  single.gates.push_back({{1, 1}, Rat(1), GateKind::Linear});
  single.outputs = {1};
  single.default_output = 0;
  DomCircuit d1 = dl_to_dom_circuit(single);
  for (uint64_t idx = 0; idx < 4; ++idx) {
    Bits x = index_to_bits(idx, 2);
    CHECK(d1.eval(x) == single.gates[0].eval(x));
  }
}

TEST_CASE("DOM compilation on random lists") {
  std::mt19937 rng(4242);
  std::uniform_int_distribution<int> depth(1, 5), arity(1, 8), entry(-3, 3), bit(0, 1);
  for (int trial = 0; trial < 60; ++trial) {
    int m = depth(rng), n = arity(rng);
    DecisionList l;
    l.kind = ListKind::LDL;
    for (int i = 0; i < m; ++i) {
      ThresholdGate g;
      g.kind = GateKind::Linear;
      for (int j = 0; j < n; ++j) g.weights.push_back(entry(rng));
      g.bias = Rat(entry(rng));
      l.gates.push_back(std::move(g));
      l.outputs.push_back(bit(rng));
    }
    l.default_output = bit(rng);
    DomCircuit dom = dl_to_dom_circuit(l);
    for (uint64_t idx = 0; idx < (uint64_t(1) << n); ++idx) {
      Bits x = index_to_bits(idx, n);
      REQUIRE(dom.eval(x) == l.eval(x));
    }
  }
}

TEST_CASE("family builders") {
  ThresholdGate eq1 = build_eq(1);
  CHECK(eq1.weights == IntVec{1, -1});
  CHECK(eq1.bias == 0);
  CHECK(eq1.kind == GateKind::Exact);

  ThresholdGate eq2 = build_eq(2);
  CHECK(eq2.weights == IntVec{2, 1, -2, -1});

  // IP2_4 truth table: x1y1 xor x2y2 with block layout (x1,y1,x2,y2)
  Depth2Circuit ip2 = family_ip2(2);
  for (uint64_t idx = 0; idx < 16; ++idx) {
    Bits x = index_to_bits(idx, 4);
    CHECK(ip2.eval(x) == ((x[0] & x[1]) ^ (x[2] & x[3])));
  }

  DecisionList omb = build_omb_list(2);
  CHECK(omb.eval({0, 1}) == 0);  // leading one at even position
  CHECK(omb.eval({1, 1}) == 1);
  CHECK(omb.eval({0, 0}) == 0);
  CHECK(omb.eval({1, 0}) == 1);
}

TEST_CASE("omb over EQ blocks matches the direct definition") {
  DecisionList l = family_omb_eq(2, 1);
  for (uint64_t idx = 0; idx < 16; ++idx) {
    Bits x = index_to_bits(idx, 4);
    int z1 = (x[0] == x[1]), z2 = (x[2] == x[3]);
    int expect = z1 ? 1 : (z2 ? 0 : 0);
    CHECK(l.eval(x) == expect);
  }
}

TEST_CASE("composed families satisfy regularity by construction") {
  // checked properly in the constructions tests; here just the weights
  Depth2Circuit c = family_parity_eq(3, 2);
  CHECK(c.m() == 3);
  CHECK(c.n() == 12);
  for (size_t i = 0; i < 3; ++i)
    for (size_t j = i + 1; j < 3; ++j) {
      Int dotv = 0;
      for (size_t k = 0; k < 12; ++k) dotv += c.gates[i].weights[k] * c.gates[j].weights[k];
      CHECK(dotv == 0);
    }
}
