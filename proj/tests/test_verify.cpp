#include "nncirc/constructions.hpp"
#include "nncirc/families.hpp"
#include "nncirc/verify.hpp"

#include <doctest.h>

#include <random>

using namespace nncirc;

namespace {

AnchorSet two_anchor(const RatVec& neg, const RatVec& pos) {
  AnchorSet set;
  set.anchors = RatMatrix(2, neg.size());
  for (size_t j = 0; j < neg.size(); ++j) {
    set.anchors(0, j) = neg[j];
    set.anchors(1, j) = pos[j];
  }
  set.labels = {0, 1};
  return set;
}

}  // namespace

TEST_CASE("nearest anchor on the AND pair") {
  AnchorSet set = two_anchor({Rat(1, 2), Rat(1, 2)}, {Rat(1), Rat(1)});
  NearestResult r = nearest_anchor(set, {1, 1});
  CHECK(r.index == 1);
  CHECK(r.dist_sq == 0);
  CHECK(r.strict);

  // equidistant cross-label placement
  AnchorSet tie = two_anchor({Rat(0), Rat(0)}, {Rat(1), Rat(1)});
  NearestResult t = nearest_anchor(tie, {1, 0});
  CHECK_FALSE(t.strict);

  AnchorSet empty;
  CHECK_THROWS_AS(nearest_anchor(empty, {}), EmptyAnchorSet);
}

TEST_CASE("nearest anchor picks the zero-distance base point") {
  Depth2Circuit c = family_parity_eq(2, 1);
  AnchorSet set = construct_sym_elt(c);
  NearestResult r = nearest_anchor(set, {0, 0, 0, 0});
  CHECK(r.dist_sq == 0);
  REQUIRE(set.types.has_value());
  CHECK((*set.types)[r.index] == 2);
}

TEST_CASE("verify passes the OR pair and rejects swapped labels") {
  AnchorSet or_set = two_anchor({Rat(0), Rat(0)}, {Rat(1, 2), Rat(1, 2)});
  auto or_oracle = [](const Bits& x) { return x[0] | x[1]; };
  VerificationReport rep = verify_exhaustive(or_set, or_oracle);
  CHECK(rep.pass);
  CHECK(rep.total == 4);
  CHECK(rep.min_margin > 0);

  AnchorSet swapped = or_set;
  std::swap(swapped.labels[0], swapped.labels[1]);
  VerificationReport bad = verify_exhaustive(swapped, or_oracle);
  CHECK_FALSE(bad.pass);
  CHECK(bad.failures.size() == 4);
}

TEST_CASE("verdict is independent of anchor order") {
  Depth2Circuit c = family_or_eq(2, 1);
  AnchorSet set = construct_sym_elt(c);
  AnchorSet reversed = set;
  size_t m = set.size();
  for (size_t i = 0; i < m; ++i) {
    for (size_t j = 0; j < set.n(); ++j) reversed.anchors(i, j) = set.anchors(m - 1 - i, j);
    reversed.labels[i] = set.labels[m - 1 - i];
  }
  reversed.types.reset();
  VerificationReport a = verify_exhaustive(set, make_oracle(c));
  VerificationReport b = verify_exhaustive(reversed, make_oracle(c));
  CHECK(a.pass == b.pass);
  CHECK(a.min_margin == b.min_margin);
  CHECK(a.tie_violations == b.tie_violations);
}

TEST_CASE("complement closure: flipping labels verifies the complement") {
  std::mt19937 rng(31337);
  std::uniform_int_distribution<int> md(1, 3), nd(1, 2), coin(0, 1);
  for (int trial = 0; trial < 20; ++trial) {
    size_t m = md(rng), n = nd(rng);
    Depth2Circuit c = coin(rng) ? family_parity_eq(m, n) : family_or_eq(m, n);
    if (c.n() > 12) continue;
    AnchorSet set = construct_sym_elt(c);
    for (auto& l : set.labels) l = 1 - l;
    auto complement = [&](const Bits& x) { return 1 - c.eval(x); };
    REQUIRE(verify_exhaustive(set, complement).pass);
  }
}

TEST_CASE("decision-list verification agrees between list and DOM oracles") {
  DecisionList l = family_omb_eq(2, 1);
  AnchorSet set = construct_edl(l);
  DomCircuit dom = dl_to_dom_circuit(l);
  VerificationReport via_list = verify_exhaustive(set, make_oracle(l));
  VerificationReport via_dom = verify_exhaustive(set, make_oracle(dom));
  CHECK(via_list.pass == via_dom.pass);
  CHECK(via_list.min_margin == via_dom.min_margin);
  CHECK(via_list.failures.size() == via_dom.failures.size());
}

TEST_CASE("size and resolution") {
  AnchorSet and_set = two_anchor({Rat(1, 2), Rat(1, 2)}, {Rat(1), Rat(1)});
  auto [size, res] = size_and_resolution(and_set);
  CHECK(size == 2);
  CHECK(res == 2);

  AnchorSet constant = constant_representation(4, 0);
  CHECK(size_and_resolution(constant).first == 2);

  // frozen regression value for the 9-anchor parity set
  AnchorSet parity = construct_sym_elt(family_parity_eq(2, 1));
  auto [psize, pres] = size_and_resolution(parity);
  CHECK(psize == 9);
  CHECK(pres == 3);
}

TEST_CASE("oversized input space is rejected") {
  AnchorSet set;
  set.anchors = RatMatrix(1, 30);
  set.labels = {0};
  CHECK_THROWS_AS(verify_exhaustive(set, [](const Bits&) { return 0; }), InputSpaceTooLarge);
}
