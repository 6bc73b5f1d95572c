#include "nncirc/verify.hpp"

namespace nncirc {

Rat squared_distance(const AnchorSet& a, size_t row, const Bits& x) {
  if (x.size() != a.n()) throw DimensionMismatch();
  Rat s = 0;
  for (size_t j = 0; j < a.n(); ++j) {
    Rat diff = Rat(x[j]) - a.anchors(row, j);
    s += diff * diff;
  }
  return s;
}

NearestResult nearest_anchor(const AnchorSet& a, const Bits& x) {
  if (a.size() == 0) throw EmptyAnchorSet();
  size_t best = 0;
  Rat best_d = squared_distance(a, 0, x);
  bool cross_tie = false;
  for (size_t i = 1; i < a.size(); ++i) {
    Rat d = squared_distance(a, i, x);
    if (d < best_d) {
      best = i;
      best_d = d;
      cross_tie = false;
    } else if (d == best_d && a.labels[i] != a.labels[best]) {
      cross_tie = true;
    }
  }
  return {best, best_d, !cross_tie};
}

VerificationReport verify_exhaustive(const AnchorSet& a, const Oracle& oracle, int max_bits,
                                     const TypeChecker& type_checker) {
  size_t n = a.n();
  if (static_cast<int>(n) > max_bits) throw InputSpaceTooLarge();
  VerificationReport rep;
  rep.total = uint64_t(1) << n;
  bool margin_set = false;
  bool types_ok = true;
  for (uint64_t idx = 0; idx < rep.total; ++idx) {
    Bits x = index_to_bits(idx, n);
    int expected = oracle(x);
    // nearest per label class
    std::optional<Rat> d_same, d_other;
    size_t nearest_idx = 0;
    Rat nearest_d;
    bool have_nearest = false;
    for (size_t i = 0; i < a.size(); ++i) {
      Rat d = squared_distance(a, i, x);
      auto& slot = (a.labels[i] == expected) ? d_same : d_other;
      if (!slot || d < *slot) slot = d;
      if (!have_nearest || d < nearest_d) {
        nearest_idx = i;
        nearest_d = d;
        have_nearest = true;
      }
    }
    int got = a.labels[nearest_idx];
    if (got != expected) {
      rep.failures.push_back({x, expected, got, nearest_idx});
    } else if (d_same && d_other && *d_same == *d_other) {
      ++rep.tie_violations;  // cross-label exact tie
    }
    if (d_same && d_other) {
      Rat margin = *d_other - *d_same;
      if (!margin_set || margin < rep.min_margin) {
        rep.min_margin = margin;
        margin_set = true;
      }
    }
    if (type_checker && a.types && !type_checker(x, (*a.types)[nearest_idx])) types_ok = false;
  }
  if (type_checker && a.types) rep.type_trace_ok = types_ok;
  rep.pass = rep.failures.empty() && rep.tie_violations == 0;
  return rep;
}

std::pair<size_t, int> size_and_resolution(const AnchorSet& a) {
  return {a.size(), resolution(a.anchors)};
}

Oracle make_oracle(const Depth2Circuit& c) {
  return [c](const Bits& x) { return c.eval(x); };
}
Oracle make_oracle(const DecisionList& l) {
  return [l](const Bits& x) { return l.eval(x); };
}
Oracle make_oracle(const DomCircuit& c) {
  return [c](const Bits& x) { return c.eval(x); };
}

TypeChecker make_elt_type_checker(const Depth2Circuit& c) {
  return [c](const Bits& x, int type) {
    auto right = c.top.intervals();
    int l = c.top.interval_of(c.popcount_z(x));
    int left_boundary = (l == 1) ? 0 : right[l - 2] + 1;
    return type == left_boundary;
  };
}

TypeChecker make_lt_type_checker(const Depth2Circuit& c) {
  return [c](const Bits& x, int type) {
    auto right = c.top.intervals();
    int l = c.top.interval_of(c.popcount_z(x));
    int left_boundary = (l == 1) ? 0 : right[l - 2] + 1;
    return type == left_boundary || type == right[l - 1];
  };
}

}  // namespace nncirc
