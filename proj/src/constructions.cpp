#include "nncirc/constructions.hpp"

#include <algorithm>

namespace nncirc {

namespace {

constexpr size_t kXStarSearchCap = 24;

RatVec rat_row(const IntVec& w) {
  RatVec r(w.size());
  for (size_t i = 0; i < w.size(); ++i) r[i] = Rat(w[i]);
  return r;
}

Rat int_norm_sq(const IntVec& w) {
  Int s = 0;
  for (const Int& v : w) s += v * v;
  return Rat(s);
}

Int int_dot(const IntVec& a, const IntVec& b) {
  Int s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

void push_anchor(AnchorSet& set, size_t row, const RatVec& v) {
  for (size_t j = 0; j < v.size(); ++j) set.anchors(row, j) = v[j];
}

// x + s * w
RatVec axpy(RatVec x, const Rat& s, const RatVec& w) {
  for (size_t i = 0; i < x.size(); ++i) x[i] += s * w[i];
  return x;
}

bool is_integer(const Rat& q) { return denominator(q) == 1; }

void require_kind(const std::vector<ThresholdGate>& gates, GateKind kind, const char* what) {
  for (const auto& g : gates)
    if (g.kind != kind) throw RegularityViolated(what);
}

}  // namespace

std::vector<std::vector<int>> subsets_lex(int m, int k) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  // lexicographic enumeration matching the paper's worked ordering
  auto rec = [&](auto&& self, int start) -> void {
    if (static_cast<int>(cur.size()) == k) {
      out.push_back(cur);
      return;
    }
    for (int i = start; i < m; ++i) {
      cur.push_back(i);
      self(self, i + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

std::vector<int> elt_types(const SymmetricProfile& p) {
  auto right = p.intervals();
  std::vector<int> t = {0};  // I_0 + 1
  for (size_t j = 0; j + 1 < right.size(); ++j) t.push_back(right[j] + 1);
  return t;
}

std::vector<int> lt_types(const SymmetricProfile& p) {
  auto right = p.intervals();
  std::vector<int> t;
  for (size_t j = 0; j + 1 < right.size(); ++j) {
    t.push_back(right[j]);
    t.push_back(right[j] + 1);
  }
  std::sort(t.begin(), t.end());
  t.erase(std::unique(t.begin(), t.end()), t.end());
  return t;
}

RegularityReport check_regularity(const std::vector<ThresholdGate>& gates,
                                  const std::optional<Bits>& xstar_hint, bool need_xstar) {
  RegularityReport rep;
  if (gates.empty()) throw std::invalid_argument("empty first layer");
  size_t n = gates[0].arity();
  rep.shared_norm = gates[0].norm_sq();
  rep.equal_norms = true;
  for (const auto& g : gates)
    if (g.arity() != n || g.norm_sq() != rep.shared_norm) rep.equal_norms = false;
  rep.mutually_orthogonal = true;
  for (size_t i = 0; i < gates.size() && rep.mutually_orthogonal; ++i)
    for (size_t j = i + 1; j < gates.size(); ++j)
      if (int_dot(gates[i].weights, gates[j].weights) != 0) {
        rep.mutually_orthogonal = false;
        break;
      }
  if (!need_xstar) return rep;

  auto on_all_hyperplanes = [&](const Bits& x) {
    for (const auto& g : gates)
      if (Rat(g.weighted_sum(x)) != g.bias) return false;
    return true;
  };
  if (xstar_hint && xstar_hint->size() == n && on_all_hyperplanes(*xstar_hint)) {
    rep.xstar = *xstar_hint;
    return rep;
  }
  if (n <= kXStarSearchCap) {
    for (uint64_t idx = 0; idx < (uint64_t(1) << n); ++idx) {
      Bits x = index_to_bits(idx, n);
      if (on_all_hyperplanes(x)) {
        rep.xstar = std::move(x);
        break;
      }
    }
  }
  return rep;
}

RegularityReport check_regularity(const Depth2Circuit& c, bool need_xstar) {
  return check_regularity(c.gates, c.xstar_hint, need_xstar);
}

AnchorSet constant_representation(size_t n, int value) {
  AnchorSet set;
  set.construction = "constant";
  set.anchors = RatMatrix(2, n);
  RatVec center(n, Rat(1, 2));
  RatVec far = center;
  far[0] += Rat(n + 1);
  push_anchor(set, 0, center);
  push_anchor(set, 1, far);
  set.labels = {value, 1 - value};
  return set;
}

namespace {

// Shared reflection core: b is already the (perturbed) rational right-hand
// side, a0 a strictly feasible binary point.
AnchorSet reflect_polytope(const std::vector<IntVec>& rows, const RatVec& b, const Bits& a0,
                           const std::string& name) {
  size_t m = rows.size(), n = a0.size();
  AnchorSet set;
  set.construction = name;
  set.anchors = RatMatrix(m + 1, n);
  RatVec base(n);
  for (size_t j = 0; j < n; ++j) base[j] = a0[j];
  push_anchor(set, 0, base);
  set.labels.assign(m + 1, 0);
  set.labels[0] = 1;
  for (size_t i = 0; i < m; ++i) {
    Rat nsq = int_norm_sq(rows[i]);
    if (nsq == 0) throw std::invalid_argument("zero constraint row");
    Rat ci = (b[i] - Rat(int_dot(rows[i], IntVec(a0.begin(), a0.end())))) / nsq;
    set.c.push_back(ci);
    push_anchor(set, i + 1, axpy(base, 2 * ci, rat_row(rows[i])));
  }
  return set;
}

}  // namespace

AnchorSet construct_polytope(const std::vector<IntVec>& a_rows, const IntVec& b, size_t n) {
  if (a_rows.size() != b.size()) throw std::invalid_argument("row/bias count mismatch");
  std::optional<Bits> feasible;
  if (n > kXStarSearchCap) throw std::invalid_argument("input space too large for feasibility search");
  for (uint64_t idx = 0; idx < (uint64_t(1) << n) && !feasible; ++idx) {
    Bits x = index_to_bits(idx, n);
    bool ok = true;
    for (size_t i = 0; i < a_rows.size() && ok; ++i)
      ok = int_dot(a_rows[i], IntVec(x.begin(), x.end())) <= b[i];
    if (ok) feasible = std::move(x);
  }
  if (!feasible) return constant_representation(n, 0);
  RatVec rhs(b.size());
  for (size_t i = 0; i < b.size(); ++i) rhs[i] = Rat(b[i]) + Rat(1, 2);
  return reflect_polytope(a_rows, rhs, *feasible, "polytope");
}

AnchorSet construct_equality_system(const std::vector<IntVec>& a_rows, const IntVec& b, size_t n) {
  if (a_rows.size() != b.size()) throw std::invalid_argument("row/bias count mismatch");
  std::optional<Bits> feasible;
  if (n > kXStarSearchCap) throw std::invalid_argument("input space too large for feasibility search");
  for (uint64_t idx = 0; idx < (uint64_t(1) << n) && !feasible; ++idx) {
    Bits x = index_to_bits(idx, n);
    bool ok = true;
    for (size_t i = 0; i < a_rows.size() && ok; ++i)
      ok = int_dot(a_rows[i], IntVec(x.begin(), x.end())) == b[i];
    if (ok) feasible = std::move(x);
  }
  if (!feasible) return constant_representation(n, 0);
  // each equality row contributes the pair A_i X <= b_i + 1/2, -A_i X <= -b_i + 1/2
  std::vector<IntVec> rows;
  RatVec rhs;
  for (size_t i = 0; i < a_rows.size(); ++i) {
    rows.push_back(a_rows[i]);
    rhs.push_back(Rat(b[i]) + Rat(1, 2));
    IntVec neg(a_rows[i].size());
    for (size_t j = 0; j < neg.size(); ++j) neg[j] = -a_rows[i][j];
    rows.push_back(std::move(neg));
    rhs.push_back(Rat(-b[i]) + Rat(1, 2));
  }
  AnchorSet set = reflect_polytope(rows, rhs, *feasible, "equality-system");
  return set;
}

AnchorSet construct_sym_elt(const Depth2Circuit& c) {
  require_kind(c.gates, GateKind::Exact, "sym_elt needs exact first-layer gates");
  RegularityReport reg = check_regularity(c);
  if (!reg.equal_norms) throw RegularityViolated("unequal weight norms");
  if (!reg.mutually_orthogonal) throw RegularityViolated("weight rows not orthogonal");
  if (!reg.xstar) throw XStarNotFound();
  size_t m = c.m(), n = c.n();
  RatVec base(n);
  for (size_t j = 0; j < n; ++j) base[j] = (*reg.xstar)[j];

  AnchorSet set;
  set.construction = "sym-elt";
  set.d = Rat(1) / (Rat(m) * reg.shared_norm);
  std::vector<int> types_list = elt_types(c.top);

  std::vector<RatVec> rows;
  std::vector<int> labels, types;
  for (int t : types_list) {
    int label = c.top.values[t];
    for (const auto& sel : subsets_lex(static_cast<int>(m), static_cast<int>(m) - t)) {
      uint64_t patterns = uint64_t(1) << sel.size();
      for (uint64_t j = 0; j < patterns; ++j) {
        RatVec u(n, Rat(0));
        for (size_t i = 0; i < sel.size(); ++i) {
          Rat sign = ((j >> i) & 1u) ? -1 : 1;
          u = axpy(std::move(u), sign, rat_row(c.gates[sel[i]].weights));
        }
        rows.push_back(axpy(base, set.d, u));
        labels.push_back(label);
        types.push_back(t);
      }
    }
  }
  set.anchors = RatMatrix(rows.size(), n);
  for (size_t i = 0; i < rows.size(); ++i) push_anchor(set, i, rows[i]);
  set.labels = std::move(labels);
  set.types = std::move(types);
  return set;
}

AnchorSet construct_sym_lt(const Depth2Circuit& c) {
  require_kind(c.gates, GateKind::Linear, "sym_lt needs linear first-layer gates");
  for (const auto& g : c.gates)
    if (!is_integer(g.bias)) throw RegularityViolated("sym_lt needs integral biases");
  RegularityReport reg = check_regularity(c);
  if (!reg.equal_norms) throw RegularityViolated("unequal weight norms");
  if (!reg.mutually_orthogonal) throw RegularityViolated("weight rows not orthogonal");
  if (!reg.xstar) throw XStarNotFound();
  size_t m = c.m(), n = c.n();

  std::vector<int> types_list = lt_types(c.top);
  if (types_list.empty())  // constant top
    return constant_representation(n, c.top.values[0]);

  // shift X* onto the hyperplanes of the b - 1/2 system
  RatVec shifted(n);
  for (size_t j = 0; j < n; ++j) shifted[j] = (*reg.xstar)[j];
  Rat half_inv = Rat(1) / (2 * reg.shared_norm);
  for (const auto& g : c.gates) shifted = axpy(std::move(shifted), -half_inv, rat_row(g.weights));

  AnchorSet set;
  set.construction = "sym-lt";
  // any d below 1/||w||^2 keeps the type ordering strict; a fixed fraction
  // of the norm keeps the resolution independent of m
  set.d = half_inv;

  std::vector<RatVec> rows;
  std::vector<int> labels, types;
  for (int t : types_list) {
    int label = c.top.values[t];
    for (const auto& sel : subsets_lex(static_cast<int>(m), static_cast<int>(m) - t)) {
      RatVec u(n, Rat(0));
      for (int gi : sel) u = axpy(std::move(u), Rat(-1), rat_row(c.gates[gi].weights));
      rows.push_back(axpy(shifted, set.d, u));
      labels.push_back(label);
      types.push_back(t);
    }
  }
  set.anchors = RatMatrix(rows.size(), n);
  for (size_t i = 0; i < rows.size(); ++i) push_anchor(set, i, rows[i]);
  set.labels = std::move(labels);
  set.types = std::move(types);
  return set;
}

AnchorSet construct_ldl_regular(const DecisionList& l) {
  if (l.kind != ListKind::LDL) throw std::invalid_argument("construct_ldl_regular needs an LDL");
  require_kind(l.gates, GateKind::Linear, "LDL needs linear gates");
  for (const auto& g : l.gates)
    if (!is_integer(g.bias)) throw RegularityViolated("LDL construction needs integral biases");
  RegularityReport reg = check_regularity(l.gates, l.xstar_hint);
  if (!reg.equal_norms) throw RegularityViolated("unequal weight norms");
  if (!reg.mutually_orthogonal) throw RegularityViolated("weight rows not orthogonal");
  if (!reg.xstar) throw XStarNotFound();
  size_t m = l.depth(), n = l.n();

  // doubling trick: gates (w, b) become (2w, 2b-1); X' solves the doubled system
  RatVec xprime(n);
  for (size_t j = 0; j < n; ++j) xprime[j] = (*reg.xstar)[j];
  Rat half_inv = Rat(1) / (2 * reg.shared_norm);
  for (const auto& g : l.gates) xprime = axpy(std::move(xprime), -half_inv, rat_row(g.weights));

  Rat doubled_norm = 4 * reg.shared_norm;
  Rat ratio = Rat(1) / (2 * doubled_norm);

  AnchorSet set;
  set.construction = "ldl-regular";
  set.anchors = RatMatrix(m + 1, n);
  Rat ci = 1;
  RatVec prefix = xprime;  // X' - sum_{j<i} c_j w'_j
  for (size_t i = 0; i < m; ++i) {
    ci *= ratio;
    set.c.push_back(ci);
    RatVec doubled = rat_row(l.gates[i].weights);
    for (auto& v : doubled) v *= 2;
    push_anchor(set, i, axpy(prefix, ci, doubled));
    set.labels.push_back(l.outputs[i]);
    prefix = axpy(std::move(prefix), -ci, doubled);
  }
  push_anchor(set, m, prefix);  // X' - sum_{j<m} c_j w'_j - c_m w'_m
  set.labels.push_back(l.default_output);
  return set;
}

AnchorSet construct_ldl_general(const DecisionList& l) {
  if (l.kind != ListKind::LDL) throw std::invalid_argument("construct_ldl_general needs an LDL");
  require_kind(l.gates, GateKind::Linear, "LDL needs linear gates");
  size_t m = l.depth(), n = l.n();
  if (m > n) throw DepthExceedsArity();

  std::vector<RatVec> w(m);
  for (size_t i = 0; i < m; ++i) w[i] = rat_row(l.gates[i].weights);

  auto as_matrix = [&](const std::vector<RatVec>& rows) {
    RatMatrix mat(m, n);
    for (size_t i = 0; i < m; ++i)
      for (size_t j = 0; j < n; ++j) mat(i, j) = rows[i][j];
    return mat;
  };

  // full-rank repair: W + eps * I_{m,n}, halving eps from 1/4
  RatMatrix wmat = as_matrix(w);
  if (det(wmat * wmat.transpose()) == 0) {
    Rat eps(1, 4);
    for (int tries = 0;; ++tries) {
      if (tries > 64) throw std::runtime_error("full-rank perturbation failed");
      std::vector<RatVec> wp = w;
      for (size_t i = 0; i < m; ++i) wp[i][i] += eps;
      RatMatrix cand = as_matrix(wp);
      if (det(cand * cand.transpose()) != 0) {
        w = std::move(wp);
        wmat = std::move(cand);
        break;
      }
      eps /= 2;
    }
  }

  Rat maxnorm = 0;
  for (const auto& row : w) maxnorm = std::max(maxnorm, dot(row, row));
  Rat ratio = Rat(1) / (2 * maxnorm);

  RatVec cs(m);
  Rat ci = 1;
  for (size_t i = 0; i < m; ++i) {
    ci *= ratio;
    cs[i] = ci;
  }

  // B_i = (b_i - 1/2) + sum_{j<i} c_j w_i^T w_j; X* = W+ B
  RatVec bvec(m);
  for (size_t i = 0; i < m; ++i) {
    bvec[i] = l.gates[i].bias - Rat(1, 2);
    for (size_t j = 0; j < i; ++j) bvec[i] += cs[j] * dot(w[i], w[j]);
  }
  RatMatrix wplus = mp_inverse(wmat);
  RatVec xstar(n, Rat(0));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < m; ++j) xstar[i] += wplus(i, j) * bvec[j];

  AnchorSet set;
  set.construction = "ldl-general";
  set.c = cs;
  set.anchors = RatMatrix(m + 1, n);
  RatVec prefix = xstar;
  for (size_t i = 0; i < m; ++i) {
    push_anchor(set, i, axpy(prefix, cs[i], w[i]));
    set.labels.push_back(l.outputs[i]);
    prefix = axpy(std::move(prefix), -cs[i], w[i]);
  }
  push_anchor(set, m, prefix);
  set.labels.push_back(l.default_output);
  return set;
}

AnchorSet construct_edl(const DecisionList& l) {
  if (l.kind != ListKind::EDL) throw std::invalid_argument("construct_edl needs an EDL");
  require_kind(l.gates, GateKind::Exact, "EDL needs exact gates");
  RegularityReport reg = check_regularity(l.gates, l.xstar_hint);
  if (!reg.equal_norms) throw RegularityViolated("unequal weight norms");
  if (!reg.mutually_orthogonal) throw RegularityViolated("weight rows not orthogonal");
  if (!reg.xstar) throw XStarNotFound();
  size_t m = l.depth(), n = l.n();

  RatVec base(n);
  for (size_t j = 0; j < n; ++j) base[j] = (*reg.xstar)[j];

  AnchorSet set;
  set.construction = "edl";
  set.d = Rat(1) / reg.shared_norm;
  for (size_t k = 1; k <= m; ++k) set.c.push_back(Rat(k) / (Rat(m + 1) * reg.shared_norm));
  set.c.push_back(set.d);  // c_{m+1} = d

  std::vector<RatVec> rows;
  std::vector<int> labels, types;
  for (size_t k = 1; k <= m + 1; ++k) {
    size_t excluded = (k <= m) ? k - 1 : m - 1;  // the k = m+1 family reuses w_m
    int label = (k <= m) ? l.outputs[k - 1] : l.default_output;
    for (uint64_t j = 0; j < (uint64_t(1) << m); ++j) {
      RatVec u(n, Rat(0));
      size_t bit = 0;
      for (size_t gi = 0; gi < m; ++gi) {
        if (gi == excluded) continue;
        Rat sign = ((j >> bit) & 1u) ? -1 : 1;
        u = axpy(std::move(u), sign, rat_row(l.gates[gi].weights));
        ++bit;
      }
      Rat last_sign = ((j >> (m - 1)) & 1u) ? -1 : 1;
      RatVec a = axpy(base, set.d, u);
      a = axpy(std::move(a), last_sign * set.c[k - 1], rat_row(l.gates[excluded].weights));
      rows.push_back(std::move(a));
      labels.push_back(label);
      types.push_back(static_cast<int>(k));
    }
  }
  set.anchors = RatMatrix(rows.size(), n);
  for (size_t i = 0; i < rows.size(); ++i) push_anchor(set, i, rows[i]);
  set.labels = std::move(labels);
  set.types = std::move(types);
  return set;
}

}  // namespace nncirc
