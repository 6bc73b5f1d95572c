#include "nncirc/matrix.hpp"

#include <doctest.h>

#include <random>

using namespace nncirc;

namespace {

// Independent oracle for RES: count bits of |v| by repeated halving.
int naive_bits(Int v) {
  v = abs(v);
  Int pow = 1;
  int r = 0;
  while (pow < v) {
    pow *= 2;
    ++r;
  }
  return r;
}

int naive_resolution(const Rat& q) {
  return std::max(naive_bits(Int(numerator(q) + 1)), naive_bits(Int(denominator(q) + 1)));
}

}  // namespace

TEST_CASE("resolution of scalars") {
  CHECK(resolution(Rat(1, 2)) == 2);
  CHECK(resolution(Rat(0)) == 1);
  CHECK(resolution(Rat(-3, 4)) == 3);
  CHECK(resolution(Rat(1)) == 1);
  CHECK(resolution(Rat(-1)) == 1);  // |a+1| = 0 contributes 0, |b+1| = 2 needs 1
}

TEST_CASE("resolution agrees with halving oracle on random rationals") {
  std::mt19937 rng(12345);
  std::uniform_int_distribution<long long> num(-1000000, 1000000);
  std::uniform_int_distribution<long long> den(1, 1000000);
  for (int i = 0; i < 10000; ++i) {
    Rat q(num(rng), den(rng));
    CHECK(resolution(q) == naive_resolution(q));
  }
}

TEST_CASE("rational arithmetic stays normalized") {
  std::mt19937 rng(999);
  std::uniform_int_distribution<long long> num(-50, 50);
  std::uniform_int_distribution<long long> den(1, 50);
  auto normalized = [](const Rat& q) {
    return denominator(q) > 0 && gcd(Int(abs(numerator(q))), Int(denominator(q))) == 1;
  };
  for (int i = 0; i < 2000; ++i) {
    Rat a(num(rng), den(rng)), b(num(rng), den(rng));
    CHECK(normalized(a + b));
    CHECK(normalized(a - b));
    CHECK(normalized(a * b));
    if (b != 0) CHECK(normalized(a / b));
  }
}

TEST_CASE("rational string round trip") {
  CHECK(rat_to_string(Rat(1, 2)) == "1/2");
  CHECK(rat_to_string(Rat(-3, 4)) == "-3/4");
  CHECK(rat_to_string(Rat(5)) == "5");
  CHECK(rat_from_string("1/2") == Rat(1, 2));
  CHECK(rat_from_string("-7") == Rat(-7));
  CHECK(rat_from_string("+6/4") == Rat(3, 2));
  CHECK_THROWS_AS(rat_from_string("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(rat_from_string("1.5"), std::invalid_argument);
  CHECK_THROWS_AS(rat_from_string(" 1/2"), std::invalid_argument);
}

TEST_CASE("matrix resolution") {
  RatMatrix a(2, 2);
  a(0, 0) = Rat(1, 2);
  a(0, 1) = Rat(1, 2);
  a(1, 0) = 1;
  a(1, 1) = 1;
  CHECK(resolution(a) == 2);
  CHECK(resolution(RatMatrix::identity(2)) == 1);
  RatMatrix b(1, 1);
  b(0, 0) = Rat(-3, 4);
  CHECK(resolution(b) == resolution(Rat(-3, 4)));
  CHECK(resolution(RatMatrix()) == 0);
}

TEST_CASE("determinant and solve") {
  CHECK(det(RatMatrix::identity(3)) == 1);
  RatMatrix a(2, 2);
  a(0, 0) = 2;
  a(1, 1) = 2;
  RatVec x = solve_linear(a, {Rat(1), Rat(1)});
  CHECK(x[0] == Rat(1, 2));
  CHECK(x[1] == Rat(1, 2));

  RatMatrix dep(2, 2);
  dep(0, 0) = 1;
  dep(0, 1) = 2;
  dep(1, 0) = 2;
  dep(1, 1) = 4;
  CHECK(det(dep) == 0);
  CHECK_THROWS_AS(solve_linear(dep, {Rat(1), Rat(1)}), Singular);
}

TEST_CASE("moore-penrose inverse, small cases") {
  CHECK(mp_inverse(RatMatrix::identity(2)) == RatMatrix::identity(2));

  RatMatrix w(1, 2);
  w(0, 0) = 1;
  w(0, 1) = 1;
  RatMatrix p = mp_inverse(w);
  CHECK(p(0, 0) == Rat(1, 2));
  CHECK(p(1, 0) == Rat(1, 2));

  RatMatrix rank_def(2, 2);
  rank_def(0, 0) = 1;
  rank_def(0, 1) = 1;
  rank_def(1, 0) = 2;
  rank_def(1, 1) = 2;
  CHECK_THROWS_AS(mp_inverse(rank_def), RankDeficient);
}

TEST_CASE("moore-penrose right inverse property on random full-rank matrices") {
  std::mt19937 rng(777);
  std::uniform_int_distribution<int> dim(1, 6);
  std::uniform_int_distribution<int> entry(-5, 5);
  int done = 0;
  while (done < 50) {
    int n = dim(rng);
    int m = std::min(dim(rng), n);
    RatMatrix w(m, n);
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < n; ++j) w(i, j) = entry(rng);
    if (det(w * w.transpose()) == 0) continue;
    CHECK(w * mp_inverse(w) == RatMatrix::identity(m));
    ++done;
  }
}
