#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "pi3/normal_form.hpp"
#include "support.hpp"

using namespace pi3;
using namespace pi3::test;

namespace {

bool is_diagonal_divisibility_chain(const IntMatrix& d) {
  Integer prev = 1;
  for (std::size_t i = 0; i < d.rows(); ++i)
    for (std::size_t j = 0; j < d.cols(); ++j)
      if (i != j && d(i, j) != 0) return false;
  const std::size_t k = std::min(d.rows(), d.cols());
  for (std::size_t i = 0; i < k; ++i) {
    if (d(i, i) < 0) return false;
    if (prev == 0 && d(i, i) != 0) return false;
    if (prev != 0 && d(i, i) % prev != 0) return false;
    prev = d(i, i);
  }
  return true;
}

}  // namespace

TEST_CASE("smith form of a 2x2 example") {
  const SmithForm s = smith(IntMatrix::from_rows({{2, 4}, {6, 8}}));
  CHECK(s.form == IntMatrix::from_rows({{2, 0}, {0, 4}}));
  CHECK(s.invariant_factors == std::vector<Integer>{2, 4});
  CHECK(s.left * IntMatrix::from_rows({{2, 4}, {6, 8}}) * s.right == s.form);
}

TEST_CASE("identity and zero") {
  const IntMatrix id = IntMatrix::identity(4);
  const NormalForms f = normal_forms(id);
  CHECK(f.hermite.form == id);
  CHECK(f.smith.form == id);
  const IntMatrix z(3, 2);
  const NormalForms g = normal_forms(z);
  CHECK(g.hermite.form.is_zero());
  CHECK(g.smith.form.is_zero());
  CHECK(g.hermite.rank == 0);
  CHECK(integer_kernel(z) == IntMatrix::identity(2));
}

TEST_CASE("transforms re-multiply exactly on random matrices") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 60; ++trial) {
    std::uniform_int_distribution<int> dim(1, 6);
    const std::size_t r = dim(rng), c = dim(rng);
    IntMatrix a = random_matrix(rng, r, c, 9);
    if (trial % 5 == 0) a.set_column(0, IntVector(r));  // force rank deficiency
    const NormalForms f = normal_forms(a);
    CHECK(a * f.hermite.transform == f.hermite.form);
    CHECK(abs(determinant(f.hermite.transform)) == 1);
    CHECK(f.smith.left * a * f.smith.right == f.smith.form);
    CHECK(abs(determinant(f.smith.left)) == 1);
    CHECK(abs(determinant(f.smith.right)) == 1);
    CHECK(is_diagonal_divisibility_chain(f.smith.form));
    CHECK(f.hermite.rank == f.smith.invariant_factors.size());

    // echelon shape with reduced entries left of each pivot
    for (std::size_t k = 0; k < f.hermite.rank; ++k) {
      const std::size_t pr = f.hermite.pivot_rows[k];
      CHECK(f.hermite.form(pr, k) > 0);
      for (std::size_t j = 0; j < k; ++j) {
        CHECK(f.hermite.form(pr, j) >= 0);
        CHECK(f.hermite.form(pr, j) < f.hermite.form(pr, k));
      }
      for (std::size_t rr = 0; rr < pr; ++rr) CHECK(f.hermite.form(rr, k) == 0);
    }

    const IntMatrix ker = integer_kernel(a);
    CHECK(ker.cols() + f.hermite.rank == c);
    CHECK((a * ker).is_zero());
    if (ker.cols() > 0) CHECK(smith(ker).invariant_factors == std::vector<Integer>(ker.cols(), 1));
  }
}

TEST_CASE("lattice equality ignores generator order and redundancy") {
  const IntMatrix a = IntMatrix::from_rows({{2, 0}, {0, 3}});
  CHECK(same_lattice(a, IntMatrix::from_rows({{0, 2}, {3, 0}})));
  CHECK(same_lattice(a, IntMatrix::from_rows({{2, 4, 2}, {3, 3, 0}})));
  CHECK_FALSE(same_lattice(a, IntMatrix::from_rows({{1, 0}, {0, 3}})));
  CHECK_FALSE(same_lattice(a, IntMatrix::from_rows({{2}, {0}})));
  CHECK(same_lattice(IntMatrix::from_rows({{2, 4, 2}, {3, 3, 0}}), IntMatrix::from_rows({{2, 0}, {3, 3}})));
}

TEST_CASE("determinant and unimodular inverse") {
  CHECK(determinant(IntMatrix::from_rows({{2, 4}, {6, 8}})) == -8);
  CHECK(determinant(IntMatrix::from_rows({{0, 1, 0}, {0, 0, 1}, {1, 0, 0}})) == 1);
  CHECK(determinant(IntMatrix(0, 0)) == 1);
  const IntMatrix u = IntMatrix::from_rows({{2, 3}, {1, 2}});
  CHECK(u * unimodular_inverse(u) == IntMatrix::identity(2));
  CHECK_THROWS(unimodular_inverse(IntMatrix::from_rows({{2, 0}, {0, 1}})));
}

TEST_CASE("big integers survive elimination") {
  IntMatrix a(2, 2);
  a(0, 0) = Integer("123456789012345678901234567890");
  a(0, 1) = 1;
  a(1, 0) = Integer("123456789012345678901234567891");
  a(1, 1) = 1;
  CHECK(determinant(a) == -1);
  CHECK(smith(a).invariant_factors == std::vector<Integer>{1, 1});
}

TEST_CASE("rational solve") {
  const RatMatrix a = to_rational(IntMatrix::from_rows({{2, 0}, {0, 4}}));
  const RatMatrix b = to_rational(IntMatrix::from_rows({{1}, {1}}));
  const auto x = solve_rational(a, b);
  REQUIRE(x);
  CHECK((*x)(0, 0) == Rational(1, 2));
  CHECK((*x)(1, 0) == Rational(1, 4));
  CHECK_FALSE(solve_rational(to_rational(IntMatrix::from_rows({{1}, {1}})), to_rational(IntMatrix::from_rows({{1}, {2}}))));
}
