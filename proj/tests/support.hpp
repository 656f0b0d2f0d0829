#pragma once

// Shared fixture groups and brute-force oracles for the test suites. The oracles use only
// the multiplication table and plain integer linear algebra, never the library routine
// under test.

#include <random>
#include <string>
#include <vector>

#include "pi3/finite_group.hpp"
#include "pi3/normal_form.hpp"
#include "pi3/presentation.hpp"
#include "pi3/zg_lattice.hpp"

namespace pi3::test {

inline std::string cyclic_text(int m) { return "gens: x ; rels: x^" + std::to_string(m); }
inline std::string cyclic_twogen_text(int m) { return "gens: x, y ; rels: x^" + std::to_string(m) + ", y"; }
inline const std::string kS3 = "gens: a, b ; rels: a^3, b^2, a*b*a*b";
inline const std::string kS3Balanced = "gens: a, b ; rels: a^2, a*b*a=b*a*b";
inline const std::string kQ8 = "gens: x, y ; rels: x^2=y^2, x*y*x=y";
inline const std::string kTrivial = "gens: x ; rels: x";

inline GroupPtr group_of(const std::string& text) { return enumerate_group(parse_presentation(text)); }

struct NamedGroup {
  std::string name;
  std::string text;
  std::size_t order;
};

inline std::vector<NamedGroup> fixture_groups() {
  return {{"C2", cyclic_text(2), 2}, {"C3", cyclic_text(3), 3}, {"C4", cyclic_text(4), 4},
          {"C5", cyclic_text(5), 5}, {"C6", cyclic_text(6), 6}, {"C7", cyclic_text(7), 7},
          {"S3", kS3, 6},            {"Q8", kQ8, 8}};
}

/// Element g as a word evaluated letter by letter from the table.
inline Element table_power(const FiniteGroup& g, Element x, int k) {
  Element r = FiniteGroup::identity;
  for (int i = 0; i < k; ++i) r = g.mul(r, x);
  return r;
}

inline std::size_t table_order(const FiniteGroup& g, Element x) {
  std::size_t k = 1;
  for (Element r = x; r != FiniteGroup::identity; r = g.mul(r, x)) ++k;
  return k;
}

/// Trace of the action of g, computed by walking the tree word letter by letter from the
/// generator matrices.
inline long long trace_oracle(const ZGLattice& l, Element g) {
  const FiniteGroup& G = *l.group();
  IntMatrix m = IntMatrix::identity(l.rank());
  for (const Letter& x : G.tree_word(g)) {
    IntMatrix a = l.generator_actions()[x.generator];
    if (x.exponent < 0) {
      IntMatrix inv = IntMatrix::identity(l.rank());
      for (std::size_t k = 1; k < table_order(G, G.generator_image(x.generator)); ++k) inv = a * inv;
      a = inv;
    }
    m = a * m;
  }
  long long t = 0;
  for (std::size_t i = 0; i < l.rank(); ++i) t += m(i, i).get_si();
  return t;
}

/// Rational freeness via fixed points: L (x) Q = QG^m iff, for every g, the fixed space of
/// g has dimension m n / ord(g). Rational representations are determined by the fixed-point
/// dimensions of cyclic subgroups, so this is an independent decision procedure.
struct FreenessOracle {
  bool free = false;
  long long multiplicity = 0;
};

inline FreenessOracle freeness_by_fixed_points(const ZGLattice& l) {
  const FiniteGroup& G = *l.group();
  const std::size_t n = G.order();
  if (l.rank() % n != 0) return {false, 0};
  const std::size_t m = l.rank() / n;
  for (Element g = 1; g < n; ++g) {
    const IntMatrix fixed = integer_kernel(l.action(g) - IntMatrix::identity(l.rank()));
    if (fixed.cols() * table_order(G, g) != m * n) return {false, 0};
  }
  return {true, static_cast<long long>(m)};
}

/// Inner-product decomposition against the regular character: m = <chi, chi_reg>, and the
/// residual r = chi - m chi_reg must have <r, r> = 0 (the form is positive definite).
inline FreenessOracle freeness_by_inner_product(const std::vector<long long>& chi, const FiniteGroup& g) {
  const long long n = static_cast<long long>(g.order());
  long long inner_n = 0;  // n <chi, chi_reg>
  for (Element h = 0; h < g.order(); ++h) inner_n += chi[h] * (g.inverse(h) == FiniteGroup::identity ? n : 0);
  if (inner_n % (n * n) != 0) return {false, 0};
  const long long m = inner_n / (n * n);
  long long norm = 0;
  for (Element h = 0; h < g.order(); ++h) {
    const long long r = chi[h] - m * (h == FiniteGroup::identity ? n : 0);
    norm += r * r;
  }
  return {norm == 0, norm == 0 ? m : 0};
}

inline IntMatrix random_matrix(std::mt19937_64& rng, std::size_t r, std::size_t c, int bound) {
  std::uniform_int_distribution<int> pick(-bound, bound);
  IntMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = pick(rng);
  return m;
}

}  // namespace pi3::test
