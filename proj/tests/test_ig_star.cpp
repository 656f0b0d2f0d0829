#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "pi3/analysis.hpp"
#include "pi3/ig_star.hpp"
#include "support.hpp"

using namespace pi3;
using namespace pi3::test;

namespace {

// [M + ZG u/2 : M] = 2^r where r is the F_2-rank of the orbit of u reduced mod 2.
Integer index_oracle(const ZGLattice& m, const IntVector& u) {
  std::vector<std::vector<int>> rows;
  for (Element g = 0; g < m.group()->order(); ++g) {
    const IntVector v = m.act(u, g);
    std::vector<int> r(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) r[i] = mpz_odd_p(v[i].get_mpz_t()) ? 1 : 0;
    rows.push_back(r);
  }
  std::size_t rank = 0;
  const std::size_t k = u.size();
  for (std::size_t col = 0; col < k && rank < rows.size(); ++col) {
    std::size_t piv = rank;
    while (piv < rows.size() && rows[piv][col] == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[piv], rows[rank]);
    for (std::size_t r = 0; r < rows.size(); ++r)
      if (r != rank && rows[r][col])
        for (std::size_t c = 0; c < k; ++c) rows[r][c] ^= rows[rank][c];
    ++rank;
  }
  Integer out = 1;
  for (std::size_t i = 0; i < rank; ++i) out *= 2;
  return out;
}

bool is_zero(const IntVector& v) {
  for (const auto& x : v)
    if (x != 0) return false;
  return true;
}

std::vector<std::string> nontrivial_fixtures() {
  return {cyclic_text(2), cyclic_text(3), cyclic_text(4), cyclic_text(5), kS3Balanced, kQ8};
}

}  // namespace

TEST_CASE("IG* character is regular minus trivial") {
  CHECK(character(ig_star(group_of(cyclic_text(3))).lattice).values == std::vector<long long>{2, -1, -1});
  for (const auto& f : fixture_groups()) {
    CAPTURE(f.name);
    const GroupPtr g = group_of(f.text);
    const IgStar ig = ig_star(g);
    CHECK(ig.lattice.rank() == g->order() - 1);
    for (Element h = 0; h < g->order(); ++h)
      CHECK(trace_oracle(ig.lattice, h) == (h == 0 ? static_cast<long long>(g->order()) : 0) - 1);
  }
}

TEST_CASE("delta: ZG -> IG* is an equivariant surjection with kernel Z Sigma") {
  for (const auto& f : fixture_groups()) {
    CAPTURE(f.name);
    const GroupPtr g = group_of(f.text);
    const IgStar ig = ig_star(g);
    CHECK(verify_hom(ig.delta).equivariant);
    CHECK(smith(ig.delta.matrix).invariant_factors == std::vector<Integer>(g->order() - 1, 1));
    const IntMatrix ker = integer_kernel(ig.delta.matrix);
    REQUIRE(ker.cols() == 1);
    for (std::size_t i = 0; i < g->order(); ++i) CHECK(abs(ker(i, 0)) == 1);
    CHECK(ker(0, 0) == ker(g->order() - 1, 0));
  }
}

TEST_CASE("delta' ranks and kernel") {
  for (const std::string& text : nontrivial_fixtures()) {
    CAPTURE(text);
    const GroupPtr g = group_of(text);
    const std::size_t n = g->order();
    const DeltaPrime d = delta_prime(g);
    CHECK(d.hom.source.rank() == sym_rank(n));
    CHECK(d.hom.target.rank() == sym_rank(n - 1));
    CHECK(d.certificate.passed());
    CHECK(integer_kernel(d.hom.matrix).cols() == n);
    // u and Sigma (x) Sigma are killed
    CHECK(is_zero(d.hom.matrix * u_vector(*g)));
    CHECK(is_zero(d.hom.matrix * sigma_sigma_vector(*g)));
    CHECK(kernel_delta_prime_check(g).passed());
  }
}

TEST_CASE("M lattice ranks and characters") {
  CHECK(m_lattice(group_of(cyclic_text(3))).lattice.rank() == 3);
  CHECK(m_lattice(group_of(kQ8)).lattice.rank() == 28);
  CHECK(m_lattice(group_of(cyclic_text(2))).lattice.rank() == 1);
  for (const std::string& text : nontrivial_fixtures()) {
    const GroupPtr g = group_of(text);
    const MLattice m = m_lattice(g);
    const CharacterVector expected = static_cast<long long>(m.data.p) * regular_character(*g) + character(v_g(g));
    CHECK(character(m.lattice) == expected);
    // S^2(IG*) and M[u_M/2] share a character, so rank M = rank S^2(IG*)
    CHECK(m.lattice.rank() == sym_rank(g->order() - 1));
  }
}

TEST_CASE("u_M for C3") {
  const GroupPtr c3 = group_of(cyclic_text(3));
  const MLattice m = m_lattice(c3);
  const Element x = c3->generator_image(0);
  IntVector expected(3);
  expected[0] = -1;
  expected[c3->inverse(x)] = -1;
  CHECK(m.u_m == expected);
}

TEST_CASE("adjoin_half index agrees with the mod-2 oracle") {
  for (const std::string& text : nontrivial_fixtures()) {
    CAPTURE(text);
    const GroupPtr g = group_of(text);
    const MLattice m = m_lattice(g);
    const AdjoinedLattice l = adjoin_half(m.lattice, m.u_m);
    CHECK(l.index == index_oracle(m.lattice, m.u_m));
    CHECK_FALSE(l.degenerate);
    CHECK(l.result.rank() == m.lattice.rank());
    // M sits inside the result: its basis solves integrally
    const auto coords = solve_rational(l.basis, to_rational(IntMatrix::identity(m.lattice.rank())));
    REQUIRE(coords);
    CHECK_NOTHROW(to_integer(*coords));
    CHECK(verify_half_relations(m).passed());
  }
  CHECK(adjoin_half(m_lattice(group_of(cyclic_text(3))).lattice, m_lattice(group_of(cyclic_text(3))).u_m).index == 4);
  CHECK(adjoin_half(m_lattice(group_of(kQ8)).lattice, m_lattice(group_of(kQ8)).u_m).index == 128);
}

TEST_CASE("adjoining a vector already in M is degenerate") {
  const GroupPtr c3 = group_of(cyclic_text(3));
  const ZGLattice zg = free_lattice(c3, 1);
  const AdjoinedLattice zero = adjoin_half(zg, IntVector(3));
  CHECK(zero.degenerate);
  CHECK(zero.index == 1);
  const AdjoinedLattice even = adjoin_half(zg, IntVector{2, -4, 0});
  CHECK(even.degenerate);
  CHECK(same_lattice(even.doubled_basis(), Integer(2) * IntMatrix::identity(3)));
}

TEST_CASE("ZG[(1+x)/2] over C3") {
  const GroupPtr c3 = group_of(cyclic_text(3));
  const Element x = c3->generator_image(0);
  const ZGElement one_plus_x = ZGElement::basis(c3, 0) + ZGElement::basis(c3, x);
  const AdjoinedLattice a = group_ring_overlattice(c3, one_plus_x);
  CHECK(a.index == 4);
  // (1+x^2) = (1+x) x^2, so both generate the same overlattice
  const AdjoinedLattice b = group_ring_overlattice(c3, ZGElement::basis(c3, 0) + ZGElement::basis(c3, c3->mul(x, x)));
  CHECK(same_overlattice(a, b));
  CHECK_FALSE(same_overlattice(a, group_ring_overlattice(c3, ZGElement::basis(c3, 0))));
}

TEST_CASE("explicit half presentation for fixtures") {
  for (const std::string& text : nontrivial_fixtures()) {
    CAPTURE(text);
    const HomotopyLattices h = homotopy_lattices(parse_presentation(text));
    const HalfPresentation r = verify_half_presentation(h.pi2.lattice);
    CHECK(r.full());
    REQUIRE(r.iso);
    const HomCertificate c = verify_hom(*r.iso);
    CHECK(c.equivariant);
    CHECK(c.iso);
    CHECK(character(h.pi3) == character(r.adjoined->result));
    if (const auto* f = r.checks.first_failure()) MESSAGE(f->claim);
  }
}

TEST_CASE("C3: pi3 is ZG[(1+x)/2]") {
  const HomotopyLattices h = homotopy_lattices(parse_presentation(cyclic_text(3)));
  const HalfPresentation r = verify_half_presentation(h.pi2.lattice);
  const Element x = h.group->generator_image(0);
  const auto target = group_ring_overlattice(h.group, ZGElement::basis(h.group, 0) + ZGElement::basis(h.group, x));
  const auto onto = iso_onto(r, target);
  REQUIRE(onto);
  CHECK(verify_hom(*onto).iso);
  CHECK_FALSE(iso_onto(r, group_ring_overlattice(h.group, ZGElement::basis(h.group, 0))));
}

TEST_CASE("supplied pi2 -> IG* maps are certified") {
  const HomotopyLattices h = homotopy_lattices(parse_presentation(kQ8));
  const auto found = find_equivariant_iso(h.pi2.lattice, ig_star(h.group).lattice);
  REQUIRE(found);
  CHECK(verify_half_presentation(h.pi2.lattice, found->matrix).full());

  std::mt19937_64 rng(31);
  const HalfPresentation bad = verify_half_presentation(h.pi2.lattice, random_matrix(rng, 7, 7, 2));
  CHECK_FALSE(bad.full());
  REQUIRE(bad.checks.first_failure());
  CHECK(bad.checks.first_failure()->claim == "pi2 -> IG* is an equivariant isomorphism");

  const HalfPresentation wrong_shape = verify_half_presentation(h.pi2.lattice, IntMatrix::identity(3));
  CHECK_FALSE(wrong_shape.full());
  CHECK(wrong_shape.checks.first_failure()->witness == std::optional<std::string>("matrix has the wrong shape"));

  // equivariant but not unimodular: twice the found map
  const HalfPresentation doubled = verify_half_presentation(h.pi2.lattice, Integer(2) * found->matrix);
  CHECK_FALSE(doubled.full());
}

TEST_CASE("trivial group") {
  const HomotopyLattices h = homotopy_lattices(parse_presentation(kTrivial));
  const HalfPresentation r = verify_half_presentation(h.pi2.lattice);
  CHECK(r.checks.passed());
  CHECK(r.checks.checks.size() == 1);
  CHECK_FALSE(r.iso);
}
