#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "pi3/analysis.hpp"
#include "pi3/decomposition.hpp"
#include "pi3/errors.hpp"
#include "pi3/ig_star.hpp"
#include "support.hpp"

using namespace pi3;
using namespace pi3::test;

TEST_CASE("involution bookkeeping") {
  const InvolutionData c2 = involution_pairs(*group_of(cyclic_text(2)));
  CHECK(c2.p == 0);
  CHECK(c2.involutions == std::vector<Element>{1});
  const InvolutionData c3 = involution_pairs(*group_of(cyclic_text(3)));
  CHECK(c3.p == 1);
  CHECK(c3.involutions.empty());
  CHECK(c3.transversal == std::vector<Element>{1});
  const GroupPtr q8 = group_of(kQ8);
  const InvolutionData d = involution_pairs(*q8);
  CHECK(d.p == 3);
  const Element x = q8->generator_image(0);
  CHECK(d.involutions == std::vector<Element>{q8->mul(x, x)});

  for (const auto& f : fixture_groups()) {
    CAPTURE(f.name);
    const GroupPtr g = group_of(f.text);
    const InvolutionData data = involution_pairs(*g);
    std::size_t order_two = 0;
    for (Element h = 1; h < g->order(); ++h)
      if (g->mul(h, h) == FiniteGroup::identity) ++order_two;
    CHECK(data.involutions.size() == order_two);
    CHECK(2 * data.p + data.involutions.size() == g->order() - 1);
    for (Element s : data.transversal) CHECK(s < g->inverse(s));
  }
}

TEST_CASE("involution ideals and V_G") {
  const GroupPtr c2 = group_of(cyclic_text(2));
  CHECK(v_g(c2).rank() == 1);
  CHECK(character(v_g(c2)).values == std::vector<long long>{1, 1});
  CHECK(v_g(group_of(cyclic_text(5))).rank() == 0);
  const GroupPtr q8 = group_of(kQ8);
  CHECK(v_g(q8).rank() == 4);
  const GroupPtr s3 = group_of(kS3);
  CHECK(v_g(s3).rank() == 9);

  // (1+t)ZG is the image of left multiplication by 1+t on ZG, a pure sublattice of rank n/2
  for (Element t : involution_pairs(*q8).involutions) {
    CHECK(involution_coset_reps(*q8, t).size() == 4);
    const ZGLattice ideal = involution_ideal(q8, t);
    CHECK(ideal.rank() == 4);
    for (Element h = 0; h < 8; ++h) CHECK(character(ideal)[h] == trace_oracle(ideal, h));
  }
}

TEST_CASE("S_t satisfies (1+t) S_t = Sigma") {
  const GroupPtr c2 = group_of(cyclic_text(2));
  CHECK(coset_transversal_st(c2, 1) == ZGElement::basis(c2, 0));
  const GroupPtr q8 = group_of(kQ8);
  const Element y = q8->generator_image(1), t = q8->mul(y, y);
  const ZGElement st = coset_transversal_st(q8, t);
  CHECK(st.terms().size() == 4);
  CHECK((ZGElement::basis(q8, 0) + ZGElement::basis(q8, t)) * st == sigma(q8));
  CHECK_THROWS_AS(coset_transversal_st(group_of(cyclic_text(3)), 1), std::invalid_argument);
}

TEST_CASE("symmetric square of a sum") {
  const GroupPtr c3 = group_of(cyclic_text(3));
  const ZGLattice zg = free_lattice(c3, 1), ig = ig_star(c3).lattice;
  const std::vector<ZGLattice> two_free{zg, zg};
  const CertifiedIso a = sym_square_sum_iso(c3, two_free);
  CHECK(a.decomposed.rank() == 21);
  CHECK(a.certificate.passed());
  const std::vector<ZGLattice> mixed{ig, zg};
  const CertifiedIso b = sym_square_sum_iso(c3, mixed);
  CHECK(b.decomposed.rank() == 15);
  CHECK(b.certificate.passed());

  const GroupPtr q8 = group_of(kQ8);
  const std::vector<ZGLattice> three{ig_star(q8).lattice, trivial_lattice(q8, 1), v_g(q8)};
  const CertifiedIso c = sym_square_sum_iso(q8, three);
  CHECK(c.certificate.passed());
  CHECK(verify_hom(c.iso).iso);
  CHECK(character(c.decomposed) == character(sym_square(direct_sum(q8, three).lattice).lattice()));
}

TEST_CASE("A (x) ZG is free of rank rank(A)") {
  for (const auto& f : fixture_groups()) {
    CAPTURE(f.name);
    const GroupPtr g = group_of(f.text);
    for (const ZGLattice& a : {ig_star(g).lattice, trivial_lattice(g, 2)}) {
      const CertifiedIso t = tensor_free_iso(a);
      CHECK(t.certificate.passed());
      CHECK(t.decomposed == free_lattice(g, a.rank()));
      const HomCertificate c = verify_hom(t.iso);
      CHECK(c.equivariant);
      CHECK(c.iso);
    }
  }
}

TEST_CASE("S^2(ZG) = ZG^(1+p) + V_G") {
  auto check = [](const std::string& text, std::size_t rank) {
    const GroupPtr g = group_of(text);
    const ZGSquareDecomposition d = sym_square_zg_iso(g);
    CHECK(d.result.decomposed.rank() == rank);
    CHECK(d.result.certificate.passed());
    const HomCertificate c = verify_hom(d.result.iso);
    CHECK(c.equivariant);
    CHECK(c.iso);
    // character oracle: sum of the summand characters
    CharacterVector expected = static_cast<long long>(1 + d.data.p) * regular_character(*g);
    expected = expected + character(v_g(g));
    CHECK(character(d.result.decomposed) == expected);
  };
  check(cyclic_text(3), 6);
  check(cyclic_text(2), 3);
  check(kQ8, 36);
  check(kS3, 21);
  check(kTrivial, 1);
}

TEST_CASE("stable exponents") {
  const GroupPtr c3 = group_of(cyclic_text(3));
  CHECK(stable_exponents(1, 1, 2, 2, *c3).exponent_q == 4);
  CHECK(stable_exponents(2, 2, 2, 2, *c3).exponent_q == 11);
  CHECK(stable_exponents(0, 0, 2, 2, *c3).exponent_q == 0);
  CHECK_THROWS_AS(stable_exponents(-1, 0, 2, 2, *c3), std::invalid_argument);
  // integral even when n (a - 1) / 2 is not
  const GroupPtr c2 = group_of(cyclic_text(2));
  for (long long a = 0; a < 6; ++a) {
    const StableExponents e = stable_exponents(a, a, 1, 3, *c2);
    CHECK(e.exponent_q == a * (1 + e.p + 1) + 2 * a * (a - 1) / 2);
    CHECK(e.exponent_r == a * (1 + e.p + 3) + a * (a - 1));
  }
}

TEST_CASE("minimal stabilisation") {
  CHECK(minimal_stabilisation(2, 2, 3) == std::pair<long long, long long>{0, 0});
  CHECK(minimal_stabilisation(2, 5, 3) == std::pair<long long, long long>{1, 0});
  CHECK(minimal_stabilisation(8, 2, 3) == std::pair<long long, long long>{0, 2});
  CHECK_FALSE(minimal_stabilisation(2, 3, 3));
  for (long long k = 0; k < 10; ++k)
    for (long long kp = 0; kp < 10; ++kp) {
      const auto s = minimal_stabilisation(k, kp, 4);
      CHECK(s.has_value() == ((k - kp) % 4 == 0));
      if (s) {
        CHECK(k + 4 * s->first == kp + 4 * s->second);
        CHECK(std::min(s->first, s->second) == 0);
      }
    }
}

TEST_CASE("stable comparison of two C3 presentations") {
  const HomotopyLattices l = homotopy_lattices(parse_presentation(cyclic_text(3)));
  const HomotopyLattices r = homotopy_lattices(parse_presentation(cyclic_twogen_text(3)));
  const auto iso = find_isomorphism(*l.group, *r.group);
  REQUIRE(iso);
  const ZGLattice pulled = pull_back(r.pi3, l.group, *iso);
  CHECK(l.pi2.lattice.rank() == 2);
  CHECK(r.pi2.lattice.rank() == 2);
  const StableComparison c = stable_compare(l.pi3, pulled, 2, 2, 1, 1);
  CHECK(c.exponents.exponent_q == 4);
  CHECK(c.lhs_rank == 3 + 3 * 4);
  CHECK(c.lhs_rank == c.rhs_rank);
  CHECK(c.lhs_character == c.rhs_character);
  CHECK(c.checks.passed());
  const Certificate* s = c.checks.find("stable isomorphism");
  REQUIRE(s);
  CHECK(s->status == Status::NecessaryOnly);

  // the identity is not a map between lattices of different rank
  const StableComparison bad = stable_compare(l.pi3, pulled, 2, 2, 1, 0, IntMatrix::identity(3));
  CHECK_FALSE(bad.checks.passed());
  CHECK_THROWS_AS(stable_compare(l.pi3, r.pi3, 2, 2, 0, 0), GroupMismatch);
}

TEST_CASE("a supplied isomorphism is certified") {
  const HomotopyLattices l = homotopy_lattices(parse_presentation(cyclic_text(3)));
  const StableComparison c = stable_compare(l.pi3, l.pi3, 2, 2, 0, 0, IntMatrix::identity(l.pi3.rank()));
  const Certificate* s = c.checks.find("supplied isomorphism");
  REQUIRE(s);
  CHECK(s->status == Status::Pass);
}

TEST_CASE("rational freeness agrees with two independent oracles") {
  for (const auto& f : fixture_groups()) {
    CAPTURE(f.name);
    const GroupPtr g = group_of(f.text);
    const HomotopyLattices h = homotopy_lattices(g->presentation());
    for (const ZGLattice& l : {h.pi3, h.pi2.lattice, free_lattice(g, 2), v_g(g), sym_square(free_lattice(g, 1)).lattice()}) {
      const RationalFreeness r = is_rationally_free(l);
      const FreenessOracle a = freeness_by_fixed_points(l);
      const FreenessOracle b = freeness_by_inner_product(character(l).values, *g);
      CHECK(r.free == a.free);
      CHECK(r.free == b.free);
      if (r.free) {
        CHECK(r.multiplicity == a.multiplicity);
        CHECK(r.multiplicity == b.multiplicity);
      }
    }
    // odd order: pi3 is rationally free
    if (g->order() % 2 == 1) CHECK(is_rationally_free(h.pi3).free);
  }
}

TEST_CASE("rational decomposition of pi3") {
  for (const auto& f : fixture_groups()) {
    CAPTURE(f.name);
    const HomotopyLattices h = homotopy_lattices(parse_presentation(f.text));
    const auto a = rational_free_excess(h.pi2.lattice.rank(), h.group->order());
    REQUIRE(a);
    CHECK(*a == (f.name == "S3" ? 1 : 0));  // the S3 fixture has three relators
    CHECK(rational_decomposition_check(h.pi3, *a).passed());
  }
  const HomotopyLattices dup = homotopy_lattices(parse_presentation("gens: x ; rels: x^3, x^3"));
  const auto a = rational_free_excess(dup.pi2.lattice.rank(), 3);
  REQUIRE(a);
  CHECK(*a == 1);
  CHECK(rational_decomposition_check(dup.pi3, 1).passed());
  CHECK_FALSE(rational_decomposition_check(dup.pi3, 0).passed());
  CHECK_FALSE(rational_free_excess(3, 3));
}
