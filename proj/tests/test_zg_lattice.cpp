#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "pi3/analysis.hpp"
#include "pi3/errors.hpp"
#include "pi3/ig_star.hpp"
#include "pi3/serialize.hpp"
#include "support.hpp"

using namespace pi3;
using namespace pi3::test;

namespace {

std::vector<ZGLattice> sample_lattices(const GroupPtr& g) {
  std::vector<ZGLattice> out{free_lattice(g, 1), free_lattice(g, 2), trivial_lattice(g, 2), ig_star(g).lattice,
                             v_g(g)};
  return out;
}

}  // namespace

TEST_CASE("free lattice characters") {
  CHECK(free_lattice(group_of(cyclic_text(3)), 0).rank() == 0);
  const ZGLattice c3 = free_lattice(group_of(cyclic_text(3)), 1);
  CHECK(c3.rank() == 3);
  CHECK(character(c3).values == std::vector<long long>{3, 0, 0});
  const ZGLattice q8 = free_lattice(group_of(kQ8), 2);
  CHECK(q8.rank() == 16);
  CHECK(character(q8).values == std::vector<long long>{16, 0, 0, 0, 0, 0, 0, 0});
}

TEST_CASE("character examples") {
  const GroupPtr c3 = group_of(cyclic_text(3));
  CHECK(character(ig_star(c3).lattice).values == std::vector<long long>{2, -1, -1});
  CHECK(character(v_g(group_of(cyclic_text(2)))).values == std::vector<long long>{1, 1});
  for (const auto& l : sample_lattices(c3)) CHECK(character(l)[0] == static_cast<long long>(l.rank()));
}

TEST_CASE("action laws on every fixture lattice") {
  std::mt19937_64 rng(11);
  for (const auto& f : fixture_groups()) {
    CAPTURE(f.name);
    const GroupPtr g = group_of(f.text);
    const std::size_t n = g->order();
    std::uniform_int_distribution<std::size_t> pick(0, n - 1);
    for (const auto& l : sample_lattices(g)) {
      for (Element h = 0; h < n; ++h) {
        CHECK(abs(determinant(l.action(h))) == 1);
        CHECK(character(l)[h] == trace_oracle(l, h));
      }
      for (int i = 0; i < 1000; ++i) {
        const Element a = pick(rng), b = pick(rng);
        CHECK(l.action(g->mul(a, b)) == l.action(b) * l.action(a));
      }
      // class function
      const CharacterVector chi = character(l);
      const auto classes = g->conjugacy_classes();
      for (Element h = 0; h < n; ++h)
        for (Element k = 0; k < n; ++k)
          if (classes[h] == classes[k]) CHECK(chi[h] == chi[k]);
    }
  }
}

TEST_CASE("direct sums and tensor products") {
  const GroupPtr c3 = group_of(cyclic_text(3));
  std::vector<ZGLattice> none;
  CHECK(direct_sum(c3, none).lattice.rank() == 0);
  const ZGLattice zg = free_lattice(c3, 1), ig = ig_star(c3).lattice;
  std::vector<ZGLattice> two{zg, zg};
  const DirectSum s = direct_sum(c3, two);
  CHECK(s.lattice.rank() == 6);
  CHECK(s.lattice == free_lattice(c3, 2));
  for (const auto& inj : s.injections) CHECK(verify_hom(inj).equivariant);
  std::vector<ZGLattice> mixed{ig, zg};
  CHECK(direct_sum(c3, mixed).lattice.rank() == 5);
  CHECK(tensor_over_z(zg, zg).rank() == 9);
  CHECK(tensor_over_z(free_lattice(c3, 0), zg).rank() == 0);

  for (const auto& f : fixture_groups()) {
    const GroupPtr g = group_of(f.text);
    const auto ls = sample_lattices(g);
    for (std::size_t i = 0; i < ls.size(); ++i)
      for (std::size_t j = 0; j < ls.size(); ++j) {
        std::vector<ZGLattice> pair{ls[i], ls[j]};
        CHECK(character(direct_sum(g, pair).lattice) == character(ls[i]) + character(ls[j]));
        if (ls[i].rank() * ls[j].rank() <= 64) {
          const CharacterVector t = character(tensor_over_z(ls[i], ls[j]));
          for (Element h = 0; h < g->order(); ++h) CHECK(t[h] == character(ls[i])[h] * character(ls[j])[h]);
        }
      }
  }
  CHECK_THROWS_AS(direct_sum(c3, std::vector<ZGLattice>{free_lattice(group_of(cyclic_text(3)), 1)}), GroupMismatch);
}

TEST_CASE("invalid actions are rejected") {
  const GroupPtr c3 = group_of(cyclic_text(3));
  CHECK_THROWS_AS(ZGLattice(c3, {IntMatrix::from_rows({{0, 1}, {1, 0}})}), InvariantViolation);
  CHECK_THROWS_AS(ZGLattice(c3, {IntMatrix::from_rows({{2}})}), InvariantViolation);
  CHECK_THROWS_AS(ZGLattice(c3, {}), DimensionMismatch);
  // Q8 relator x y x y^-1 must hold, not only the orders of x and y
  const GroupPtr q8 = group_of(kQ8);
  const IntMatrix x = IntMatrix::from_rows({{0, -1}, {1, 0}});
  CHECK_THROWS_AS(ZGLattice(q8, {x, x}), InvariantViolation);
}

TEST_CASE("verify_hom examples") {
  const GroupPtr c3 = group_of(cyclic_text(3));
  const ZGLattice zg = free_lattice(c3, 1);
  const HomCertificate id = verify_hom(LatticeHom(zg, zg, IntMatrix::identity(3)));
  CHECK(id.equivariant);
  CHECK(id.iso);
  const HomCertificate ax = verify_hom(LatticeHom(zg, zg, zg.action(c3->generator_image(0))));
  CHECK(ax.equivariant);
  CHECK(ax.iso);

  const GroupPtr q8 = group_of(kQ8);
  const ZGLattice zq = free_lattice(q8, 1);
  std::mt19937_64 rng(2);
  const HomCertificate bad = verify_hom(LatticeHom(zq, zq, random_matrix(rng, 8, 8, 3)));
  CHECK_FALSE(bad.equivariant);
  CHECK(bad.witness_generator.has_value());
  CHECK_FALSE(bad.as_certificate("random map", false).passed());
}

TEST_CASE("kernel lattices are pure and equivariant") {
  for (const std::string& text : {cyclic_text(3), kQ8, kS3}) {
    const HomotopyLattices h = homotopy_lattices(parse_presentation(text));
    CHECK(verify_hom(h.pi2.inclusion).equivariant);
    const SmithForm s = smith(h.pi2.inclusion.matrix);
    CHECK(s.invariant_factors == std::vector<Integer>(h.pi2.lattice.rank(), 1));
  }
  CHECK(homotopy_lattices(parse_presentation(cyclic_text(3))).pi2.lattice.rank() == 2);
  CHECK(homotopy_lattices(parse_presentation(kQ8)).pi2.lattice.rank() == 7);

  const GroupPtr c3 = group_of(cyclic_text(3));
  const KernelLattice k = kernel_lattice(IntMatrix(1, 3), free_lattice(c3, 1));
  CHECK(k.lattice.rank() == 3);
  CHECK(same_lattice(k.inclusion.matrix, IntMatrix::identity(3)));
}

TEST_CASE("induced lattice rejects unstable spans") {
  const GroupPtr c3 = group_of(cyclic_text(3));
  RatMatrix b(3, 1);
  b(0, 0) = 1;
  CHECK_THROWS_AS(induced_lattice(free_lattice(c3, 1), b), InvariantViolation);
}

TEST_CASE("Reynolds average is equivariant") {
  std::mt19937_64 rng(8);
  for (const auto& f : fixture_groups()) {
    const GroupPtr g = group_of(f.text);
    const ZGLattice a = ig_star(g).lattice, b = free_lattice(g, 1);
    const IntMatrix psi = average_to_equivariant(a, b, random_matrix(rng, b.rank(), a.rank(), 2));
    CHECK(verify_hom(LatticeHom(a, b, psi)).equivariant);
  }
}

TEST_CASE("equivariant hom bases") {
  const GroupPtr c3 = group_of(cyclic_text(3));
  const auto end_zg = equivariant_hom_basis(free_lattice(c3, 1), free_lattice(c3, 1));
  CHECK(end_zg.size() == 3);  // End(ZG) = ZG
  for (const auto& m : end_zg) CHECK(verify_hom(LatticeHom(free_lattice(c3, 1), free_lattice(c3, 1), m)).equivariant);
  const GroupPtr q8 = group_of(kQ8);
  CHECK(equivariant_hom_basis(ig_star(q8).lattice, ig_star(q8).lattice).size() == 7);
  CHECK(equivariant_hom_basis(trivial_lattice(q8, 1), ig_star(q8).lattice).empty());
}

TEST_CASE("find_equivariant_iso recovers pi2 = IG* on fixtures") {
  for (const std::string& text : {cyclic_text(3), kQ8, cyclic_text(5), cyclic_text(12), kS3Balanced}) {
    CAPTURE(text);
    const HomotopyLattices h = homotopy_lattices(parse_presentation(text));
    const auto iso = find_equivariant_iso(h.pi2.lattice, ig_star(h.group).lattice);
    REQUIRE(iso);
    const HomCertificate c = verify_hom(*iso);
    CHECK(c.equivariant);
    CHECK(c.iso);
  }
  const GroupPtr c3 = group_of(cyclic_text(3));
  CHECK_FALSE(find_equivariant_iso(free_lattice(c3, 1), trivial_lattice(c3, 3)));
}

TEST_CASE("pull_back along a group isomorphism") {
  const GroupPtr a = group_of(cyclic_text(3)), b = group_of(cyclic_twogen_text(3));
  const auto iso = find_isomorphism(*a, *b);
  REQUIRE(iso);
  const ZGLattice pulled = pull_back(ig_star(b).lattice, a, *iso);
  CHECK(pulled.group() == a);
  for (Element g = 0; g < 3; ++g) CHECK(character(pulled)[g] == character(ig_star(b).lattice)[(*iso)[g]]);
}

TEST_CASE("lattice JSON round-trips bit-exactly") {
  const GroupPtr q8 = group_of(kQ8);
  for (const auto& l : sample_lattices(q8)) {
    const nlohmann::json j = to_json(l);
    const ZGLattice back = lattice_from_json(nlohmann::json::parse(j.dump()), q8);
    CHECK(back == l);
    CHECK(to_json(back).dump() == j.dump());
  }
  CHECK_THROWS_AS(lattice_from_json(to_json(free_lattice(q8, 1)), group_of(cyclic_text(3))), GroupMismatch);
}

TEST_CASE("integers beyond 64 bits serialize as strings") {
  const Integer big("-98765432109876543210987654321");
  CHECK(integer_to_json(big).is_string());
  CHECK(integer_from_json(integer_to_json(big)) == big);
  CHECK(integer_to_json(Integer(-7)).is_number_integer());
  CHECK(integer_from_json(integer_to_json(Integer(-7))) == -7);
  IntMatrix m(1, 2);
  m(0, 0) = big;
  m(0, 1) = 3;
  CHECK(int_matrix_from_json(to_json(m)) == m);
}
