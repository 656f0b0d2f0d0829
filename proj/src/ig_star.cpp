#include "pi3/ig_star.hpp"

#include "pi3/errors.hpp"
#include "pi3/normal_form.hpp"

namespace pi3 {

namespace {

// Coordinates of delta(g) in IG*.
IntVector delta_coords(std::size_t n, Element g) {
  IntVector v(n - 1);
  if (g == FiniteGroup::identity)
    for (auto& x : v) x = -1;
  else
    v[g - 1] = 1;
  return v;
}

bool smith_all_ones(const IntMatrix& m, std::size_t expected_rank) {
  const SmithForm s = smith(m);
  if (s.invariant_factors.size() != expected_rank) return false;
  for (const auto& d : s.invariant_factors)
    if (d != 1) return false;
  return true;
}

Rational half(const Integer& v) {
  Rational r(v, 2);
  r.canonicalize();
  return r;
}

}  // namespace

IgStar ig_star(const GroupPtr& group) {
  const FiniteGroup& G = *group;
  const std::size_t n = G.order();
  std::vector<IntMatrix> gens;
  for (Element x : G.generator_images()) {
    IntMatrix m(n - 1, n - 1);
    for (Element g = 1; g < n; ++g) m.set_column(g - 1, delta_coords(n, G.mul(g, x)));
    gens.push_back(std::move(m));
  }
  ZGLattice lattice(group, std::move(gens));
  IntMatrix d(n - 1, n);
  for (Element g = 0; g < n; ++g) d.set_column(g, delta_coords(n, g));
  LatticeHom delta(free_lattice(group, 1), lattice, std::move(d));
  return {lattice, std::move(delta)};
}

DeltaPrime delta_prime(const GroupPtr& group) {
  const IgStar ig = ig_star(group);
  const SymSquare source(ig.delta.source), target(ig.lattice);
  LatticeHom hom(source.lattice(), target.lattice(), sym_square_matrix(ig.delta.matrix));
  CertificateSet c;
  c.add(verify_hom(hom).as_certificate("delta' is equivariant", false));
  c.add(Certificate::check("delta' is surjective (Smith factors all 1)", smith_all_ones(hom.matrix, target.rank())));
  return {std::move(hom), std::move(c)};
}

IntVector u_vector(const FiniteGroup& g) {
  const std::size_t n = g.order();
  IntVector u(sym_rank(n));
  u[sym_position(n, 0, 0)] = 2;
  for (Element h = 1; h < n; ++h) u[sym_position(n, 0, h)] = 1;
  return u;
}

IntVector sigma_sigma_vector(const FiniteGroup& g) { return IntVector(sym_rank(g.order()), 1); }

CertificateSet kernel_delta_prime_check(const GroupPtr& group) {
  const FiniteGroup& G = *group;
  const std::size_t n = G.order();
  const DeltaPrime dp = delta_prime(group);
  const IntMatrix kernel = integer_kernel(dp.hom.matrix);

  const ZGLattice& s2 = dp.hom.source;
  const IntVector u = u_vector(G);
  IntMatrix span(s2.rank(), n + 1);
  for (Element g = 0; g < n; ++g) span.set_column(g, s2.act(u, g));
  span.set_column(n, sigma_sigma_vector(G));

  CertificateSet c;
  c.add(Certificate::check("rank ker delta' = n", kernel.cols() == n,
                           "rank " + std::to_string(kernel.cols()) + ", expected " + std::to_string(n)));
  bool inside = true;
  std::optional<std::string> witness;
  for (std::size_t j = 0; j < span.cols() && inside; ++j)
    for (const auto& v : dp.hom.matrix * span.column(j))
      if (v != 0) {
        inside = false;
        witness = j < n ? "u " + G.name(j) + " is not in the kernel" : "Sigma (x) Sigma is not in the kernel";
        break;
      }
  c.add(Certificate::check("u G and Sigma (x) Sigma lie in ker delta'", inside, witness));
  const bool equal = inside && same_lattice(kernel, span);
  c.add(Certificate::check("ker delta' = ZG-span of u, u Sigma / 2", equal,
                           "the span has index > 1 in the kernel"));
  return c;
}

MLattice m_lattice(const GroupPtr& group) {
  const FiniteGroup& G = *group;
  InvolutionData data = involution_pairs(G);
  std::vector<ZGLattice> parts(data.p, free_lattice(group, 1));
  for (Element t : data.involutions) parts.push_back(involution_ideal(group, t));
  DirectSum sum = direct_sum(group, parts);
  IntVector u(sum.lattice.rank());
  for (std::size_t i = 0; i < data.p; ++i) {
    const Element g = data.transversal[i];
    u[sum.offsets[i] + FiniteGroup::identity] -= 1;
    u[sum.offsets[i] + G.inverse(g)] -= 1;
  }
  // e_t is (1+t)e, and e is always the first coset representative
  for (std::size_t i = 0; i < data.involutions.size(); ++i) u[sum.offsets[data.p + i]] -= 1;
  return {std::move(sum.lattice), std::move(u), std::move(sum.offsets), std::move(data)};
}

IntMatrix AdjoinedLattice::doubled_basis() const { return to_integer(Rational(2) * basis); }

AdjoinedLattice adjoin_half(const ZGLattice& base, const IntVector& half_of) {
  const std::size_t k = base.rank();
  if (half_of.size() != k) throw DimensionMismatch("adjoined vector has the wrong length");
  const FiniteGroup& G = *base.group();
  // 2L is spanned by 2M and the G-orbit of the vector
  IntMatrix gens(k, k + G.order());
  for (std::size_t i = 0; i < k; ++i) gens(i, i) = 2;
  for (Element g = 0; g < G.order(); ++g) gens.set_column(k + g, base.act(half_of, g));
  const IntMatrix doubled = lattice_basis(gens);
  const RatMatrix basis = Rational(1, 2) * to_rational(doubled);

  AdjoinedLattice out{base, {}, induced_lattice(base, basis), basis, 0, false};
  for (const auto& v : half_of) out.adjoined.push_back(half(v));
  // [L : M] = 2^k / det(2L basis)
  Integer det = abs(determinant(doubled));
  Integer pow2 = 1;
  for (std::size_t i = 0; i < k; ++i) pow2 *= 2;
  out.index = pow2 / det;
  out.degenerate = out.index == 1;
  return out;
}

CertificateSet verify_half_relations(const MLattice& m) {
  const ZGLattice& M = m.lattice;
  const GroupPtr& group = M.group();
  const FiniteGroup& G = *group;
  CertificateSet c;

  std::vector<Rational> halved(m.u_m.size());
  for (std::size_t i = 0; i < halved.size(); ++i) halved[i] = half(m.u_m[i]);
  bool doubled_ok = true;
  for (std::size_t i = 0; i < halved.size(); ++i) doubled_ok = doubled_ok && 2 * halved[i] == m.u_m[i];
  c.add(Certificate::check("(u_M/2) 2 = u_M", doubled_ok));

  // (u_M/2) Sigma, summed over the orbit
  std::vector<Rational> lhs(halved.size());
  for (Element g = 0; g < G.order(); ++g) {
    const IntVector moved = M.act(m.u_m, g);
    for (std::size_t i = 0; i < lhs.size(); ++i) lhs[i] += half(moved[i]);
  }
  // -(sum_g e_g Sigma + sum_t e_t S_t): e_t S_t is (1+t) S_t in the (1+t)ZG summand
  IntVector rhs(halved.size());
  const std::size_t n = G.order();
  for (std::size_t i = 0; i < m.data.p; ++i)
    for (Element h = 0; h < n; ++h) rhs[m.offsets[i] + h] = -1;
  for (std::size_t i = 0; i < m.data.involutions.size(); ++i) {
    const Element t = m.data.involutions[i];
    const ZGElement st = coset_transversal_st(group, t);
    const std::vector<Element> reps = involution_coset_reps(G, t);
    for (std::size_t r = 0; r < reps.size(); ++r) {
      // coefficient of (1+t) reps[r] in (1+t) S_t
      const Integer c_rep = st.coefficient(reps[r]) + st.coefficient(G.mul(t, reps[r]));
      rhs[m.offsets[m.data.p + i] + r] = -c_rep;
    }
  }
  std::optional<std::string> witness;
  for (std::size_t i = 0; i < lhs.size() && !witness; ++i)
    if (lhs[i] != rhs[i]) witness = "coordinate " + std::to_string(i);
  c.add(Certificate::check("(u_M/2) Sigma = -(sum e_g Sigma + sum e_t S_t)", !witness, witness));
  return c;
}

AdjoinedLattice group_ring_overlattice(const GroupPtr& group, const ZGElement& u) {
  if (u.group() != group) throw GroupMismatch("adjoined element lives over a different group");
  const auto dense = u.dense();
  return adjoin_half(free_lattice(group, 1), IntVector(dense.begin(), dense.end()));
}

bool same_overlattice(const AdjoinedLattice& a, const AdjoinedLattice& b) {
  return a.base == b.base && a.doubled_basis() == b.doubled_basis();
}

bool HalfPresentation::full() const { return iso.has_value() && checks.passed(); }

HalfPresentation verify_half_presentation(const ZGLattice& pi2, const std::optional<IntMatrix>& pi2_to_ig_star) {
  const GroupPtr& group = pi2.group();
  const FiniteGroup& G = *group;
  const std::size_t n = G.order();
  HalfPresentation r;
  const IgStar ig = ig_star(group);

  if (n == 1) {
    r.checks.add(Certificate::check("pi2 = IG* = 0", pi2.rank() == 0));
    return r;
  }

  MLattice m = m_lattice(group);
  r.checks.append(verify_half_relations(m));
  AdjoinedLattice l = adjoin_half(m.lattice, m.u_m);
  r.checks.add(Certificate::check("u_M/2 is not already in M", !l.degenerate));
  r.m = m;
  r.adjoined = l;

  // stage 1: pi2 -> IG*
  if (pi2_to_ig_star) {
    if (pi2_to_ig_star->rows() != ig.lattice.rank() || pi2_to_ig_star->cols() != pi2.rank()) {
      r.checks.add(Certificate::check("pi2 -> IG* is an equivariant isomorphism", false, "matrix has the wrong shape"));
      return r;
    }
    LatticeHom h(pi2, ig.lattice, *pi2_to_ig_star);
    r.checks.add(verify_hom(h).as_certificate("pi2 -> IG* is an equivariant isomorphism", true));
    if (!r.checks.passed()) return r;
    r.pi2_iso = std::move(h);
  } else {
    r.pi2_iso = find_equivariant_iso(pi2, ig.lattice);
    if (!r.pi2_iso) {
      const bool chars = character(sym_square(pi2).lattice()) == character(l.result);
      r.checks.add(chars ? Certificate{"S^2(pi2) and M[u_M/2] have equal characters", Status::NecessaryOnly,
                                       "no isomorphism pi2 -> IG* was found"}
                         : Certificate::check("S^2(pi2) and M[u_M/2] have equal characters", false));
      return r;
    }
    r.checks.add(verify_hom(*r.pi2_iso).as_certificate("pi2 -> IG* is an equivariant isomorphism", true));
  }

  // stage 2: Psi : S^2(ZG) -> L, e (x) e -> u_M/2 and the other summands onto M
  const ZGSquareDecomposition split = sym_square_zg_iso(group);
  r.checks.append(split.result.certificate);
  const std::size_t km = m.lattice.rank();
  RatMatrix w(km, split.result.decomposed.rank());
  for (Element h = 0; h < n; ++h) {
    const IntVector moved = m.lattice.act(m.u_m, h);
    for (std::size_t i = 0; i < km; ++i) w(i, h) = half(moved[i]);
  }
  for (std::size_t i = 0; i < km; ++i) w(i, n + i) = 1;
  const RatMatrix psi_m = w * to_rational(split.result.iso.matrix);
  const auto psi_l = solve_rational(l.basis, psi_m);
  IntMatrix psi;
  try {
    if (!psi_l) throw std::domain_error("not in the span");
    psi = to_integer(*psi_l);
  } catch (const std::domain_error&) {
    r.checks.add(Certificate::check("S^2(ZG) -> M[u_M/2] is integral", false));
    return r;
  }
  const DeltaPrime dp = delta_prime(group);
  r.checks.append(dp.certificate);
  LatticeHom psi_hom(dp.hom.source, l.result, psi);
  r.checks.add(verify_hom(psi_hom).as_certificate("S^2(ZG) -> M[u_M/2] is equivariant", false));
  r.checks.add(Certificate::check("S^2(ZG) -> M[u_M/2] is surjective", smith_all_ones(psi, l.result.rank())));
  r.checks.add(Certificate::check("S^2(ZG) -> M[u_M/2] has kernel ker delta'",
                                  same_lattice(integer_kernel(psi), integer_kernel(dp.hom.matrix))));

  // stage 3: the induced map S^2(IG*) -> L, read off on pairs of non-identity elements
  const SymSquare s2ig(ig.lattice);
  IntMatrix theta(l.result.rank(), s2ig.rank());
  for (std::size_t pos = 0; pos < s2ig.rank(); ++pos) {
    const SymIndex& ix = s2ig.index(pos);
    const std::size_t src = sym_position(n, ix.i + 1, ix.j + 1);
    for (std::size_t i = 0; i < theta.rows(); ++i) theta(i, pos) = psi(i, src);
  }
  LatticeHom theta_hom(s2ig.lattice(), l.result, theta);
  r.checks.add(Certificate::check("S^2(IG*) -> M[u_M/2] factors S^2(ZG) -> M[u_M/2] through delta'",
                                  theta * dp.hom.matrix == psi));
  r.checks.add(verify_hom(theta_hom).as_certificate("S^2(IG*) -> M[u_M/2] is an equivariant isomorphism", true));

  // stage 4: compose with S^2 of pi2 -> IG*
  const SymSquare s2pi2(pi2);
  LatticeHom full = compose(theta_hom, sym_square_hom(*r.pi2_iso, s2pi2, s2ig));
  r.checks.add(verify_hom(full).as_certificate("S^2(pi2) -> M[u_M/2] is an equivariant isomorphism", true));
  if (r.checks.passed()) r.iso = std::move(full);
  return r;
}

std::optional<LatticeHom> iso_onto(const HalfPresentation& r, const AdjoinedLattice& other) {
  if (!r.iso || !r.adjoined || !same_overlattice(*r.adjoined, other)) return std::nullopt;
  // equal HNF bases, so the coordinates carry over unchanged
  LatticeHom h(r.iso->source, other.result, r.iso->matrix);
  if (!verify_hom(h).iso) return std::nullopt;
  return h;
}

}  // namespace pi3
