#include "pi3/decomposition.hpp"

#include <algorithm>

#include "pi3/errors.hpp"

namespace pi3 {

InvolutionData involution_pairs(const FiniteGroup& g) {
  InvolutionData d;
  for (Element x = 1; x < g.order(); ++x) {
    const Element inv = g.inverse(x);
    if (inv == x)
      d.involutions.push_back(x);
    else if (x < inv)
      d.transversal.push_back(x);
  }
  d.p = d.transversal.size();
  return d;
}

std::vector<Element> involution_coset_reps(const FiniteGroup& g, Element t) {
  std::vector<Element> reps;
  for (Element h = 0; h < g.order(); ++h)
    if (h < g.mul(t, h)) reps.push_back(h);
  return reps;
}

namespace {

void require_involution(const FiniteGroup& g, Element t) {
  if (t == FiniteGroup::identity || t >= g.order() || g.mul(t, t) != FiniteGroup::identity)
    throw std::invalid_argument("element " + std::to_string(t) + " is not an involution");
}

std::size_t position_of(const std::vector<Element>& sorted, Element x) {
  auto it = std::lower_bound(sorted.begin(), sorted.end(), x);
  if (it == sorted.end() || *it != x) throw InvariantViolation("element missing from transversal");
  return static_cast<std::size_t>(it - sorted.begin());
}

}  // namespace

ZGLattice involution_ideal(const GroupPtr& group, Element t) {
  const FiniteGroup& G = *group;
  require_involution(G, t);
  const std::vector<Element> reps = involution_coset_reps(G, t);
  std::vector<IntMatrix> gens;
  for (Element x : G.generator_images()) {
    // (1+t) r x = (1+t) rep(r x), since (1+t) t = 1+t.
    IntMatrix m(reps.size(), reps.size());
    for (std::size_t c = 0; c < reps.size(); ++c) {
      Element h = G.mul(reps[c], x);
      if (G.mul(t, h) < h) h = G.mul(t, h);
      m(position_of(reps, h), c) = 1;
    }
    gens.push_back(std::move(m));
  }
  return ZGLattice(group, std::move(gens));
}

ZGLattice v_g(const GroupPtr& group) {
  std::vector<ZGLattice> parts;
  for (Element t : involution_pairs(*group).involutions) parts.push_back(involution_ideal(group, t));
  return direct_sum(group, parts).lattice;
}

namespace {

CertificateSet certify_iso(const LatticeHom& h, const std::string& claim) {
  CertificateSet s;
  s.add(verify_hom(h).as_certificate(claim, true));
  return s;
}

}  // namespace

CertifiedIso sym_square_sum_iso(const GroupPtr& group, std::span<const ZGLattice> parts) {
  for (const auto& p : parts)
    if (p.group() != group) throw GroupMismatch("symmetric square of a sum over different groups");
  const std::size_t m = parts.size();
  const DirectSum sum = direct_sum(group, parts);
  const SymSquare source(sum.lattice);

  std::vector<ZGLattice> summands;
  std::vector<std::size_t> sym_offset(m), tensor_offset(m * m);
  std::size_t offset = 0;
  for (std::size_t i = 0; i < m; ++i) {
    summands.push_back(sym_square(parts[i]).lattice());
    sym_offset[i] = offset;
    offset += summands.back().rank();
  }
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j) {
      summands.push_back(tensor_over_z(parts[i], parts[j]));
      tensor_offset[i * m + j] = offset;
      offset += summands.back().rank();
    }
  ZGLattice target = direct_sum(group, summands).lattice;

  // part and local index of each coordinate of the sum
  std::vector<std::size_t> part_of(sum.lattice.rank()), local(sum.lattice.rank());
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t r = 0; r < parts[i].rank(); ++r) {
      part_of[sum.offsets[i] + r] = i;
      local[sum.offsets[i] + r] = r;
    }

  IntMatrix iso(target.rank(), source.rank());
  for (std::size_t pos = 0; pos < source.rank(); ++pos) {
    const SymIndex& ix = source.index(pos);
    const std::size_t i = part_of[ix.i], j = part_of[ix.j];
    const std::size_t r = local[ix.i], s = local[ix.j];
    if (i == j)
      iso(sym_offset[i] + sym_position(parts[i].rank(), r, s), pos) = 1;
    else
      iso(tensor_offset[i * m + j] + r * parts[j].rank() + s, pos) = 1;
  }

  LatticeHom hom(source.lattice(), target, std::move(iso));
  CertificateSet cert = certify_iso(hom, "symmetric square of a sum splits");
  cert.add(Certificate::check("rank of S^2 of a sum", source.rank() == target.rank(),
                              std::to_string(source.rank()) + " vs " + std::to_string(target.rank())));
  return {std::move(target), std::move(hom), std::move(cert)};
}

CertifiedIso tensor_free_iso(const ZGLattice& a) {
  const GroupPtr& group = a.group();
  const FiniteGroup& G = *group;
  const std::size_t n = G.order(), k = a.rank();
  const ZGLattice source = tensor_over_z(a, free_lattice(group, 1));
  ZGLattice target = free_lattice(group, k);

  // inverse of e_i g -> (e_i g) (x) g, blockwise in g
  IntMatrix iso(k * n, k * n);
  for (Element g = 0; g < n; ++g) {
    const IntMatrix& inv = a.action(G.inverse(g));
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t r = 0; r < k; ++r) iso(i * n + g, r * n + g) = inv(i, r);
  }

  LatticeHom hom(source, target, std::move(iso));
  CertificateSet cert = certify_iso(hom, "tensor with ZG is free");
  cert.add(Certificate::check("character of A (x) ZG is rank(A) times regular",
                              character(source) == static_cast<long long>(k) * regular_character(G)));
  return {std::move(target), std::move(hom), std::move(cert)};
}

ZGSquareDecomposition sym_square_zg_iso(const GroupPtr& group) {
  const FiniteGroup& G = *group;
  const std::size_t n = G.order();
  InvolutionData data = involution_pairs(G);
  const SymSquare source(free_lattice(group, 1));

  std::vector<ZGLattice> parts(1 + data.p, free_lattice(group, 1));
  std::vector<std::vector<Element>> reps;
  for (Element t : data.involutions) {
    parts.push_back(involution_ideal(group, t));
    reps.push_back(involution_coset_reps(G, t));
  }
  const DirectSum target = direct_sum(group, parts);

  IntMatrix iso(target.lattice.rank(), source.rank());
  for (std::size_t pos = 0; pos < source.rank(); ++pos) {
    const SymIndex& ix = source.index(pos);
    const Element h1 = ix.i, h2 = ix.j;
    if (h1 == h2) {
      iso(target.offsets[0] + h1, pos) = 1;
      continue;
    }
    // pair(h1, h2) = (e (x) g + g (x) e) h1 with g = h2 h1^-1
    const Element g = G.mul(h2, G.inverse(h1));
    const Element gi = G.inverse(g);
    if (g == gi) {
      const std::size_t t = position_of(data.involutions, g);
      iso(target.offsets[1 + data.p + t] + position_of(reps[t], std::min(h1, h2)), pos) = 1;
    } else if (g < gi) {
      iso(target.offsets[1 + position_of(data.transversal, g)] + h1, pos) = 1;
    } else {
      iso(target.offsets[1 + position_of(data.transversal, gi)] + h2, pos) = 1;
    }
  }

  LatticeHom hom(source.lattice(), target.lattice, std::move(iso));
  CertificateSet cert = certify_iso(hom, "S^2(ZG) splits as free plus V_G");
  const std::size_t t = data.involutions.size();
  cert.add(Certificate::check("n(n+1)/2 = n(1+p) + |T| n/2", n * (n + 1) / 2 == n * (1 + data.p) + t * n / 2));
  cert.add(Certificate::check("2p + |T| = n - 1", 2 * data.p + t == n - 1));
  return {{target.lattice, std::move(hom), std::move(cert)}, std::move(data)};
}

namespace {

long long exponent(long long a, long long p, long long k, long long n) { return a * (1 + p + k) + n * a * (a - 1) / 2; }

}  // namespace

StableExponents stable_exponents(long long a, long long b, long long k, long long k_prime, const FiniteGroup& g) {
  if (a < 0 || b < 0) throw std::invalid_argument("stabilisation counts must be nonnegative");
  StableExponents e;
  e.a = a;
  e.b = b;
  e.k = k;
  e.k_prime = k_prime;
  e.n = static_cast<long long>(g.order());
  e.p = static_cast<long long>(involution_pairs(g).p);
  e.exponent_q = exponent(a, e.p, k, e.n);
  e.exponent_r = exponent(b, e.p, k_prime, e.n);
  return e;
}

std::optional<std::pair<long long, long long>> minimal_stabilisation(long long k, long long k_prime, long long n) {
  if (n <= 0) throw std::invalid_argument("group order must be positive");
  const long long d = k_prime - k;
  if (d % n != 0) return std::nullopt;
  if (d >= 0) return std::pair{d / n, 0LL};
  return std::pair{0LL, -d / n};
}

StableComparison stable_compare(const ZGLattice& pi3_x, const ZGLattice& pi3_x_prime, long long k, long long k_prime,
                                long long a, long long b, const std::optional<IntMatrix>& supplied_iso) {
  const GroupPtr& group = pi3_x.group();
  if (pi3_x_prime.group() != group) throw GroupMismatch("stable comparison of lattices over different groups");
  StableComparison out;
  out.exponents = stable_exponents(a, b, k, k_prime, *group);

  const ZGLattice v = v_g(group);
  auto stabilise = [&](const ZGLattice& base, long long free_rank, long long copies) {
    std::vector<ZGLattice> parts{base, free_lattice(group, static_cast<std::size_t>(free_rank))};
    for (long long i = 0; i < copies; ++i) parts.push_back(v);
    return direct_sum(group, parts).lattice;
  };
  const ZGLattice lhs = stabilise(pi3_x, out.exponents.exponent_q, a);
  const ZGLattice rhs = stabilise(pi3_x_prime, out.exponents.exponent_r, b);
  out.lhs_rank = lhs.rank();
  out.rhs_rank = rhs.rank();
  out.lhs_character = character(lhs);
  out.rhs_character = character(rhs);

  out.checks.add(Certificate::check("stabilised ranks agree", out.lhs_rank == out.rhs_rank,
                                    std::to_string(out.lhs_rank) + " vs " + std::to_string(out.rhs_rank)));
  std::optional<std::string> differing;
  for (Element g = 0; g < out.lhs_character.size(); ++g)
    if (out.lhs_character[g] != out.rhs_character[g]) {
      differing = "element " + group->name(g);
      break;
    }
  out.checks.add(Certificate::check("stabilised characters agree", !differing, differing));
  if (group->order() % 2 == 1) out.checks.add(Certificate::check("V_G vanishes for odd order", v.rank() == 0));

  if (supplied_iso) {
    if (supplied_iso->rows() != rhs.rank() || supplied_iso->cols() != lhs.rank()) {
      out.checks.add(Certificate::check("supplied isomorphism", false, "matrix has the wrong shape"));
    } else {
      out.checks.add(verify_hom(LatticeHom(lhs, rhs, *supplied_iso)).as_certificate("supplied isomorphism", true));
    }
  } else {
    out.checks.add({"stable isomorphism", Status::NecessaryOnly, std::nullopt});
  }
  return out;
}

RationalFreeness is_rationally_free(const ZGLattice& l) {
  const CharacterVector chi = character(l);
  const long long n = static_cast<long long>(l.group()->order());
  for (Element g = 1; g < chi.size(); ++g)
    if (chi[g] != 0) return {false, 0};
  if (chi[FiniteGroup::identity] % n != 0) return {false, 0};
  return {true, chi[FiniteGroup::identity] / n};
}

std::optional<long long> rational_free_excess(std::size_t rank_pi2, std::size_t n) {
  if (n == 0 || rank_pi2 + 1 < n) return std::nullopt;
  const std::size_t excess = rank_pi2 - (n - 1);
  if (excess % n != 0) return std::nullopt;
  return static_cast<long long>(excess / n);
}

CertificateSet rational_decomposition_check(const ZGLattice& pi3, long long a) {
  if (a < 0) throw std::invalid_argument("a must be nonnegative");
  const GroupPtr& group = pi3.group();
  const FiniteGroup& G = *group;
  const long long n = static_cast<long long>(G.order());
  const long long p = static_cast<long long>(involution_pairs(G).p);
  const long long q = exponent(a, p, n - 1, n);
  const CharacterVector expected = (p + q) * regular_character(G) + (a + 1) * character(v_g(group));
  const CharacterVector actual = character(pi3);

  CertificateSet s;
  std::optional<std::string> differing;
  for (Element g = 0; g < actual.size(); ++g)
    if (actual[g] != expected[g]) {
      differing = "element " + G.name(g) + ": " + std::to_string(actual[g]) + " vs " + std::to_string(expected[g]);
      break;
    }
  s.add(Certificate::check("pi3 (x) Q = QG^(p+q) + (V_G (x) Q)^(a+1)", !differing, differing));
  if (G.order() % 2 == 1) {
    const RationalFreeness f = is_rationally_free(pi3);
    s.add(Certificate::check("odd order: pi3 (x) Q is QG-free", f.free));
  }
  return s;
}

ZGElement coset_transversal_st(const GroupPtr& group, Element t) {
  const FiniteGroup& G = *group;
  require_involution(G, t);
  ZGElement st(group);
  for (Element h : involution_coset_reps(G, t)) st.set(h, 1);
  const ZGElement one_plus_t = ZGElement::basis(group, FiniteGroup::identity) + ZGElement::basis(group, t);
  if (!(one_plus_t * st == sigma(group))) throw InvariantViolation("(1+t) S_t differs from Sigma");
  return st;
}

}  // namespace pi3
