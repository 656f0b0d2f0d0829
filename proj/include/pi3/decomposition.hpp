#pragma once

#include <optional>
#include <span>
#include <vector>

#include "pi3/certificate.hpp"
#include "pi3/group_ring.hpp"
#include "pi3/sym_square.hpp"
#include "pi3/zg_lattice.hpp"

namespace pi3 {

/// Inverse-pair bookkeeping for G. `transversal` holds the smaller-index element of each
/// pair {g, g^-1} with g != g^-1; `involutions` are the elements of order exactly 2.
struct InvolutionData {
  std::size_t p = 0;
  std::vector<Element> involutions;
  std::vector<Element> transversal;
};

InvolutionData involution_pairs(const FiniteGroup& g);

/// Elements h with index(h) < index(t h): one from each pair {h, t h}.
std::vector<Element> involution_coset_reps(const FiniteGroup& g, Element t);

/// The right ideal (1+t)ZG with Z-basis (1+t)h over involution_coset_reps.
ZGLattice involution_ideal(const GroupPtr& group, Element t);

/// V_G: direct sum of (1+t)ZG over the involutions t, in index order.
ZGLattice v_g(const GroupPtr& group);

/// A lattice together with a certified explicit isomorphism onto it.
struct CertifiedIso {
  ZGLattice decomposed;
  LatticeHom iso;
  CertificateSet certificate;
};

/// S^2(A_1 + ... + A_m) -> sum_i S^2(A_i) + sum_{i<j} A_i (x) A_j, ordered as
/// S^2 summands first, then tensor summands lexicographically in (i, j).
CertifiedIso sym_square_sum_iso(const GroupPtr& group, std::span<const ZGLattice> parts);

/// A (x)_Z ZG -> ZG^k built from the basis (e_i g) (x) g.
CertifiedIso tensor_free_iso(const ZGLattice& a);

/// S^2(ZG) -> ZG^{1+p} + V_G. Summands: the (e(x)e)ZG copy, then one ZG per transversal
/// element g (spanned by e(x)g + g(x)e), then (1+t)ZG per involution t.
struct ZGSquareDecomposition {
  CertifiedIso result;
  InvolutionData data;
};

ZGSquareDecomposition sym_square_zg_iso(const GroupPtr& group);

struct StableExponents {
  long long a = 0, b = 0;
  long long k = 0, k_prime = 0;
  long long n = 0, p = 0;
  long long exponent_q = 0, exponent_r = 0;
};

/// exponent_q = a(1+p+k) + n a(a-1)/2, exponent_r likewise with (b, k').
StableExponents stable_exponents(long long a, long long b, long long k, long long k_prime, const FiniteGroup& g);

/// Smallest a, b >= 0 with k + n a = k' + n b, if any.
std::optional<std::pair<long long, long long>> minimal_stabilisation(long long k, long long k_prime, long long n);

struct StableComparison {
  StableExponents exponents;
  std::size_t lhs_rank = 0, rhs_rank = 0;
  CharacterVector lhs_character, rhs_character;
  CertificateSet checks;
};

/// Builds pi3(X) + ZG^q + V_G^a and pi3(X') + ZG^r + V_G^b and checks the necessary
/// conditions for an isomorphism (rank, character). A supplied matrix is certified as an
/// equivariant unimodular map lhs -> rhs. Never claims that an iso exists otherwise.
StableComparison stable_compare(const ZGLattice& pi3_x, const ZGLattice& pi3_x_prime, long long k, long long k_prime,
                                long long a, long long b, const std::optional<IntMatrix>& supplied_iso = std::nullopt);

struct RationalFreeness {
  bool free = false;
  long long multiplicity = 0;
};

/// L (x) Q is QG-free iff its character is a multiple of the regular character.
RationalFreeness is_rationally_free(const ZGLattice& l);

/// Character form of pi3 (x) Q = QG^{p+q} + (V_G (x) Q)^{a+1}, with q the stable exponent
/// for k = n - 1.
CertificateSet rational_decomposition_check(const ZGLattice& pi3, long long a);

/// a with rank(pi2) = (n - 1) + n a, if integral and nonnegative.
std::optional<long long> rational_free_excess(std::size_t rank_pi2, std::size_t n);

/// S_t with (1+t) S_t = Sigma. Throws std::invalid_argument unless t is an involution.
ZGElement coset_transversal_st(const GroupPtr& group, Element t);

}  // namespace pi3
