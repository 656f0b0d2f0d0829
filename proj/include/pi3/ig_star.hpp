#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pi3/certificate.hpp"
#include "pi3/decomposition.hpp"
#include "pi3/group_ring.hpp"
#include "pi3/sym_square.hpp"
#include "pi3/zg_lattice.hpp"

namespace pi3 {

/// IG* = ZG / Z Sigma. Basis: images of g != e, at index g - 1. `delta` is the quotient
/// map ZG -> IG*, with delta(e) = -(sum of all basis vectors).
struct IgStar {
  ZGLattice lattice;
  LatticeHom delta;
};

IgStar ig_star(const GroupPtr& group);

/// delta' = S^2(delta) : S^2(ZG) -> S^2(IG*), with a Smith-form surjectivity check.
struct DeltaPrime {
  LatticeHom hom;
  CertificateSet certificate;
};

DeltaPrime delta_prime(const GroupPtr& group);

/// u = e (x) Sigma + Sigma (x) e and Sigma (x) Sigma, in S^2(ZG) coordinates.
IntVector u_vector(const FiniteGroup& g);
IntVector sigma_sigma_vector(const FiniteGroup& g);

/// ker delta' equals the ZG-span of u and u Sigma / 2 (compared by Hermite forms) and has
/// rank n.
CertificateSet kernel_delta_prime_check(const GroupPtr& group);

/// M = (+)_{g in S} e_g ZG (+) (+)_{t in T} e_t (1+t)ZG, summands in that order, and
/// u_M = -(sum_{g in S} e_g (1 + g^-1) + sum_{t in T} e_t).
struct MLattice {
  ZGLattice lattice;
  IntVector u_m;
  std::vector<std::size_t> offsets;
  InvolutionData data;
};

MLattice m_lattice(const GroupPtr& group);

/// The ZG-submodule of base (x) Q generated by base and `half_of / 2`. `basis` holds the
/// HNF basis of the result in base coordinates (rational columns); `index` is [result : base].
struct AdjoinedLattice {
  ZGLattice base;
  std::vector<Rational> adjoined;
  ZGLattice result;
  RatMatrix basis;
  Integer index;
  bool degenerate = false;  // half_of / 2 already lies in base
  IntMatrix doubled_basis() const;
};

AdjoinedLattice adjoin_half(const ZGLattice& base, const IntVector& half_of);

/// (u_M / 2) 2 = u_M and (u_M / 2) Sigma = -(sum_g e_g Sigma + sum_t e_t S_t).
CertificateSet verify_half_relations(const MLattice& m);

/// ZG[u/2] for u in ZG: the overlattice of ZG generated by u/2.
AdjoinedLattice group_ring_overlattice(const GroupPtr& group, const ZGElement& u);

/// Two overlattices of the same base coincide.
bool same_overlattice(const AdjoinedLattice& a, const AdjoinedLattice& b);

struct HalfPresentation {
  CertificateSet checks;
  std::optional<MLattice> m;
  std::optional<AdjoinedLattice> adjoined;
  std::optional<LatticeHom> pi2_iso;  // pi2 -> IG*
  std::optional<LatticeHom> iso;      // S^2(pi2) -> M[u_M/2]
  bool full() const;                  // every check passed and an explicit iso was produced
};

/// Certifies S^2(pi2) = M[u_M/2] given an equivariant unimodular pi2 -> IG*. Without a
/// supplied map one is searched for; if none is found only the character identity is
/// checked and the outcome is NECESSARY-ONLY. Each failing check names its stage.
HalfPresentation verify_half_presentation(const ZGLattice& pi2, const std::optional<IntMatrix>& pi2_to_ig_star = std::nullopt);

/// Re-targets the isomorphism onto an equal overlattice built another way.
std::optional<LatticeHom> iso_onto(const HalfPresentation& r, const AdjoinedLattice& other);

}  // namespace pi3
