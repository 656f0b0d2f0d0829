#pragma once

#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "pi3/certificate.hpp"
#include "pi3/finite_group.hpp"
#include "pi3/matrix.hpp"

namespace pi3 {

/// A ZG-module that is free of finite rank over Z, with the right action written in
/// coordinates: coords(v g) = A(g) coords(v). Hence A(gh) = A(h) A(g).
///
/// Only the generator matrices are stored; the full table is expanded on first use. The
/// constructor rejects data that is not a genuine action (some A(x)^ord(x) != I, or some
/// relator acting nontrivially). Copies share the immutable state.
class ZGLattice {
 public:
  ZGLattice(GroupPtr group, std::vector<IntMatrix> generator_actions);

  std::size_t rank() const;
  const GroupPtr& group() const;
  const std::vector<IntMatrix>& generator_actions() const;
  const IntMatrix& action(Element g) const;
  IntVector act(const IntVector& v, Element g) const { return action(g) * v; }

  friend bool operator==(const ZGLattice& a, const ZGLattice& b) {
    return a.group() == b.group() && a.generator_actions() == b.generator_actions();
  }

 private:
  struct Impl;
  std::shared_ptr<const Impl> impl_;
};

/// Integer matrix between lattices, target-rank x source-rank.
struct LatticeHom {
  LatticeHom(ZGLattice source, ZGLattice target, IntMatrix matrix);

  ZGLattice source;
  ZGLattice target;
  IntMatrix matrix;
};

LatticeHom compose(const LatticeHom& outer, const LatticeHom& inner);

struct HomCertificate {
  bool equivariant = false;
  bool iso = false;
  std::optional<std::size_t> witness_generator;  // first generator breaking equivariance

  Certificate as_certificate(const std::string& claim, bool require_iso) const;
};

HomCertificate verify_hom(const LatticeHom& h);

/// Trace of each element's action, indexed by element.
struct CharacterVector {
  std::vector<long long> values;

  long long operator[](Element g) const { return values[g]; }
  std::size_t size() const { return values.size(); }
  friend bool operator==(const CharacterVector&, const CharacterVector&) = default;
  friend CharacterVector operator+(const CharacterVector& a, const CharacterVector& b);
  friend CharacterVector operator*(long long s, const CharacterVector& a);
  std::string to_string() const;
};

CharacterVector character(const ZGLattice& l);
CharacterVector regular_character(const FiniteGroup& g);

/// ZG^k: k blocks of the right regular permutation representation.
ZGLattice free_lattice(const GroupPtr& group, std::size_t k);

/// Rank-k lattice on which every element acts as the identity.
ZGLattice trivial_lattice(const GroupPtr& group, std::size_t k);

struct DirectSum {
  ZGLattice lattice;
  std::vector<LatticeHom> injections;
  std::vector<std::size_t> offsets;
};

DirectSum direct_sum(const GroupPtr& group, std::span<const ZGLattice> parts);

/// a (x)_Z b with the diagonal action; basis e_i (x) f_j at index i * rank(b) + j.
ZGLattice tensor_over_z(const ZGLattice& a, const ZGLattice& b);

/// The lattice spanned by the (rational, independent) columns of `basis` inside
/// ambient (x) Q, with the induced action. Throws InvariantViolation if the span is not
/// G-stable.
ZGLattice induced_lattice(const ZGLattice& ambient, const RatMatrix& basis);

struct KernelLattice {
  ZGLattice lattice;
  LatticeHom inclusion;
};

/// Kernel of the integer matrix m (whose columns are indexed by ambient coordinates) as a
/// saturated sublattice with induced action.
KernelLattice kernel_lattice(const IntMatrix& m, const ZGLattice& ambient);

/// Reynolds average sum_g A_tgt(g^-1) x A_src(g); always equivariant.
IntMatrix average_to_equivariant(const ZGLattice& source, const ZGLattice& target, const IntMatrix& x);

/// Z-basis of Hom_ZG(source, target), each element a target-rank x source-rank matrix.
std::vector<IntMatrix> equivariant_hom_basis(const ZGLattice& source, const ZGLattice& target);

/// Searches integer combinations of the Hom basis with coefficients in [-bound, bound]
/// for a unimodular one. Exhaustive, ordered by max-norm and then support size, so sparse
/// solutions are found first and the result is deterministic.
std::optional<LatticeHom> find_equivariant_iso(const ZGLattice& source, const ZGLattice& target, int bound = 2);

/// Re-expresses a lattice over `to` along a group isomorphism `from -> to` (element map),
/// producing the same module viewed over `from`.
ZGLattice pull_back(const ZGLattice& lattice, const GroupPtr& from, std::span<const Element> iso);

}  // namespace pi3
