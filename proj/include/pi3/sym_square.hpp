#pragma once

#include <functional>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "pi3/zg_lattice.hpp"

namespace pi3 {

/// Basis position of S^2: diag(i) is e_i (x) e_i, pair(i, j) with i < j is
/// e_i (x) e_j + e_j (x) e_i.
struct SymIndex {
  std::size_t i = 0;
  std::size_t j = 0;
  bool diagonal() const { return i == j; }
  friend bool operator==(const SymIndex&, const SymIndex&) = default;
};

/// The sigma-invariant part of J (x)_Z J. Basis: every diag(i) ascending, then pair(i, j)
/// in lexicographic order.
class SymSquare {
 public:
  explicit SymSquare(ZGLattice base);

  const ZGLattice& lattice() const { return lattice_; }
  const ZGLattice& base() const { return base_; }
  std::size_t base_rank() const { return base_.rank(); }
  std::size_t rank() const { return index_.size(); }
  std::size_t position(std::size_t i, std::size_t j) const;
  const SymIndex& index(std::size_t pos) const { return index_.at(pos); }
  const std::vector<SymIndex>& index_map() const { return index_; }

 private:
  ZGLattice base_;
  std::vector<SymIndex> index_;
  ZGLattice lattice_;
};

SymSquare sym_square(const ZGLattice& base);

std::size_t sym_rank(std::size_t k);
std::size_t sym_position(std::size_t k, std::size_t i, std::size_t j);

/// Coordinates of a (x) a in the symmetric basis of rank-k S^2.
IntVector quadratic_coords(const IntVector& a);
/// Coordinates of a (x) b + b (x) a.
IntVector pairing_coords(const IntVector& a, const IntVector& b);

/// The induced map S^2(Z^k) -> S^2(Z^k') of an integer k' x k matrix. Functorial:
/// sym_square_matrix(A B) == sym_square_matrix(A) * sym_square_matrix(B).
IntMatrix sym_square_matrix(const IntMatrix& m);

/// q(a) = a (x) a.
IntVector q_map(const SymSquare& s, const IntVector& alpha);

/// Sum of absolute values of the coordinates.
Integer norm(const ZGLattice& j, const IntVector& alpha);

/// [a, b] = q(a + b) - q(a) - q(b).
IntVector whitehead_pairing(const SymSquare& s, const IntVector& alpha, const IntVector& beta);

/// Values of a map f : J -> M on every basis vector a_i and every a_i + a_j (i < j).
struct QuadraticMapTable {
  ZGLattice source;
  ZGLattice target;
  std::vector<IntVector> diagonal;  // f(a_i)
  std::vector<IntVector> pairs;     // f(a_i + a_j), in the same order as the pair(i, j) basis
};

using LatticeMap = std::function<IntVector(const IntVector&)>;

QuadraticMapTable tabulate(const ZGLattice& source, const ZGLattice& target, const LatticeMap& f);

struct QuadraticExtension {
  LatticeHom hom;
  HomCertificate certificate;
};

/// The unique Z-linear phi on S^2(J) with phi q(a_i) = f(a_i) and phi q(a_i + a_j) = f(a_i + a_j).
/// Equivariance is checked and reported; it holds exactly when f was G-quadratic.
QuadraticExtension extend_quadratic(const SymSquare& s, const QuadraticMapTable& f);

/// Induced equivariant map S^2(J) -> S^2(J') of h : J -> J'.
LatticeHom sym_square_hom(const LatticeHom& h, const SymSquare& source, const SymSquare& target);

struct GQuadraticReport {
  bool negation = true;       // f(-a) = f(a)
  bool three_term = true;     // f(a+b+c) = f(a+b)+f(a+c)+f(b+c)-f(a)-f(b)-f(c)
  bool equivariant = true;    // f(a g) = f(a) g
  bool zero = true;           // f(0) = 0
  bool parallelogram = true;  // f(a+b) + f(a-b) = 2 f(a) + 2 f(b)
  std::optional<std::string> witness;
  bool ok() const { return negation && three_term && equivariant && zero && parallelogram; }
};

/// Randomised check of the G-quadratic axioms and their consequences on `samples` draws of
/// vectors with entries in [-bound, bound].
GQuadraticReport check_g_quadratic(const ZGLattice& source, const ZGLattice& target, const LatticeMap& f,
                                   std::mt19937_64& rng, std::size_t samples, int bound = 3);

IntVector random_vector(std::mt19937_64& rng, std::size_t n, int bound);

}  // namespace pi3
