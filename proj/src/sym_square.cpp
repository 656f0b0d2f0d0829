#include "pi3/sym_square.hpp"

#include "pi3/errors.hpp"

namespace pi3 {

std::size_t sym_rank(std::size_t k) { return k * (k + 1) / 2; }

std::size_t sym_position(std::size_t k, std::size_t i, std::size_t j) {
  if (i > j) std::swap(i, j);
  if (j >= k) throw std::out_of_range("symmetric index out of range");
  if (i == j) return i;
  // pairs (r, *) for r < i occupy sum_{r<i} (k - 1 - r) slots
  return k + i * (k - 1) - i * (i - 1) / 2 + (j - i - 1);
}

IntVector quadratic_coords(const IntVector& a) {
  const std::size_t k = a.size();
  IntVector out(sym_rank(k));
  for (std::size_t i = 0; i < k; ++i) out[i] = a[i] * a[i];
  std::size_t pos = k;
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i + 1; j < k; ++j) out[pos++] = a[i] * a[j];
  return out;
}

IntVector pairing_coords(const IntVector& a, const IntVector& b) {
  if (a.size() != b.size()) throw DimensionMismatch("pairing of vectors of different length");
  const std::size_t k = a.size();
  IntVector out(sym_rank(k));
  for (std::size_t i = 0; i < k; ++i) out[i] = 2 * a[i] * b[i];
  std::size_t pos = k;
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i + 1; j < k; ++j) out[pos++] = a[i] * b[j] + a[j] * b[i];
  return out;
}

IntMatrix sym_square_matrix(const IntMatrix& m) {
  const std::size_t k = m.cols(), kk = m.rows();
  IntMatrix out(sym_rank(kk), sym_rank(k));
  std::vector<IntVector> cols(k);
  for (std::size_t i = 0; i < k; ++i) cols[i] = m.column(i);
  for (std::size_t i = 0; i < k; ++i) out.set_column(i, quadratic_coords(cols[i]));
  std::size_t pos = k;
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i + 1; j < k; ++j) out.set_column(pos++, pairing_coords(cols[i], cols[j]));
  return out;
}

namespace {

ZGLattice symmetric_action(const ZGLattice& base) {
  std::vector<IntMatrix> gens;
  for (const auto& a : base.generator_actions()) gens.push_back(sym_square_matrix(a));
  return ZGLattice(base.group(), std::move(gens));
}

std::vector<SymIndex> make_index(std::size_t k) {
  std::vector<SymIndex> idx;
  idx.reserve(sym_rank(k));
  for (std::size_t i = 0; i < k; ++i) idx.push_back({i, i});
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i + 1; j < k; ++j) idx.push_back({i, j});
  return idx;
}

}  // namespace

SymSquare::SymSquare(ZGLattice base)
    : base_(std::move(base)), index_(make_index(base_.rank())), lattice_(symmetric_action(base_)) {}

std::size_t SymSquare::position(std::size_t i, std::size_t j) const { return sym_position(base_rank(), i, j); }

SymSquare sym_square(const ZGLattice& base) { return SymSquare(base); }

IntVector q_map(const SymSquare& s, const IntVector& alpha) {
  if (alpha.size() != s.base_rank()) throw DimensionMismatch("q_map: coordinate vector has wrong length");
  return quadratic_coords(alpha);
}

Integer norm(const ZGLattice& j, const IntVector& alpha) {
  if (alpha.size() != j.rank()) throw DimensionMismatch("norm: coordinate vector has wrong length");
  Integer n = 0;
  for (const auto& a : alpha) n += abs(a);
  return n;
}

IntVector whitehead_pairing(const SymSquare& s, const IntVector& alpha, const IntVector& beta) {
  if (alpha.size() != s.base_rank() || beta.size() != s.base_rank())
    throw DimensionMismatch("whitehead_pairing: coordinate vector has wrong length");
  return pairing_coords(alpha, beta);
}

QuadraticMapTable tabulate(const ZGLattice& source, const ZGLattice& target, const LatticeMap& f) {
  const std::size_t k = source.rank();
  QuadraticMapTable t{source, target, {}, {}};
  auto unit = [k](std::size_t i) {
    IntVector v(k);
    v[i] = 1;
    return v;
  };
  for (std::size_t i = 0; i < k; ++i) t.diagonal.push_back(f(unit(i)));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i + 1; j < k; ++j) t.pairs.push_back(f(add(unit(i), unit(j))));
  return t;
}

QuadraticExtension extend_quadratic(const SymSquare& s, const QuadraticMapTable& f) {
  const std::size_t k = s.base_rank();
  if (f.source.rank() != k || f.source.group() != s.base().group())
    throw DimensionMismatch("extend_quadratic: table source differs from the symmetric square's base");
  if (f.diagonal.size() != k || f.pairs.size() != sym_rank(k) - k)
    throw DimensionMismatch("extend_quadratic: table has the wrong number of values");
  const std::size_t m = f.target.rank();
  for (const auto& v : f.diagonal)
    if (v.size() != m) throw DimensionMismatch("extend_quadratic: value has wrong length");
  for (const auto& v : f.pairs)
    if (v.size() != m) throw DimensionMismatch("extend_quadratic: value has wrong length");

  IntMatrix phi(m, sym_rank(k));
  for (std::size_t i = 0; i < k; ++i) phi.set_column(i, f.diagonal[i]);
  // pair(i, j) = q(a_i + a_j) - q(a_i) - q(a_j)
  std::size_t pos = k;
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i + 1; j < k; ++j, ++pos)
      phi.set_column(pos, sub(sub(f.pairs[pos - k], f.diagonal[i]), f.diagonal[j]));
  LatticeHom hom(s.lattice(), f.target, std::move(phi));
  HomCertificate cert = verify_hom(hom);
  return {std::move(hom), cert};
}

LatticeHom sym_square_hom(const LatticeHom& h, const SymSquare& source, const SymSquare& target) {
  if (h.source.rank() != source.base_rank() || h.target.rank() != target.base_rank())
    throw DimensionMismatch("sym_square_hom: hom does not match the symmetric squares' bases");
  return LatticeHom(source.lattice(), target.lattice(), sym_square_matrix(h.matrix));
}

IntVector random_vector(std::mt19937_64& rng, std::size_t n, int bound) {
  std::uniform_int_distribution<int> pick(-bound, bound);
  IntVector v(n);
  for (auto& x : v) x = pick(rng);
  return v;
}

GQuadraticReport check_g_quadratic(const ZGLattice& source, const ZGLattice& target, const LatticeMap& f,
                                   std::mt19937_64& rng, std::size_t samples, int bound) {
  GQuadraticReport rep;
  const std::size_t k = source.rank();
  const std::size_t n = source.group()->order();
  std::uniform_int_distribution<std::size_t> pick_element(0, n - 1);
  auto fail = [&rep](bool& flag, std::string what) {
    if (flag && !rep.witness) rep.witness = std::move(what);
    flag = false;
  };
  for (const auto& v : f(IntVector(k)))
    if (v != 0) fail(rep.zero, "f(0) != 0");
  for (std::size_t s = 0; s < samples; ++s) {
    const IntVector a = random_vector(rng, k, bound), b = random_vector(rng, k, bound), c = random_vector(rng, k, bound);
    const IntVector fa = f(a), fb = f(b), fc = f(c);
    const IntVector fab = f(add(a, b));
    if (f(scale(-1, a)) != fa) fail(rep.negation, "sample " + std::to_string(s) + ": f(-a) != f(a)");
    const IntVector lhs = f(add(add(a, b), c));
    const IntVector rhs = sub(sub(sub(add(add(fab, f(add(a, c))), f(add(b, c))), fa), fb), fc);
    if (lhs != rhs) fail(rep.three_term, "sample " + std::to_string(s) + ": three-term identity");
    if (add(fab, f(sub(a, b))) != add(scale(2, fa), scale(2, fb)))
      fail(rep.parallelogram, "sample " + std::to_string(s) + ": parallelogram law");
    const Element g = pick_element(rng);
    if (f(source.act(a, g)) != target.act(fa, g))
      fail(rep.equivariant, "sample " + std::to_string(s) + ": f(a g) != f(a) g for element " + std::to_string(g));
  }
  return rep;
}

}  // namespace pi3
