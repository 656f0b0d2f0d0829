#include "pi3/zg_lattice.hpp"

#include <algorithm>
#include <cstdint>
#include <mutex>

#include "pi3/errors.hpp"
#include "pi3/group_ring.hpp"
#include "pi3/normal_form.hpp"

namespace pi3 {

struct ZGLattice::Impl {
  GroupPtr group;
  std::size_t rank = 0;
  std::vector<IntMatrix> generators;
  mutable std::once_flag table_once;
  mutable std::vector<IntMatrix> table;
};

namespace {

IntMatrix matrix_power(const IntMatrix& a, std::size_t e) {
  IntMatrix r = IntMatrix::identity(a.rows());
  for (std::size_t k = 0; k < e; ++k) r = a * r;
  return r;
}

constexpr std::int64_t kSearchPrime = 2147483647;

std::int64_t mod_prime(const Integer& v) {
  Integer r = v % kSearchPrime;
  if (r < 0) r += kSearchPrime;
  return r.get_si();
}

std::int64_t pow_mod(std::int64_t b, std::int64_t e) {
  std::int64_t r = 1;
  for (b %= kSearchPrime; e > 0; e >>= 1, b = b * b % kSearchPrime)
    if (e & 1) r = r * b % kSearchPrime;
  return r;
}

// Determinant of a k x k row-major matrix over F_p; a cheap filter before the exact one.
std::int64_t det_mod_prime(std::vector<std::int64_t> a, std::size_t k) {
  std::int64_t det = 1;
  for (std::size_t col = 0; col < k; ++col) {
    std::size_t piv = col;
    while (piv < k && a[piv * k + col] == 0) ++piv;
    if (piv == k) return 0;
    if (piv != col) {
      for (std::size_t j = 0; j < k; ++j) std::swap(a[piv * k + j], a[col * k + j]);
      det = kSearchPrime - det;
    }
    const std::int64_t p = a[col * k + col];
    det = det * p % kSearchPrime;
    const std::int64_t inv = pow_mod(p, kSearchPrime - 2);
    for (std::size_t r = col + 1; r < k; ++r) {
      const std::int64_t f = a[r * k + col] * inv % kSearchPrime;
      if (f == 0) continue;
      for (std::size_t j = col; j < k; ++j)
        a[r * k + j] = ((a[r * k + j] - f * a[col * k + j]) % kSearchPrime + kSearchPrime) % kSearchPrime;
    }
  }
  return det % kSearchPrime;
}

}  // namespace

ZGLattice::ZGLattice(GroupPtr group, std::vector<IntMatrix> generator_actions) {
  if (!group) throw std::invalid_argument("lattice needs a group");
  const FiniteGroup& G = *group;
  if (generator_actions.size() != G.num_generators())
    throw DimensionMismatch("expected one action matrix per group generator");
  const std::size_t k = generator_actions.empty() ? 0 : generator_actions.front().rows();
  for (const auto& a : generator_actions)
    if (a.rows() != k || a.cols() != k) throw DimensionMismatch("action matrices must be square of equal size");

  const IntMatrix id = IntMatrix::identity(k);
  std::vector<IntMatrix> inverses(generator_actions.size());
  for (std::size_t j = 0; j < generator_actions.size(); ++j) {
    const std::size_t o = G.element_order(G.generator_image(j));
    inverses[j] = matrix_power(generator_actions[j], o - 1);
    if (!(generator_actions[j] * inverses[j] == id))
      throw InvariantViolation("generator " + std::to_string(j) + " action does not have order dividing " +
                               std::to_string(o));
  }
  for (const Word& r : G.presentation().relators) {
    IntMatrix m = id;
    for (const Letter& l : r) m = (l.exponent > 0 ? generator_actions[l.generator] : inverses[l.generator]) * m;
    if (!(m == id)) throw InvariantViolation("relator " + G.presentation().word_to_string(r) + " acts nontrivially");
  }

  auto impl = std::make_shared<Impl>();
  impl->group = std::move(group);
  impl->rank = k;
  impl->generators = std::move(generator_actions);
  impl_ = std::move(impl);
}

std::size_t ZGLattice::rank() const { return impl_->rank; }
const GroupPtr& ZGLattice::group() const { return impl_->group; }
const std::vector<IntMatrix>& ZGLattice::generator_actions() const { return impl_->generators; }

const IntMatrix& ZGLattice::action(Element g) const {
  std::call_once(impl_->table_once, [this] {
    const FiniteGroup& G = *impl_->group;
    std::vector<IntMatrix> t(G.order());
    t[FiniteGroup::identity] = IntMatrix::identity(impl_->rank);
    for (Element h = 1; h < G.order(); ++h) {
      const auto e = *G.tree_edge(h);
      t[h] = impl_->generators[e.generator] * t[e.parent];
    }
    impl_->table = std::move(t);
  });
  return impl_->table.at(g);
}

LatticeHom::LatticeHom(ZGLattice src, ZGLattice tgt, IntMatrix m)
    : source(std::move(src)), target(std::move(tgt)), matrix(std::move(m)) {
  if (source.group() != target.group()) throw GroupMismatch("hom between lattices over different groups");
  if (matrix.rows() != target.rank() || matrix.cols() != source.rank())
    throw DimensionMismatch("hom matrix must be target-rank x source-rank");
}

LatticeHom compose(const LatticeHom& outer, const LatticeHom& inner) {
  if (outer.source.rank() != inner.target.rank())
    throw DimensionMismatch("cannot compose homs with mismatched middle lattice");
  return LatticeHom(inner.source, outer.target, outer.matrix * inner.matrix);
}

Certificate HomCertificate::as_certificate(const std::string& claim, bool require_iso) const {
  if (!equivariant)
    return Certificate::check(claim, false, "equivariance fails at generator " + std::to_string(*witness_generator));
  if (require_iso && !iso) return Certificate::check(claim, false, "matrix is not square unimodular");
  return Certificate::check(claim, true);
}

HomCertificate verify_hom(const LatticeHom& h) {
  HomCertificate c;
  c.equivariant = true;
  const auto& src = h.source.generator_actions();
  const auto& tgt = h.target.generator_actions();
  for (std::size_t j = 0; j < src.size(); ++j)
    if (!(h.matrix * src[j] == tgt[j] * h.matrix)) {
      c.equivariant = false;
      c.witness_generator = j;
      break;
    }
  if (h.matrix.square()) {
    const Integer d = determinant(h.matrix);
    c.iso = d == 1 || d == -1;
  }
  return c;
}

CharacterVector operator+(const CharacterVector& a, const CharacterVector& b) {
  if (a.size() != b.size()) throw DimensionMismatch("characters of different groups");
  CharacterVector out = a;
  for (std::size_t i = 0; i < b.size(); ++i) out.values[i] += b.values[i];
  return out;
}

CharacterVector operator*(long long s, const CharacterVector& a) {
  CharacterVector out = a;
  for (auto& v : out.values) v *= s;
  return out;
}

std::string CharacterVector::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < values.size(); ++i) s += (i ? ", " : "") + std::to_string(values[i]);
  return s + ")";
}

CharacterVector character(const ZGLattice& l) {
  CharacterVector chi;
  chi.values.resize(l.group()->order());
  for (Element g = 0; g < chi.values.size(); ++g) chi.values[g] = trace(l.action(g)).get_si();
  return chi;
}

CharacterVector regular_character(const FiniteGroup& g) {
  CharacterVector chi;
  chi.values.assign(g.order(), 0);
  chi.values[FiniteGroup::identity] = static_cast<long long>(g.order());
  return chi;
}

ZGLattice free_lattice(const GroupPtr& group, std::size_t k) {
  std::vector<IntMatrix> gens;
  for (Element x : group->generator_images()) {
    const IntMatrix r = right_regular_matrix(*group, x);
    std::vector<IntMatrix> blocks(k, r);
    gens.push_back(block_diagonal(blocks));
  }
  return ZGLattice(group, std::move(gens));
}

ZGLattice trivial_lattice(const GroupPtr& group, std::size_t k) {
  return ZGLattice(group, std::vector<IntMatrix>(group->num_generators(), IntMatrix::identity(k)));
}

DirectSum direct_sum(const GroupPtr& group, std::span<const ZGLattice> parts) {
  for (const auto& p : parts)
    if (p.group() != group) throw GroupMismatch("direct sum of lattices over different groups");
  std::vector<IntMatrix> gens;
  for (std::size_t j = 0; j < group->num_generators(); ++j) {
    std::vector<IntMatrix> blocks;
    for (const auto& p : parts) blocks.push_back(p.generator_actions()[j]);
    gens.push_back(block_diagonal(blocks));
  }
  ZGLattice sum(group, std::move(gens));
  std::vector<LatticeHom> injections;
  std::vector<std::size_t> offsets;
  std::size_t offset = 0;
  for (const auto& p : parts) {
    IntMatrix inj(sum.rank(), p.rank());
    for (std::size_t i = 0; i < p.rank(); ++i) inj(offset + i, i) = 1;
    injections.emplace_back(p, sum, std::move(inj));
    offsets.push_back(offset);
    offset += p.rank();
  }
  return {std::move(sum), std::move(injections), std::move(offsets)};
}

ZGLattice tensor_over_z(const ZGLattice& a, const ZGLattice& b) {
  if (a.group() != b.group()) throw GroupMismatch("tensor product of lattices over different groups");
  std::vector<IntMatrix> gens;
  for (std::size_t j = 0; j < a.generator_actions().size(); ++j)
    gens.push_back(kronecker(a.generator_actions()[j], b.generator_actions()[j]));
  return ZGLattice(a.group(), std::move(gens));
}

ZGLattice induced_lattice(const ZGLattice& ambient, const RatMatrix& basis) {
  if (basis.rows() != ambient.rank()) throw DimensionMismatch("basis does not live in the ambient lattice");
  std::vector<IntMatrix> gens;
  for (std::size_t j = 0; j < ambient.generator_actions().size(); ++j) {
    const RatMatrix image = to_rational(ambient.generator_actions()[j]) * basis;
    auto x = solve_rational(basis, image);
    if (!x) throw InvariantViolation("sublattice is not stable under generator " + std::to_string(j));
    try {
      gens.push_back(to_integer(*x));
    } catch (const std::domain_error& e) {
      throw InvariantViolation("induced action of generator " + std::to_string(j) + " is not integral: " + e.what());
    }
  }
  return ZGLattice(ambient.group(), std::move(gens));
}

KernelLattice kernel_lattice(const IntMatrix& m, const ZGLattice& ambient) {
  if (m.cols() != ambient.rank()) throw DimensionMismatch("kernel_lattice: matrix columns must index the ambient basis");
  IntMatrix k = integer_kernel(m);
  ZGLattice lattice = induced_lattice(ambient, to_rational(k));
  LatticeHom inclusion(lattice, ambient, std::move(k));
  return {std::move(lattice), std::move(inclusion)};
}

IntMatrix average_to_equivariant(const ZGLattice& source, const ZGLattice& target, const IntMatrix& x) {
  const FiniteGroup& G = *source.group();
  IntMatrix sum(target.rank(), source.rank());
  for (Element g = 0; g < G.order(); ++g) sum = sum + target.action(G.inverse(g)) * (x * source.action(g));
  return sum;
}

std::vector<IntMatrix> equivariant_hom_basis(const ZGLattice& source, const ZGLattice& target) {
  if (source.group() != target.group()) throw GroupMismatch("hom space between lattices over different groups");
  const std::size_t s = source.rank(), t = target.rank();
  const std::size_t ngens = source.generator_actions().size();
  // Unknown M (t x s) flattened row-major; equations M A(x) - B(x) M = 0 for each generator.
  IntMatrix system(ngens * t * s, t * s);
  for (std::size_t g = 0; g < ngens; ++g) {
    const IntMatrix& a = source.generator_actions()[g];
    const IntMatrix& b = target.generator_actions()[g];
    for (std::size_t i = 0; i < t; ++i)
      for (std::size_t j = 0; j < s; ++j) {
        const std::size_t row = (g * t + i) * s + j;
        for (std::size_t l = 0; l < s; ++l) system(row, i * s + l) += a(l, j);
        for (std::size_t l = 0; l < t; ++l) system(row, l * s + j) -= b(i, l);
      }
  }
  const IntMatrix kernel = lattice_basis(integer_kernel(system));
  std::vector<IntMatrix> basis;
  for (std::size_t c = 0; c < kernel.cols(); ++c) {
    IntMatrix m(t, s);
    for (std::size_t i = 0; i < t; ++i)
      for (std::size_t j = 0; j < s; ++j) m(i, j) = kernel(i * s + j, c);
    basis.push_back(std::move(m));
  }
  return basis;
}

std::optional<LatticeHom> find_equivariant_iso(const ZGLattice& source, const ZGLattice& target, int bound) {
  if (source.rank() != target.rank()) return std::nullopt;
  const std::size_t k = source.rank();
  if (k == 0) return LatticeHom(source, target, IntMatrix(0, 0));
  const std::vector<IntMatrix> basis = equivariant_hom_basis(source, target);
  const std::size_t d = basis.size();
  if (d == 0) return std::nullopt;

  std::vector<std::vector<std::int64_t>> residues(d, std::vector<std::int64_t>(k * k));
  for (std::size_t b = 0; b < d; ++b)
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) residues[b][i * k + j] = mod_prime(basis[b](i, j));

  // Candidates ordered by max-norm c, then support size w, then support and coefficients
  // lexicographically. The first coefficient is positive since det(-m) = +-det(m).
  std::vector<std::size_t> support;
  std::vector<int> coeff;
  std::vector<std::int64_t> work(k * k);
  for (int c = 1; c <= bound; ++c)
    for (std::size_t w = 1; w <= d; ++w) {
      support.resize(w);
      for (std::size_t i = 0; i < w; ++i) support[i] = i;
      for (;;) {
        coeff.assign(w, -c);
        coeff[0] = 1;
        for (;;) {
          const bool reaches_c = std::any_of(coeff.begin(), coeff.end(), [c](int v) { return std::abs(v) == c; });
          const bool nonzero = std::none_of(coeff.begin(), coeff.end(), [](int v) { return v == 0; });
          if (reaches_c && nonzero) {
            std::fill(work.begin(), work.end(), 0);
            for (std::size_t t = 0; t < w; ++t) {
              const std::int64_t f = coeff[t] < 0 ? kSearchPrime + coeff[t] : coeff[t];
              const auto& r = residues[support[t]];
              for (std::size_t e = 0; e < k * k; ++e) work[e] = (work[e] + f * r[e]) % kSearchPrime;
            }
            const std::int64_t dp = det_mod_prime(work, k);
            if (dp == 1 || dp == kSearchPrime - 1) {
              IntMatrix m(k, k);
              for (std::size_t t = 0; t < w; ++t) m = m + Integer(coeff[t]) * basis[support[t]];
              const Integer det = determinant(m);
              if (det == 1 || det == -1) return LatticeHom(source, target, std::move(m));
            }
          }
          std::size_t i = w;
          while (i-- > 0) {
            const int lo = i == 0 ? 1 : -c;
            if (coeff[i] < c) {
              ++coeff[i];
              break;
            }
            coeff[i] = lo;
          }
          if (i == static_cast<std::size_t>(-1)) break;
        }
        // next w-subset of {0..d-1}
        std::size_t i = w;
        while (i-- > 0 && support[i] == d - w + i) {
        }
        if (i == static_cast<std::size_t>(-1)) break;
        ++support[i];
        for (std::size_t j = i + 1; j < w; ++j) support[j] = support[j - 1] + 1;
      }
    }
  return std::nullopt;
}

ZGLattice pull_back(const ZGLattice& lattice, const GroupPtr& from, std::span<const Element> iso) {
  if (iso.size() != from->order() || lattice.group()->order() != from->order())
    throw GroupMismatch("pull_back needs an element map between groups of equal order");
  std::vector<IntMatrix> gens;
  for (Element x : from->generator_images()) gens.push_back(lattice.action(iso[x]));
  return ZGLattice(from, std::move(gens));
}

}  // namespace pi3
