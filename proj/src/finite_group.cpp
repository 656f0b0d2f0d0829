#include "pi3/finite_group.hpp"

#include <algorithm>
#include <numeric>
#include <random>

#include "pi3/errors.hpp"

namespace pi3 {

FiniteGroup::FiniteGroup(GroupPresentation presentation, std::vector<std::vector<Element>> step)
    : presentation_(std::move(presentation)), order_(step.size()) {
  const std::size_t ngens = presentation_.generators.size();
  if (order_ == 0) throw std::invalid_argument("group must have at least one element");
  for (const auto& row : step)
    if (row.size() != ngens) throw std::invalid_argument("step table width differs from generator count");

  tree_.assign(order_, std::nullopt);
  std::vector<bool> seen(order_, false);
  seen[identity] = true;
  std::size_t next = 1;
  for (Element g = 0; g < order_; ++g) {
    if (!seen[g]) throw InvariantViolation("generators do not reach element " + std::to_string(g));
    for (std::size_t j = 0; j < ngens; ++j) {
      const Element h = step[g][j];
      if (h >= order_) throw std::invalid_argument("step table entry out of range");
      if (seen[h]) continue;
      if (h != next) throw InvariantViolation("step table is not in breadth-first order");
      seen[h] = true;
      tree_[h] = TreeEdge{g, j};
      ++next;
    }
  }

  generator_images_.resize(ngens);
  for (std::size_t j = 0; j < ngens; ++j) generator_images_[j] = step[identity][j];

  table_.assign(order_ * order_, 0);
  for (Element a = 0; a < order_; ++a) {
    table_[a * order_] = a;
    for (Element b = 1; b < order_; ++b) {
      const TreeEdge& e = *tree_[b];
      table_[a * order_ + b] = step[table_[a * order_ + e.parent]][e.generator];
    }
  }

  inverse_.assign(order_, order_);
  for (Element a = 0; a < order_; ++a)
    for (Element b = 0; b < order_; ++b)
      if (mul(a, b) == identity) {
        inverse_[a] = b;
        break;
      }
  for (Element a = 0; a < order_; ++a)
    if (inverse_[a] == order_) throw InvariantViolation("element without inverse");
}

Element FiniteGroup::power(Element a, long k) const {
  Element base = k < 0 ? inverse(a) : a;
  unsigned long e = static_cast<unsigned long>(k < 0 ? -k : k);
  Element r = identity;
  while (e) {
    if (e & 1) r = mul(r, base);
    base = mul(base, base);
    e >>= 1;
  }
  return r;
}

std::size_t FiniteGroup::element_order(Element a) const {
  std::size_t k = 1;
  for (Element x = a; x != identity; x = mul(x, a)) ++k;
  return k;
}

Element FiniteGroup::evaluate(const Word& w) const {
  Element r = identity;
  for (const Letter& l : w) {
    if (l.generator >= generator_images_.size()) throw std::out_of_range("word letter references unknown generator");
    const Element g = generator_images_[l.generator];
    r = mul(r, l.exponent < 0 ? inverse(g) : g);
  }
  return r;
}

std::optional<FiniteGroup::TreeEdge> FiniteGroup::tree_edge(Element g) const { return tree_.at(g); }

Word FiniteGroup::tree_word(Element g) const {
  Word w;
  while (g != identity) {
    const TreeEdge& e = *tree_[g];
    w.push_back({e.generator, 1});
    g = e.parent;
  }
  std::reverse(w.begin(), w.end());
  return w;
}

std::string FiniteGroup::name(Element g) const { return presentation_.word_to_string(tree_word(g)); }

std::vector<std::size_t> FiniteGroup::conjugacy_classes() const {
  std::vector<std::size_t> cls(order_, order_);
  for (Element g = 0; g < order_; ++g) {
    if (cls[g] != order_) continue;
    for (Element h = 0; h < order_; ++h) cls[mul(mul(inverse(h), g), h)] = g;
  }
  return cls;
}

namespace {

// Coset table over the trivial subgroup. Column 2j is x_j, column 2j+1 is x_j^-1.
class CosetEnumerator {
 public:
  CosetEnumerator(const GroupPresentation& p, std::size_t max_cosets)
      : ncols_(2 * p.generators.size()), max_live_(max_cosets) {
    for (const Word& w : p.relators) {
      std::vector<std::size_t> cols;
      for (const Letter& l : w) cols.push_back(2 * l.generator + (l.exponent < 0 ? 1 : 0));
      relators_.push_back(std::move(cols));
    }
    new_row();
  }

  std::vector<std::vector<Element>> run() {
    for (std::size_t alpha = 0; alpha < parent_.size(); ++alpha) {
      for (const auto& w : relators_) {
        if (!alive(alpha)) break;
        scan_and_fill(alpha, w);
      }
      if (!alive(alpha)) continue;
      for (std::size_t x = 0; x < ncols_; ++x)
        if (entry(alpha, x) < 0) define(alpha, x);
    }
    return breadth_first_table();
  }

 private:
  long& entry(std::size_t c, std::size_t x) { return table_[c * ncols_ + x]; }
  bool alive(std::size_t c) const { return parent_[c] == c; }

  void new_row() {
    if (live_ >= max_live_)
      throw ResourceExhausted("coset enumeration exceeded " + std::to_string(max_live_) +
                              " live cosets; the group may be infinite or too large");
    parent_.push_back(parent_.size());
    table_.resize(table_.size() + ncols_, -1);
    ++live_;
  }

  void define(std::size_t alpha, std::size_t x) {
    const std::size_t beta = parent_.size();
    new_row();
    entry(alpha, x) = static_cast<long>(beta);
    entry(beta, x ^ 1) = static_cast<long>(alpha);
  }

  void scan_and_fill(std::size_t alpha, const std::vector<std::size_t>& w) {
    std::size_t f = alpha, b = alpha;
    std::size_t i = 0, j = w.size();
    for (;;) {
      while (i < j && entry(f, w[i]) >= 0) f = static_cast<std::size_t>(entry(f, w[i++]));
      if (i == j) {
        if (f != b) coincidence(f, b);
        return;
      }
      while (j > i && entry(b, w[j - 1] ^ 1) >= 0) b = static_cast<std::size_t>(entry(b, w[--j] ^ 1));
      if (j == i) {
        coincidence(f, b);
        return;
      }
      if (j == i + 1) {
        entry(f, w[i]) = static_cast<long>(b);
        entry(b, w[i] ^ 1) = static_cast<long>(f);
        return;
      }
      define(f, w[i]);
    }
  }

  std::size_t rep(std::size_t k) {
    std::size_t r = k;
    while (parent_[r] != r) r = parent_[r];
    while (parent_[k] != r) {
      const std::size_t next = parent_[k];
      parent_[k] = r;
      k = next;
    }
    return r;
  }

  void merge(std::size_t k, std::size_t l, std::vector<std::size_t>& queue) {
    k = rep(k);
    l = rep(l);
    if (k == l) return;
    if (k > l) std::swap(k, l);
    parent_[l] = k;
    queue.push_back(l);
    --live_;
  }

  void coincidence(std::size_t a, std::size_t b) {
    std::vector<std::size_t> queue;
    merge(a, b, queue);
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
      const std::size_t g = queue[qi];
      for (std::size_t x = 0; x < ncols_; ++x) {
        const long d = entry(g, x);
        if (d < 0) continue;
        entry(static_cast<std::size_t>(d), x ^ 1) = -1;
        const std::size_t mu = rep(g), nu = rep(static_cast<std::size_t>(d));
        if (entry(mu, x) >= 0) {
          merge(nu, static_cast<std::size_t>(entry(mu, x)), queue);
        } else if (entry(nu, x ^ 1) >= 0) {
          merge(mu, static_cast<std::size_t>(entry(nu, x ^ 1)), queue);
        } else {
          entry(mu, x) = static_cast<long>(nu);
          entry(nu, x ^ 1) = static_cast<long>(mu);
        }
      }
    }
  }

  std::vector<std::vector<Element>> breadth_first_table() {
    const std::size_t ngens = ncols_ / 2;
    std::vector<long> index(parent_.size(), -1);
    std::vector<std::size_t> order{0};
    index[0] = 0;
    for (std::size_t k = 0; k < order.size(); ++k)
      for (std::size_t j = 0; j < ngens; ++j) {
        const long d = entry(order[k], 2 * j);
        if (d < 0 || !alive(static_cast<std::size_t>(d)))
          throw InvariantViolation("incomplete coset table after enumeration");
        if (index[d] < 0) {
          index[d] = static_cast<long>(order.size());
          order.push_back(static_cast<std::size_t>(d));
        }
      }
    std::vector<std::vector<Element>> step(order.size(), std::vector<Element>(ngens));
    for (std::size_t k = 0; k < order.size(); ++k)
      for (std::size_t j = 0; j < ngens; ++j) step[k][j] = static_cast<Element>(index[entry(order[k], 2 * j)]);
    return step;
  }

  std::size_t ncols_;
  std::size_t max_live_;
  std::size_t live_ = 0;
  std::vector<std::vector<std::size_t>> relators_;
  std::vector<long> table_;
  std::vector<std::size_t> parent_;
};

}  // namespace

GroupPtr enumerate_group(const GroupPresentation& p, std::size_t max_cosets) {
  if (max_cosets == 0) throw std::invalid_argument("max_cosets must be positive");
  if (p.generators.empty()) throw std::invalid_argument("presentation has no generators");
  CosetEnumerator enumerator(p, max_cosets);
  auto group = std::make_shared<const FiniteGroup>(p, enumerator.run());
  for (const Word& r : p.relators)
    if (group->evaluate(r) != FiniteGroup::identity) throw InvariantViolation("relator does not evaluate to e");
  return group;
}

GroupTableReport check_group_table(const FiniteGroup& g, std::size_t samples) {
  GroupTableReport rep;
  const std::size_t n = g.order();
  for (Element a = 0; a < n; ++a)
    if (g.mul(0, a) != a || g.mul(a, 0) != a) rep.identity_ok = false;
  for (Element a = 0; a < n; ++a) {
    std::vector<bool> row(n, false), col(n, false);
    for (Element b = 0; b < n; ++b) {
      row[g.mul(a, b)] = true;
      col[g.mul(b, a)] = true;
    }
    if (std::find(row.begin(), row.end(), false) != row.end()) rep.latin_square = false;
    if (std::find(col.begin(), col.end(), false) != col.end()) rep.latin_square = false;
    if (g.mul(a, g.inverse(a)) != 0 || g.mul(g.inverse(a), a) != 0) rep.inverses_ok = false;
    if (a != 0 && !g.tree_edge(a)) rep.generated = false;
  }
  if (n <= 512) {
    for (Element a = 0; a < n && rep.associative; ++a)
      for (Element b = 0; b < n && rep.associative; ++b)
        for (Element c = 0; c < n; ++c)
          if (g.mul(g.mul(a, b), c) != g.mul(a, g.mul(b, c))) {
            rep.associative = false;
            break;
          }
  } else {
    std::mt19937_64 rng(0x5eed);
    std::uniform_int_distribution<Element> pick(0, n - 1);
    for (std::size_t s = 0; s < samples; ++s) {
      const Element a = pick(rng), b = pick(rng), c = pick(rng);
      if (g.mul(g.mul(a, b), c) != g.mul(a, g.mul(b, c))) {
        rep.associative = false;
        break;
      }
    }
  }
  for (const Word& r : g.presentation().relators)
    if (g.evaluate(r) != 0) rep.relators_trivial = false;
  return rep;
}

std::optional<std::vector<Element>> find_isomorphism(const FiniteGroup& from, const FiniteGroup& to) {
  const std::size_t n = from.order();
  if (to.order() != n) return std::nullopt;
  const std::size_t ngens = from.num_generators();
  std::vector<std::vector<Element>> candidates(ngens);
  for (std::size_t j = 0; j < ngens; ++j) {
    const std::size_t ord = from.element_order(from.generator_image(j));
    for (Element h = 0; h < n; ++h)
      if (to.element_order(h) == ord) candidates[j].push_back(h);
  }
  std::vector<Element> images(ngens);
  std::vector<Element> map(n);

  auto try_images = [&]() -> bool {
    for (const Word& r : from.presentation().relators) {
      Element v = 0;
      for (const Letter& l : r) v = to.mul(v, l.exponent < 0 ? to.inverse(images[l.generator]) : images[l.generator]);
      if (v != 0) return false;
    }
    map[0] = 0;
    std::vector<bool> hit(n, false);
    hit[0] = true;
    for (Element b = 1; b < n; ++b) {
      const auto e = *from.tree_edge(b);
      map[b] = to.mul(map[e.parent], images[e.generator]);
      if (hit[map[b]]) return false;
      hit[map[b]] = true;
    }
    for (Element a = 0; a < n; ++a)
      for (Element b = 0; b < n; ++b)
        if (map[from.mul(a, b)] != to.mul(map[a], map[b])) return false;
    return true;
  };

  std::vector<std::size_t> cursor(ngens, 0);
  for (const auto& c : candidates)
    if (c.empty()) return std::nullopt;
  for (;;) {
    for (std::size_t j = 0; j < ngens; ++j) images[j] = candidates[j][cursor[j]];
    if (try_images()) return map;
    std::size_t j = 0;
    while (j < ngens && ++cursor[j] == candidates[j].size()) cursor[j++] = 0;
    if (j == ngens) return std::nullopt;
  }
}

}  // namespace pi3
