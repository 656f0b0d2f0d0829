#include "pi3/group_ring.hpp"

namespace pi3 {

ZGElement sigma(const GroupPtr& group) {
  ZGElement s(group);
  for (Element g = 0; g < group->order(); ++g) s.set(g, 1);
  return s;
}

QGElement to_rational(const ZGElement& a) {
  QGElement out(a.group());
  for (const auto& [g, c] : a.terms()) out.set(g, Rational(c));
  return out;
}

IntMatrix regular_block(const ZGElement& a) {
  const FiniteGroup& G = *a.group();
  const std::size_t n = G.order();
  IntMatrix m(n, n);
  for (const auto& [g, c] : a.terms())
    for (Element h = 0; h < n; ++h) m(G.mul(g, h), h) += c;
  return m;
}

IntMatrix expand_to_integer_matrix(const ZGMatrix& m) {
  const std::size_t n = m.group()->order();
  IntMatrix out(m.rows() * n, m.cols() * n);
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c)
      if (!m(r, c).is_zero()) out.set_block(r * n, c * n, regular_block(m(r, c)));
  return out;
}

IntMatrix right_regular_matrix(const FiniteGroup& group, Element g) {
  const std::size_t n = group.order();
  IntMatrix m(n, n);
  for (Element h = 0; h < n; ++h) m(group.mul(h, g), h) = 1;
  return m;
}

}  // namespace pi3
