#pragma once

#include <string>
#include <vector>

#include "pi3/certificate.hpp"
#include "pi3/group_ring.hpp"

namespace pi3 {

/// Fox derivative d(w)/d(x_j) evaluated in ZG (left-handed free differential calculus).
ZGElement fox_derivative(const Word& w, std::size_t j, const GroupPtr& group);

/// Cellular chain complex of the universal cover of a presentation 2-complex, as right
/// ZG-modules. `dd2` has one row per relator and one column per generator with entries
/// conj(d r / d x_j); `dd1` is the column of conj(x_j - e) = x_j^-1 - e. The boundary maps
/// act on column vectors through the transposes: d2 = dd2^T : F2 -> F1, d1 = dd1^T : F1 -> F0.
struct ChainComplexData {
  GroupPtr group;
  ZGMatrix dd2;
  ZGMatrix dd1;
  std::size_t n0 = 1;
  std::size_t n1 = 0;
  std::size_t n2 = 0;

  ZGMatrix boundary2() const { return dd2.transpose(); }
  ZGMatrix boundary1() const { return dd1.transpose(); }
  /// d1 o d2 : F2 -> F0, which must vanish.
  ZGMatrix composite() const { return boundary1() * boundary2(); }
};

ChainComplexData boundary_matrices(const GroupPresentation& p, const GroupPtr& group);

/// Certifies (a) d1 d2 = 0, (b) ker d1 = im d2 over Z (H1 of the cover vanishes; compared
/// by Hermite forms), (c) rank ker d2 = n (n2 - n1 + 1) - 1.
CertificateSet verify_universal_cover_exactness(const ChainComplexData& c);

}  // namespace pi3
