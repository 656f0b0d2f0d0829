#pragma once

#include <optional>
#include <vector>

#include "pi3/matrix.hpp"

namespace pi3 {

/// Column-style Hermite normal form: form == input * transform, transform unimodular.
/// The first `rank` columns of `form` are in lower echelon shape with positive pivots and
/// entries left of each pivot reduced into [0, pivot); the remaining columns are zero.
struct HermiteForm {
  IntMatrix form;
  IntMatrix transform;
  std::size_t rank = 0;
  std::vector<std::size_t> pivot_rows;
};

/// form == left * input * right with both transforms unimodular; form is diagonal with
/// nonnegative entries, each dividing the next.
struct SmithForm {
  IntMatrix form;
  IntMatrix left;
  IntMatrix right;
  std::vector<Integer> invariant_factors;  // nonzero diagonal entries
};

struct NormalForms {
  HermiteForm hermite;
  SmithForm smith;
};

HermiteForm hermite_columns(const IntMatrix& a);
SmithForm smith(const IntMatrix& a);
NormalForms normal_forms(const IntMatrix& a);

/// Saturated Z-basis (as columns) of {x : a x = 0}.
IntMatrix integer_kernel(const IntMatrix& a);

/// Canonical basis (HNF columns) of the lattice spanned by the columns of `generators`.
IntMatrix lattice_basis(const IntMatrix& generators);

bool same_lattice(const IntMatrix& generators_a, const IntMatrix& generators_b);

/// Exact solution x of a x = b by rational elimination, or nullopt when inconsistent.
/// When a has dependent columns the free variables are set to zero.
std::optional<RatMatrix> solve_rational(const RatMatrix& a, const RatMatrix& b);

std::size_t rank(const IntMatrix& a);

}  // namespace pi3
