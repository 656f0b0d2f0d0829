#pragma once

#include <json.hpp>

#include "pi3/certificate.hpp"
#include "pi3/sym_square.hpp"
#include "pi3/zg_lattice.hpp"

namespace pi3 {

/// Integers fitting in int64 are JSON numbers, larger ones decimal strings.
nlohmann::json integer_to_json(const Integer& v);
Integer integer_from_json(const nlohmann::json& j);

nlohmann::json to_json(const IntMatrix& m);
IntMatrix int_matrix_from_json(const nlohmann::json& j);

/// {rank, group_order, generators: [row-major matrices]}.
nlohmann::json to_json(const ZGLattice& l);
/// The group is supplied by the caller; its order must match.
ZGLattice lattice_from_json(const nlohmann::json& j, const GroupPtr& group);

/// Lattice plus index_map: [[i, j], ...] in basis order.
nlohmann::json to_json(const SymSquare& s);

nlohmann::json to_json(const Certificate& c);
nlohmann::json to_json(const CertificateSet& s);
Certificate certificate_from_json(const nlohmann::json& j);

nlohmann::json to_json(const CharacterVector& c);

}  // namespace pi3
