#include "pi3/serialize.hpp"

#include "pi3/errors.hpp"

namespace pi3 {

using nlohmann::json;

json integer_to_json(const Integer& v) {
  if (v.fits_slong_p()) return static_cast<long long>(v.get_si());
  return v.get_str();
}

Integer integer_from_json(const json& j) {
  if (j.is_number_integer()) return Integer(std::to_string(j.get<long long>()));
  if (j.is_string()) return Integer(j.get<std::string>());
  throw std::invalid_argument("expected an integer or a decimal string");
}

json to_json(const IntMatrix& m) {
  json rows = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(integer_to_json(m(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

IntMatrix int_matrix_from_json(const json& j) {
  if (!j.is_array()) throw std::invalid_argument("matrix must be an array of rows");
  const std::size_t rows = j.size();
  const std::size_t cols = rows == 0 ? 0 : j[0].size();
  IntMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    if (!j[r].is_array() || j[r].size() != cols) throw std::invalid_argument("ragged matrix");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = integer_from_json(j[r][c]);
  }
  return m;
}

json to_json(const ZGLattice& l) {
  json gens = json::array();
  for (const auto& a : l.generator_actions()) gens.push_back(to_json(a));
  return {{"rank", l.rank()}, {"group_order", l.group()->order()}, {"generators", std::move(gens)}};
}

ZGLattice lattice_from_json(const json& j, const GroupPtr& group) {
  if (j.at("group_order").get<std::size_t>() != group->order())
    throw GroupMismatch("serialized lattice belongs to a group of different order");
  const std::size_t rank = j.at("rank").get<std::size_t>();
  std::vector<IntMatrix> gens;
  for (const auto& g : j.at("generators")) {
    IntMatrix m = int_matrix_from_json(g);
    // a rank-0 matrix serializes as [] and loses its column count
    if (rank == 0) m = IntMatrix(0, 0);
    if (m.rows() != rank || m.cols() != rank) throw DimensionMismatch("generator matrix does not match rank");
    gens.push_back(std::move(m));
  }
  return ZGLattice(group, std::move(gens));
}

json to_json(const SymSquare& s) {
  json index = json::array();
  for (const auto& ix : s.index_map()) index.push_back({ix.i, ix.j});
  json out = to_json(s.lattice());
  out["base_rank"] = s.base_rank();
  out["index_map"] = std::move(index);
  return out;
}

json to_json(const Certificate& c) {
  json out = {{"claim", c.claim}, {"status", to_string(c.status)}};
  if (c.witness) out["witness"] = *c.witness;
  return out;
}

json to_json(const CertificateSet& s) {
  json out = json::array();
  for (const auto& c : s.checks) out.push_back(to_json(c));
  return out;
}

Certificate certificate_from_json(const json& j) {
  Certificate c;
  c.claim = j.at("claim").get<std::string>();
  const std::string status = j.at("status").get<std::string>();
  if (status == "PASS")
    c.status = Status::Pass;
  else if (status == "FAIL")
    c.status = Status::Fail;
  else if (status == "NECESSARY-ONLY")
    c.status = Status::NecessaryOnly;
  else
    throw std::invalid_argument("unknown certificate status " + status);
  if (j.contains("witness")) c.witness = j.at("witness").get<std::string>();
  return c;
}

json to_json(const CharacterVector& c) { return c.values; }

}  // namespace pi3
