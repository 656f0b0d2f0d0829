#pragma once

#include <map>
#include <optional>
#include <string>

#include <json.hpp>

#include "pi3/chain_complex.hpp"
#include "pi3/decomposition.hpp"
#include "pi3/ig_star.hpp"
#include "pi3/presentation.hpp"
#include "pi3/zg_lattice.hpp"

namespace pi3 {

/// pi2 = ker d2 inside ZG^{n2}, and pi3 = S^2(pi2).
struct HomotopyLattices {
  GroupPtr group;
  ChainComplexData complex;
  KernelLattice pi2;
  ZGLattice pi3;
};

HomotopyLattices homotopy_lattices(const GroupPresentation& p, std::size_t max_cosets = kDefaultMaxCosets);

struct AnalysisOptions {
  std::size_t max_cosets = kDefaultMaxCosets;
  bool skip_half_presentation = false;
};

struct AnalysisReport {
  std::string input;
  GroupPresentation presentation;
  HomotopyLattices lattices;
  CharacterVector pi2_character;
  CharacterVector pi3_character;
  InvolutionData involutions;
  RationalFreeness freeness;
  std::optional<long long> a;  // rank pi2 = (n - 1) + n a
  std::optional<HalfPresentation> half_presentation;
  CertificateSet certificates;
  std::map<std::string, double> timings;  // seconds per stage; not deterministic
};

/// Throws ParseError, ResourceExhausted. Certificate failures are recorded, not thrown.
AnalysisReport analyze(std::string_view text, const AnalysisOptions& options = {});

struct ComparisonReport {
  HomotopyLattices lhs, rhs;
  std::vector<Element> group_iso;  // lhs group -> rhs group
  StableComparison comparison;
  RationalFreeness lhs_freeness, rhs_freeness;
};

/// Stable comparison of pi3 for two presentations of isomorphic groups. With a or b absent
/// the minimal solution of k + n a = k' + n b is used. Throws GroupMismatch when the groups
/// are not isomorphic or no such a, b exist.
ComparisonReport compare(std::string_view text1, std::string_view text2, std::optional<long long> a = std::nullopt,
                         std::optional<long long> b = std::nullopt, std::size_t max_cosets = kDefaultMaxCosets);

nlohmann::json to_json(const AnalysisReport& r);
nlohmann::json to_json(const ComparisonReport& r);

}  // namespace pi3
