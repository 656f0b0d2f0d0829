#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "pi3/presentation.hpp"

namespace pi3 {

using Element = std::size_t;

/// A finite group given by its full multiplication table. Element 0 is the identity and
/// the remaining indices follow breadth-first order over right multiplication by the
/// presentation generators.
class FiniteGroup {
 public:
  static constexpr Element identity = 0;

  /// Builds from a right-multiplication table `step[g][j] = g * x_j`; `step` must already
  /// be in breadth-first order from element 0.
  FiniteGroup(GroupPresentation presentation, std::vector<std::vector<Element>> step);

  std::size_t order() const { return order_; }
  Element mul(Element a, Element b) const { return table_[a * order_ + b]; }
  Element inverse(Element a) const { return inverse_[a]; }
  Element power(Element a, long k) const;
  std::size_t element_order(Element a) const;

  std::size_t num_generators() const { return generator_images_.size(); }
  Element generator_image(std::size_t j) const { return generator_images_[j]; }
  const std::vector<Element>& generator_images() const { return generator_images_; }
  const GroupPresentation& presentation() const { return presentation_; }

  Element evaluate(const Word& w) const;

  /// Breadth-first spanning tree: g == mul(parent, generator_image(generator)).
  struct TreeEdge {
    Element parent;
    std::size_t generator;
  };
  std::optional<TreeEdge> tree_edge(Element g) const;
  Word tree_word(Element g) const;
  std::string name(Element g) const;

  /// Class index per element; classes numbered by smallest member.
  std::vector<std::size_t> conjugacy_classes() const;

 private:
  GroupPresentation presentation_;
  std::size_t order_ = 0;
  std::vector<Element> table_;
  std::vector<Element> inverse_;
  std::vector<Element> generator_images_;
  std::vector<std::optional<TreeEdge>> tree_;
};

using GroupPtr = std::shared_ptr<const FiniteGroup>;

inline constexpr std::size_t kDefaultMaxCosets = 100000;

/// Hasselgrove-Leech-Trotter coset enumeration over the trivial subgroup. Throws
/// ResourceExhausted if more than `max_cosets` cosets are alive at once.
GroupPtr enumerate_group(const GroupPresentation& p, std::size_t max_cosets = kDefaultMaxCosets);

struct GroupTableReport {
  bool identity_ok = true;
  bool latin_square = true;
  bool inverses_ok = true;
  bool associative = true;
  bool generated = true;
  bool relators_trivial = true;
  bool ok() const {
    return identity_ok && latin_square && inverses_ok && associative && generated && relators_trivial;
  }
};

/// Checks the table invariants. Associativity is exhaustive up to order 512 and sampled
/// (`samples` random triples, fixed seed) above.
GroupTableReport check_group_table(const FiniteGroup& g, std::size_t samples = 100000);

/// An isomorphism `from -> to` as an element map, found by searching generator images.
std::optional<std::vector<Element>> find_isomorphism(const FiniteGroup& from, const FiniteGroup& to);

}  // namespace pi3
