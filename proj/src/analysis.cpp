#include "pi3/analysis.hpp"

#include <chrono>

#include "pi3/errors.hpp"
#include "pi3/serialize.hpp"

namespace pi3 {

using nlohmann::json;

HomotopyLattices homotopy_lattices(const GroupPresentation& p, std::size_t max_cosets) {
  GroupPtr group = enumerate_group(p, max_cosets);
  ChainComplexData complex = boundary_matrices(p, group);
  KernelLattice pi2 = kernel_lattice(expand_to_integer_matrix(complex.boundary2()), free_lattice(group, complex.n2));
  ZGLattice pi3 = sym_square(pi2.lattice).lattice();
  return {std::move(group), std::move(complex), std::move(pi2), std::move(pi3)};
}

namespace {

class StageTimer {
 public:
  explicit StageTimer(std::map<std::string, double>& sink) : sink_(sink) {}
  template <class F>
  auto operator()(const std::string& stage, F&& f) {
    const auto start = std::chrono::steady_clock::now();
    if constexpr (std::is_void_v<decltype(f())>) {
      f();
      record(stage, start);
    } else {
      auto out = f();
      record(stage, start);
      return out;
    }
  }

 private:
  void record(const std::string& stage, std::chrono::steady_clock::time_point start) {
    sink_[stage] += std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  }
  std::map<std::string, double>& sink_;
};

Certificate table_certificate(const FiniteGroup& g) {
  const GroupTableReport t = check_group_table(g);
  std::string what;
  if (!t.identity_ok) what = "identity";
  else if (!t.latin_square) what = "latin square";
  else if (!t.inverses_ok) what = "inverses";
  else if (!t.associative) what = "associativity";
  else if (!t.generated) what = "generation";
  else if (!t.relators_trivial) what = "relators";
  return Certificate::check("group table is a group satisfying the relators", t.ok(), what);
}

}  // namespace

AnalysisReport analyze(std::string_view text, const AnalysisOptions& options) {
  std::map<std::string, double> timings;
  StageTimer early(timings);
  GroupPresentation presentation = early("parse", [&] { return parse_presentation(text); });
  HomotopyLattices lattices = early("homotopy", [&] { return homotopy_lattices(presentation, options.max_cosets); });
  AnalysisReport r{std::string(text), std::move(presentation), std::move(lattices), {}, {}, {}, {}, {}, {}, {},
                   std::move(timings)};
  StageTimer time(r.timings);
  const GroupPtr& group = r.lattices.group;
  const FiniteGroup& G = *group;
  const std::size_t n = G.order();

  time("certificates", [&] {
    r.certificates.add(table_certificate(G));
    r.certificates.append(verify_universal_cover_exactness(r.lattices.complex));
  });
  time("characters", [&] {
    r.pi2_character = character(r.lattices.pi2.lattice);
    r.pi3_character = character(r.lattices.pi3);
    r.involutions = involution_pairs(G);
    r.freeness = is_rationally_free(r.lattices.pi3);
  });

  r.a = rational_free_excess(r.lattices.pi2.lattice.rank(), n);
  time("rational", [&] {
    if (r.a) {
      r.certificates.append(rational_decomposition_check(r.lattices.pi3, *r.a));
    } else {
      r.certificates.add(Certificate::check("rank pi2 = (n - 1) + n a for an integer a >= 0", false,
                                            "rank pi2 = " + std::to_string(r.lattices.pi2.lattice.rank())));
    }
    if (n > 1) r.certificates.append(kernel_delta_prime_check(group));
  });

  if (!options.skip_half_presentation && r.a == 0 && n > 1) {
    time("half_presentation", [&] {
      r.half_presentation = verify_half_presentation(r.lattices.pi2.lattice);
      r.certificates.append(r.half_presentation->checks);
      if (n == 3 && r.half_presentation->iso) {
        // the overlattice ZG[(1+x)/2] for the generator x of order 3
        Element x = FiniteGroup::identity;
        for (Element g : G.generator_images())
          if (g != FiniteGroup::identity) x = g;
        const ZGElement u = ZGElement::basis(group, FiniteGroup::identity) + ZGElement::basis(group, x);
        const AdjoinedLattice zg_half = group_ring_overlattice(group, u);
        const auto onto = iso_onto(*r.half_presentation, zg_half);
        r.certificates.add(Certificate::check("pi3 = ZG[(1+x)/2] via an explicit isomorphism", onto.has_value()));
      }
    });
  }
  return r;
}

ComparisonReport compare(std::string_view text1, std::string_view text2, std::optional<long long> a,
                         std::optional<long long> b, std::size_t max_cosets) {
  ComparisonReport r{homotopy_lattices(parse_presentation(text1), max_cosets),
                     homotopy_lattices(parse_presentation(text2), max_cosets),
                     {},
                     {},
                     {},
                     {}};
  const auto iso = find_isomorphism(*r.lhs.group, *r.rhs.group);
  if (!iso) throw GroupMismatch("the two presentations define non-isomorphic groups");
  r.group_iso = *iso;
  const ZGLattice rhs_pi3 = pull_back(r.rhs.pi3, r.lhs.group, r.group_iso);

  const long long n = static_cast<long long>(r.lhs.group->order());
  const long long k = static_cast<long long>(r.lhs.pi2.lattice.rank());
  const long long k_prime = static_cast<long long>(r.rhs.pi2.lattice.rank());
  if (!a || !b) {
    const auto ab = minimal_stabilisation(k, k_prime, n);
    if (!ab) throw GroupMismatch("no a, b >= 0 with k + n a = k' + n b");
    if (!a) a = ab->first;
    if (!b) b = ab->second;
  }
  r.comparison = stable_compare(r.lhs.pi3, rhs_pi3, k, k_prime, *a, *b);
  r.lhs_freeness = is_rationally_free(r.lhs.pi3);
  r.rhs_freeness = is_rationally_free(rhs_pi3);
  return r;
}

namespace {

json group_json(const FiniteGroup& g, const ChainComplexData& c, const InvolutionData& d) {
  json names = json::array();
  for (Element e = 0; e < g.order(); ++e) names.push_back(g.name(e));
  json involutions = json::array(), transversal = json::array();
  for (Element t : d.involutions) involutions.push_back(g.name(t));
  for (Element s : d.transversal) transversal.push_back(g.name(s));
  return {{"order", g.order()},
          {"elements", std::move(names)},
          {"cells", {c.n0, c.n1, c.n2}},
          {"p", d.p},
          {"involutions", std::move(involutions)},
          {"transversal", std::move(transversal)}};
}

}  // namespace

json to_json(const AnalysisReport& r) {
  const FiniteGroup& G = *r.lattices.group;
  json pi3 = {{"rank", r.lattices.pi3.rank()},
              {"character", to_json(r.pi3_character)},
              {"rationally_free", r.freeness.free}};
  if (r.freeness.free) pi3["m"] = r.freeness.multiplicity;
  if (r.half_presentation && r.half_presentation->adjoined) {
    pi3["half_presentation"] = {{"m_rank", r.half_presentation->m->lattice.rank()},
                                {"index", integer_to_json(r.half_presentation->adjoined->index)},
                                {"explicit_iso", r.half_presentation->iso.has_value()}};
  }
  json pi2 = {{"rank", r.lattices.pi2.lattice.rank()}, {"character", to_json(r.pi2_character)}};
  if (r.a) pi2["a"] = *r.a;
  return {{"input", {{"text", r.input}, {"presentation", r.presentation.to_string()}}},
          {"group", group_json(G, r.lattices.complex, r.involutions)},
          {"pi2", std::move(pi2)},
          {"pi3", std::move(pi3)},
          {"certificates", to_json(r.certificates)},
          {"timings", r.timings}};
}

json to_json(const ComparisonReport& r) {
  const StableComparison& c = r.comparison;
  const StableExponents& e = c.exponents;
  json iso = json::array();
  for (Element g : r.group_iso) iso.push_back(g);
  return {{"group_order", r.lhs.group->order()},
          {"group_isomorphism", std::move(iso)},
          {"exponents",
           {{"a", e.a}, {"b", e.b}, {"k", e.k}, {"k_prime", e.k_prime}, {"n", e.n}, {"p", e.p},
            {"q", e.exponent_q}, {"r", e.exponent_r}}},
          {"lhs", {{"pi3_rank", r.lhs.pi3.rank()}, {"stable_rank", c.lhs_rank},
                   {"stable_character", to_json(c.lhs_character)}, {"rationally_free", r.lhs_freeness.free}}},
          {"rhs", {{"pi3_rank", r.rhs.pi3.rank()}, {"stable_rank", c.rhs_rank},
                   {"stable_character", to_json(c.rhs_character)}, {"rationally_free", r.rhs_freeness.free}}},
          {"certificates", to_json(c.checks)}};
}

}  // namespace pi3
