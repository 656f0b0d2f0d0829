#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "pi3/analysis.hpp"
#include "pi3/errors.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kCertificateFailure = 1;
constexpr int kResourceExhausted = 2;

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

void print_certificates(const pi3::CertificateSet& s) {
  for (const auto& c : s.checks) {
    std::cout << "  [" << pi3::to_string(c.status) << "] " << c.claim;
    if (c.witness) std::cout << " (" << *c.witness << ")";
    std::cout << "\n";
  }
}

void print_report(const pi3::AnalysisReport& r) {
  const auto& l = r.lattices;
  std::cout << "presentation: " << r.presentation.to_string() << "\n"
            << "group order: " << l.group->order() << "\n"
            << "cells: " << l.complex.n0 << ", " << l.complex.n1 << ", " << l.complex.n2 << "\n"
            << "rank pi2: " << l.pi2.lattice.rank() << "  character " << r.pi2_character.to_string() << "\n"
            << "rank pi3: " << l.pi3.rank() << "  character " << r.pi3_character.to_string() << "\n"
            << "p = " << r.involutions.p << ", |T| = " << r.involutions.involutions.size() << "\n"
            << "pi3 (x) Q free over QG: " << (r.freeness.free ? "yes" : "no");
  if (r.freeness.free) std::cout << " (m = " << r.freeness.multiplicity << ")";
  std::cout << "\ncertificates:\n";
  print_certificates(r.certificates);
}

int run_analyze(const std::string& text, const pi3::AnalysisOptions& opts, bool json) {
  const pi3::AnalysisReport r = pi3::analyze(text, opts);
  if (json)
    std::cout << pi3::to_json(r).dump(2) << "\n";
  else
    print_report(r);
  return r.certificates.passed() ? kOk : kCertificateFailure;
}

struct Fixture {
  const char* name;
  const char* text;
  std::size_t order, rank_pi2, rank_pi3;
  bool rationally_free;
};

constexpr Fixture kFixtures[] = {
    {"C3", "gens: x ; rels: x^3", 3, 2, 3, true},
    {"Q8", "gens: x, y ; rels: x^2=y^2, x*y*x=y", 8, 7, 28, false},
    {"trivial", "gens: x ; rels: x", 1, 0, 0, true},
};

int run_fixtures() {
  int status = kOk;
  for (const auto& f : kFixtures) {
    const pi3::AnalysisReport r = pi3::analyze(f.text);
    const bool ok = r.lattices.group->order() == f.order && r.lattices.pi2.lattice.rank() == f.rank_pi2 &&
                    r.lattices.pi3.rank() == f.rank_pi3 && r.freeness.free == f.rationally_free &&
                    r.certificates.passed();
    std::cout << (ok ? "PASS " : "FAIL ") << f.name << "\n";
    if (!ok) {
      print_report(r);
      status = kCertificateFailure;
    }
  }
  return status;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Homotopy lattices of presentation 2-complexes over finite groups"};
  app.require_subcommand(0, 1);
  bool fixtures = false;
  app.add_flag("--fixtures", fixtures, "Run the built-in C3, Q8 and trivial-group regressions");

  std::string path;
  bool json = false;
  pi3::AnalysisOptions opts;
  auto* analyze = app.add_subcommand("analyze", "Compute pi2, pi3 and their certificates for a presentation file");
  analyze->add_option("file", path, "Presentation file")->required();
  analyze->add_flag("--json", json, "Emit a JSON report");
  analyze->add_option("--max-cosets", opts.max_cosets, "Coset enumeration cap")->capture_default_str();
  analyze->add_flag("--skip-half-presentation,--skip-prop53", opts.skip_half_presentation,
                   "Skip the M[u_M/2] isomorphism certificate");

  std::string path1, path2;
  std::optional<long long> a, b;
  bool cmp_json = false;
  std::size_t cmp_max_cosets = pi3::kDefaultMaxCosets;
  auto* compare = app.add_subcommand("compare", "Check stable equivalence conditions for pi3 of two presentations");
  compare->add_option("file1", path1)->required();
  compare->add_option("file2", path2)->required();
  compare->add_option("--a", a, "Copies of V_G added to the first side (default: minimal)");
  compare->add_option("--b", b, "Copies of V_G added to the second side (default: minimal)");
  compare->add_flag("--json", cmp_json, "Emit a JSON report");
  compare->add_option("--max-cosets", cmp_max_cosets, "Coset enumeration cap")->capture_default_str();

  CLI11_PARSE(app, argc, argv);

  try {
    if (fixtures) return run_fixtures();
    if (analyze->parsed()) return run_analyze(read_file(path), opts, json);
    if (compare->parsed()) {
      const pi3::ComparisonReport r = pi3::compare(read_file(path1), read_file(path2), a, b, cmp_max_cosets);
      if (cmp_json) {
        std::cout << pi3::to_json(r).dump(2) << "\n";
      } else {
        const auto& e = r.comparison.exponents;
        std::cout << "n = " << e.n << ", k = " << e.k << ", k' = " << e.k_prime << ", a = " << e.a << ", b = " << e.b
                  << ", q = " << e.exponent_q << ", r = " << e.exponent_r << "\n"
                  << "stabilised ranks: " << r.comparison.lhs_rank << " vs " << r.comparison.rhs_rank << "\n";
        print_certificates(r.comparison.checks);
      }
      return r.comparison.checks.passed() ? kOk : kCertificateFailure;
    }
    std::cout << app.help();
    return kOk;
  } catch (const pi3::ResourceExhausted& e) {
    std::cerr << "resource exhausted: " << e.what() << "\n";
    return kResourceExhausted;
  } catch (const pi3::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kCertificateFailure;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kCertificateFailure;
  }
}
