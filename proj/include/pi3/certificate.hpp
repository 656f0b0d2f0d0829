#pragma once

#include <optional>
#include <string>
#include <vector>

namespace pi3 {

enum class Status { Pass, Fail, NecessaryOnly };

std::string to_string(Status s);

/// Outcome of one machine-checked claim. `witness` names where a check failed
/// (a generator, a basis vector, a group element).
struct Certificate {
  std::string claim;
  Status status = Status::Fail;
  std::optional<std::string> witness;

  bool passed() const { return status != Status::Fail; }

  static Certificate check(std::string claim, bool ok, std::optional<std::string> witness = std::nullopt) {
    return {std::move(claim), ok ? Status::Pass : Status::Fail, ok ? std::nullopt : std::move(witness)};
  }
};

struct CertificateSet {
  std::vector<Certificate> checks;

  void add(Certificate c) { checks.push_back(std::move(c)); }
  void append(const CertificateSet& other) { checks.insert(checks.end(), other.checks.begin(), other.checks.end()); }
  bool passed() const {
    for (const auto& c : checks)
      if (!c.passed()) return false;
    return true;
  }
  const Certificate* first_failure() const {
    for (const auto& c : checks)
      if (!c.passed()) return &c;
    return nullptr;
  }
  const Certificate* find(const std::string& claim) const {
    for (const auto& c : checks)
      if (c.claim == claim) return &c;
    return nullptr;
  }
};

}  // namespace pi3
