#pragma once

#include <string>
#include <vector>

#include "surgcalc/block.hpp"

namespace surgcalc {

enum class ClaimStatus { Pass, Fail, Unchecked };

struct Claim {
  std::string id;
  ClaimStatus status = ClaimStatus::Unchecked;
  std::string evidence;
};

/// A constructed block together with the verification status of every
/// pipeline postcondition.
struct ConstructionDossier {
  ManifoldBlock block;
  std::vector<Claim> claims;

  void pass(std::string id, std::string evidence = {}) {
    claims.push_back({std::move(id), ClaimStatus::Pass, std::move(evidence)});
  }
  void fail(std::string id, std::string evidence = {}) {
    claims.push_back({std::move(id), ClaimStatus::Fail, std::move(evidence)});
  }
  void unchecked(std::string id, std::string evidence = {}) {
    claims.push_back({std::move(id), ClaimStatus::Unchecked, std::move(evidence)});
  }
  void check(std::string id, bool ok, std::string evidence = {}) {
    claims.push_back(
        {std::move(id), ok ? ClaimStatus::Pass : ClaimStatus::Fail, std::move(evidence)});
  }
  void absorb(const std::string& prefix, const CheckReport& rep) {
    for (const auto& item : rep.items)
      check(prefix + "." + item.name, item.pass, item.detail);
  }

  bool any_fail() const {
    for (const auto& c : claims)
      if (c.status == ClaimStatus::Fail) return true;
    return false;
  }
  const Claim& find(const std::string& id) const {
    for (const auto& c : claims)
      if (c.id == id) return c;
    throw Error("dossier has no claim '" + id + "'");
  }
};

}  // namespace surgcalc
