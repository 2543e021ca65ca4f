#pragma once

#include <string>
#include <vector>

namespace ugl {

// One verified identity. `anchor` is the stable name of the identity being
// checked, `params` the instance, `note` optional detail (e.g. computed
// eigenvalue or coefficient list).
struct IdentityReport {
  std::string name;
  std::string anchor;
  std::string params;
  bool pass = false;
  long long lhs_terms = 0;
  long long rhs_terms = 0;
  double millis = 0.0;
  std::string note;
};

struct SuiteReport {
  std::string suite;
  std::string params;
  std::vector<IdentityReport> identities;

  bool all_pass() const {
    for (const auto& r : identities)
      if (!r.pass) return false;
    return true;
  }
};

}  // namespace ugl
