#ifndef AISR_REPORT_HPP_
#define AISR_REPORT_HPP_

#include <algorithm>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "semiring.hpp"

namespace aisr {

  struct Claim {
    std::string name;
    bool        pass = false;
    std::string detail;
  };

  // Outcome of a construct-and-verify run: the built semiring, the canonical
  // map into the expected target, and one entry per checked property.
  struct WitnessReport {
    std::string                   construction;
    FiniteSemiring                semiring;
    std::optional<FiniteSemiring> target;
    std::vector<Elem>             map;  // semiring -> target
    std::vector<Claim>            claims;
    std::vector<std::string>      notes;

    bool ok() const {
      return !claims.empty()
             && std::all_of(claims.begin(), claims.end(),
                            [](Claim const& c) { return c.pass; });
    }

    Claim const* find(std::string const& name) const {
      for (auto const& c : claims) {
        if (c.name == name) {
          return &c;
        }
      }
      return nullptr;
    }

    void claim(std::string name, bool pass, std::string detail = {}) {
      claims.push_back({std::move(name), pass, std::move(detail)});
    }
  };

  // Records the canonical-map check between the report's semiring and
  // target under the claim name "isomorphism".
  inline void claim_isomorphism(WitnessReport& r) {
    if (!r.target) {
      r.claim("isomorphism", false, "no target");
      return;
    }
    if (std::find(r.map.begin(), r.map.end(), kNoElem) != r.map.end()) {
      r.claim("isomorphism", false, "canonical map is not total");
      return;
    }
    MapVerdict v = verify_canonical_map(r.semiring, *r.target, r.map);
    std::string detail;
    if (!v.homomorphism) {
      detail = v.violation;
    } else if (!v.injective) {
      detail = "not injective";
    } else if (!v.surjective) {
      detail = "not surjective";
    } else {
      detail = std::to_string(r.semiring.size()) + " elements";
    }
    r.claim("isomorphism", v.isomorphism(), detail);
  }

}  // namespace aisr

#endif  // AISR_REPORT_HPP_
