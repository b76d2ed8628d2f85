// Direct descendants G / Z(G)^p, isomorphism testing, the powerful
// coclass census and ancestor search.

#ifndef PNLAB_ANCESTRY_HPP_
#define PNLAB_ANCESTRY_HPP_

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pnlab/analysis.hpp"

namespace pnlab {

  struct Fingerprint {
    int n = 0, r = 0, e = 0, c = -1, d = -1, s = -1, t = -1;
    std::vector<int> abelian_invariants;  // log_p, descending
    std::vector<int> counts;              // generators of order p^1..p^e
    std::vector<int> upper_power_orders;  // log_p |Z_i^p|
    int              center = 0;          // log_p |Z(G)|
    int              derived = 0;         // log_p |[G,G]|

    auto operator<=>(Fingerprint const&) const = default;
    std::string str() const;
  };
  Fingerprint fingerprint(Group const& g);

  // G / Z(G)^p for nonabelian G; nullopt marks an abelian leaf.
  std::optional<Quotient> direct_descendant(Group const& g);
  // G, its descendant, ... ending at an abelian group.
  std::vector<Group> descendant_chain(Group const& g);

  enum class IsoVerdict { yes, no, unknown };

  struct IsoResult {
    IsoVerdict verdict = IsoVerdict::unknown;
    // For yes: generators of G and their images in H.
    std::vector<Elem> sources;
    std::vector<Elem> images;
    std::int64_t      nodes = 0;
  };
  inline constexpr std::int64_t default_iso_budget = 1'000'000;
  IsoResult are_isomorphic(Group const& g, Group const& h,
                           std::int64_t budget = default_iso_budget);
  // Checks that sources -> images extends to an isomorphism.
  bool verify_isomorphism(Group const& g, Group const& h, IsoResult const& r);

  struct CensusRecord {
    Fingerprint  fingerprint;
    Presentation representative;
    std::string  provenance;
  };
  // All powerfully nilpotent p-groups of powerful coclass d, up to
  // isomorphism; requires (d+1)^2 <= 9.
  std::vector<CensusRecord> census(std::int64_t p, int d);
  // Presentation text followed by "fingerprint <tuple>".
  std::string export_record(CensusRecord const& rec);

  inline constexpr int default_ancestor_log_bound = 7;
  inline constexpr std::int64_t ancestor_presentation_limit = 400'000;
  // Nonabelian G with |G| <= p^max_log and G / Z(G)^p isomorphic to H,
  // drawn from `extra` and, when exhaustive, from every PN-shape
  // presentation in the admissible range (ScaleLimit past the limit).
  std::vector<CensusRecord> ancestors(Group const& h, int max_log = default_ancestor_log_bound,
                                      std::vector<Presentation> const& extra = {},
                                      bool exhaustive = true);

}  // namespace pnlab

#endif  // PNLAB_ANCESTRY_HPP_
