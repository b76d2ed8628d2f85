#ifndef PNLAB_PROPERTIES_HPP_
#define PNLAB_PROPERTIES_HPP_

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "pnlab/group.hpp"
#include "pnlab/presentation.hpp"

namespace pnlab {

  struct CorpusEntry {
    std::string  name;
    Presentation presentation;
  };

  // Enumerated exponent-p^2 streams P(3, n, x) for n <= max_n that pass the
  // consistency check, then the named fixtures and the powerful 2-groups.
  std::vector<CorpusEntry> corpus(int max_n = 6, bool with_fixtures = true);

  struct PropertyReport {
    int                      checks = 0;
    std::vector<std::string> violations;

    void expect(bool ok, std::string const& what);
    void merge(PropertyReport const& other);
  };

  // Structural and powerful-nilpotence properties of one group. Element
  // scans only run for |G| <= p^6; the hypercentral search is limited to
  // |G| <= 3^7.
  PropertyReport check_properties(Group const& g, std::uint64_t seed = 1);

  // Closure size and random associativity triples (|G| <= p^6).
  PropertyReport check_engine(Group const& g, int triples = 1000, std::uint64_t seed = 1);

  Elem random_element(Group const& g, std::mt19937_64& rng);

}  // namespace pnlab

#endif  // PNLAB_PROPERTIES_HPP_
