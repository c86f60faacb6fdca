#pragma once

#include <string>
#include <utility>
#include <vector>

#include "geokit/presentation.hpp"

namespace geokit {
namespace data {

/// Relation data for the built-in families. The complement "scaffolds" are
/// the relations that survive in the complement of the surgery tori; the
/// full relation sets are the surgered groups as the source lists them.
/// Surgery data come as (torus label, datum) in source order; applying them
/// to the scaffold reproduces the full relation set verbatim.

// Family on Sigma_2 x Sigma_n, n >= 2; one surgery coefficient carries m.
Presentation yn_scaffold(int n);
Presentation yn_relations(int n, long long m);
std::vector<std::pair<std::string, SurgeryDatum>> yn_surgeries(int n, long long m);

// Family on Sigma_3 x T^2 with coefficients 1/p, m/q.
Presentation y1_scaffold();
Presentation y1_relations(long long p, long long q, long long m);
std::vector<std::pair<std::string, SurgeryDatum>> y1_surgeries(long long p, long long q,
                                                               long long m);

/// Meridian of the genus-3 surface in the surgered Sigma_3 x T^2, as a word
/// in the complement group.
Word y1_meridian();

// Sigma_3 x Sigma_n variant, transcribed by analogy (no explicit relation
// list in the source); the extra handle commutes with everything.
Presentation zn_scaffold(int n);
std::vector<std::pair<std::string, SurgeryDatum>> zn_surgeries(int n, long long m);

/// The lattice relations as printed, on abstract generators u, v, j, b.
Presentation cs_presentation();

}  // namespace data
}  // namespace geokit
