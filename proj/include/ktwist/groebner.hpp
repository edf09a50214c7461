#pragma once

#include <vector>

#include "ktwist/poly.hpp"

namespace ktwist {

// Reduced Groebner basis under the ring's canonical order (graded reverse
// lexicographic, first variable largest). Generators are monic, pairwise
// tail-reduced, and sorted by ascending leading monomial, so the basis is
// the unique reduced one for its ideal and byte-for-byte reproducible.
struct GroebnerBasis {
    RingPtr ring;
    std::vector<RatPoly> gens;
};

// Buchberger with the normal pair-selection strategy (lowest lcm degree,
// then first in queue) and full interreduction of the final basis.
GroebnerBasis buchberger(std::vector<RatPoly> gens);

// Remainder of full multivariate division by the basis: no monomial of the
// result is divisible by any leading term. Unique for a fixed basis.
RatPoly normal_form(const RatPoly& p, const GroebnerBasis& gb);

// Monomials divisible by no leading term, ascending grevlex. Throws
// RankMismatchError when the quotient has infinite rank (some variable has
// no pure power among the leading terms).
std::vector<ExponentVector> standard_monomials(const GroebnerBasis& gb);

}  // namespace ktwist
