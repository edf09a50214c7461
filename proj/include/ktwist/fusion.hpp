#pragma once

#include <json.hpp>

#include <string>
#include <vector>

#include "ktwist/groebner.hpp"
#include "ktwist/symfunc.hpp"

namespace ktwist {

// The finite-rank quotient Z[r1..r_{N-1}]/(abar_1..abar_{N-1}) presented two
// ways: by its standard-monomial basis and by the Schur-labeled basis in
// which the structure constants are nonnegative integers. The full table is
// verified (rank, integrality, nonnegativity, unit) at construction.
struct FusionRing {
    int N = 0;
    int k = 0;
    int rank = 0;
    GroebnerBasis groebner;
    std::vector<WeightLabel> weights;            // canonical order; [] first
    std::vector<ExponentVector> basis_monomials; // standard monomials, ascending
    std::vector<long long> table;                // dense cube, row-symmetric

    long long coeff(int i, int j, int l) const {
        return table[(static_cast<std::size_t>(i) * rank + j) * rank + l];
    }

    // structural equality on the serialized fields
    bool operator==(const FusionRing& o) const;
};

FusionRing build_fusion_ring(int N, int k);

// Deterministic serialization: {N, k, rank, groebner_basis, weights, table},
// table rows for lhs <= rhs in canonical weight order.
nlohmann::ordered_json fusion_to_json(const FusionRing& ring);
// Rebuilds a ring from its serialization; standard monomials are re-derived
// from the parsed basis (no Buchberger run).
FusionRing fusion_from_json(const nlohmann::json& j);

// The same quotient data expressed on the standard-monomial basis: rational
// structure constants and the Schur-to-monomial change of basis.
struct MonomialBasisView {
    std::vector<ExponentVector> basis;
    std::vector<Rat> table;                 // dense cube over the basis
    std::vector<std::vector<Rat>> schur_in_monomials;  // rows: weights

    const Rat& coeff(int i, int j, int l) const {
        int r = static_cast<int>(basis.size());
        return table[(static_cast<std::size_t>(i) * r + j) * r + l];
    }
};

MonomialBasisView monomial_basis_view(const FusionRing& ring);

// Filtration-window homology check of the wedge complex over Q[r1..r_{N-1}]
// with alpha = sum abar_j dr_j: at positions p < N-1 every kernel element of
// coefficient degree <= d_max must already lie in the image of the window.
struct RhoExactnessReport {
    struct Row {
        int p = 0;
        int source_dim = 0;
        int kernel_dim = 0;
        int covered_dim = 0;  // kernel vectors accounted for by the image
        bool pass = false;
    };
    int N = 0;
    int k = 0;
    int d_max = 0;
    std::vector<Row> rows;
    bool all_pass = false;
};

RhoExactnessReport rho_frame_exactness(int N, int k, int d_max);

}  // namespace ktwist
