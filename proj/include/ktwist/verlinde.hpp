#pragma once

#include <json.hpp>

#include <complex>
#include <vector>

#include "ktwist/symfunc.hpp"

namespace ktwist {

// One joint-spectrum evaluation point of the level-k fusion ring: N complex
// coordinates on the unit circle with product 1, pairwise distinct.
struct VerlindePoint {
    WeightLabel label;
    std::vector<std::complex<double>> coords;
};

std::vector<VerlindePoint> verlinde_points(int N, int k);

// Fusion coefficients recovered numerically: evaluate the Schur basis at the
// points, solve V c = s_lambda * s_mu pointwise, round and bound residuals.
// Never touches the Groebner pipeline.
struct OracleTable {
    int N = 0;
    int k = 0;
    int rank = 0;
    std::vector<WeightLabel> weights;
    std::vector<long long> table;  // dense cube, same layout as FusionRing
    double max_residual = 0.0;
    double condition_estimate = 0.0;

    long long coeff(int i, int j, int l) const {
        return table[(static_cast<std::size_t>(i) * rank + j) * rank + l];
    }
};

OracleTable oracle_fusion(int N, int k, double residual_tol = 1e-6,
                          double condition_bound = 1e8);

// Max modulus of the twist coefficients abar_j over all Verlinde points;
// they vanish on the quotient's spectrum.
struct VanishingReport {
    int N = 0;
    int k = 0;
    double max_abs = 0.0;
    std::vector<double> per_generator;
};

VanishingReport ideal_vanishing_check(int N, int k);

nlohmann::ordered_json oracle_to_json(const OracleTable& t);

}  // namespace ktwist
