#pragma once

#include <string>
#include <vector>

#include "ktwist/poly.hpp"

namespace ktwist {

// A partition with at most N-1 parts; labels a level-k primary when every
// part is <= k. Canonical form trims trailing zeros.
struct WeightLabel {
    std::vector<int> parts;

    WeightLabel() = default;
    explicit WeightLabel(std::vector<int> p);

    int length() const { return static_cast<int>(parts.size()); }
    int part(int i) const { return i < length() ? parts[i] : 0; }
    int weight() const;  // |lambda|

    bool operator==(const WeightLabel&) const = default;
    // Canonical order: lexicographic on zero-padded parts; () sorts first.
    bool operator<(const WeightLabel& o) const;
};

std::string to_string(const WeightLabel& w);

// e_j(x1..xN) in the X frame; e_0 = 1.
MultiPoly elementary(int j, int N);

// p~_m: the power sum p_m written in e1..eN (E frame), via the Newton
// recursion with e_j = 0 for j > N. Cached per (m, N).
MultiPoly power_sum_in_e(int m, int N);

// h~_r: the complete homogeneous sum written in e1..eN. Cached per (r, N).
MultiPoly complete_homogeneous_in_e(int r, int N);

// Symmetry check using the N-1 adjacent transpositions (they generate S_N).
bool is_symmetric(const MultiPoly& p_x);

// Rewrite a symmetric X-frame polynomial in the elementary basis by repeated
// subtraction of the lex-leading e-monomial. Throws NonSymmetricInputError.
MultiPoly to_e_basis(const MultiPoly& p_x);

// Substitute e_j -> e_j(x): the inverse direction of to_e_basis.
MultiPoly expand_in_x(const MultiPoly& p_e);

// Schur polynomial s_lambda in the e-variables via the Jacobi-Trudi
// determinant det(h_{lambda_i - i + j}). Requires <= N-1 parts.
MultiPoly schur_in_e(const WeightLabel& lambda, int N);

// The SU(N) specialization e_N := 1, renaming e_j -> r_j (R frame).
MultiPoly specialize_su(const MultiPoly& p_e);

// All partitions with <= N-1 parts, each <= k, in canonical order.
// Count is binomial(N+k-1, N-1).
std::vector<WeightLabel> level_weights(int N, int k);

}  // namespace ktwist
