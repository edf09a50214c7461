#pragma once

#include <string>
#include <vector>

#include "ktwist/diffforms.hpp"

namespace ktwist {

// Ordered monomial basis of the degree-d slice of Omega^p: pairs of a wedge
// index tuple and a monomial of total degree exactly d. Ordering is tuple
// lex, then the ring's canonical (descending grevlex) monomial order.
struct SliceBasis {
    SymFrame frame;
    int p = 0;
    int d = 0;
    std::vector<std::pair<IndexTuple, ExponentVector>> elems;

    int dim() const { return static_cast<int>(elems.size()); }
    // Position of (t, e); -1 when absent.
    int index_of(const IndexTuple& t, const ExponentVector& e) const;
};

SliceBasis slice_basis(const SymFrame& frame, int p, int d);

// Dense arbitrary-precision integer matrix, row major.
struct IntMatrix {
    int rows = 0;
    int cols = 0;
    std::vector<Int> a;

    IntMatrix() = default;
    IntMatrix(int r, int c) : rows(r), cols(c), a(static_cast<std::size_t>(r) * c) {}

    Int& at(int r, int c) { return a[static_cast<std::size_t>(r) * cols + c]; }
    const Int& at(int r, int c) const { return a[static_cast<std::size_t>(r) * cols + c]; }

    static IntMatrix identity(int n);
    bool is_zero() const;
    bool operator==(const IntMatrix&) const = default;
};

IntMatrix matmul(const IntMatrix& a, const IntMatrix& b);

// The matrix of wedging with alpha on the (p, d) slice. alpha must be a
// degree-1 form with all coefficients homogeneous of one degree n; the map
// lands in the (p+1, d+n) slice.
struct SliceMap {
    SliceBasis source;
    SliceBasis target;
    IntMatrix matrix;
};

SliceMap slice_matrix(const DiffForm& alpha, int p, int d);

// Coefficient homogeneity degree of a degree-1 form; throws on mixed degrees.
int twist_coefficient_degree(const DiffForm& alpha);

// Invariant factors d1 | d2 | ... | dr (all positive) and the rank.
struct SnfResult {
    std::vector<Int> factors;
    int rank = 0;
};

SnfResult smith_normal_form(IntMatrix m);

// Homology of the wedge complex at position p, coefficient degree d:
// ker(slice p,d -> p+1,d+n) / im(slice p-1,d-n -> p,d), over Z.
struct HomologySlice {
    int p = 0;
    int d = 0;
    int source_dim = 0;   // dim of the (p, d) slice
    int target_dim = 0;   // dim of the (p+1, d+n) slice
    int out_rank = 0;     // rank of the outgoing matrix
    int free_rank = 0;    // free rank of the homology group
    std::vector<Int> torsion;  // invariant factors > 1
};

HomologySlice homology_slice(const DiffForm& alpha, int p, int d);

// Count of degree-d monomials in N variables with every exponent < n:
// the expected free rank of the top-position homology slice. Computed by
// direct enumeration, independent of any matrix arithmetic.
int top_cokernel_rank_oracle(int N, int n, int d);

// Per-slice exactness verdicts for alpha = sum_i x_i^n dx_i over Z[x1..xN]:
// positions p < N must have zero homology (free rank 0, no torsion); the top
// position must match the monomial-count oracle.
struct ExactnessReport {
    struct Row {
        HomologySlice slice;
        int expected_rank = 0;  // 0 below the top, oracle count at the top
        bool pass = false;
    };
    int N = 0;
    int n = 0;
    int d_max = 0;
    std::vector<Row> rows;
    bool all_pass = false;
};

ExactnessReport exactness_report(int N, int n, int d_max);

}  // namespace ktwist
