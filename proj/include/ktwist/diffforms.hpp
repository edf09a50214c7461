#pragma once

#include <map>
#include <string>
#include <vector>

#include "ktwist/poly.hpp"

namespace ktwist {

// Strictly increasing 0-based variable indices selecting a wedge basis
// element dx_{i1} ^ ... ^ dx_{ip}.
using IndexTuple = std::vector<int>;

// Degree-p differential form with polynomial coefficients. Components are
// indexed by strictly increasing tuples; no zero coefficients are stored.
class DiffForm {
public:
    DiffForm(SymFrame frame, int degree);

    static DiffForm from_poly(const SymFrame& frame, MultiPoly coeff);
    // The generator d<var> as a degree-1 form with coefficient 1.
    static DiffForm generator(const SymFrame& frame, int var_index);

    const SymFrame& frame() const { return frame_; }
    int degree() const { return degree_; }
    bool is_zero() const { return comps_.empty(); }
    const std::map<IndexTuple, MultiPoly>& components() const { return comps_; }
    const MultiPoly* component(const IndexTuple& t) const;

    // Accumulate coeff on tuple t (already strictly increasing).
    void add_term(const IndexTuple& t, const MultiPoly& coeff);

    DiffForm operator-() const;
    friend DiffForm operator+(const DiffForm& a, const DiffForm& b);
    friend DiffForm operator-(const DiffForm& a, const DiffForm& b);
    friend DiffForm operator*(const MultiPoly& s, const DiffForm& f);

    bool operator==(const DiffForm& o) const;

    void check_invariants() const;

private:
    SymFrame frame_;
    int degree_ = 0;
    std::map<IndexTuple, MultiPoly> comps_;
};

std::string to_string(const DiffForm& f);

// Antisymmetric product; repeated indices vanish, merges contribute the
// permutation sign.
DiffForm wedge(const DiffForm& a, const DiffForm& b);

// d: degree p -> p+1, built from term-wise partial derivatives. Constants
// map to zero and the Leibniz rule holds by construction.
DiffForm exterior_derivative(const DiffForm& f);

// For F in the E frame, the X-frame 1-form of d(F o e), expanded through
// de_j = sum_i (dE_j/dx_i) dx_i.
DiffForm frame_convert_d(const MultiPoly& F_in_e);

// The homogeneous Lemma representative sum_i x_i^n dx_i over Z[x1..xN].
DiffForm power_twist_x_form(int N, int n);

// The level-k twist alpha = (N+k) * basic-gerbe class, with its polynomial
// representative sum_i x_i^{m-1} dx_i for m = N+k and the coefficients of
// its de_j / dr_j expansions. All construction-time identities are verified
// exactly; failure throws ConsistencyError.
struct TwistForm {
    int N = 0;
    int k = 0;
    int m = 0;  // twist index, N + k
    DiffForm x_form;
    std::vector<MultiPoly> e_coeffs;  // a_1..a_N in the E frame
    std::vector<MultiPoly> r_coeffs;  // a-bar_1..a-bar_{N-1} in the R frame
};

TwistForm twist_form(int N, int k);
// General twist index m >= 1 (m = 1 is the basic class itself, d e_1).
TwistForm twist_form_index(int N, int m);

}  // namespace ktwist
