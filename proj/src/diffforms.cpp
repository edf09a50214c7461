#include "ktwist/diffforms.hpp"

#include <algorithm>

#include "ktwist/symfunc.hpp"

namespace ktwist {

DiffForm::DiffForm(SymFrame frame, int degree) : frame_(frame), degree_(degree) {
    if (degree < 0) throw DomainError("negative form degree");
}

DiffForm DiffForm::from_poly(const SymFrame& frame, MultiPoly coeff) {
    DiffForm f(frame, 0);
    if (!coeff.is_zero()) f.comps_.emplace(IndexTuple{}, std::move(coeff));
    return f;
}

DiffForm DiffForm::generator(const SymFrame& frame, int var_index) {
    if (var_index < 0 || var_index >= frame.nvars())
        throw DomainError("form generator index out of range");
    DiffForm f(frame, 1);
    f.comps_.emplace(IndexTuple{var_index}, MultiPoly(frame.ring(), Int(1)));
    return f;
}

const MultiPoly* DiffForm::component(const IndexTuple& t) const {
    auto it = comps_.find(t);
    return it == comps_.end() ? nullptr : &it->second;
}

void DiffForm::add_term(const IndexTuple& t, const MultiPoly& coeff) {
    if (static_cast<int>(t.size()) != degree_)
        throw DomainError("index tuple size does not match form degree");
    if (coeff.is_zero()) return;
    auto it = comps_.find(t);
    if (it == comps_.end()) {
        comps_.emplace(t, coeff);
    } else {
        it->second += coeff;
        if (it->second.is_zero()) comps_.erase(it);
    }
}

DiffForm DiffForm::operator-() const {
    DiffForm r(frame_, degree_);
    for (const auto& [t, c] : comps_) r.comps_.emplace(t, -c);
    return r;
}

namespace {

void require_same(const DiffForm& a, const DiffForm& b, bool same_degree) {
    if (!(a.frame() == b.frame())) throw RingMismatchError("forms live in different frames");
    if (same_degree && a.degree() != b.degree())
        throw DomainError("form degrees differ");
}

}  // namespace

DiffForm operator+(const DiffForm& a, const DiffForm& b) {
    require_same(a, b, true);
    DiffForm r = a;
    for (const auto& [t, c] : b.components()) r.add_term(t, c);
    return r;
}

DiffForm operator-(const DiffForm& a, const DiffForm& b) {
    require_same(a, b, true);
    DiffForm r = a;
    for (const auto& [t, c] : b.components()) r.add_term(t, -c);
    return r;
}

DiffForm operator*(const MultiPoly& s, const DiffForm& f) {
    DiffForm r(f.frame(), f.degree());
    if (s.is_zero()) return r;
    for (const auto& [t, c] : f.components()) r.add_term(t, s * c);
    return r;
}

bool DiffForm::operator==(const DiffForm& o) const {
    return frame_ == o.frame_ && degree_ == o.degree_ && comps_ == o.comps_;
}

void DiffForm::check_invariants() const {
    int nv = frame_.nvars();
    if (degree_ > nv && !comps_.empty())
        throw ConsistencyError("nonzero form above top degree");
    for (const auto& [t, c] : comps_) {
        if (static_cast<int>(t.size()) != degree_)
            throw ConsistencyError("tuple size mismatch");
        for (std::size_t i = 0; i < t.size(); ++i) {
            if (t[i] < 0 || t[i] >= nv) throw ConsistencyError("tuple index out of range");
            if (i > 0 && t[i] <= t[i - 1])
                throw ConsistencyError("tuple not strictly increasing");
        }
        if (c.is_zero()) throw ConsistencyError("stored zero component");
        c.check_invariants();
    }
}

std::string to_string(const DiffForm& f) {
    if (f.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [t, c] : f.components()) {
        if (!first) out += " + ";
        first = false;
        if (t.empty()) {
            out += to_string(c);
            continue;
        }
        std::string basis;
        for (std::size_t i = 0; i < t.size(); ++i) {
            if (i) basis += "^";
            basis += d_symbol(f.frame(), t[i]);
        }
        if (c.is_constant() && !c.is_zero() && c.terms()[0].second == 1) {
            out += basis;
        } else {
            out += "(" + to_string(c) + ")*" + basis;
        }
    }
    return out;
}

namespace {

// Merge two strictly increasing tuples; returns false on a repeated index,
// otherwise writes the merged tuple and the sign of the interleaving.
bool merge_tuples(const IndexTuple& s, const IndexTuple& t, IndexTuple& out, int& sign) {
    out.clear();
    out.reserve(s.size() + t.size());
    sign = 1;
    std::size_t i = 0, j = 0;
    while (i < s.size() || j < t.size()) {
        if (j == t.size() || (i < s.size() && s[i] < t[j])) {
            out.push_back(s[i++]);
        } else if (i == s.size() || t[j] < s[i]) {
            // moving t[j] past the remaining s entries flips sign that many times
            if ((s.size() - i) % 2 == 1) sign = -sign;
            out.push_back(t[j++]);
        } else {
            return false;  // repeated index
        }
    }
    return true;
}

}  // namespace

DiffForm wedge(const DiffForm& a, const DiffForm& b) {
    require_same(a, b, false);
    DiffForm r(a.frame(), a.degree() + b.degree());
    IndexTuple merged;
    int sign = 0;
    for (const auto& [s, f] : a.components())
        for (const auto& [t, g] : b.components()) {
            if (!merge_tuples(s, t, merged, sign)) continue;
            MultiPoly c = f * g;
            if (sign < 0) c = -c;
            r.add_term(merged, c);
        }
    return r;
}

DiffForm exterior_derivative(const DiffForm& f) {
    const SymFrame& fr = f.frame();
    DiffForm r(fr, f.degree() + 1);
    IndexTuple merged;
    int sign = 0;
    for (const auto& [t, c] : f.components()) {
        for (int i = 0; i < fr.nvars(); ++i) {
            MultiPoly dc = derivative(c, i);
            if (dc.is_zero()) continue;
            IndexTuple di{i};
            if (!merge_tuples(di, t, merged, sign)) continue;
            if (sign < 0) dc = -dc;
            r.add_term(merged, dc);
        }
    }
    return r;
}

DiffForm frame_convert_d(const MultiPoly& F_in_e) {
    int N = F_in_e.nvars();
    SymFrame xf = x_frame(N);
    std::vector<MultiPoly> e_images;
    e_images.reserve(N);
    for (int j = 1; j <= N; ++j) e_images.push_back(elementary(j, N));
    DiffForm out(xf, 1);
    for (int j = 0; j < N; ++j) {
        MultiPoly dF = derivative(F_in_e, j);
        if (dF.is_zero()) continue;
        MultiPoly coeff = substitute(dF, e_images);
        for (int i = 0; i < N; ++i) {
            MultiPoly de = derivative(e_images[j], i);
            if (de.is_zero()) continue;
            out.add_term(IndexTuple{i}, coeff * de);
        }
    }
    return out;
}

DiffForm power_twist_x_form(int N, int n) {
    if (N < 1 || n < 0) throw DomainError("power twist needs N >= 1, n >= 0");
    SymFrame xf = x_frame(N);
    RingPtr xr = xf.ring();
    DiffForm alpha(xf, 1);
    for (int i = 0; i < N; ++i)
        alpha.add_term(IndexTuple{i}, MultiPoly::variable(xr, i, n));
    return alpha;
}

TwistForm twist_form_index(int N, int m) {
    if (N < 2) throw DomainError("twist form needs N >= 2");
    if (m < 1) throw DomainError("twist index must be >= 1");
    TwistForm tw{N, m - N, m, power_twist_x_form(N, m - 1), {}, {}};

    MultiPoly pm = power_sum_in_e(m, N);
    RingPtr ering = e_ring(N);
    for (int j = 1; j <= N; ++j) {
        // a_j = (1/m) dP~_m/de_j, computed over Q and checked integral
        RatPoly da = to_rat_poly(derivative(pm, j - 1));
        RatPoly aj_rat = da * make_rat(Int(1), Int(m));
        MultiPoly aj;
        try {
            aj = to_int_poly(aj_rat);
        } catch (const DomainError&) {
            throw ConsistencyError("twist coefficient a_" + std::to_string(j) +
                                   " is not integral");
        }
        // classical closed form: a_j = (-1)^{j-1} h~_{m-j}
        MultiPoly expected = m - j >= 0 ? complete_homogeneous_in_e(m - j, N)
                                        : MultiPoly(ering);
        if (j % 2 == 0) expected = -expected;
        if (!(aj == expected))
            throw ConsistencyError("twist coefficient a_" + std::to_string(j) +
                                   " disagrees with its closed form");
        tw.e_coeffs.push_back(std::move(aj));
    }

    // back-expansion: sum_j a_j de_j in the X frame must equal the
    // polynomial representative exactly
    SymFrame xf = x_frame(N);
    std::vector<MultiPoly> e_images;
    for (int j = 1; j <= N; ++j) e_images.push_back(elementary(j, N));
    DiffForm expanded(xf, 1);
    for (int j = 0; j < N; ++j) {
        MultiPoly aj_x = substitute(tw.e_coeffs[j], e_images);
        for (int i = 0; i < N; ++i) {
            MultiPoly de = derivative(e_images[j], i);
            if (!de.is_zero()) expanded.add_term(IndexTuple{i}, aj_x * de);
        }
    }
    if (!(expanded == tw.x_form))
        throw ConsistencyError("twist back-expansion does not match x-frame representative");

    for (int j = 1; j <= N - 1; ++j) tw.r_coeffs.push_back(specialize_su(tw.e_coeffs[j - 1]));
    return tw;
}

TwistForm twist_form(int N, int k) {
    if (N < 2 || k < 0) throw DomainError("twist form needs N >= 2, k >= 0");
    return twist_form_index(N, N + k);
}

}  // namespace ktwist
