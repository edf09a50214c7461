#pragma once

#include <algorithm>
#include <complex>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "ktwist/error.hpp"
#include "ktwist/numeric.hpp"
#include "ktwist/ring.hpp"

namespace ktwist {

// Exponent vector of one monomial; length equals the ring arity.
// Negative entries are permitted only in Laurent rings.
using ExponentVector = std::vector<int>;

inline long total_degree(const ExponentVector& e) {
    long d = 0;
    for (int x : e) d += x;
    return d;
}

// Graded reverse-lexicographic comparison: higher total degree wins; on ties
// the *smaller* exponent at the last differing position wins.
// Returns -1, 0, +1 for a < b, a == b, a > b.
inline int grevlex_cmp(const ExponentVector& a, const ExponentVector& b) {
    long da = total_degree(a), db = total_degree(b);
    if (da != db) return da < db ? -1 : 1;
    for (int i = static_cast<int>(a.size()) - 1; i >= 0; --i)
        if (a[i] != b[i]) return a[i] > b[i] ? -1 : 1;
    return 0;
}

inline bool grevlex_less(const ExponentVector& a, const ExponentVector& b) {
    return grevlex_cmp(a, b) < 0;
}

// Plain lexicographic with x1 > x2 > ... (used by the e-basis rewriter).
inline int lex_cmp(const ExponentVector& a, const ExponentVector& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    return 0;
}

inline bool monomial_divides(const ExponentVector& a, const ExponentVector& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

inline ExponentVector exp_add(const ExponentVector& a, const ExponentVector& b) {
    ExponentVector r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

inline ExponentVector exp_sub(const ExponentVector& a, const ExponentVector& b) {
    ExponentVector r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

inline ExponentVector exp_lcm(const ExponentVector& a, const ExponentVector& b) {
    ExponentVector r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = std::max(a[i], b[i]);
    return r;
}

namespace detail {

inline bool coeff_is_zero(const Int& c) { return sgn(c) == 0; }
inline bool coeff_is_zero(const Rat& c) { return sgn(c) == 0; }
inline bool coeff_is_negative(const Int& c) { return sgn(c) < 0; }
inline bool coeff_is_negative(const Rat& c) { return sgn(c) < 0; }
inline bool coeff_is_one(const Int& c) { return c == 1; }
inline bool coeff_is_one(const Rat& c) { return c == 1; }

}  // namespace detail

// Sparse multivariate (Laurent) polynomial over an exact coefficient type.
// Terms are kept in strictly descending grevlex order with no zero
// coefficients, so equality is structural.
template <class C>
class BasicPoly {
public:
    using Coeff = C;
    using Term = std::pair<ExponentVector, C>;

    BasicPoly() = default;  // zero over a null ring; assign before use
    explicit BasicPoly(RingPtr ring) : ring_(std::move(ring)) {}
    BasicPoly(RingPtr ring, C constant) : ring_(std::move(ring)) {
        if (!detail::coeff_is_zero(constant))
            terms_.emplace_back(ExponentVector(ring_->nvars, 0), std::move(constant));
    }

    static BasicPoly variable(RingPtr ring, int i, int exp = 1) {
        check_var(*ring, i);
        if (exp < 0 && !ring->laurent)
            throw DomainError("negative exponent in non-Laurent ring");
        BasicPoly p(ring);
        if (exp == 0) return BasicPoly(ring, C(1));
        ExponentVector e(ring->nvars, 0);
        e[i] = exp;
        p.terms_.emplace_back(std::move(e), C(1));
        return p;
    }

    static BasicPoly monomial(RingPtr ring, ExponentVector e, C coeff) {
        BasicPoly p(std::move(ring));
        if (!detail::coeff_is_zero(coeff)) {
            if (static_cast<int>(e.size()) != p.ring_->nvars)
                throw RingMismatchError("exponent vector arity mismatch");
            p.terms_.emplace_back(std::move(e), std::move(coeff));
        }
        return p;
    }

    // Normalizes arbitrary term lists: sums duplicates, drops zeros, sorts.
    static BasicPoly from_terms(RingPtr ring, const std::vector<Term>& raw) {
        std::map<ExponentVector, C> acc;
        for (const auto& [e, c] : raw) {
            if (static_cast<int>(e.size()) != ring->nvars)
                throw RingMismatchError("exponent vector arity mismatch");
            acc[e] += c;
        }
        BasicPoly p(std::move(ring));
        for (auto it = acc.rbegin(); it != acc.rend(); ++it)
            if (!detail::coeff_is_zero(it->second))
                p.terms_.emplace_back(it->first, it->second);
        std::sort(p.terms_.begin(), p.terms_.end(),
                  [](const Term& a, const Term& b) { return grevlex_cmp(a.first, b.first) > 0; });
        return p;
    }

    const RingPtr& ring() const { return ring_; }
    int nvars() const { return ring_->nvars; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const {
        return terms_.empty() || (terms_.size() == 1 && total_degree(terms_[0].first) == 0 &&
                                  terms_[0].first == ExponentVector(ring_->nvars, 0));
    }
    std::size_t term_count() const { return terms_.size(); }
    const std::vector<Term>& terms() const { return terms_; }

    const Term& leading_term() const {
        if (terms_.empty()) throw DomainError("leading term of zero polynomial");
        return terms_.front();
    }

    long degree() const {
        long d = -1;
        for (const auto& [e, c] : terms_) d = std::max(d, total_degree(e));
        return d;
    }

    bool is_homogeneous(long* deg = nullptr) const {
        if (terms_.empty()) {
            if (deg) *deg = -1;
            return true;
        }
        long d = total_degree(terms_[0].first);
        for (const auto& [e, c] : terms_)
            if (total_degree(e) != d) return false;
        if (deg) *deg = d;
        return true;
    }

    bool operator==(const BasicPoly& o) const {
        return *ring_ == *o.ring_ && terms_ == o.terms_;
    }

    BasicPoly operator-() const {
        BasicPoly r(*this);
        for (auto& [e, c] : r.terms_) c = -c;
        return r;
    }

    friend BasicPoly operator+(const BasicPoly& a, const BasicPoly& b) {
        return merge(a, b, false);
    }
    friend BasicPoly operator-(const BasicPoly& a, const BasicPoly& b) {
        return merge(a, b, true);
    }

    friend BasicPoly operator*(const BasicPoly& a, const BasicPoly& b) {
        require_same_ring(a, b);
        std::map<ExponentVector, C> acc;
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_) acc[exp_add(ea, eb)] += ca * cb;
        BasicPoly r(a.ring_);
        r.terms_.reserve(acc.size());
        for (const auto& [e, c] : acc)
            if (!detail::coeff_is_zero(c)) r.terms_.emplace_back(e, c);
        std::sort(r.terms_.begin(), r.terms_.end(),
                  [](const Term& x, const Term& y) { return grevlex_cmp(x.first, y.first) > 0; });
        return r;
    }

    friend BasicPoly operator*(const C& s, const BasicPoly& p) {
        BasicPoly r(p.ring_);
        if (detail::coeff_is_zero(s)) return r;
        r.terms_ = p.terms_;
        for (auto& [e, c] : r.terms_) c *= s;
        return r;
    }
    friend BasicPoly operator*(const BasicPoly& p, const C& s) { return s * p; }

    BasicPoly& operator+=(const BasicPoly& o) { return *this = *this + o; }
    BasicPoly& operator-=(const BasicPoly& o) { return *this = *this - o; }
    BasicPoly& operator*=(const BasicPoly& o) { return *this = *this * o; }

    // Multiply by a single term; cheaper than building a one-term polynomial.
    BasicPoly term_mul(const ExponentVector& e, const C& c) const {
        BasicPoly r(ring_);
        if (detail::coeff_is_zero(c)) return r;
        r.terms_.reserve(terms_.size());
        for (const auto& [me, mc] : terms_) r.terms_.emplace_back(exp_add(me, e), mc * c);
        // adding a constant vector preserves the grevlex order
        return r;
    }

    // Structural well-formedness walk; throws on violation.
    void check_invariants() const {
        if (!ring_) throw ConsistencyError("polynomial without ring context");
        for (std::size_t i = 0; i < terms_.size(); ++i) {
            const auto& [e, c] = terms_[i];
            if (static_cast<int>(e.size()) != ring_->nvars)
                throw ConsistencyError("term arity mismatch");
            if (detail::coeff_is_zero(c)) throw ConsistencyError("stored zero coefficient");
            if (!ring_->laurent)
                for (int x : e)
                    if (x < 0) throw ConsistencyError("negative exponent in non-Laurent ring");
            if (i > 0 && grevlex_cmp(terms_[i - 1].first, e) <= 0)
                throw ConsistencyError("terms not in strictly descending canonical order");
        }
        if constexpr (std::is_same_v<C, Rat>) {
            for (const auto& [e, c] : terms_)
                if (sgn(c.get_den()) <= 0) throw ConsistencyError("non-positive denominator");
        }
    }

private:
    static void check_var(const Ring& ring, int i) {
        if (i < 0 || i >= ring.nvars) throw DomainError("variable index out of range");
    }

    static void require_same_ring(const BasicPoly& a, const BasicPoly& b) {
        if (a.ring_ != b.ring_ && !(a.ring_ && b.ring_ && *a.ring_ == *b.ring_))
            throw RingMismatchError("operands live in different rings");
    }

    static BasicPoly merge(const BasicPoly& a, const BasicPoly& b, bool subtract) {
        require_same_ring(a, b);
        BasicPoly r(a.ring_);
        r.terms_.reserve(a.terms_.size() + b.terms_.size());
        std::size_t i = 0, j = 0;
        while (i < a.terms_.size() || j < b.terms_.size()) {
            int cmp;
            if (i == a.terms_.size()) cmp = -1;
            else if (j == b.terms_.size()) cmp = 1;
            else cmp = grevlex_cmp(a.terms_[i].first, b.terms_[j].first);
            if (cmp > 0) {
                r.terms_.push_back(a.terms_[i++]);
            } else if (cmp < 0) {
                auto t = b.terms_[j++];
                if (subtract) t.second = -t.second;
                r.terms_.push_back(std::move(t));
            } else {
                C c = subtract ? C(a.terms_[i].second - b.terms_[j].second)
                               : C(a.terms_[i].second + b.terms_[j].second);
                if (!detail::coeff_is_zero(c))
                    r.terms_.emplace_back(a.terms_[i].first, std::move(c));
                ++i, ++j;
            }
        }
        return r;
    }

    RingPtr ring_;
    std::vector<Term> terms_;
};

using MultiPoly = BasicPoly<Int>;
using RatPoly = BasicPoly<Rat>;

template <class C>
BasicPoly<C> pow(const BasicPoly<C>& p, int k) {
    if (k < 0) throw DomainError("negative polynomial power");
    BasicPoly<C> r(p.ring(), C(1));
    BasicPoly<C> base = p;
    int e = k;
    while (e > 0) {
        if (e & 1) r *= base;
        e >>= 1;
        if (e) base *= base;
    }
    return r;
}

// Term-wise formal partial derivative. Laurent exponents follow the power
// rule; in polynomial mode all exponents are nonnegative by invariant.
template <class C>
BasicPoly<C> derivative(const BasicPoly<C>& p, int var_index) {
    if (var_index < 0 || var_index >= p.nvars())
        throw DomainError("derivative variable index out of range");
    std::vector<typename BasicPoly<C>::Term> out;
    for (const auto& [e, c] : p.terms()) {
        if (e[var_index] == 0) continue;
        ExponentVector d = e;
        C nc = c * C(d[var_index]);
        d[var_index] -= 1;
        out.emplace_back(std::move(d), std::move(nc));
    }
    return BasicPoly<C>::from_terms(p.ring(), out);
}

// Substitute images[i] for variable i. Requires nonnegative exponents.
template <class C>
BasicPoly<C> substitute(const BasicPoly<C>& p, const std::vector<BasicPoly<C>>& images) {
    if (static_cast<int>(images.size()) != p.nvars())
        throw RingMismatchError("substitution image count mismatch");
    if (images.empty()) throw DomainError("substitution into empty ring");
    RingPtr target = images[0].ring();
    // powers[i][k] = images[i]^k, built on demand
    std::vector<std::vector<BasicPoly<C>>> powers(images.size());
    for (std::size_t i = 0; i < images.size(); ++i)
        powers[i].push_back(BasicPoly<C>(target, C(1)));
    auto power_of = [&](int i, int k) -> const BasicPoly<C>& {
        auto& ps = powers[i];
        while (static_cast<int>(ps.size()) <= k) ps.push_back(ps.back() * images[i]);
        return ps[k];
    };
    BasicPoly<C> acc(target);
    for (const auto& [e, c] : p.terms()) {
        BasicPoly<C> term(target, c);
        for (int i = 0; i < static_cast<int>(e.size()); ++i) {
            if (e[i] < 0) throw DomainError("negative exponent in substitution");
            if (e[i] > 0) term *= power_of(i, e[i]);
        }
        acc += term;
    }
    return acc;
}

namespace detail {

template <class V>
V value_int_pow(const V& base, int e, bool& pole) {
    // negative exponents invert; caller has excluded zero bases for those
    V r(1);
    V b = base;
    int k = e < 0 ? -e : e;
    while (k > 0) {
        if (k & 1) r *= b;
        k >>= 1;
        if (k) b *= b;
    }
    if (e < 0) {
        if (r == V(0)) {
            pole = true;
            return V(0);
        }
        return V(1) / r;
    }
    return r;
}

inline Rat to_value(const Int& c, const Rat&) { return Rat(c); }
inline Rat to_value(const Rat& c, const Rat&) { return c; }
inline std::complex<double> to_value(const Int& c, const std::complex<double>&) {
    return {c.get_d(), 0.0};
}
inline std::complex<double> to_value(const Rat& c, const std::complex<double>&) {
    return {c.get_d(), 0.0};
}

template <class C, class V>
V evaluate_impl(const BasicPoly<C>& p, const std::vector<V>& point) {
    if (static_cast<int>(point.size()) != p.nvars())
        throw DomainError("evaluation point arity mismatch");
    V acc(0);
    for (const auto& [e, c] : p.terms()) {
        V t = to_value(c, V(0));
        for (std::size_t i = 0; i < point.size(); ++i) {
            if (e[i] == 0) continue;
            if (e[i] < 0 && point[i] == V(0))
                throw DomainError("zero coordinate with negative exponent");
            bool pole = false;
            t *= value_int_pow(point[i], e[i], pole);
            if (pole) throw DomainError("zero coordinate with negative exponent");
        }
        acc += t;
    }
    return acc;
}

}  // namespace detail

template <class C>
Rat evaluate(const BasicPoly<C>& p, const std::vector<Rat>& point) {
    return detail::evaluate_impl(p, point);
}

template <class C>
std::complex<double> evaluate(const BasicPoly<C>& p,
                              const std::vector<std::complex<double>>& point) {
    return detail::evaluate_impl(p, point);
}

namespace detail {

template <class C>
void render_term(std::string& out, const Ring& ring, const ExponentVector& e, const C& c,
                 bool first) {
    bool neg = coeff_is_negative(c);
    if (first) {
        if (neg) out += "-";
    } else {
        out += neg ? " - " : " + ";
    }
    C mag = neg ? C(-c) : c;
    bool has_vars = false;
    for (int x : e)
        if (x != 0) has_vars = true;
    bool wrote_coeff = false;
    if (!coeff_is_one(mag) || !has_vars) {
        out += to_string(mag);
        wrote_coeff = true;
    }
    bool need_star = wrote_coeff;
    for (std::size_t i = 0; i < e.size(); ++i) {
        if (e[i] == 0) continue;
        if (need_star) out += "*";
        out += ring.names[i];
        if (e[i] != 1) {
            out += "^";
            out += std::to_string(e[i]);
        }
        need_star = true;
    }
}

}  // namespace detail

// Canonical rendering: terms in descending canonical order, explicit * and ^.
template <class C>
std::string to_string(const BasicPoly<C>& p) {
    if (p.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [e, c] : p.terms()) {
        detail::render_term(out, *p.ring(), e, c, first);
        first = false;
    }
    return out;
}

inline RatPoly to_rat_poly(const MultiPoly& p) {
    std::vector<RatPoly::Term> ts;
    ts.reserve(p.term_count());
    for (const auto& [e, c] : p.terms()) ts.emplace_back(e, Rat(c));
    return RatPoly::from_terms(p.ring(), ts);
}

// Requires every denominator to be 1.
inline MultiPoly to_int_poly(const RatPoly& p) {
    std::vector<MultiPoly::Term> ts;
    ts.reserve(p.term_count());
    for (const auto& [e, c] : p.terms()) {
        if (!is_integral(c)) throw DomainError("non-integral coefficient");
        ts.emplace_back(e, c.get_num());
    }
    return MultiPoly::from_terms(p.ring(), ts);
}

}  // namespace ktwist
