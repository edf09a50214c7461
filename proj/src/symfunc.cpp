#include "ktwist/symfunc.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <shared_mutex>

namespace ktwist {

WeightLabel::WeightLabel(std::vector<int> p) : parts(std::move(p)) {
    while (!parts.empty() && parts.back() == 0) parts.pop_back();
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (parts[i] < 0) throw DomainError("negative partition part");
        if (i > 0 && parts[i] > parts[i - 1])
            throw DomainError("partition parts must be weakly decreasing");
    }
}

int WeightLabel::weight() const {
    int s = 0;
    for (int p : parts) s += p;
    return s;
}

bool WeightLabel::operator<(const WeightLabel& o) const {
    int n = std::max(length(), o.length());
    for (int i = 0; i < n; ++i)
        if (part(i) != o.part(i)) return part(i) < o.part(i);
    return false;
}

std::string to_string(const WeightLabel& w) {
    std::string s = "[";
    for (int i = 0; i < w.length(); ++i) {
        if (i) s += ",";
        s += std::to_string(w.parts[i]);
    }
    return s + "]";
}

MultiPoly elementary(int j, int N) {
    if (j < 0 || j > N) throw DomainError("elementary symmetric index out of range");
    RingPtr ring = x_ring(N);
    std::vector<MultiPoly::Term> terms;
    // all strictly increasing index subsets of size j
    std::vector<int> idx(j);
    for (int i = 0; i < j; ++i) idx[i] = i;
    if (j == 0) return MultiPoly(ring, Int(1));
    while (true) {
        ExponentVector e(N, 0);
        for (int i : idx) e[i] = 1;
        terms.emplace_back(std::move(e), Int(1));
        int i = j - 1;
        while (i >= 0 && idx[i] == N - j + i) --i;
        if (i < 0) break;
        ++idx[i];
        for (int l = i + 1; l < j; ++l) idx[l] = idx[l - 1] + 1;
    }
    return MultiPoly::from_terms(ring, terms);
}

namespace {

// cache for the two recursively defined families, keyed by (index, N)
enum class Family { PowerSum, Homogeneous };

MultiPoly cached_family(Family fam, int index, int N);

MultiPoly compute_power_sum(int m, int N) {
    RingPtr ring = e_ring(N);
    // p_m = sum_{i=1..m-1} (-1)^{i-1} e_i p_{m-i} + (-1)^{m-1} m e_m, e_j = 0 for j > N
    MultiPoly acc(ring);
    for (int i = 1; i < m && i <= N; ++i) {
        MultiPoly term = MultiPoly::variable(ring, i - 1) *
                         cached_family(Family::PowerSum, m - i, N);
        acc = (i % 2 == 1) ? acc + term : acc - term;
    }
    if (m <= N) {
        MultiPoly last = MultiPoly::variable(ring, m - 1) * MultiPoly(ring, Int(m));
        acc = (m % 2 == 1) ? acc + last : acc - last;
    }
    return acc;
}

MultiPoly compute_homogeneous(int r, int N) {
    RingPtr ring = e_ring(N);
    if (r == 0) return MultiPoly(ring, Int(1));
    // h_r = sum_{j=1..min(r,N)} (-1)^{j-1} e_j h_{r-j}
    MultiPoly acc(ring);
    for (int j = 1; j <= r && j <= N; ++j) {
        MultiPoly term = MultiPoly::variable(ring, j - 1) *
                         cached_family(Family::Homogeneous, r - j, N);
        acc = (j % 2 == 1) ? acc + term : acc - term;
    }
    return acc;
}

MultiPoly cached_family(Family fam, int index, int N) {
    static std::map<std::tuple<Family, int, int>, MultiPoly> cache;
    static std::shared_mutex mu;
    auto key = std::make_tuple(fam, index, N);
    {
        std::shared_lock lock(mu);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
    }
    MultiPoly value = fam == Family::PowerSum ? compute_power_sum(index, N)
                                              : compute_homogeneous(index, N);
    std::unique_lock lock(mu);
    return cache.emplace(key, std::move(value)).first->second;
}

}  // namespace

MultiPoly power_sum_in_e(int m, int N) {
    if (m < 1) throw DomainError("power sum index must be >= 1");
    if (N < 1) throw DomainError("power sum needs N >= 1");
    return cached_family(Family::PowerSum, m, N);
}

MultiPoly complete_homogeneous_in_e(int r, int N) {
    if (r < 0) throw DomainError("homogeneous index must be >= 0");
    if (N < 1) throw DomainError("homogeneous needs N >= 1");
    return cached_family(Family::Homogeneous, r, N);
}

namespace {

MultiPoly swap_adjacent_vars(const MultiPoly& p, int i) {
    std::vector<MultiPoly::Term> terms;
    terms.reserve(p.term_count());
    for (const auto& [e, c] : p.terms()) {
        ExponentVector f = e;
        std::swap(f[i], f[i + 1]);
        terms.emplace_back(std::move(f), c);
    }
    return MultiPoly::from_terms(p.ring(), terms);
}

}  // namespace

bool is_symmetric(const MultiPoly& p_x) {
    for (int i = 0; i + 1 < p_x.nvars(); ++i)
        if (!(swap_adjacent_vars(p_x, i) == p_x)) return false;
    return true;
}

MultiPoly expand_in_x(const MultiPoly& p_e) {
    int N = p_e.nvars();
    std::vector<MultiPoly> images;
    images.reserve(N);
    for (int j = 1; j <= N; ++j) images.push_back(elementary(j, N));
    return substitute(p_e, images);
}

MultiPoly to_e_basis(const MultiPoly& p_x) {
    if (!is_symmetric(p_x)) throw NonSymmetricInputError("input is not symmetric");
    int N = p_x.nvars();
    RingPtr ering = e_ring(N);
    MultiPoly result(ering);
    MultiPoly work = p_x;
    while (!work.is_zero()) {
        // lex-leading term with x1 > x2 > ...; exponents are weakly
        // decreasing for a symmetric polynomial
        const auto* best = &work.terms()[0];
        for (const auto& t : work.terms())
            if (lex_cmp(t.first, best->first) > 0) best = &t;
        const ExponentVector& a = best->first;
        Int c = best->second;
        ExponentVector mu(N, 0);
        for (int j = 0; j < N; ++j) {
            int next = j + 1 < N ? a[j + 1] : 0;
            mu[j] = a[j] - next;
            if (mu[j] < 0) throw NonSymmetricInputError("leading exponent not a partition");
        }
        MultiPoly emono = MultiPoly::monomial(ering, mu, c);
        result += emono;
        work -= expand_in_x(emono);
    }
    return result;
}

namespace {

MultiPoly poly_det(const std::vector<std::vector<MultiPoly>>& m, int row,
                   const std::vector<int>& cols, const RingPtr& ring) {
    if (cols.empty()) return MultiPoly(ring, Int(1));
    MultiPoly acc(ring);
    for (std::size_t j = 0; j < cols.size(); ++j) {
        if (m[row][cols[j]].is_zero()) continue;
        std::vector<int> rest;
        rest.reserve(cols.size() - 1);
        for (std::size_t l = 0; l < cols.size(); ++l)
            if (l != j) rest.push_back(cols[l]);
        MultiPoly term = m[row][cols[j]] * poly_det(m, row + 1, rest, ring);
        acc = (j % 2 == 0) ? acc + term : acc - term;
    }
    return acc;
}

}  // namespace

MultiPoly schur_in_e(const WeightLabel& lambda, int N) {
    if (lambda.length() > N - 1) throw DomainError("weight has too many parts");
    int l = lambda.length();
    RingPtr ring = e_ring(N);
    if (l == 0) return MultiPoly(ring, Int(1));
    // det(h_{lambda_i - i + j}), 1 <= i,j <= l, by cofactor expansion
    std::vector<std::vector<MultiPoly>> h(l, std::vector<MultiPoly>(l, MultiPoly(ring)));
    for (int i = 0; i < l; ++i)
        for (int j = 0; j < l; ++j) {
            int idx = lambda.parts[i] - i + j;
            if (idx >= 0) h[i][j] = complete_homogeneous_in_e(idx, N);
        }
    std::vector<int> cols(l);
    for (int j = 0; j < l; ++j) cols[j] = j;
    return poly_det(h, 0, cols, ring);
}

MultiPoly specialize_su(const MultiPoly& p_e) {
    int N = p_e.nvars();
    if (N < 2) throw DomainError("SU specialization needs N >= 2");
    RingPtr target = r_ring(N);
    std::vector<MultiPoly::Term> terms;
    terms.reserve(p_e.term_count());
    for (const auto& [e, c] : p_e.terms()) {
        ExponentVector f(e.begin(), e.end() - 1);  // drop e_N (set to 1)
        terms.emplace_back(std::move(f), c);
    }
    return MultiPoly::from_terms(target, terms);
}

std::vector<WeightLabel> level_weights(int N, int k) {
    if (N < 2 || k < 0) throw DomainError("level_weights needs N >= 2, k >= 0");
    std::vector<WeightLabel> out;
    std::vector<int> parts;
    // lexicographic enumeration of weakly decreasing tuples bounded by k
    auto rec = [&](auto&& self, int pos, int maxpart) -> void {
        if (pos == N - 1) {
            out.emplace_back(parts);
            return;
        }
        for (int v = 0; v <= maxpart; ++v) {
            parts.push_back(v);
            self(self, pos + 1, v);
            parts.pop_back();
        }
    };
    rec(rec, 0, k);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

}  // namespace ktwist
