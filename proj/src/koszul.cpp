#include "ktwist/koszul.hpp"

#include <algorithm>
#include <map>

namespace ktwist {

namespace {

// All exponent vectors of total degree exactly d, descending grevlex.
std::vector<ExponentVector> monomials_of_degree(int nvars, int d) {
    std::vector<ExponentVector> out;
    if (d < 0) return out;
    ExponentVector cur(nvars, 0);
    auto rec = [&](auto&& self, int pos, int remaining) -> void {
        if (pos == nvars - 1) {
            cur[pos] = remaining;
            out.push_back(cur);
            return;
        }
        for (int v = remaining; v >= 0; --v) {
            cur[pos] = v;
            self(self, pos + 1, remaining - v);
        }
        cur[pos] = 0;
    };
    if (nvars == 0) {
        if (d == 0) out.push_back({});
        return out;
    }
    rec(rec, 0, d);
    std::sort(out.begin(), out.end(),
              [](const ExponentVector& a, const ExponentVector& b) {
                  return grevlex_cmp(a, b) > 0;
              });
    return out;
}

std::vector<IndexTuple> tuples_of_size(int nvars, int p) {
    std::vector<IndexTuple> out;
    if (p < 0 || p > nvars) return out;
    IndexTuple idx(p);
    for (int i = 0; i < p; ++i) idx[i] = i;
    if (p == 0) {
        out.push_back({});
        return out;
    }
    while (true) {
        out.push_back(idx);
        int i = p - 1;
        while (i >= 0 && idx[i] == nvars - p + i) --i;
        if (i < 0) break;
        ++idx[i];
        for (int l = i + 1; l < p; ++l) idx[l] = idx[l - 1] + 1;
    }
    return out;
}

}  // namespace

int SliceBasis::index_of(const IndexTuple& t, const ExponentVector& e) const {
    for (std::size_t i = 0; i < elems.size(); ++i)
        if (elems[i].first == t && elems[i].second == e) return static_cast<int>(i);
    return -1;
}

SliceBasis slice_basis(const SymFrame& frame, int p, int d) {
    SliceBasis b{frame, p, d, {}};
    if (p < 0 || p > frame.nvars() || d < 0) return b;
    auto tuples = tuples_of_size(frame.nvars(), p);
    auto monos = monomials_of_degree(frame.nvars(), d);
    b.elems.reserve(tuples.size() * monos.size());
    for (const auto& t : tuples)
        for (const auto& e : monos) b.elems.emplace_back(t, e);
    return b;
}

IntMatrix IntMatrix::identity(int n) {
    IntMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

bool IntMatrix::is_zero() const {
    for (const Int& v : a)
        if (sgn(v) != 0) return false;
    return true;
}

IntMatrix matmul(const IntMatrix& a, const IntMatrix& b) {
    if (a.cols != b.rows) throw DomainError("matrix dimension mismatch");
    IntMatrix r(a.rows, b.cols);
    for (int i = 0; i < a.rows; ++i)
        for (int l = 0; l < a.cols; ++l) {
            const Int& v = a.at(i, l);
            if (sgn(v) == 0) continue;
            for (int j = 0; j < b.cols; ++j) {
                const Int& w = b.at(l, j);
                if (sgn(w) != 0) r.at(i, j) += v * w;
            }
        }
    return r;
}

int twist_coefficient_degree(const DiffForm& alpha) {
    if (alpha.degree() != 1) throw DomainError("twist must be a 1-form");
    if (alpha.is_zero()) throw DomainError("twist must be nonzero");
    long n = -1;
    for (const auto& [t, c] : alpha.components()) {
        long deg = 0;
        if (!c.is_homogeneous(&deg))
            throw DomainError("twist coefficients are not homogeneous");
        if (n == -1) n = deg;
        else if (deg != n)
            throw DomainError("twist coefficients have mixed degrees");
    }
    return static_cast<int>(n);
}

SliceMap slice_matrix(const DiffForm& alpha, int p, int d) {
    int n = twist_coefficient_degree(alpha);
    const SymFrame& frame = alpha.frame();
    SliceMap sm{slice_basis(frame, p, d), slice_basis(frame, p + 1, d + n), {}};
    sm.matrix = IntMatrix(sm.target.dim(), sm.source.dim());

    // fast index lookup in the target slice
    std::map<std::pair<IndexTuple, ExponentVector>, int> target_index;
    for (int i = 0; i < sm.target.dim(); ++i)
        target_index.emplace(sm.target.elems[i], i);

    RingPtr ring = frame.ring();
    for (int col = 0; col < sm.source.dim(); ++col) {
        const auto& [t, e] = sm.source.elems[col];
        DiffForm omega(frame, p);
        omega.add_term(t, MultiPoly::monomial(ring, e, Int(1)));
        DiffForm image = wedge(alpha, omega);
        for (const auto& [tt, c] : image.components())
            for (const auto& [ee, coeff] : c.terms()) {
                auto it = target_index.find({tt, ee});
                if (it == target_index.end())
                    throw ConsistencyError("wedge image landed outside the target slice");
                sm.matrix.at(it->second, col) = coeff;
            }
    }
    return sm;
}

namespace {

struct SnfCore {
    IntMatrix m;
    IntMatrix vinv;     // tracks column operations: row ops mirrored on vinv
    bool track = false;

    void col_swap(int i, int j) {
        if (i == j) return;
        for (int r = 0; r < m.rows; ++r) std::swap(m.at(r, i), m.at(r, j));
        if (track)
            for (int c = 0; c < vinv.cols; ++c) std::swap(vinv.at(i, c), vinv.at(j, c));
    }
    void row_swap(int i, int j) {
        if (i == j) return;
        for (int c = 0; c < m.cols; ++c) std::swap(m.at(i, c), m.at(j, c));
    }
    // col_j -= q * col_i  (mirror: row_i += q * row_j on vinv)
    void col_axpy(int j, int i, const Int& q) {
        if (sgn(q) == 0) return;
        for (int r = 0; r < m.rows; ++r) m.at(r, j) -= q * m.at(r, i);
        if (track)
            for (int c = 0; c < vinv.cols; ++c) vinv.at(i, c) += q * vinv.at(j, c);
    }
    // row_j -= q * row_i
    void row_axpy(int j, int i, const Int& q) {
        if (sgn(q) == 0) return;
        for (int c = 0; c < m.cols; ++c) m.at(j, c) -= q * m.at(i, c);
    }
    void col_negate(int i) {
        for (int r = 0; r < m.rows; ++r) m.at(r, i) = -m.at(r, i);
        if (track)
            for (int c = 0; c < vinv.cols; ++c) vinv.at(i, c) = -vinv.at(i, c);
    }

    // Diagonalize with the divisibility chain maintained; returns diagonal.
    std::vector<Int> run() {
        std::vector<Int> diag;
        int t = 0;
        int bound = std::min(m.rows, m.cols);
        while (t < bound) {
            // pivot: smallest nonzero absolute value in the trailing block
            int pr = -1, pc = -1;
            Int best;
            for (int r = t; r < m.rows; ++r)
                for (int c = t; c < m.cols; ++c) {
                    const Int& v = m.at(r, c);
                    if (sgn(v) == 0) continue;
                    Int av = abs(v);
                    if (pr < 0 || av < best) {
                        best = av;
                        pr = r;
                        pc = c;
                    }
                }
            if (pr < 0) break;  // trailing block is zero
            row_swap(t, pr);
            col_swap(t, pc);

            bool clean = false;
            while (!clean) {
                clean = true;
                // clear the pivot column with row operations
                for (int r = t + 1; r < m.rows; ++r) {
                    if (sgn(m.at(r, t)) == 0) continue;
                    Int q;
                    mpz_fdiv_q(q.get_mpz_t(), m.at(r, t).get_mpz_t(), m.at(t, t).get_mpz_t());
                    row_axpy(r, t, q);
                    if (sgn(m.at(r, t)) != 0) {
                        // remainder smaller than pivot; swap it up and restart
                        row_swap(t, r);
                        clean = false;
                    }
                }
                // clear the pivot row with column operations
                for (int c = t + 1; c < m.cols; ++c) {
                    if (sgn(m.at(t, c)) == 0) continue;
                    Int q;
                    mpz_fdiv_q(q.get_mpz_t(), m.at(t, c).get_mpz_t(), m.at(t, t).get_mpz_t());
                    col_axpy(c, t, q);
                    if (sgn(m.at(t, c)) != 0) {
                        col_swap(t, c);
                        clean = false;
                    }
                }
            }
            if (sgn(m.at(t, t)) < 0) {
                // normalize the pivot sign via a column negation
                col_negate(t);
            }
            // enforce pivot | trailing block; a violating entry is pulled
            // into the pivot column and the pivot step is redone
            bool redo = false;
            for (int r = t + 1; r < m.rows && !redo; ++r)
                for (int c = t + 1; c < m.cols && !redo; ++c) {
                    if (sgn(m.at(r, c)) == 0) continue;
                    Int rem;
                    mpz_mod(rem.get_mpz_t(), m.at(r, c).get_mpz_t(), m.at(t, t).get_mpz_t());
                    if (sgn(rem) != 0) {
                        col_axpy(t, c, Int(-1));  // col_t += col_c
                        redo = true;
                    }
                }
            if (redo) continue;  // re-run the same pivot index
            diag.push_back(m.at(t, t));
            ++t;
        }
        return diag;
    }
};

}  // namespace

SnfResult smith_normal_form(IntMatrix m) {
    SnfCore core{std::move(m), {}, false};
    SnfResult out;
    out.factors = core.run();
    out.rank = static_cast<int>(out.factors.size());
    return out;
}

namespace {

// SNF keeping track of the inverse of the accumulated column transform, so
// kernel coordinates of the original matrix can be read off: the kernel
// lattice is exactly coordinates rank..cols-1 after applying vinv.
struct KernelSplit {
    int rank = 0;
    IntMatrix vinv;
};

KernelSplit kernel_split(IntMatrix m) {
    int cols = m.cols;
    SnfCore core{std::move(m), IntMatrix::identity(cols), true};
    auto diag = core.run();
    return {static_cast<int>(diag.size()), std::move(core.vinv)};
}

}  // namespace

HomologySlice homology_slice(const DiffForm& alpha, int p, int d) {
    int n = twist_coefficient_degree(alpha);
    SliceMap out_map = slice_matrix(alpha, p, d);
    HomologySlice h;
    h.p = p;
    h.d = d;
    h.source_dim = out_map.source.dim();
    h.target_dim = out_map.target.dim();

    KernelSplit ks = kernel_split(out_map.matrix);
    h.out_rank = ks.rank;
    int kernel_dim = h.source_dim - ks.rank;

    // incoming map, empty when p = 0 or the shifted degree is negative
    IntMatrix b(h.source_dim, 0);
    if (p > 0 && d - n >= 0) {
        SliceMap in_map = slice_matrix(alpha, p - 1, d - n);
        if (in_map.target.dim() != h.source_dim)
            throw ConsistencyError("slice dimensions disagree between maps");
        b = std::move(in_map.matrix);
    }

    // coordinates of the incoming image in the kernel splitting
    IntMatrix coords = matmul(ks.vinv, b);
    for (int r = 0; r < ks.rank; ++r)
        for (int c = 0; c < coords.cols; ++c)
            if (sgn(coords.at(r, c)) != 0)
                throw ConsistencyError("incoming image does not lie in the kernel");
    IntMatrix inner(kernel_dim, coords.cols);
    for (int r = 0; r < kernel_dim; ++r)
        for (int c = 0; c < coords.cols; ++c)
            inner.at(r, c) = coords.at(ks.rank + r, c);

    SnfResult snf = smith_normal_form(std::move(inner));
    h.free_rank = kernel_dim - snf.rank;
    for (const Int& f : snf.factors)
        if (f > 1) h.torsion.push_back(f);
    return h;
}

int top_cokernel_rank_oracle(int N, int n, int d) {
    if (N < 1 || n < 0 || d < 0) return 0;
    int count = 0;
    auto rec = [&](auto&& self, int pos, int remaining) -> void {
        if (pos == N - 1) {
            if (remaining < n) ++count;
            return;
        }
        for (int v = 0; v <= remaining && v < n; ++v) self(self, pos + 1, remaining - v);
    };
    rec(rec, 0, d);
    return count;
}

ExactnessReport exactness_report(int N, int n, int d_max) {
    if (N < 2 || n < 1 || d_max < 0)
        throw DomainError("exactness report needs N >= 2, n >= 1, d_max >= 0");
    DiffForm alpha = power_twist_x_form(N, n);
    ExactnessReport rep;
    rep.N = N;
    rep.n = n;
    rep.d_max = d_max;
    rep.all_pass = true;
    for (int p = 0; p <= N; ++p)
        for (int d = 0; d <= d_max; ++d) {
            ExactnessReport::Row row;
            row.slice = homology_slice(alpha, p, d);
            row.expected_rank = p == N ? top_cokernel_rank_oracle(N, n, d) : 0;
            row.pass = row.slice.free_rank == row.expected_rank && row.slice.torsion.empty();
            rep.all_pass = rep.all_pass && row.pass;
            rep.rows.push_back(std::move(row));
        }
    return rep;
}

}  // namespace ktwist
