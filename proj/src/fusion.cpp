#include "ktwist/fusion.hpp"

#include <algorithm>
#include <map>

#include "ktwist/diffforms.hpp"
#include "ktwist/parse.hpp"

namespace ktwist {

namespace {

// Minimal exact dense matrix over Q: enough for inverses, ranks and kernels
// at quotient-ring scale.
struct RatMatrix {
    int rows = 0, cols = 0;
    std::vector<Rat> a;

    RatMatrix() = default;
    RatMatrix(int r, int c) : rows(r), cols(c), a(static_cast<std::size_t>(r) * c) {}
    Rat& at(int r, int c) { return a[static_cast<std::size_t>(r) * cols + c]; }
    const Rat& at(int r, int c) const { return a[static_cast<std::size_t>(r) * cols + c]; }
};

// Gauss-Jordan; returns rank. When inv != nullptr the matrix must be square
// and nonsingular on success (rank == rows) with *inv its inverse.
int gauss_jordan(RatMatrix m, RatMatrix* inv) {
    if (inv) *inv = RatMatrix(m.rows, m.rows);
    if (inv)
        for (int i = 0; i < m.rows; ++i) inv->at(i, i) = 1;
    int rank = 0;
    for (int col = 0; col < m.cols && rank < m.rows; ++col) {
        int pivot = -1;
        for (int r = rank; r < m.rows; ++r)
            if (sgn(m.at(r, col)) != 0) {
                pivot = r;
                break;
            }
        if (pivot < 0) continue;
        for (int c = 0; c < m.cols; ++c) std::swap(m.at(rank, c), m.at(pivot, c));
        if (inv)
            for (int c = 0; c < m.rows; ++c) std::swap(inv->at(rank, c), inv->at(pivot, c));
        Rat p = m.at(rank, col);
        for (int c = 0; c < m.cols; ++c) m.at(rank, c) /= p;
        if (inv)
            for (int c = 0; c < m.rows; ++c) inv->at(rank, c) /= p;
        for (int r = 0; r < m.rows; ++r) {
            if (r == rank || sgn(m.at(r, col)) == 0) continue;
            Rat f = m.at(r, col);
            for (int c = 0; c < m.cols; ++c) m.at(r, c) -= f * m.at(rank, c);
            if (inv)
                for (int c = 0; c < m.rows; ++c) inv->at(r, c) -= f * inv->at(rank, c);
        }
        ++rank;
    }
    return rank;
}

std::vector<Rat> mat_vec(const RatMatrix& m, const std::vector<Rat>& v) {
    std::vector<Rat> out(m.rows);
    for (int r = 0; r < m.rows; ++r) {
        Rat acc;
        for (int c = 0; c < m.cols; ++c)
            if (sgn(m.at(r, c)) != 0 && sgn(v[c]) != 0) acc += m.at(r, c) * v[c];
        out[r] = acc;
    }
    return out;
}

// Coordinates of a fully reduced polynomial in the standard-monomial basis.
std::vector<Rat> coords_in_basis(const RatPoly& p,
                                 const std::map<ExponentVector, int>& index) {
    std::vector<Rat> v(index.size());
    for (const auto& [e, c] : p.terms()) {
        auto it = index.find(e);
        if (it == index.end())
            throw ConsistencyError("normal form contains a non-standard monomial");
        v[it->second] = c;
    }
    return v;
}

}  // namespace

bool FusionRing::operator==(const FusionRing& o) const {
    if (N != o.N || k != o.k || rank != o.rank) return false;
    if (groebner.gens.size() != o.groebner.gens.size()) return false;
    for (std::size_t i = 0; i < groebner.gens.size(); ++i)
        if (!(groebner.gens[i] == o.groebner.gens[i])) return false;
    return weights == o.weights && basis_monomials == o.basis_monomials && table == o.table;
}

FusionRing build_fusion_ring(int N, int k) {
    if (N < 2 || k < 0) throw DomainError("fusion ring needs N >= 2, k >= 0");
    FusionRing ring;
    ring.N = N;
    ring.k = k;

    TwistForm tw = twist_form(N, k);
    std::vector<RatPoly> gens;
    gens.reserve(tw.r_coeffs.size());
    for (const MultiPoly& g : tw.r_coeffs) gens.push_back(to_rat_poly(g));
    ring.groebner = buchberger(std::move(gens));

    ring.basis_monomials = standard_monomials(ring.groebner);
    Int expected = binomial(N + k - 1, N - 1);
    if (Int(static_cast<long>(ring.basis_monomials.size())) != expected)
        throw RankMismatchError("quotient rank " + std::to_string(ring.basis_monomials.size()) +
                                " does not match the weight count " + expected.get_str());
    ring.rank = static_cast<int>(ring.basis_monomials.size());

    ring.weights = level_weights(N, k);
    if (static_cast<int>(ring.weights.size()) != ring.rank)
        throw RankMismatchError("weight enumeration disagrees with quotient rank");

    std::map<ExponentVector, int> mono_index;
    for (int i = 0; i < ring.rank; ++i) mono_index.emplace(ring.basis_monomials[i], i);

    // Schur-labeled basis: normal forms of s_lambda |_{e_N = 1}
    std::vector<RatPoly> schur_nf;
    schur_nf.reserve(ring.rank);
    for (const WeightLabel& w : ring.weights) {
        MultiPoly s = specialize_su(schur_in_e(w, N));
        schur_nf.push_back(normal_form(to_rat_poly(s), ring.groebner));
    }

    // change of basis (standard monomials <- Schur) must be invertible
    RatMatrix cob(ring.rank, ring.rank);
    for (int j = 0; j < ring.rank; ++j) {
        auto v = coords_in_basis(schur_nf[j], mono_index);
        for (int i = 0; i < ring.rank; ++i) cob.at(i, j) = v[i];
    }
    RatMatrix cob_inv;
    if (gauss_jordan(cob, &cob_inv) != ring.rank)
        throw RankMismatchError("Schur normal forms do not span the quotient");

    ring.table.assign(static_cast<std::size_t>(ring.rank) * ring.rank * ring.rank, 0);
    for (int i = 0; i < ring.rank; ++i)
        for (int j = i; j < ring.rank; ++j) {
            RatPoly prod = normal_form(schur_nf[i] * schur_nf[j], ring.groebner);
            auto coords = mat_vec(cob_inv, coords_in_basis(prod, mono_index));
            for (int l = 0; l < ring.rank; ++l) {
                const Rat& c = coords[l];
                if (!is_integral(c))
                    throw NonIntegralStructureConstant(
                        "structure constant is not an integer: " + to_string(c));
                if (sgn(c) < 0)
                    throw NegativeStructureConstant("negative structure constant: " +
                                                    to_string(c));
                if (!c.get_num().fits_slong_p())
                    throw ConsistencyError("structure constant overflows table storage");
                long long v = c.get_num().get_si();
                ring.table[(static_cast<std::size_t>(i) * ring.rank + j) * ring.rank + l] = v;
                ring.table[(static_cast<std::size_t>(j) * ring.rank + i) * ring.rank + l] = v;
            }
        }

    // the empty weight must act as the identity
    for (int j = 0; j < ring.rank; ++j)
        for (int l = 0; l < ring.rank; ++l)
            if (ring.coeff(0, j, l) != (j == l ? 1 : 0))
                throw ConsistencyError("empty weight is not the unit of the table");
    return ring;
}

nlohmann::ordered_json fusion_to_json(const FusionRing& ring) {
    nlohmann::ordered_json j;
    j["N"] = ring.N;
    j["k"] = ring.k;
    j["rank"] = ring.rank;
    auto gb = nlohmann::ordered_json::array();
    for (const RatPoly& g : ring.groebner.gens) gb.push_back(to_string(g));
    j["groebner_basis"] = std::move(gb);
    auto ws = nlohmann::ordered_json::array();
    for (const WeightLabel& w : ring.weights) ws.push_back(w.parts);
    j["weights"] = std::move(ws);
    auto table = nlohmann::ordered_json::array();
    for (int i = 0; i < ring.rank; ++i)
        for (int l2 = i; l2 < ring.rank; ++l2) {
            nlohmann::ordered_json row;
            row["lhs"] = ring.weights[i].parts;
            row["rhs"] = ring.weights[l2].parts;
            auto result = nlohmann::ordered_json::array();
            for (int l = 0; l < ring.rank; ++l) {
                long long c = ring.coeff(i, l2, l);
                if (c == 0) continue;
                nlohmann::ordered_json entry;
                entry["weight"] = ring.weights[l].parts;
                entry["coeff"] = c;
                result.push_back(std::move(entry));
            }
            row["result"] = std::move(result);
            table.push_back(std::move(row));
        }
    j["table"] = std::move(table);
    return j;
}

FusionRing fusion_from_json(const nlohmann::json& j) {
    FusionRing ring;
    ring.N = j.at("N").get<int>();
    ring.k = j.at("k").get<int>();
    ring.rank = j.at("rank").get<int>();

    RingPtr rring = r_ring(ring.N);
    ring.groebner.ring = rring;
    for (const auto& s : j.at("groebner_basis"))
        ring.groebner.gens.push_back(parse_rat_poly(s.get<std::string>(), rring));
    ring.basis_monomials = standard_monomials(ring.groebner);
    if (static_cast<int>(ring.basis_monomials.size()) != ring.rank)
        throw ConsistencyError("cached basis rank disagrees with rank field");

    std::map<std::vector<int>, int> weight_index;
    for (const auto& w : j.at("weights")) {
        ring.weights.emplace_back(WeightLabel(w.get<std::vector<int>>()));
        weight_index.emplace(ring.weights.back().parts,
                             static_cast<int>(ring.weights.size()) - 1);
    }
    if (static_cast<int>(ring.weights.size()) != ring.rank)
        throw ConsistencyError("cached weight count disagrees with rank field");

    ring.table.assign(static_cast<std::size_t>(ring.rank) * ring.rank * ring.rank, 0);
    for (const auto& row : j.at("table")) {
        int i = weight_index.at(row.at("lhs").get<std::vector<int>>());
        int l2 = weight_index.at(row.at("rhs").get<std::vector<int>>());
        for (const auto& entry : row.at("result")) {
            int l = weight_index.at(entry.at("weight").get<std::vector<int>>());
            long long c = entry.at("coeff").get<long long>();
            ring.table[(static_cast<std::size_t>(i) * ring.rank + l2) * ring.rank + l] = c;
            ring.table[(static_cast<std::size_t>(l2) * ring.rank + i) * ring.rank + l] = c;
        }
    }
    return ring;
}

MonomialBasisView monomial_basis_view(const FusionRing& ring) {
    MonomialBasisView view;
    view.basis = ring.basis_monomials;
    int r = ring.rank;
    RingPtr rring = ring.groebner.ring;

    std::map<ExponentVector, int> mono_index;
    for (int i = 0; i < r; ++i) mono_index.emplace(view.basis[i], i);

    view.table.assign(static_cast<std::size_t>(r) * r * r, Rat(0));
    for (int i = 0; i < r; ++i)
        for (int j = i; j < r; ++j) {
            RatPoly prod = RatPoly::monomial(rring, exp_add(view.basis[i], view.basis[j]), Rat(1));
            auto coords = coords_in_basis(normal_form(prod, ring.groebner), mono_index);
            for (int l = 0; l < r; ++l) {
                view.table[(static_cast<std::size_t>(i) * r + j) * r + l] = coords[l];
                view.table[(static_cast<std::size_t>(j) * r + i) * r + l] = coords[l];
            }
        }

    for (const WeightLabel& w : ring.weights) {
        MultiPoly s = specialize_su(schur_in_e(w, ring.N));
        RatPoly nf = normal_form(to_rat_poly(s), ring.groebner);
        view.schur_in_monomials.push_back(coords_in_basis(nf, mono_index));
    }
    return view;
}

RhoExactnessReport rho_frame_exactness(int N, int k, int d_max) {
    if (N < 2 || k < 0 || d_max < 0)
        throw DomainError("rho exactness needs N >= 2, k >= 0, d_max >= 0");
    TwistForm tw = twist_form(N, k);
    int nv = N - 1;
    SymFrame rf = r_frame(N);
    RingPtr rring = rf.ring();

    DiffForm alpha(rf, 1);
    for (int j = 0; j < nv; ++j) alpha.add_term(IndexTuple{j}, tw.r_coeffs[j]);

    long shift = 0;  // max coefficient degree of alpha
    for (const MultiPoly& g : tw.r_coeffs) shift = std::max(shift, g.degree());

    // ordered basis of forms with coefficient degree <= d, degree-major so a
    // smaller window is a prefix of a larger one
    auto window_basis = [&](int p, int d) {
        std::vector<std::pair<IndexTuple, ExponentVector>> out;
        std::vector<IndexTuple> tuples;
        {
            IndexTuple idx(p);
            for (int i = 0; i < p; ++i) idx[i] = i;
            if (p == 0) tuples.push_back({});
            else if (p <= nv)
                while (true) {
                    tuples.push_back(idx);
                    int i = p - 1;
                    while (i >= 0 && idx[i] == nv - p + i) --i;
                    if (i < 0) break;
                    ++idx[i];
                    for (int l = i + 1; l < p; ++l) idx[l] = idx[l - 1] + 1;
                }
        }
        for (int deg = 0; deg <= d; ++deg) {
            std::vector<ExponentVector> monos;
            ExponentVector cur(nv, 0);
            auto rec = [&](auto&& self, int pos, int remaining) -> void {
                if (pos == nv - 1) {
                    cur[pos] = remaining;
                    monos.push_back(cur);
                    cur[pos] = 0;
                    return;
                }
                for (int v = remaining; v >= 0; --v) {
                    cur[pos] = v;
                    self(self, pos + 1, remaining - v);
                }
                cur[pos] = 0;
            };
            rec(rec, 0, deg);
            std::sort(monos.begin(), monos.end(),
                      [](const ExponentVector& a, const ExponentVector& b) {
                          return grevlex_cmp(a, b) > 0;
                      });
            for (const auto& t : tuples)
                for (const auto& e : monos) out.emplace_back(t, e);
        }
        return out;
    };

    auto wedge_matrix = [&](int p, int d_src, int d_tgt) {
        auto src = window_basis(p, d_src);
        auto tgt = window_basis(p + 1, d_tgt);
        std::map<std::pair<IndexTuple, ExponentVector>, int> tgt_index;
        for (std::size_t i = 0; i < tgt.size(); ++i) tgt_index.emplace(tgt[i], i);
        RatMatrix m(static_cast<int>(tgt.size()), static_cast<int>(src.size()));
        for (std::size_t col = 0; col < src.size(); ++col) {
            DiffForm omega(rf, p);
            omega.add_term(src[col].first,
                           MultiPoly::monomial(rring, src[col].second, Int(1)));
            DiffForm image = wedge(alpha, omega);
            for (const auto& [tt, c] : image.components())
                for (const auto& [ee, coeff] : c.terms()) {
                    auto it = tgt_index.find({tt, ee});
                    if (it == tgt_index.end())
                        throw ConsistencyError("wedge image escaped the window");
                    m.at(it->second, static_cast<int>(col)) = Rat(coeff);
                }
        }
        return m;
    };

    RhoExactnessReport rep;
    rep.N = N;
    rep.k = k;
    rep.d_max = d_max;
    rep.all_pass = true;

    for (int p = 0; p < nv; ++p) {
        RatMatrix a = wedge_matrix(p, d_max, d_max + static_cast<int>(shift));
        // kernel of a via homogeneous solve: row-reduce and read free columns
        RatMatrix red = a;
        int rank = gauss_jordan(red, nullptr);
        int kernel_dim = a.cols - rank;

        RhoExactnessReport::Row row;
        row.p = p;
        row.source_dim = a.cols;
        row.kernel_dim = kernel_dim;

        if (p == 0) {
            row.covered_dim = 0;
            row.pass = kernel_dim == 0;
        } else if (kernel_dim == 0) {
            row.covered_dim = 0;
            row.pass = true;
        } else {
            // kernel basis from the reduced row echelon form of a
            RatMatrix m = a;
            std::vector<int> pivot_col;
            int rk = 0;
            for (int col = 0; col < m.cols && rk < m.rows; ++col) {
                int pivot = -1;
                for (int r = rk; r < m.rows; ++r)
                    if (sgn(m.at(r, col)) != 0) {
                        pivot = r;
                        break;
                    }
                if (pivot < 0) continue;
                for (int c = 0; c < m.cols; ++c) std::swap(m.at(rk, c), m.at(pivot, c));
                Rat pv = m.at(rk, col);
                for (int c = 0; c < m.cols; ++c) m.at(rk, c) /= pv;
                for (int r = 0; r < m.rows; ++r) {
                    if (r == rk || sgn(m.at(r, col)) == 0) continue;
                    Rat f = m.at(r, col);
                    for (int c = 0; c < m.cols; ++c) m.at(r, c) -= f * m.at(rk, c);
                }
                pivot_col.push_back(col);
                ++rk;
            }
            std::vector<bool> is_pivot(m.cols, false);
            for (int c : pivot_col) is_pivot[c] = true;

            RatMatrix b = wedge_matrix(p - 1, d_max, d_max + static_cast<int>(shift));
            // embed kernel vectors (source window) into the target window of b
            int big = b.rows;
            int cover = b.cols;
            RatMatrix joint(big, cover + kernel_dim);
            for (int r = 0; r < big; ++r)
                for (int c = 0; c < cover; ++c) joint.at(r, c) = b.at(r, c);
            int kcol = 0;
            for (int c = 0; c < m.cols; ++c) {
                if (is_pivot[c]) continue;
                // kernel vector: x_c = 1, pivots read from rref
                std::vector<Rat> vec(m.cols);
                vec[c] = 1;
                for (int r = 0; r < rk; ++r) vec[pivot_col[r]] = -m.at(r, c);
                for (int i = 0; i < m.cols; ++i) joint.at(i, cover + kcol) = vec[i];
                ++kcol;
            }
            int rank_b = gauss_jordan(b, nullptr);
            int rank_joint = gauss_jordan(joint, nullptr);
            row.covered_dim = kernel_dim - (rank_joint - rank_b);
            row.pass = rank_joint == rank_b;
        }
        rep.all_pass = rep.all_pass && row.pass;
        rep.rows.push_back(row);
    }
    return rep;
}

}  // namespace ktwist
