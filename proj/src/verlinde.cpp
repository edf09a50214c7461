#include "ktwist/verlinde.hpp"

#include <algorithm>
#include <cmath>

#include "ktwist/diffforms.hpp"

namespace ktwist {

namespace {

using Cplx = std::complex<double>;

constexpr double kPi = 3.14159265358979323846;

struct CplxMatrix {
    int n = 0;
    std::vector<Cplx> a;

    explicit CplxMatrix(int size) : n(size), a(static_cast<std::size_t>(size) * size) {}
    Cplx& at(int r, int c) { return a[static_cast<std::size_t>(r) * n + c]; }
    const Cplx& at(int r, int c) const { return a[static_cast<std::size_t>(r) * n + c]; }
};

// LU with partial pivoting; throws IllConditionedError on a vanishing pivot.
struct Lu {
    CplxMatrix lu;
    std::vector<int> perm;

    explicit Lu(CplxMatrix m) : lu(std::move(m)), perm(lu.n) {
        int n = lu.n;
        for (int i = 0; i < n; ++i) perm[i] = i;
        for (int col = 0; col < n; ++col) {
            int pivot = col;
            double best = std::abs(lu.at(col, col));
            for (int r = col + 1; r < n; ++r)
                if (std::abs(lu.at(r, col)) > best) {
                    best = std::abs(lu.at(r, col));
                    pivot = r;
                }
            if (best == 0.0) throw IllConditionedError("singular evaluation matrix");
            if (pivot != col) {
                for (int c = 0; c < n; ++c) std::swap(lu.at(col, c), lu.at(pivot, c));
                std::swap(perm[col], perm[pivot]);
            }
            for (int r = col + 1; r < n; ++r) {
                Cplx f = lu.at(r, col) / lu.at(col, col);
                lu.at(r, col) = f;
                for (int c = col + 1; c < n; ++c) lu.at(r, c) -= f * lu.at(col, c);
            }
        }
    }

    std::vector<Cplx> solve(const std::vector<Cplx>& rhs) const {
        int n = lu.n;
        std::vector<Cplx> x(n);
        for (int i = 0; i < n; ++i) x[i] = rhs[perm[i]];
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < i; ++j) x[i] -= lu.at(i, j) * x[j];
        for (int i = n - 1; i >= 0; --i) {
            for (int j = i + 1; j < n; ++j) x[i] -= lu.at(i, j) * x[j];
            x[i] /= lu.at(i, i);
        }
        return x;
    }
};

double norm1(const CplxMatrix& m) {
    double best = 0.0;
    for (int c = 0; c < m.n; ++c) {
        double s = 0.0;
        for (int r = 0; r < m.n; ++r) s += std::abs(m.at(r, c));
        best = std::max(best, s);
    }
    return best;
}

double condition_1(const CplxMatrix& m, const Lu& lu) {
    // explicit inverse is fine at these sizes
    CplxMatrix inv(m.n);
    std::vector<Cplx> e(m.n);
    for (int c = 0; c < m.n; ++c) {
        std::fill(e.begin(), e.end(), Cplx(0));
        e[c] = 1;
        auto col = lu.solve(e);
        for (int r = 0; r < m.n; ++r) inv.at(r, c) = col[r];
    }
    return norm1(m) * norm1(inv);
}

std::vector<Cplx> elementary_values(const std::vector<Cplx>& coords) {
    // e_0..e_N via the product of (1 + x_i t)
    int N = static_cast<int>(coords.size());
    std::vector<Cplx> e(N + 1, Cplx(0));
    e[0] = 1;
    for (int i = 0; i < N; ++i)
        for (int j = std::min(i + 1, N); j >= 1; --j) e[j] += coords[i] * e[j - 1];
    return e;
}

}  // namespace

std::vector<VerlindePoint> verlinde_points(int N, int k) {
    if (N < 2 || k < 0) throw DomainError("verlinde points need N >= 2, k >= 0");
    std::vector<VerlindePoint> points;
    for (const WeightLabel& mu : level_weights(N, k)) {
        VerlindePoint pt;
        pt.label = mu;
        std::vector<double> theta(N);
        double sum = 0.0;
        for (int a = 0; a < N; ++a) {
            int shifted = mu.part(a) + (N - 1 - a);
            theta[a] = 2.0 * kPi * shifted / (N + k);
            sum += theta[a];
        }
        double center = sum / N;
        pt.coords.resize(N);
        for (int a = 0; a < N; ++a)
            pt.coords[a] = std::polar(1.0, theta[a] - center);

        Cplx prod(1);
        for (const Cplx& c : pt.coords) prod *= c;
        if (std::abs(prod - Cplx(1)) >= 1e-9)
            throw ConsistencyError("point coordinates do not multiply to 1");
        for (int a = 0; a < N; ++a)
            for (int b = a + 1; b < N; ++b)
                if (std::abs(pt.coords[a] - pt.coords[b]) < 1e-9)
                    throw ConsistencyError("point is not regular");
        points.push_back(std::move(pt));
    }
    // pairwise distinct as unordered coordinate sets
    auto sorted_coords = [](const VerlindePoint& p) {
        auto v = p.coords;
        std::sort(v.begin(), v.end(), [](const Cplx& a, const Cplx& b) {
            if (a.real() != b.real()) return a.real() < b.real();
            return a.imag() < b.imag();
        });
        return v;
    };
    for (std::size_t i = 0; i < points.size(); ++i)
        for (std::size_t j = i + 1; j < points.size(); ++j) {
            auto a = sorted_coords(points[i]);
            auto b = sorted_coords(points[j]);
            double dist = 0.0;
            for (std::size_t l = 0; l < a.size(); ++l)
                dist = std::max(dist, std::abs(a[l] - b[l]));
            if (dist < 1e-6) throw ConsistencyError("two points coincide");
        }
    return points;
}

OracleTable oracle_fusion(int N, int k, double residual_tol, double condition_bound) {
    OracleTable out;
    out.N = N;
    out.k = k;
    out.weights = level_weights(N, k);
    out.rank = static_cast<int>(out.weights.size());
    int r = out.rank;

    auto points = verlinde_points(N, k);

    // Schur values: rows are points, columns are weights
    std::vector<std::vector<Cplx>> evals(r, std::vector<Cplx>(r));
    for (int sigma = 0; sigma < r; ++sigma) {
        auto e = elementary_values(points[sigma].coords);
        std::vector<Cplx> e_point(e.begin() + 1, e.end());
        for (int nu = 0; nu < r; ++nu) {
            MultiPoly s = schur_in_e(out.weights[nu], N);
            evals[sigma][nu] = evaluate(s, e_point);
        }
    }

    CplxMatrix v(r);
    for (int sigma = 0; sigma < r; ++sigma)
        for (int nu = 0; nu < r; ++nu) v.at(sigma, nu) = evals[sigma][nu];
    Lu lu(v);
    out.condition_estimate = condition_1(v, lu);
    if (out.condition_estimate > condition_bound)
        throw IllConditionedError("evaluation matrix condition estimate " +
                                  std::to_string(out.condition_estimate) +
                                  " exceeds the bound");

    out.table.assign(static_cast<std::size_t>(r) * r * r, 0);
    std::vector<Cplx> rhs(r);
    for (int i = 0; i < r; ++i)
        for (int j = i; j < r; ++j) {
            for (int sigma = 0; sigma < r; ++sigma)
                rhs[sigma] = evals[sigma][i] * evals[sigma][j];
            auto c = lu.solve(rhs);
            for (int l = 0; l < r; ++l) {
                double rounded = std::round(c[l].real());
                double residual = std::max(std::abs(c[l].real() - rounded),
                                           std::abs(c[l].imag()));
                out.max_residual = std::max(out.max_residual, residual);
                if (residual >= residual_tol)
                    throw ConsistencyError("fusion coefficient failed to round to an integer");
                if (rounded < 0)
                    throw NegativeStructureConstant("oracle produced a negative coefficient");
                long long value = static_cast<long long>(rounded);
                out.table[(static_cast<std::size_t>(i) * r + j) * r + l] = value;
                out.table[(static_cast<std::size_t>(j) * r + i) * r + l] = value;
            }
        }
    return out;
}

VanishingReport ideal_vanishing_check(int N, int k) {
    VanishingReport rep;
    rep.N = N;
    rep.k = k;
    TwistForm tw = twist_form(N, k);
    auto points = verlinde_points(N, k);
    for (const MultiPoly& gen : tw.r_coeffs) {
        double worst = 0.0;
        for (const auto& pt : points) {
            auto e = elementary_values(pt.coords);
            // r-frame variables are e_1..e_{N-1} with e_N = 1
            std::vector<Cplx> r_point(e.begin() + 1, e.end() - 1);
            worst = std::max(worst, std::abs(evaluate(gen, r_point)));
        }
        rep.per_generator.push_back(worst);
        rep.max_abs = std::max(rep.max_abs, worst);
    }
    return rep;
}

nlohmann::ordered_json oracle_to_json(const OracleTable& t) {
    nlohmann::ordered_json j;
    j["N"] = t.N;
    j["k"] = t.k;
    j["rank"] = t.rank;
    auto ws = nlohmann::ordered_json::array();
    for (const WeightLabel& w : t.weights) ws.push_back(w.parts);
    j["weights"] = std::move(ws);
    auto table = nlohmann::ordered_json::array();
    for (int i = 0; i < t.rank; ++i)
        for (int j2 = i; j2 < t.rank; ++j2) {
            nlohmann::ordered_json row;
            row["lhs"] = t.weights[i].parts;
            row["rhs"] = t.weights[j2].parts;
            auto result = nlohmann::ordered_json::array();
            for (int l = 0; l < t.rank; ++l) {
                long long c = t.coeff(i, j2, l);
                if (c == 0) continue;
                nlohmann::ordered_json entry;
                entry["weight"] = t.weights[l].parts;
                entry["coeff"] = c;
                result.push_back(std::move(entry));
            }
            row["result"] = std::move(result);
            table.push_back(std::move(row));
        }
    j["table"] = std::move(table);
    j["max_residual"] = t.max_residual;
    j["condition_estimate"] = t.condition_estimate;
    return j;
}

}  // namespace ktwist
