#include "ktwist/groebner.hpp"

#include <algorithm>
#include <deque>

namespace ktwist {

namespace {

RatPoly make_monic(const RatPoly& p) {
    if (p.is_zero()) return p;
    Rat lc = p.leading_term().second;
    return p * Rat(1 / lc);
}

// Full division remainder against the current generator list.
RatPoly reduce(const RatPoly& p, const std::vector<RatPoly>& gens) {
    RatPoly rem(p.ring());
    RatPoly work = p;
    while (!work.is_zero()) {
        const auto& [lm, lc] = work.leading_term();
        bool reduced = false;
        for (const RatPoly& g : gens) {
            if (g.is_zero()) continue;
            const auto& [glm, glc] = g.leading_term();
            if (!monomial_divides(glm, lm)) continue;
            Rat factor = lc / glc;
            work -= g.term_mul(exp_sub(lm, glm), factor);
            reduced = true;
            break;
        }
        if (!reduced) {
            // move the leading term to the remainder
            rem += RatPoly::monomial(work.ring(), lm, lc);
            work -= RatPoly::monomial(work.ring(), lm, lc);
        }
    }
    return rem;
}

RatPoly s_poly(const RatPoly& f, const RatPoly& g) {
    const auto& [fm, fc] = f.leading_term();
    const auto& [gm, gc] = g.leading_term();
    ExponentVector l = exp_lcm(fm, gm);
    return f.term_mul(exp_sub(l, fm), Rat(1 / fc)) -
           g.term_mul(exp_sub(l, gm), Rat(1 / gc));
}

bool coprime_leads(const RatPoly& f, const RatPoly& g) {
    const ExponentVector& a = f.leading_term().first;
    const ExponentVector& b = g.leading_term().first;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > 0 && b[i] > 0) return false;
    return true;
}

}  // namespace

GroebnerBasis buchberger(std::vector<RatPoly> gens) {
    if (gens.empty()) throw DomainError("buchberger needs at least one generator");
    RingPtr ring = gens[0].ring();
    if (ring->laurent) throw DomainError("Groebner bases require a polynomial ring");

    std::vector<RatPoly> basis;
    for (auto& g : gens) {
        if (!(*g.ring() == *ring)) throw RingMismatchError("generators in different rings");
        if (!g.is_zero()) basis.push_back(make_monic(g));
    }
    if (basis.empty()) return GroebnerBasis{ring, {}};

    struct Pair {
        int i, j;
        long lcm_degree;
        long seq;  // FIFO tiebreak
    };
    std::deque<Pair> queue;
    long seq = 0;
    auto push_pairs = [&](int j) {
        for (int i = 0; i < j; ++i) {
            ExponentVector l = exp_lcm(basis[i].leading_term().first,
                                       basis[j].leading_term().first);
            queue.push_back(Pair{i, j, total_degree(l), seq++});
        }
    };
    for (int j = 1; j < static_cast<int>(basis.size()); ++j) push_pairs(j);

    while (!queue.empty()) {
        auto best = queue.begin();
        for (auto it = queue.begin(); it != queue.end(); ++it)
            if (it->lcm_degree < best->lcm_degree ||
                (it->lcm_degree == best->lcm_degree && it->seq < best->seq))
                best = it;
        Pair pr = *best;
        queue.erase(best);

        if (coprime_leads(basis[pr.i], basis[pr.j])) continue;  // product criterion
        RatPoly s = s_poly(basis[pr.i], basis[pr.j]);
        RatPoly r = reduce(s, basis);
        if (r.is_zero()) continue;
        basis.push_back(make_monic(r));
        push_pairs(static_cast<int>(basis.size()) - 1);
    }

    // minimize: drop generators whose lead is divisible by another lead
    std::vector<RatPoly> minimal;
    for (std::size_t i = 0; i < basis.size(); ++i) {
        bool redundant = false;
        for (std::size_t j = 0; j < basis.size() && !redundant; ++j) {
            if (i == j) continue;
            const auto& li = basis[i].leading_term().first;
            const auto& lj = basis[j].leading_term().first;
            if (monomial_divides(lj, li) && !(li == lj && j > i)) redundant = true;
        }
        if (!redundant) minimal.push_back(basis[i]);
    }

    // reduce tails against the rest until stable
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i < minimal.size(); ++i) {
            std::vector<RatPoly> others;
            for (std::size_t j = 0; j < minimal.size(); ++j)
                if (j != i) others.push_back(minimal[j]);
            RatPoly r = make_monic(reduce(minimal[i], others));
            if (!(r == minimal[i])) {
                minimal[i] = r;
                changed = true;
            }
        }
    }
    std::erase_if(minimal, [](const RatPoly& p) { return p.is_zero(); });

    std::sort(minimal.begin(), minimal.end(), [](const RatPoly& a, const RatPoly& b) {
        return grevlex_cmp(a.leading_term().first, b.leading_term().first) < 0;
    });
    return GroebnerBasis{ring, std::move(minimal)};
}

RatPoly normal_form(const RatPoly& p, const GroebnerBasis& gb) {
    if (!(*p.ring() == *gb.ring)) throw RingMismatchError("polynomial not in the basis ring");
    return reduce(p, gb.gens);
}

std::vector<ExponentVector> standard_monomials(const GroebnerBasis& gb) {
    int nv = gb.ring->nvars;
    std::vector<ExponentVector> leads;
    for (const RatPoly& g : gb.gens) leads.push_back(g.leading_term().first);

    // finite rank iff every variable has a pure power among the leads
    std::vector<int> box(nv, -1);
    for (const auto& l : leads) {
        if (total_degree(l) == 0) return {};  // ideal contains 1
        int var = -1;
        bool pure = true;
        for (int i = 0; i < nv; ++i)
            if (l[i] > 0) {
                if (var >= 0) pure = false;
                var = i;
            }
        if (pure && var >= 0) box[var] = box[var] < 0 ? l[var] : std::min(box[var], l[var]);
    }
    for (int i = 0; i < nv; ++i)
        if (box[i] < 0)
            throw RankMismatchError("quotient is not finite dimensional");

    std::vector<ExponentVector> out;
    ExponentVector cur(nv, 0);
    auto rec = [&](auto&& self, int pos) -> void {
        if (pos == nv) {
            for (const auto& l : leads)
                if (monomial_divides(l, cur)) return;
            out.push_back(cur);
            return;
        }
        for (int v = 0; v < box[pos]; ++v) {
            cur[pos] = v;
            self(self, pos + 1);
        }
        cur[pos] = 0;
    };
    rec(rec, 0);
    std::sort(out.begin(), out.end(), grevlex_less);
    return out;
}

}  // namespace ktwist
