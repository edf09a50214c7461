// ktwist: exact fusion-ring pipeline for SU(N) at level k.
//
// Subcommands run the pipeline stages: the twist 1-form and its frame
// expansions, graded exactness of the wedge complex over Z[x1..xN], the
// Groebner-quotient fusion ring, the root-of-unity oracle, and the
// cross-check between the two. Exit codes: 0 success, 1 verification
// failure, 2 usage error.

#include <CLI11.hpp>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>

#include "ktwist/diffforms.hpp"
#include "ktwist/fusion.hpp"
#include "ktwist/koszul.hpp"
#include "ktwist/verlinde.hpp"

using nlohmann::ordered_json;

namespace {

enum ExitCode { kOk = 0, kVerificationFailure = 1, kUsageError = 2 };

struct Options {
    int N = 0;
    int k = 0;
    int n = 0;
    int d_max = 0;
    std::string format = "text";
    std::string basis = "schur";
    std::string cache_dir;
    double tolerance = 1e-6;
    double condition_bound = 1e8;
};

void emit(const ordered_json& j) { std::cout << j.dump(2) << "\n"; }

int require(bool ok, const std::string& msg) {
    if (!ok) {
        std::cerr << "error: " << msg << "\n";
        return kUsageError;
    }
    return kOk;
}

std::string cache_path(const Options& opt) {
    return opt.cache_dir + "/fusion_N" + std::to_string(opt.N) + "_k" +
           std::to_string(opt.k) + "_grevlex.json";
}

ktwist::FusionRing fusion_with_cache(const Options& opt) {
    if (!opt.cache_dir.empty()) {
        std::filesystem::create_directories(opt.cache_dir);
        std::string path = cache_path(opt);
        if (std::filesystem::exists(path)) {
            std::ifstream in(path);
            nlohmann::json j;
            in >> j;
            return ktwist::fusion_from_json(j);
        }
        ktwist::FusionRing ring = ktwist::build_fusion_ring(opt.N, opt.k);
        std::ofstream out(path);
        out << ktwist::fusion_to_json(ring).dump(2) << "\n";
        return ring;
    }
    return ktwist::build_fusion_ring(opt.N, opt.k);
}

int cmd_twistform(const Options& opt) {
    if (require(opt.N >= 2 && opt.k >= 0, "twistform needs N >= 2 and k >= 0")) return kUsageError;
    ktwist::TwistForm tw = ktwist::twist_form(opt.N, opt.k);
    if (opt.format == "json") {
        ordered_json j;
        j["N"] = tw.N;
        j["k"] = tw.k;
        j["m"] = tw.m;
        j["x_form"] = ktwist::to_string(tw.x_form);
        auto e = ordered_json::array();
        for (const auto& a : tw.e_coeffs) e.push_back(ktwist::to_string(a));
        j["e_coeffs"] = std::move(e);
        auto r = ordered_json::array();
        for (const auto& a : tw.r_coeffs) r.push_back(ktwist::to_string(a));
        j["r_coeffs"] = std::move(r);
        emit(j);
    } else {
        std::cout << "twist form for SU(" << tw.N << ") at level " << tw.k
                  << " (index m = " << tw.m << ")\n";
        std::cout << "x-frame representative: " << ktwist::to_string(tw.x_form) << "\n";
        for (std::size_t i = 0; i < tw.e_coeffs.size(); ++i)
            std::cout << "a" << i + 1 << " = " << ktwist::to_string(tw.e_coeffs[i]) << "\n";
        for (std::size_t i = 0; i < tw.r_coeffs.size(); ++i)
            std::cout << "abar" << i + 1 << " = " << ktwist::to_string(tw.r_coeffs[i]) << "\n";
    }
    return kOk;
}

ordered_json exactness_json(const ktwist::ExactnessReport& rep) {
    ordered_json j;
    j["N"] = rep.N;
    j["n"] = rep.n;
    j["d_max"] = rep.d_max;
    auto rows = ordered_json::array();
    for (const auto& row : rep.rows) {
        ordered_json r;
        r["p"] = row.slice.p;
        r["d"] = row.slice.d;
        r["source_dim"] = row.slice.source_dim;
        r["target_dim"] = row.slice.target_dim;
        r["rank"] = row.slice.out_rank;
        r["homology_rank"] = row.slice.free_rank;
        auto tor = ordered_json::array();
        for (const auto& t : row.slice.torsion) tor.push_back(t.get_str());
        r["torsion"] = std::move(tor);
        r["pass"] = row.pass;
        rows.push_back(std::move(r));
    }
    j["slices"] = std::move(rows);
    j["all_pass"] = rep.all_pass;
    return j;
}

int cmd_exactness(const Options& opt) {
    if (require(opt.N >= 2 && opt.n >= 1 && opt.d_max >= 0,
                "exactness needs N >= 2, n >= 1, max-degree >= 0"))
        return kUsageError;
    ktwist::ExactnessReport rep = ktwist::exactness_report(opt.N, opt.n, opt.d_max);
    if (opt.format == "json") {
        emit(exactness_json(rep));
    } else {
        std::cout << "wedge-complex exactness, N = " << rep.N << ", n = " << rep.n
                  << ", coefficient degree <= " << rep.d_max << "\n";
        for (const auto& row : rep.rows) {
            std::cout << "p=" << row.slice.p << " d=" << row.slice.d
                      << " dim=" << row.slice.source_dim << " rank=" << row.slice.out_rank
                      << " homology_rank=" << row.slice.free_rank << " torsion=";
            if (row.slice.torsion.empty()) std::cout << "none";
            for (const auto& t : row.slice.torsion) std::cout << t.get_str() << " ";
            std::cout << (row.pass ? "  [pass]" : "  [FAIL]") << "\n";
        }
        std::cout << (rep.all_pass ? "all slices pass" : "FAILING SLICES PRESENT") << "\n";
    }
    return rep.all_pass ? kOk : kVerificationFailure;
}

void print_table_text(const std::vector<ktwist::WeightLabel>& weights,
                      const std::function<long long(int, int, int)>& coeff, int rank) {
    for (int i = 0; i < rank; ++i)
        for (int j = i; j < rank; ++j) {
            std::cout << "  " << ktwist::to_string(weights[i]) << " * "
                      << ktwist::to_string(weights[j]) << " =";
            bool any = false;
            for (int l = 0; l < rank; ++l) {
                long long c = coeff(i, j, l);
                if (c == 0) continue;
                std::cout << (any ? " +" : "");
                if (c != 1) std::cout << " " << c << "*";
                else std::cout << " ";
                std::cout << ktwist::to_string(weights[l]);
                any = true;
            }
            if (!any) std::cout << " 0";
            std::cout << "\n";
        }
}

int cmd_fusion(const Options& opt) {
    if (require(opt.N >= 2 && opt.k >= 0, "fusion needs N >= 2 and k >= 0")) return kUsageError;
    if (require(opt.basis == "schur" || opt.basis == "monomial",
                "basis must be schur or monomial"))
        return kUsageError;
    ktwist::FusionRing ring = fusion_with_cache(opt);

    if (opt.basis == "monomial") {
        ktwist::MonomialBasisView view = ktwist::monomial_basis_view(ring);
        auto mono_str = [&](int i) {
            return ktwist::to_string(
                ktwist::RatPoly::monomial(ring.groebner.ring, view.basis[i], ktwist::Rat(1)));
        };
        if (opt.format == "json") {
            ordered_json j;
            j["N"] = ring.N;
            j["k"] = ring.k;
            j["rank"] = ring.rank;
            auto gb = ordered_json::array();
            for (const auto& g : ring.groebner.gens) gb.push_back(ktwist::to_string(g));
            j["groebner_basis"] = std::move(gb);
            auto basis = ordered_json::array();
            for (int i = 0; i < ring.rank; ++i) basis.push_back(mono_str(i));
            j["basis_monomials"] = std::move(basis);
            auto cob = ordered_json::array();
            for (const auto& row : view.schur_in_monomials) {
                auto r = ordered_json::array();
                for (const auto& c : row) r.push_back(ktwist::to_string(c));
                cob.push_back(std::move(r));
            }
            j["schur_in_monomials"] = std::move(cob);
            auto table = ordered_json::array();
            for (int i = 0; i < ring.rank; ++i)
                for (int j2 = i; j2 < ring.rank; ++j2) {
                    ordered_json row;
                    row["lhs"] = mono_str(i);
                    row["rhs"] = mono_str(j2);
                    auto result = ordered_json::array();
                    for (int l = 0; l < ring.rank; ++l) {
                        const ktwist::Rat& c = view.coeff(i, j2, l);
                        if (sgn(c) == 0) continue;
                        ordered_json entry;
                        entry["monomial"] = mono_str(l);
                        entry["coeff"] = ktwist::to_string(c);
                        result.push_back(std::move(entry));
                    }
                    row["result"] = std::move(result);
                    table.push_back(std::move(row));
                }
            j["table"] = std::move(table);
            emit(j);
        } else {
            std::cout << "fusion ring SU(" << ring.N << ") level " << ring.k
                      << " (standard-monomial basis)\n";
            std::cout << "rank: " << ring.rank << "\n";
            std::cout << "basis:";
            for (int i = 0; i < ring.rank; ++i) std::cout << " " << mono_str(i);
            std::cout << "\n";
            for (int i = 0; i < ring.rank; ++i)
                for (int j2 = i; j2 < ring.rank; ++j2) {
                    std::cout << "  " << mono_str(i) << " * " << mono_str(j2) << " =";
                    bool any = false;
                    for (int l = 0; l < ring.rank; ++l) {
                        const ktwist::Rat& c = view.coeff(i, j2, l);
                        if (sgn(c) == 0) continue;
                        std::cout << (any ? " + " : " ") << ktwist::to_string(c) << "*"
                                  << mono_str(l);
                        any = true;
                    }
                    if (!any) std::cout << " 0";
                    std::cout << "\n";
                }
        }
        return kOk;
    }
    if (opt.format == "json") {
        emit(ktwist::fusion_to_json(ring));
    } else {
        std::cout << "fusion ring SU(" << ring.N << ") level " << ring.k << "\n";
        std::cout << "rank: " << ring.rank << "\n";
        if (ring.N == 2) std::cout << "groebner basis (grevlex, r1):\n";
        else std::cout << "groebner basis (grevlex, r1 > ... > r" << ring.N - 1 << "):\n";
        for (const auto& g : ring.groebner.gens)
            std::cout << "  " << ktwist::to_string(g) << "\n";
        std::cout << "table (Schur basis):\n";
        print_table_text(ring.weights,
                         [&](int i, int j, int l) { return ring.coeff(i, j, l); }, ring.rank);
    }
    return kOk;
}

int cmd_verlinde(const Options& opt) {
    if (require(opt.N >= 2 && opt.k >= 0, "verlinde needs N >= 2 and k >= 0"))
        return kUsageError;
    ktwist::OracleTable table =
        ktwist::oracle_fusion(opt.N, opt.k, opt.tolerance, opt.condition_bound);
    if (opt.format == "json") {
        emit(ktwist::oracle_to_json(table));
    } else {
        std::cout << "verlinde oracle SU(" << table.N << ") level " << table.k << "\n";
        std::cout << "rank: " << table.rank << "\n";
        std::cout << "max rounding residual: " << table.max_residual << "\n";
        std::cout << "condition estimate: " << table.condition_estimate << "\n";
        std::cout << "table (Schur basis):\n";
        print_table_text(table.weights,
                         [&](int i, int j, int l) { return table.coeff(i, j, l); },
                         table.rank);
    }
    return kOk;
}

int cmd_check(const Options& opt) {
    if (require(opt.N >= 2 && opt.k >= 0, "check needs N >= 2 and k >= 0")) return kUsageError;
    ordered_json j;
    j["N"] = opt.N;
    j["k"] = opt.k;
    bool pass = true;
    std::string failure;
    try {
        ktwist::FusionRing ring = fusion_with_cache(opt);
        ktwist::OracleTable oracle =
            ktwist::oracle_fusion(opt.N, opt.k, opt.tolerance, opt.condition_bound);
        bool tables_match = ring.rank == oracle.rank && ring.weights == oracle.weights &&
                            ring.table == oracle.table;
        ktwist::VanishingReport vanish = ktwist::ideal_vanishing_check(opt.N, opt.k);
        j["rank"] = ring.rank;
        j["tables_match"] = tables_match;
        j["max_residual"] = oracle.max_residual;
        j["condition_estimate"] = oracle.condition_estimate;
        j["ideal_vanishing_max"] = vanish.max_abs;
        j["tolerance"] = opt.tolerance;
        pass = tables_match && oracle.max_residual < opt.tolerance &&
               vanish.max_abs < opt.tolerance;
    } catch (const ktwist::Error& e) {
        pass = false;
        failure = e.what();
        j["error"] = failure;
    }
    j["pass"] = pass;
    if (opt.format == "json") {
        emit(j);
    } else {
        std::cout << "cross-check SU(" << opt.N << ") level " << opt.k << "\n";
        if (!failure.empty()) std::cout << "error: " << failure << "\n";
        for (auto& [key, value] : j.items())
            if (key != "N" && key != "k")
                std::cout << key << ": " << value.dump() << "\n";
    }
    return pass ? kOk : kVerificationFailure;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact SU(N) fusion rings via the twisted wedge complex"};
    app.require_subcommand(1);

    Options opt;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--format", opt.format, "output format: text or json")
            ->check(CLI::IsMember({"text", "json"}));
        cmd->add_option("--cache-dir", opt.cache_dir, "directory for fusion-ring caches");
        cmd->add_option("--tolerance", opt.tolerance, "numeric tolerance for the oracle");
        cmd->add_option("--condition-bound", opt.condition_bound,
                        "condition-estimate bound for the oracle");
    };

    CLI::App* twist = app.add_subcommand("twistform", "twist 1-form and its coefficients");
    twist->add_option("N", opt.N, "rank parameter of SU(N)")->required();
    twist->add_option("k", opt.k, "level")->required();
    add_common(twist);

    CLI::App* exact = app.add_subcommand("exactness", "graded exactness of the wedge complex");
    exact->add_option("N", opt.N, "number of variables")->required();
    exact->add_option("n", opt.n, "coefficient degree of the twist")->required();
    exact->add_option("--max-degree", opt.d_max, "largest coefficient degree to check")
        ->required();
    add_common(exact);

    CLI::App* fusion = app.add_subcommand("fusion", "Groebner-quotient fusion ring");
    fusion->add_option("N", opt.N, "rank parameter of SU(N)")->required();
    fusion->add_option("k", opt.k, "level")->required();
    fusion->add_option("--basis", opt.basis, "table basis: schur or monomial");
    add_common(fusion);

    CLI::App* verlinde = app.add_subcommand("verlinde", "root-of-unity fusion oracle");
    verlinde->add_option("N", opt.N, "rank parameter of SU(N)")->required();
    verlinde->add_option("k", opt.k, "level")->required();
    add_common(verlinde);

    CLI::App* check = app.add_subcommand("check", "compare quotient ring against the oracle");
    check->add_option("N", opt.N, "rank parameter of SU(N)")->required();
    check->add_option("k", opt.k, "level")->required();
    add_common(check);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsageError;
    }

    if (opt.tolerance <= 0 || opt.condition_bound <= 0) {
        std::cerr << "error: tolerances must be positive\n";
        return kUsageError;
    }

    try {
        if (twist->parsed()) return cmd_twistform(opt);
        if (exact->parsed()) return cmd_exactness(opt);
        if (fusion->parsed()) return cmd_fusion(opt);
        if (verlinde->parsed()) return cmd_verlinde(opt);
        if (check->parsed()) return cmd_check(opt);
    } catch (const ktwist::DomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsageError;
    } catch (const ktwist::Error& e) {
        std::cerr << "verification failure: " << e.what() << "\n";
        return kVerificationFailure;
    } catch (const std::exception& e) {
        std::cerr << "verification failure: " << e.what() << "\n";
        return kVerificationFailure;
    }
    return kUsageError;
}
