#include <future>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "twocolor/charzero.hpp"
#include "twocolor/dg.hpp"
#include "twocolor/homology.hpp"
#include "twocolor/predict.hpp"
#include "twocolor/qnum.hpp"
#include "twocolor/reduce.hpp"
#include "twocolor/shrub.hpp"

using namespace twocolor;

namespace {

Color parse_color(const std::string& s) {
    if (s == "x") return Color::x;
    if (s == "y") return Color::y;
    throw CLI::ValidationError("--color must be x or y");
}

Specialization parse_spec(const std::string& point, const std::string& ring, unsigned long p) {
    std::istringstream in(point);
    std::vector<long> vals;
    std::string tok;
    while (std::getline(in, tok, ',')) vals.push_back(std::stol(tok));
    while (vals.size() < 4) vals.push_back(0);
    if (ring == "int") return Specialization::integers_at(vals[0], vals[1], vals[2], vals[3]);
    if (ring == "q") return Specialization::rationals_at(Rat(vals[0]), Rat(vals[1]), Rat(vals[2]), Rat(vals[3]));
    if (ring == "fp") return Specialization::mod_p_at(p, vals[0], vals[1], vals[2], vals[3]);
    throw CLI::ValidationError("--ring must be int, q or fp");
}

std::pair<int, std::string> run_verify(int n, const Specialization& s, bool sabotage) {
    DgComplex c = build_tilde_C(n, true);
    CohomologyReport computed = s.target == Ring::integers ? integral_cohomology(c, s)
                                                           : field_cohomology(c, s);
    ModulePresentation pred = predicted_cohomology(n);
    if (sabotage)
        for (auto& sum : pred.summands) sum.shift += 1;
    CohomologyReport predicted = specialize_prediction(pred, s);
    auto diff = compare(predicted, computed);
    std::ostringstream out;
    if (diff.empty()) {
        out << "OK n=" << n << " " << s.describe() << "\n";
        return {0, out.str()};
    }
    for (const auto& d : diff)
        out << "MISMATCH n=" << n << " degree " << d.degree << ": predicted " << d.expected
            << ", computed " << d.got << "\n";
    return {1, out.str()};
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact computations in the antispherical Hecke category of affine type A1"};
    app.require_subcommand(1);
    int jobs = 1;
    app.add_option("--jobs", jobs, "worker threads (outputs do not depend on this)");

    // qnum
    auto* cmd_qnum = app.add_subcommand("qnum", "print a two-color quantum number");
    int qn_n = 0;
    std::string qn_color = "x";
    cmd_qnum->add_option("--n", qn_n)->required();
    cmd_qnum->add_option("--color", qn_color);

    // qbinom
    auto* cmd_qbinom = app.add_subcommand("qbinom", "print a quantum binomial");
    int qb_n = 0, qb_k = 0;
    std::string qb_color = "y";
    cmd_qbinom->add_option("--n", qb_n)->required();
    cmd_qbinom->add_option("--k", qb_k)->required();
    cmd_qbinom->add_option("--color", qb_color);

    // cyclo
    auto* cmd_cyclo = app.add_subcommand("cyclo", "print a two-color cyclotomic polynomial");
    int cy_n = 2;
    std::string cy_color = "y";
    cmd_cyclo->add_option("--n", cy_n)->required();
    cmd_cyclo->add_option("--color", cy_color);

    // pascal
    auto* cmd_pascal = app.add_subcommand("pascal", "factorized quantum Pascal triangle as CSV");
    int pa_rows = 7;
    cmd_pascal->add_option("--rows", pa_rows);

    // dg build / dot / check
    auto* cmd_dg = app.add_subcommand("dg", "reduced dg-module complexes");
    auto* dg_build = cmd_dg->add_subcommand("build", "emit a complex as JSON");
    auto* dg_dot = cmd_dg->add_subcommand("dot", "emit a complex as DOT");
    auto* dg_check = cmd_dg->add_subcommand("check", "verify d^2 = 0 symbolically");
    int dg_n = 4, dg_m = -1, dg_total = 6;
    bool dg_antis = false, dg_full = false;
    for (auto* sc : {dg_build, dg_dot, dg_check}) {
        sc->add_option("--n", dg_n);
        sc->add_flag("--antispherical", dg_antis);
    }
    dg_dot->add_option("--m", dg_m, "restrict to the summand B_m");
    dg_check->add_flag("--free-algebra", dg_full, "check the truncated free dg-algebra instead");
    dg_check->add_option("--max-total", dg_total);

    // cohomology
    auto* cmd_coh = app.add_subcommand("cohomology", "cohomology of the antispherical complex");
    int co_n = 4;
    std::string co_point = "2,2", co_ring = "int";
    unsigned long co_p = 2;
    cmd_coh->add_option("--n", co_n)->required();
    cmd_coh->add_option("--spec", co_point);
    cmd_coh->add_option("--ring", co_ring);
    cmd_coh->add_option("--p", co_p);

    // predict
    auto* cmd_pred = app.add_subcommand("predict", "closed-form cohomology tables");
    int pr_n = -1, pr_nmax = 12, pr_layout = -1;
    cmd_pred->add_option("--n", pr_n, "single row");
    cmd_pred->add_option("--nmax", pr_nmax, "rows 0..nmax");
    cmd_pred->add_option("--layout", pr_layout, "H-row layout for the given n");

    // verify
    auto* cmd_ver = app.add_subcommand("verify", "compare computed and predicted cohomology");
    int ve_n = 4;
    std::string ve_point = "2,2", ve_ring = "int";
    unsigned long ve_p = 2;
    bool ve_sab = false, ve_all = false;
    cmd_ver->add_option("--n", ve_n)->required();
    cmd_ver->add_option("--spec", ve_point);
    cmd_ver->add_option("--ring", ve_ring);
    cmd_ver->add_option("--p", ve_p);
    cmd_ver->add_flag("--all", ve_all, "all standard rings at the given point");
    cmd_ver->add_flag("--sabotage", ve_sab, "shift the prediction to force a mismatch");

    // char0
    auto* cmd_c0 = app.add_subcommand("char0", "characteristic-zero extension tables");
    auto* c0_table = cmd_c0->add_subcommand("table", "classified table as CSV");
    int c0_nmax = 8, c0_cutoff = 20;
    c0_table->add_option("--nmax", c0_nmax);
    c0_table->add_option("--cutoff", c0_cutoff);

    // shrub
    auto* cmd_shrub = app.add_subcommand("shrub", "light-leaves combinatorics");
    auto* sh_enum = cmd_shrub->add_subcommand("enum", "enumerate shrubberies");
    auto* sh_check = cmd_shrub->add_subcommand("check", "Euler-characteristic comparison");
    int sh_len = -1, sh_n = 3;
    std::string sh_word;
    bool sh_blue = false, sh_basis = false;
    sh_enum->add_option("--len", sh_len);
    sh_enum->add_option("--word", sh_word);
    sh_enum->add_flag("--blue", sh_blue);
    sh_enum->add_flag("--basis", sh_basis);
    sh_check->add_option("--n", sh_n);

    CLI11_PARSE(app, argc, argv);

    try {
        if (*cmd_qnum) {
            std::cout << qnum(qn_n, parse_color(qn_color)).str() << "\n";
        } else if (*cmd_qbinom) {
            std::cout << qbinomial(qb_n, qb_k, parse_color(qb_color)).str() << "\n";
        } else if (*cmd_cyclo) {
            std::cout << cyclotomic(cy_n, parse_color(cy_color)).str() << "\n";
        } else if (*cmd_pascal) {
            std::cout << pascal_csv(pa_rows);
        } else if (*dg_build) {
            std::cout << build_tilde_C(dg_n, dg_antis).to_json() << "\n";
        } else if (*dg_dot) {
            DgComplex c = build_tilde_C(dg_n, true);
            if (dg_m >= 0) {
                auto parts = split_B(c);
                if (dg_m >= static_cast<int>(parts.size()))
                    throw arg_error("no summand B_" + std::to_string(dg_m));
                std::cout << parts[dg_m].to_dot();
            } else {
                std::cout << c.to_dot();
            }
        } else if (*dg_check) {
            DgComplex c = dg_full ? build_gamma_truncation(dg_total) : build_tilde_C(dg_n, dg_antis);
            bool ok = check_d_squared(c);
            std::cout << (ok ? "d^2 = 0" : "d^2 != 0") << "\n";
            return ok ? 0 : 1;
        } else if (*cmd_coh) {
            Specialization s = parse_spec(co_point, co_ring, co_p);
            DgComplex c = build_tilde_C(co_n, true);
            CohomologyReport rep = s.target == Ring::integers ? integral_cohomology(c, s)
                                                              : field_cohomology(c, s);
            std::cout << rep.to_json() << "\n";
        } else if (*cmd_pred) {
            if (pr_layout >= 0) std::cout << h_layout_csv(pr_layout);
            else if (pr_n >= 0) std::cout << ext_table_csv(pr_n);
            else std::cout << ext_table_csv(pr_nmax);
        } else if (*cmd_ver) {
            std::vector<Specialization> specs;
            if (ve_all) {
                specs = {Specialization::integers_at(2, 2), Specialization::mod_p_at(2, 2, 2),
                         Specialization::mod_p_at(3, 2, 2), Specialization::mod_p_at(5, 2, 2),
                         Specialization::rationals_at(Rat(2), Rat(2)),
                         Specialization::integers_at(3, 3)};
            } else {
                specs = {parse_spec(ve_point, ve_ring, ve_p)};
            }
            std::vector<std::future<std::pair<int, std::string>>> futures;
            size_t workers = static_cast<size_t>(std::max(1, jobs));
            int rc = 0;
            for (size_t i = 0; i < specs.size(); i += workers) {
                futures.clear();
                for (size_t j = i; j < std::min(specs.size(), i + workers); ++j)
                    futures.push_back(std::async(std::launch::async, run_verify, ve_n, specs[j], ve_sab));
                for (auto& f : futures) {
                    auto [code, text] = f.get();
                    std::cout << text;
                    rc = std::max(rc, code);
                }
            }
            return rc;
        } else if (*c0_table) {
            std::cout << ext_table_to_csv(char0_ext_table(c0_nmax, c0_cutoff));
        } else if (*sh_enum) {
            std::vector<Shrubbery> all = sh_word.empty()
                ? enumerate_exact(sh_len < 0 ? 0 : sh_len, sh_blue, sh_basis)
                : enumerate_subword_shrubs(sh_word, sh_blue, sh_basis);
            for (const auto& l : all) std::cout << (serialize(l).empty() ? "(trivial)" : serialize(l)) << "\n";
            std::cout << "count: " << all.size() << "\n";
        } else if (*sh_check) {
            bool ok = euler_check(sh_n);
            std::cout << (ok ? "euler characteristics agree" : "euler characteristics differ") << "\n";
            return ok ? 0 : 1;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
