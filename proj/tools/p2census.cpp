// Command-line front end. Subcommands:
//
//   census    count isomorphism classes of degree-p^2 extensions of K with
//             no intermediate field, grouped by normal-closure Galois group
//   reps      irreducible representation table of the metacyclic group T x| U
//   psi       evaluate psi(a, b)
//   verify    run the brute-force oracle suites against the closed forms
//
// Exit codes: 0 success, 1 verification failure, 2 usage error.

#include "p2census/p2census.hpp"

#include <CLI11.hpp>

#include <cstdint>
#include <iostream>
#include <string>

namespace {

int run_verify(const std::string& suite, std::int64_t max_p) {
    std::vector<p2census::VerifyOutcome> outcomes;
    if (suite == "psi" || suite == "all") outcomes.push_back(p2census::verify_psi());
    if (suite == "lambda" || suite == "all") outcomes.push_back(p2census::verify_lambda(max_p));
    if (suite == "groups" || suite == "all") outcomes.push_back(p2census::verify_groups(max_p));
    if (suite == "census" || suite == "all") outcomes.push_back(p2census::verify_census(max_p));
    bool ok = true;
    for (const p2census::VerifyOutcome& o : outcomes) {
        std::cout << p2census::render_verify(o);
        ok = ok && o.passed();
    }
    return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"census of degree-p^2 extensions of p-adic fields with no intermediate field"};
    app.require_subcommand(1);

    std::int64_t census_p = 0, census_ek = 1, census_fk = 1;
    std::string census_format = "table";
    bool census_all_rows = false;
    CLI::App* census = app.add_subcommand("census", "count classes by Galois group");
    census->add_option("-p,--prime", census_p, "residue characteristic of K")->required();
    census->add_option("--ek", census_ek, "ramification index e_K (default 1)");
    census->add_option("--fk", census_fk, "residue degree f_K (default 1)");
    census->add_option("--format", census_format, "output format (table or json)")
        ->check(CLI::IsMember({"table", "json"}));
    census->add_flag("--all-rows", census_all_rows, "include zero-count rows");

    std::int64_t reps_p = 0, reps_e = 1, reps_f = 1, reps_fk = 1, reps_dim = 0;
    CLI::App* reps = app.add_subcommand("reps", "irreducible classes of T x| U over F_p-bar");
    reps->add_option("-p,--prime", reps_p, "characteristic p")->required();
    reps->add_option("-e", reps_e, "order of the normal generator t")->required();
    reps->add_option("-f", reps_f, "order of the acting generator u")->required();
    reps->add_option("--fk", reps_fk, "residue degree f_K, so q = p^f_K (default 1)");
    reps->add_option("--dim", reps_dim, "show only classes of this F_p-dimension");

    std::int64_t psi_a = 0, psi_b = 0;
    CLI::App* psi_cmd = app.add_subcommand("psi", "number of elements of order a in Z/a x Z/b");
    psi_cmd->add_option("a", psi_a, "first argument")->required();
    psi_cmd->add_option("b", psi_b, "second argument")->required();

    std::string verify_suite = "all";
    std::int64_t verify_max_p = 13;
    CLI::App* verify = app.add_subcommand("verify", "run oracle suites against the closed forms");
    verify->add_option("--suite", verify_suite, "psi, lambda, groups, census or all")
        ->check(CLI::IsMember({"psi", "lambda", "groups", "census", "all"}));
    verify->add_option("--max-p", verify_max_p,
                       "largest prime swept (lambda caps at 13, groups/census at 7)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (*census) {
            const p2census::LocalFieldParams K(census_p, census_ek, census_fk);
            const p2census::CensusReport report = p2census::census_k2(K, census_all_rows);
            if (census_format == "json")
                std::cout << p2census::census_to_json(report).dump(2) << "\n";
            else
                std::cout << p2census::render_census_table(report);
        } else if (*reps) {
            const p2census::MetacyclicGroup H(reps_p, reps_fk, reps_e, reps_f);
            std::cout << p2census::render_reps_table(H, p2census::enumerate_irreducibles(H),
                                                     reps_dim);
        } else if (*psi_cmd) {
            std::cout << p2census::psi(psi_a, psi_b).str() << "\n";
        } else if (*verify) {
            return run_verify(verify_suite, verify_max_p);
        }
    } catch (const std::exception& e) {
        std::cerr << e.what() << "\n";
        return 2;
    }
    return 0;
}
