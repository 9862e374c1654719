#include <cstdio>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "pgroup/io.hpp"
#include "pgroup/runner.hpp"

namespace {

std::vector<std::string> split_commas(const std::string& s) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ','))
        if (!tok.empty()) out.push_back(tok);
    return out;
}

pgroup::Group load_group(const std::string& arg) {
    if (arg.rfind("family:", 0) == 0)
        return pgroup::build_group(pgroup::parse_inline_family(arg));
    return pgroup::build_group(pgroup::parse_group_file(arg));
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"finite p-group analysis and claim verification"};
    app.require_subcommand(1);

    // analyze
    std::string analyze_group_arg;
    bool analyze_json = false;
    bool analyze_include_p2 = false;
    CLI::App* analyze = app.add_subcommand("analyze", "structural invariants of one group");
    analyze->add_option("--group", analyze_group_arg,
                        "path to a group JSON file, or family:name,key=val,...")
        ->required();
    analyze->add_flag("--json", analyze_json, "emit a JSON report");
    analyze->add_flag("--include-p2", analyze_include_p2,
                      "treat groups of order p^2 as maximal class");

    // verify
    std::string verify_claims = "all";
    std::string verify_primes = "2,3";
    pgroup::Elem verify_max_order = 81;
    bool verify_json = false;
    std::string verify_mutant;
    CLI::App* verify = app.add_subcommand("verify", "run the claim suite over the census");
    verify->add_option("--claims", verify_claims, "comma-separated claim ids, or 'all'");
    verify->add_option("--p", verify_primes, "comma-separated primes for the census");
    verify->add_option("--max-order", verify_max_order, "largest group order in the census");
    verify->add_flag("--json", verify_json, "emit a JSON report");
    verify->add_option("--mutant", verify_mutant,
                       "fault-injection self-test (e.g. dihedral-flip); expect refutations");

    // catalogue
    bool catalogue_json_flag = false;
    CLI::App* cat = app.add_subcommand("catalogue", "list the built-in group families");
    cat->add_flag("--json", catalogue_json_flag, "emit a JSON report");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (analyze->parsed()) {
            pgroup::Group g = load_group(analyze_group_arg);
            pgroup::AnalyzeReport rep = pgroup::analyze_group(g, analyze_include_p2);
            if (analyze_json)
                std::cout << pgroup::analyze_report_json(rep).dump(2) << "\n";
            else
                std::cout << pgroup::analyze_report_text(rep);
            return 0;
        }

        if (verify->parsed()) {
            pgroup::VerifyOptions opt;
            opt.claims = split_commas(verify_claims);
            opt.primes.clear();
            for (const std::string& p : split_commas(verify_primes)) opt.primes.push_back(std::stoi(p));
            if (opt.primes.empty()) throw pgroup::group_error("--p needs at least one prime");
            opt.max_order = verify_max_order;
            opt.mutant = verify_mutant;
            pgroup::VerifyRun run = pgroup::run_verify(opt);
            if (verify_json)
                std::cout << pgroup::verify_report_json(run).dump(2) << "\n";
            else
                std::cout << pgroup::verify_report_text(run);
            return pgroup::verify_exit_code(run);
        }

        if (cat->parsed()) {
            if (catalogue_json_flag)
                std::cout << pgroup::catalogue_json().dump(2) << "\n";
            else
                std::cout << pgroup::catalogue_text();
            return 0;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
