// Command-line front end. Every subcommand is a thin wrapper over the
// library; exit codes are 0 = success / all-pass, 1 = FAIL or
// counterexample found, 2 = input error.

#include "enscon/oracle.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <string>
#include <vector>

namespace {

using namespace enscon;

int run_contract(const std::string& path, const std::string& formula_text, bool lift) {
    const ensconcement e = load_ensconcement_file(path, {lift});
    const formula f = parse(formula_text, e.sig());
    for (const formula& g : brutal_contract(e, f)) std::cout << render(g) << "\n";
    return 0;
}

int run_withdraw(const std::string& path, const std::string& formula_text,
                 const std::vector<std::string>& member_texts, bool lift) {
    const ensconcement e = load_ensconcement_file(path, {lift});
    const formula f = parse(formula_text, e.sig());
    for (const formula& g : severe_withdraw_base(e, f)) std::cout << render(g) << "\n";
    for (const std::string& text : member_texts) {
        const formula m = parse(text, e.sig());
        std::cout << (severe_withdraw_member(e, f, m) ? "MEMBER" : "NON-MEMBER") << "\n";
    }
    return 0;
}

int run_entrench(const std::string& path, const std::string& lhs_text,
                 const std::string& rhs_text, bool lift) {
    const ensconcement e = load_ensconcement_file(path, {lift});
    const formula lhs = parse(lhs_text, e.sig());
    const formula rhs = parse(rhs_text, e.sig());
    const entrenchment_relation rel = derived_entrenchment(e);
    if (rel.lt(lhs, rhs))
        std::cout << "<\n";
    else if (rel.lt(rhs, lhs))
        std::cout << ">\n";
    else
        std::cout << "=\n";
    return 0;
}

int run_check(const std::string& path, const std::string& suite_name,
              const std::string& postulate_name, bool machine, bool lift) {
    if (suite_name.empty() == postulate_name.empty()) {
        std::cerr << "error: pass exactly one of --suite or --postulate\n";
        return 2;
    }
    const ensconcement e = load_ensconcement_file(path, {lift});
    const universe& u = shared_universe(e.sig());

    std::vector<postulate_report> reports;
    if (!suite_name.empty()) {
        const auto s = suite_by_name(suite_name);
        if (!s) {
            std::cerr << "error: unknown suite '" << suite_name << "'\n";
            return 2;
        }
        switch (kind_of(*s)) {
        case operator_kind::base_contraction:
            reports = check_suite(*s, brutal_op(e), u);
            break;
        case operator_kind::withdrawal:
            reports = check_suite(*s, severe_withdrawal(e), u);
            break;
        case operator_kind::entrenchment:
            reports = check_suite(*s, derived_entrenchment(e), u);
            break;
        }
    } else {
        const auto id = postulate_by_name(postulate_name);
        if (!id) {
            std::cerr << "error: unknown postulate '" << postulate_name << "'\n";
            return 2;
        }
        switch (kind_of(*id)) {
        case operator_kind::base_contraction:
            reports.push_back(check_postulate(*id, brutal_op(e), u));
            break;
        case operator_kind::withdrawal:
            reports.push_back(check_postulate(*id, severe_withdrawal(e), u));
            break;
        case operator_kind::entrenchment:
            reports.push_back(check_postulate(*id, derived_entrenchment(e), u));
            break;
        }
    }
    for (std::size_t i = 0; i < reports.size(); ++i) {
        if (machine) {
            if (i) std::cout << "\n";
            std::cout << render_report_machine(reports[i], u) << "\n";
        } else {
            std::cout << render_report(reports[i], u) << "\n";
        }
    }
    return all_pass(reports) ? 0 : 1;
}

int run_roundtrip(const std::string& path, bool lift) {
    const ensconcement e = load_ensconcement_file(path, {lift});
    const theorem_id ids[] = {theorem_id::thm1_roundtrip, theorem_id::thm2_bridge,
                              theorem_id::thm3_closure, theorem_id::thm4_roundtrip};
    bool ok = true;
    for (theorem_id id : ids) {
        const auto failures = verify_theorem(id, e);
        if (failures.empty()) {
            std::cout << name_of(id) << ": PASS\n";
        } else {
            std::cout << name_of(id) << ": FAIL — " << failures.front().detail << "\n";
            ok = false;
        }
    }
    return ok ? 0 : 1;
}

int run_search(const std::string& postulate_name, std::uint64_t seed, std::size_t budget,
               int atoms, int base_size, int levels) {
    const auto id = postulate_by_name(postulate_name);
    if (!id) {
        std::cerr << "error: unknown postulate '" << postulate_name << "'\n";
        return 2;
    }
    generator_config cfg;
    cfg.seed = seed;
    cfg.atom_count = atoms;
    cfg.base_size = base_size;
    cfg.rank_levels = levels;
    cfg.sample_count = budget;
    const universe& u = shared_universe(default_signature(atoms));
    const auto found = search_counterexample(
        *id, [&cfg](std::size_t index) { return generate_ensconcement(cfg, index); }, budget, u);
    if (!found) {
        std::cout << "none found\n";
        return 0;
    }
    std::cout << render_report(found->report, u) << "\n" << to_text(found->e);
    return 1;
}

int run_validate(const std::string& path, bool lift) {
    const ensconcement e = load_ensconcement_file_raw(path, {lift});
    const validation_result r = validate(e);
    if (r.ok()) {
        std::cout << "ok\n";
        return 0;
    }
    for (const axiom_violation& v : r.violations) std::cout << render_violation(v) << "\n";
    return 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"ranked belief base contraction toolkit"};
    app.require_subcommand(1);

    std::string path;
    std::string formula_text;
    std::vector<std::string> member_texts;
    std::string compare_lhs, compare_rhs;
    std::string suite_name, postulate_name;
    bool machine = false;
    bool lift = false;
    std::uint64_t seed = 0;
    std::size_t budget = 100;
    int atoms = 2;
    int base_size = 2;
    int levels = 2;

    const auto add_base_flag = [&](CLI::App* cmd) {
        cmd->add_option("-b,--base", path, "ensconcement file")->required();
        cmd->add_flag("--lift-tautologies", lift,
                      "move tautologies to one rank above the highest non-tautology");
    };

    CLI::App* contract = app.add_subcommand("contract", "brutal contraction of the base");
    add_base_flag(contract);
    contract->add_option("-f,--formula", formula_text, "formula to contract by")->required();

    CLI::App* withdraw = app.add_subcommand("withdraw", "severe withdrawal of the belief set");
    add_base_flag(withdraw);
    withdraw->add_option("-f,--formula", formula_text, "formula to withdraw")->required();
    withdraw->add_option("--member", member_texts, "membership query against the result");

    CLI::App* entrench = app.add_subcommand("entrench", "compare derived entrenchment");
    add_base_flag(entrench);
    entrench->add_option("--compare", [&](const std::vector<std::string>& vals) {
                 compare_lhs = vals.at(0);
                 compare_rhs = vals.at(1);
                 return true;
             },
             "two formulas to compare")
        ->expected(2)
        ->required();

    CLI::App* check = app.add_subcommand("check", "check postulates against the base");
    add_base_flag(check);
    check->add_option("--suite", suite_name, "postulate suite name");
    check->add_option("--postulate", postulate_name, "single postulate name");
    check->add_flag("--machine", machine, "key-value report format");

    CLI::App* roundtrip = app.add_subcommand("roundtrip", "verify the bridge theorems");
    add_base_flag(roundtrip);

    CLI::App* search = app.add_subcommand("search", "search for a postulate counterexample");
    search->add_option("--postulate", postulate_name, "postulate to attack")->required();
    search->add_option("--seed", seed, "generator seed");
    search->add_option("--budget", budget, "number of candidates");
    search->add_option("--atoms", atoms, "atom count (1-3)");
    search->add_option("--base-size", base_size, "base size (1-6)");
    search->add_option("--levels", levels, "rank levels (1-4)");

    CLI::App* validate_cmd = app.add_subcommand("validate", "report axiom violations");
    add_base_flag(validate_cmd);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (contract->parsed()) return run_contract(path, formula_text, lift);
        if (withdraw->parsed()) return run_withdraw(path, formula_text, member_texts, lift);
        if (entrench->parsed()) return run_entrench(path, compare_lhs, compare_rhs, lift);
        if (check->parsed()) return run_check(path, suite_name, postulate_name, machine, lift);
        if (roundtrip->parsed()) return run_roundtrip(path, lift);
        if (search->parsed())
            return run_search(postulate_name, seed, budget, atoms, base_size, levels);
        if (validate_cmd->parsed()) return run_validate(path, lift);
    } catch (const enscon::error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
