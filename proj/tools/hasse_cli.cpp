// Command-line surface of the toolkit: Hilbert symbols, quaternion Brauer
// classes, character tables and rationality fields of finite groups, and
// the invariant-pair constraint solver. All structured output is JSON on
// stdout; errors go to stderr with exit code 1.

#include <CLI11.hpp>

#include "hasse/hasse.hpp"

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

namespace {

using namespace hasse;
using hasse::json_io::json;

Place parse_place_of_q(const std::string& text) {
    if (text == "inf" || text == "infinity" || text == "oo" || text == "real") return Place::real();
    i64 p = std::stoll(text);
    if (!is_prime(p)) throw std::invalid_argument("--place must be a prime or 'inf'");
    return Place::finite(p);
}

json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open " + path);
    json j;
    in >> j;
    return j;
}

FiniteGroup load_group(const std::string& builtin, const std::string& file) {
    if (!builtin.empty() && !file.empty())
        throw std::invalid_argument("choose either --builtin or --file, not both");
    if (!builtin.empty()) return FiniteGroup::builtin(builtin);
    if (!file.empty()) return json_io::group_from_json(load_json_file(file));
    throw std::invalid_argument("a group is required (--builtin NAME or --file group.json)");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact Hasse-invariant toolkit: quaternion symbols, abelian fields, "
                 "finite-group rationality, and invariant-pair constraints"};
    app.require_subcommand(1);

    // hilbert -a -1 -b -1 --place 2
    i64 sym_a = 0, sym_b = 0;
    std::string place_text;
    std::optional<int> oracle_precision;
    bool use_oracle = false;
    auto* hilbert = app.add_subcommand("hilbert", "Hilbert symbol (a,b)_v over Q");
    hilbert->add_option("-a", sym_a, "first slot (nonzero integer)")->required();
    hilbert->add_option("-b", sym_b, "second slot (nonzero integer)")->required();
    hilbert->add_option("--place", place_text, "place of Q: a prime or 'inf'")->required();
    hilbert->add_flag("--oracle", use_oracle, "use the local solubility search instead of the closed form");
    hilbert->add_option("--precision", oracle_precision, "search precision cap for --oracle");
    hilbert->callback([&] {
        Place v = parse_place_of_q(place_text);
        int s = use_oracle ? local_solubility_oracle(sym_a, sym_b, v, oracle_precision)
                           : hilbert_symbol(sym_a, sym_b, v);
        std::cout << s << "\n";
    });

    // quaternion-class -a -1 -b -1
    auto* qclass = app.add_subcommand("quaternion-class", "Brauer class of the quaternion algebra (a,b) over Q");
    qclass->add_option("-a", sym_a, "first slot (nonzero integer)")->required();
    qclass->add_option("-b", sym_b, "second slot (nonzero integer)")->required();
    qclass->callback([&] {
        CsaClass c = quaternion_class(sym_a, sym_b);
        json j = json_io::class_to_json(c);
        j["index"] = c.index().str();
        std::cout << j.dump(2) << "\n";
    });

    // group char-table / group rationality / group fs-indicator
    auto* group = app.add_subcommand("group", "finite-group rationality data");
    group->require_subcommand(1);
    std::string builtin_name, group_file;
    std::size_t char_index = 0;

    auto* table_cmd = group->add_subcommand("char-table", "exact character table");
    table_cmd->add_option("--builtin", builtin_name, "builtin group: trivial, Cn, Dn, Q8, Sn (n <= 5)");
    table_cmd->add_option("--file", group_file, "group as JSON {\"order\": n, \"table\": [[..]]}");
    table_cmd->callback([&] {
        CharacterTable t = character_table(load_group(builtin_name, group_file));
        std::cout << json_io::character_table_to_json(t).dump(2) << "\n";
    });

    auto* rat_cmd = group->add_subcommand("rationality", "field of rationality of one character row");
    rat_cmd->add_option("--builtin", builtin_name, "builtin group name");
    rat_cmd->add_option("--file", group_file, "group JSON file");
    rat_cmd->add_option("--char", char_index, "row index into the character table")->required();
    rat_cmd->callback([&] {
        CharacterTable t = character_table(load_group(builtin_name, group_file));
        if (char_index >= t.characters.size())
            throw std::invalid_argument("--char out of range: table has " +
                                        std::to_string(t.characters.size()) + " rows");
        json j = json_io::field_to_json(field_of_rationality(t, char_index));
        j["frobenius_schur"] = frobenius_schur_indicator(t, char_index);
        j["degree_of_character"] = t.characters[char_index].degree;
        std::cout << j.dump(2) << "\n";
    });

    // constraints solve / check
    auto* constraints = app.add_subcommand("constraints", "invariant-pair constraint engine");
    constraints->require_subcommand(1);
    std::string scenario_file, pair_file;
    bool conjecture_flag = false;
    std::uint64_t max_candidates = 1'000'000;

    auto* solve = constraints->add_subcommand("solve", "enumerate all admissible invariant pairs");
    solve->add_option("--scenario", scenario_file, "scenario JSON file")->required();
    solve->add_flag("--conjecture", conjecture_flag, "also impose the conjectural relations at p");
    solve->add_option("--max-candidates", max_candidates, "search-space size cap");
    solve->callback([&] {
        ConstraintScenario s = json_io::scenario_from_json(load_json_file(scenario_file));
        if (conjecture_flag) s.conjecture_mode = true;
        SolutionSet sol = enumerate_solutions(s, max_candidates);
        std::cout << json_io::solution_set_to_json(sol).dump(2) << "\n";
    });

    auto* check = constraints->add_subcommand("check", "check one invariant pair against a scenario");
    check->add_option("--scenario", scenario_file, "scenario JSON file")->required();
    check->add_option("--pair", pair_file, "pair JSON file with raw 'jl' and 'lp' invariant maps")->required();
    check->callback([&] {
        ConstraintScenario s = json_io::scenario_from_json(load_json_file(scenario_file));
        auto [jl, lp] = json_io::raw_pair_from_json(load_json_file(pair_file), s.field);
        std::cout << json_io::check_report_to_json(check_pair(s, jl, lp)).dump(2) << "\n";
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
