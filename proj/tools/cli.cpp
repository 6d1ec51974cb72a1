// Copyright 2026 The qgames Authors.

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cli.hpp"

#include "qgames/catalog.hpp"
#include "qgames/equivalence.hpp"
#include "qgames/error.hpp"
#include "qgames/io.hpp"
#include "qgames/reduction.hpp"
#include "qgames/report.hpp"
#include "qgames/transforms.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cstdio>
#include <optional>
#include <ostream>
#include <sstream>

namespace qgames::cli {

namespace {

using nlohmann::json;

constexpr double kIdentityTolerance = 1e-9;

struct Settings {
    bool json = false;
    int digits = kDefaultDigits;
    std::uint64_t budget = 10'000'000;
    std::size_t max_profiles = 10'000;
    std::string out_path;
    std::string witness_path;
    std::string profile;
    std::vector<std::string> inputs;
    std::string example;
};

AnyGame load_input(const std::string &spec) {
    constexpr std::string_view prefix = "builtin:";
    if (spec.starts_with(prefix)) {
        return builtin_catalog(std::string_view(spec).substr(prefix.size()));
    }
    return load_game(spec);
}

std::string sci(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3g", x);
    return buf;
}

json payoff_json(std::span<const double> p) {
    return std::vector<double>(p.begin(), p.end());
}

json normal_form_json(const NormalForm &nf) {
    json cells = json::array();
    for (std::size_t flat = 0; flat < nf.cell_count(); ++flat) {
        cells.push_back({{"profile", nf.profile_at(flat)},
                         {"payoff", payoff_json(nf.payoff_at(flat))}});
    }
    return {{"players", nf.player_names()},
            {"strategies", nf.strategy_labels()},
            {"cells", std::move(cells)}};
}

json reduction_json(const ReducedNormalForm &r) {
    json players = json::array();
    for (std::size_t i = 0; i < r.normal_form.n_players(); ++i) {
        players.push_back({{"player", r.normal_form.player_name(i)},
                           {"classes", r.class_members[i]},
                           {"indices", r.partition.classes[i]}});
    }
    return {{"classes", std::move(players)},
            {"reduced", normal_form_json(r.normal_form)}};
}

// "0,1" or, for sequential games, "0/1,0" ("-" for a player without moves).
std::vector<std::vector<std::size_t>> parse_profile(const std::string &text) {
    std::vector<std::vector<std::size_t>> out;
    std::stringstream players(text);
    std::string part;
    auto parse_index = [&](const std::string &tok) {
        if (tok.empty() || !std::all_of(tok.begin(), tok.end(), ::isdigit)) {
            throw Error(ErrorKind::ProfileShapeMismatch,
                        "--profile: '" + tok + "' is not a strategy index");
        }
        return static_cast<std::size_t>(std::stoull(tok));
    };
    while (std::getline(players, part, ',')) {
        auto &tuple = out.emplace_back();
        if (part == "-") {
            continue;
        }
        std::stringstream moves(part);
        std::string tok;
        while (std::getline(moves, tok, '/')) {
            tuple.push_back(parse_index(tok));
        }
        if (tuple.empty()) {
            throw Error(ErrorKind::ProfileShapeMismatch,
                        "--profile: empty entry in '" + text + "'");
        }
    }
    if (!text.empty() && text.back() == ',') {
        throw Error(ErrorKind::ProfileShapeMismatch,
                    "--profile: trailing comma in '" + text + "'");
    }
    return out;
}

Profile flatten_single(const std::vector<std::vector<std::size_t>> &tuples) {
    Profile p;
    for (const auto &t : tuples) {
        if (t.size() != 1) {
            throw Error(ErrorKind::ProfileShapeMismatch,
                        "--profile: expected one index per player");
        }
        p.push_back(t.front());
    }
    return p;
}

void emit(std::ostream &out, const Settings &s, const json &doc,
          const std::string &textual) {
    if (s.json) {
        out << doc.dump(2) << '\n';
    } else {
        out << textual;
    }
}

int cmd_validate(const Settings &s, std::ostream &out) {
    const std::string &path = s.inputs.front();
    try {
        const AnyGame game = load_input(path);
        emit(out, s,
             {{"valid", true}, {"kind", kind_name(game)}, {"violations", json::array()}},
             std::string(kind_name(game)) + " game: valid\n");
        return kSuccess;
    } catch (const Error &e) {
        if (e.kind() != ErrorKind::ValidationError &&
            e.kind() != ErrorKind::SchemaError) {
            throw;
        }
        std::string textual = std::string(to_string(e.kind())) + ":\n";
        for (const auto &d : e.diagnostics()) {
            textual += "  " + d + "\n";
        }
        emit(out, s,
             {{"valid", false},
              {"error", to_string(e.kind())},
              {"violations", e.diagnostics()}},
             textual);
        return kNegative;
    }
}

int cmd_normal_form(const Settings &s, std::ostream &out) {
    const NormalForm nf = tabulate_normal_form(load_input(s.inputs.front()));
    if (!s.out_path.empty()) {
        save_game(StrategicGame{nf}, s.out_path);
    }
    emit(out, s, normal_form_json(nf), render_normal_form(nf));
    return kSuccess;
}

int cmd_reduce(const Settings &s, std::ostream &out) {
    const NormalForm nf = tabulate_normal_form(load_input(s.inputs.front()));
    const ReducedNormalForm reduced = reduce_normal_form(nf, s.digits);
    if (!s.out_path.empty()) {
        save_game(StrategicGame{reduced.normal_form}, s.out_path);
    }
    emit(out, s, reduction_json(reduced), render_reduction(reduced));
    return kSuccess;
}

int cmd_eval(const Settings &s, std::ostream &out) {
    const AnyGame game = load_input(s.inputs.front());
    const auto tuples = parse_profile(s.profile);
    std::vector<double> payoff;
    if (const auto *seq = std::get_if<QuantumSequentialGame>(&game)) {
        payoff = payoff_seq(*seq, tuples);
    } else if (const auto *sim = std::get_if<QuantumSimultaneousGame>(&game)) {
        payoff = payoff_sim(*sim, flatten_single(tuples));
    } else {
        const auto &nf = std::get<StrategicGame>(game).normal_form;
        const auto cell = nf.payoff(flatten_single(tuples));
        payoff.assign(cell.begin(), cell.end());
    }
    emit(out, s, {{"profile", s.profile}, {"payoff", payoff}},
         "payoff " + format_payoff(payoff) + "\n");
    return kSuccess;
}

int cmd_equiv(const Settings &s, std::ostream &out) {
    const NormalForm a = tabulate_normal_form(load_input(s.inputs[0]));
    const NormalForm b = tabulate_normal_form(load_input(s.inputs[1]));
    const SearchResult result =
        search_equivalence(a, b, {.digits = s.digits, .budget = s.budget});
    json doc = {{"nodes_explored", result.nodes_explored}};
    switch (result.status) {
    case SearchStatus::BudgetExceeded:
        doc["result"] = "budget_exceeded";
        emit(out, s, doc,
             "budget exceeded after " + std::to_string(result.nodes_explored) +
                 " nodes\n");
        return kBudget;
    case SearchStatus::NotEquivalent:
        doc["result"] = "not_equivalent";
        emit(out, s, doc, "not equivalent\n");
        return kNegative;
    case SearchStatus::Equivalent:
        break;
    }
    const auto ra = reduce_normal_form(a, s.digits);
    const auto rb = reduce_normal_form(b, s.digits);
    const auto &w = *result.witness;
    if (!s.witness_path.empty()) {
        write_text_file(s.witness_path, serialize_witness(w, WitnessLevel::Reduced));
    }
    json maps = json::array();
    for (std::size_t i = 0; i < w.maps.size(); ++i) {
        json pairs = json::array();
        for (std::size_t c = 0; c < w.maps[i].size(); ++c) {
            pairs.push_back({{"from", ra.class_members[i][c]},
                             {"to", rb.class_members[i][w.maps[i][c]]}});
        }
        maps.push_back({{"player", a.player_name(i)}, {"map", std::move(pairs)}});
    }
    doc["result"] = "equivalent";
    doc["witness"] = std::move(maps);
    emit(out, s, doc, "equivalent\nwitness:\n" + render_witness(w, ra, rb));
    return kSuccess;
}

json identity_report(const WitnessCheck &check, std::size_t profiles,
                     std::string &textual) {
    const bool ok = check.holds && check.max_deviation <= kIdentityTolerance;
    textual += "max payoff deviation " + sci(check.max_deviation) +
               (ok ? " <= " : " > ") + sci(kIdentityTolerance) + " over " +
               std::to_string(profiles) + " profiles\n";
    return {{"profiles", profiles},
            {"max_deviation", check.max_deviation},
            {"tolerance", kIdentityTolerance},
            {"identity_holds", ok}};
}

int cmd_to_seq(const Settings &s, std::ostream &out) {
    const AnyGame game = load_input(s.inputs.front());
    const auto *sim = std::get_if<QuantumSimultaneousGame>(&game);
    if (sim == nullptr) {
        throw Error(ErrorKind::SchemaError, "to-seq expects a qsim game",
                    {"/kind: got " + std::string(kind_name(game))});
    }
    const QuantumSequentialGame seq = sim_to_seq(*sim);
    if (!s.out_path.empty()) {
        save_game(seq, s.out_path);
    }
    const NormalForm nf_sim = tabulate_normal_form(*sim);
    const NormalForm nf_seq = tabulate_normal_form(seq);
    const WitnessCheck check = verify_witness(
        nf_sim, nf_seq, sim_to_seq_witness(*sim), WitnessLevel::Raw, s.digits);
    std::string textual = "sequential game: dim " + std::to_string(seq.dim) +
                          ", " + std::to_string(seq.turn_map.steps()) + " turns\n";
    json doc = identity_report(check, nf_sim.cell_count(), textual);
    emit(out, s, doc, textual);
    return doc["identity_holds"].get<bool>() ? kSuccess : kNegative;
}

int cmd_to_sim(const Settings &s, std::ostream &out) {
    const AnyGame game = load_input(s.inputs.front());
    const auto *seq = std::get_if<QuantumSequentialGame>(&game);
    if (seq == nullptr) {
        throw Error(ErrorKind::SchemaError, "to-sim expects a qseq game",
                    {"/kind: got " + std::string(kind_name(game))});
    }
    const SeqToSimResult result =
        seq_to_sim(*seq, {.max_profiles = s.max_profiles});
    if (!s.out_path.empty()) {
        save_game(result.game, s.out_path);
    }
    const NormalForm nf_seq = tabulate_normal_form(*seq);
    const NormalForm nf_sim = tabulate_normal_form(result.game);
    const WitnessCheck check = verify_witness(
        nf_sim, nf_seq, psi_witness(result, *seq), WitnessLevel::Raw, s.digits);
    const bool povm_ok = validate_povm(result.game.povm).empty();
    std::string textual =
        "simultaneous game: total dim " +
        std::to_string(result.game.total_dim()) + ", payoff scale " +
        sci(result.payoff_scale) + ", POVM " + (povm_ok ? "valid" : "INVALID") +
        "\n";
    json doc = identity_report(check, nf_seq.cell_count(), textual);
    doc["total_dim"] = result.game.total_dim();
    doc["payoff_scale"] = result.payoff_scale;
    doc["povm_valid"] = povm_ok;
    emit(out, s, doc, textual);
    return doc["identity_holds"].get<bool>() && povm_ok ? kSuccess : kNegative;
}

int cmd_example(const Settings &s, std::ostream &out) {
    const AnyGame game = builtin_catalog(s.example);
    if (s.out_path.empty()) {
        out << serialize_game(game);
    } else {
        save_game(game, s.out_path);
        if (s.json) {
            out << json{{"written", s.out_path}, {"kind", kind_name(game)}}.dump(2)
                << '\n';
        } else {
            out << "wrote " << kind_name(game) << " game to " << s.out_path << '\n';
        }
    }
    return kSuccess;
}

} // namespace

int run(const std::vector<std::string> &args, std::ostream &out,
        std::ostream &err) {
    Settings s;
    CLI::App app{"Quantum game evaluation, reduction, equivalence and transforms"};
    app.name("qgames");
    app.require_subcommand(1);
    app.add_flag("--json", s.json, "Emit machine-readable JSON reports");
    app.add_option("--digits", s.digits,
                   "Decimal digits for canonical payoff rounding")
        ->check(CLI::Range(0, 15));

    const std::string input_help =
        "Game document path, or builtin:<name> for a catalog game";

    auto *validate_cmd = app.add_subcommand("validate", "Check every invariant of a game file");
    validate_cmd->add_option("file", s.inputs, input_help)->required()->expected(1);

    auto *nf_cmd = app.add_subcommand("normal-form", "Tabulate the payoff tensor");
    nf_cmd->add_option("file", s.inputs, input_help)->required()->expected(1);
    nf_cmd->add_option("--out", s.out_path, "Write the tensor as a strategic game");

    auto *reduce_cmd = app.add_subcommand(
        "reduce", "Group redundant strategies and print the reduced normal form");
    reduce_cmd->add_option("file", s.inputs, input_help)->required()->expected(1);
    reduce_cmd->add_option("--out", s.out_path,
                           "Write the reduced normal form as a strategic game");

    auto *eval_cmd = app.add_subcommand("eval", "Payoff of a single strategy profile");
    eval_cmd->add_option("file", s.inputs, input_help)->required()->expected(1);
    eval_cmd
        ->add_option("--profile", s.profile,
                     "Comma-separated strategy indices; sequential games use "
                     "'/' between a player's moves, e.g. 0/1,0")
        ->required();

    auto *equiv_cmd = app.add_subcommand("equiv", "Decide whether two games are equivalent");
    equiv_cmd->add_option("files", s.inputs, input_help)->required()->expected(2);
    equiv_cmd->add_option("--witness", s.witness_path, "Write the witness found to this file");
    equiv_cmd->add_option("--budget", s.budget, "Search node budget");

    auto *to_seq_cmd = app.add_subcommand(
        "to-seq", "Build the equivalent sequential game of a simultaneous game");
    to_seq_cmd->add_option("file", s.inputs, input_help)->required()->expected(1);
    to_seq_cmd->add_option("--out", s.out_path, "Output game document");

    auto *to_sim_cmd = app.add_subcommand(
        "to-sim", "Build the equivalent simultaneous game of a sequential game");
    to_sim_cmd->add_option("file", s.inputs, input_help)->required()->expected(1);
    to_sim_cmd->add_option("--out", s.out_path, "Output game document");
    to_sim_cmd->add_option("--max-profiles", s.max_profiles,
                           "Refuse inputs with more strategy profiles than this");

    auto *example_cmd = app.add_subcommand(
        "example", "Write a builtin game: penny-table1, penny-table2, "
                   "penny-seq-classical, penny-seq-quantum, random-qseq(seed,d,m)");
    example_cmd->add_option("name", s.example, "Catalog name")->required();
    example_cmd->add_option("--out", s.out_path, "Output path (stdout if omitted)");

    for (auto *sub : app.get_subcommands({})) {
        sub->fallthrough();
    }

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp &) {
        out << app.help();
        return kSuccess;
    } catch (const CLI::CallForAllHelp &) {
        out << app.help("", CLI::AppFormatMode::All);
        return kSuccess;
    } catch (const CLI::ParseError &e) {
        err << "usage error: " << e.what() << '\n';
        return kUsage;
    }

    try {
        if (validate_cmd->parsed()) {
            return cmd_validate(s, out);
        }
        if (nf_cmd->parsed()) {
            return cmd_normal_form(s, out);
        }
        if (reduce_cmd->parsed()) {
            return cmd_reduce(s, out);
        }
        if (eval_cmd->parsed()) {
            return cmd_eval(s, out);
        }
        if (equiv_cmd->parsed()) {
            return cmd_equiv(s, out);
        }
        if (to_seq_cmd->parsed()) {
            return cmd_to_seq(s, out);
        }
        if (to_sim_cmd->parsed()) {
            return cmd_to_sim(s, out);
        }
        return cmd_example(s, out);
    } catch (const Error &e) {
        err << e.what() << '\n';
        return e.kind() == ErrorKind::BudgetExceeded ? kBudget : kUsage;
    }
}

} // namespace qgames::cli
