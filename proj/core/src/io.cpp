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

#include "qgames/io.hpp"

#include "qgames/error.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>

namespace qgames {

using nlohmann::json;

namespace {

// ---------------------------------------------------------------- writing

json matrix_to_json(const ComplexMatrix &m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.dim(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.dim(); ++j) {
            row.push_back(json::array({m(i, j).real(), m(i, j).imag()}));
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

json channel_to_json(const QuantumChannel &ch) {
    json kraus = json::array();
    for (const auto &k : ch.kraus()) {
        kraus.push_back(matrix_to_json(k));
    }
    return {{"label", ch.label()}, {"kraus", std::move(kraus)}};
}

json channel_lists_to_json(const std::vector<std::vector<QuantumChannel>> &lists) {
    json out = json::array();
    for (const auto &list : lists) {
        json l = json::array();
        for (const auto &ch : list) {
            l.push_back(channel_to_json(ch));
        }
        out.push_back(std::move(l));
    }
    return out;
}

json povm_to_json(const Povm &povm) {
    json out = json::array();
    for (const auto &e : povm.elements()) {
        out.push_back({{"label", e.label}, {"matrix", matrix_to_json(e.matrix)}});
    }
    return out;
}

json to_json(const StrategicGame &g) {
    const auto &nf = g.normal_form;
    json payoffs = json::array();
    for (std::size_t flat = 0; flat < nf.cell_count(); ++flat) {
        const auto cell = nf.payoff_at(flat);
        payoffs.push_back(std::vector<double>(cell.begin(), cell.end()));
    }
    return {{"schema_version", kSchemaVersion},
            {"kind", "strategic"},
            {"players", nf.player_names()},
            {"strategies", nf.strategy_labels()},
            {"payoffs", std::move(payoffs)}};
}

json to_json(const QuantumSimultaneousGame &g) {
    return {{"schema_version", kSchemaVersion},
            {"kind", "qsim"},
            {"players", g.player_names},
            {"dims", g.player_dims},
            {"rho_init", matrix_to_json(g.rho_init.matrix())},
            {"channels", channel_lists_to_json(g.strategies)},
            {"povm", povm_to_json(g.povm)},
            {"payoffs", g.payoffs}};
}

json to_json(const QuantumSequentialGame &g) {
    std::vector<std::size_t> turns;
    for (const auto p : g.turn_map.sequence()) {
        turns.push_back(p + 1);
    }
    return {{"schema_version", kSchemaVersion},
            {"kind", "qseq"},
            {"players", g.player_names},
            {"dims", json::array({g.dim})},
            {"rho_init", matrix_to_json(g.rho_init.matrix())},
            {"channels", channel_lists_to_json(g.move_options)},
            {"turn_sequence", std::move(turns)},
            {"povm", povm_to_json(g.povm)},
            {"payoffs", g.payoffs}};
}

// ---------------------------------------------------------------- reading

[[noreturn]] void schema_error(const std::string &path, const std::string &what) {
    throw Error(ErrorKind::SchemaError, "invalid game document",
                {(path.empty() ? std::string("/") : path) + ": " + what});
}

std::string child(const std::string &path, const std::string &key) {
    return path + "/" + key;
}

std::string child(const std::string &path, std::size_t index) {
    return path + "/" + std::to_string(index);
}

const json &field(const json &obj, const std::string &path, const char *key) {
    if (!obj.is_object()) {
        schema_error(path, "expected an object");
    }
    const auto it = obj.find(key);
    if (it == obj.end()) {
        schema_error(child(path, key), "missing required key");
    }
    return *it;
}

const json &array_at(const json &obj, const std::string &path, const char *key,
                     bool nonempty = true) {
    const json &v = field(obj, path, key);
    if (!v.is_array()) {
        schema_error(child(path, key), "expected an array");
    }
    if (nonempty && v.empty()) {
        schema_error(child(path, key), "must not be empty");
    }
    return v;
}

double number(const json &v, const std::string &path) {
    if (!v.is_number()) {
        schema_error(path, "expected a number");
    }
    return v.get<double>();
}

std::size_t positive_int(const json &v, const std::string &path) {
    if (!v.is_number_unsigned() || v.get<std::size_t>() == 0) {
        schema_error(path, "expected a positive integer");
    }
    return v.get<std::size_t>();
}

std::string text(const json &v, const std::string &path) {
    if (!v.is_string()) {
        schema_error(path, "expected a string");
    }
    return v.get<std::string>();
}

std::vector<std::string> strings(const json &v, const std::string &path) {
    if (!v.is_array() || v.empty()) {
        schema_error(path, "expected a nonempty array of strings");
    }
    std::vector<std::string> out;
    for (std::size_t k = 0; k < v.size(); ++k) {
        out.push_back(text(v[k], child(path, k)));
    }
    return out;
}

std::vector<double> numbers(const json &v, const std::string &path) {
    if (!v.is_array()) {
        schema_error(path, "expected an array of numbers");
    }
    std::vector<double> out;
    for (std::size_t k = 0; k < v.size(); ++k) {
        out.push_back(number(v[k], child(path, k)));
    }
    return out;
}

ComplexMatrix matrix(const json &v, const std::string &path) {
    if (!v.is_array() || v.empty()) {
        schema_error(path, "expected a nonempty square matrix");
    }
    const std::size_t d = v.size();
    std::vector<Complex> entries;
    entries.reserve(d * d);
    for (std::size_t i = 0; i < d; ++i) {
        const auto &row = v[i];
        if (!row.is_array() || row.size() != d) {
            schema_error(child(path, i), "expected a row of " + std::to_string(d) +
                                             " entries (matrix must be square)");
        }
        for (std::size_t j = 0; j < d; ++j) {
            const auto &z = row[j];
            const std::string zp = child(child(path, i), j);
            if (!z.is_array() || z.size() != 2) {
                schema_error(zp, "expected a complex number [re, im]");
            }
            entries.emplace_back(number(z[0], child(zp, 0)),
                                 number(z[1], child(zp, 1)));
        }
    }
    return ComplexMatrix(d, std::move(entries));
}

QuantumChannel channel(const json &v, const std::string &path) {
    const std::string label = text(field(v, path, "label"), child(path, "label"));
    const json &ks = array_at(v, path, "kraus");
    std::vector<ComplexMatrix> kraus;
    for (std::size_t k = 0; k < ks.size(); ++k) {
        kraus.push_back(matrix(ks[k], child(child(path, "kraus"), k)));
        if (kraus.back().dim() != kraus.front().dim()) {
            schema_error(child(child(path, "kraus"), k),
                         "Kraus operators must share one dimension");
        }
    }
    return QuantumChannel(label, std::move(kraus));
}

std::vector<std::vector<QuantumChannel>> channel_lists(const json &doc) {
    const json &lists = array_at(doc, "", "channels");
    std::vector<std::vector<QuantumChannel>> out;
    for (std::size_t i = 0; i < lists.size(); ++i) {
        const std::string p = child("/channels", i);
        if (!lists[i].is_array() || lists[i].empty()) {
            schema_error(p, "strategy list must be a nonempty array");
        }
        auto &list = out.emplace_back();
        for (std::size_t s = 0; s < lists[i].size(); ++s) {
            list.push_back(channel(lists[i][s], child(p, s)));
        }
    }
    return out;
}

Povm povm(const json &doc) {
    const json &els = array_at(doc, "", "povm");
    std::vector<PovmElement> out;
    for (std::size_t r = 0; r < els.size(); ++r) {
        const std::string p = child("/povm", r);
        out.push_back({text(field(els[r], p, "label"), child(p, "label")),
                       matrix(field(els[r], p, "matrix"), child(p, "matrix"))});
        if (out.back().matrix.dim() != out.front().matrix.dim()) {
            schema_error(child(p, "matrix"), "POVM elements must share one dimension");
        }
    }
    return Povm(std::move(out));
}

std::vector<std::vector<double>> payoff_vectors(const json &doc) {
    const json &ps = array_at(doc, "", "payoffs");
    std::vector<std::vector<double>> out;
    for (std::size_t r = 0; r < ps.size(); ++r) {
        out.push_back(numbers(ps[r], child("/payoffs", r)));
    }
    return out;
}

std::vector<std::size_t> dims(const json &doc) {
    const json &ds = array_at(doc, "", "dims");
    std::vector<std::size_t> out;
    for (std::size_t k = 0; k < ds.size(); ++k) {
        out.push_back(positive_int(ds[k], child("/dims", k)));
    }
    return out;
}

StrategicGame strategic_from_json(const json &doc) {
    auto players = strings(field(doc, "", "players"), "/players");
    const json &strats = array_at(doc, "", "strategies");
    if (strats.size() != players.size()) {
        schema_error("/strategies", "one strategy list per player");
    }
    std::vector<std::vector<std::string>> labels;
    for (std::size_t i = 0; i < strats.size(); ++i) {
        labels.push_back(strings(strats[i], child("/strategies", i)));
    }
    std::size_t cells = 1;
    for (const auto &l : labels) {
        cells *= l.size();
    }
    const auto cellv = payoff_vectors(doc);
    if (cellv.size() != cells) {
        schema_error("/payoffs", "expected " + std::to_string(cells) +
                                     " cells (product of strategy counts)");
    }
    std::vector<double> flat;
    for (std::size_t c = 0; c < cellv.size(); ++c) {
        if (cellv[c].size() != players.size()) {
            schema_error(child("/payoffs", c), "one payoff per player");
        }
        flat.insert(flat.end(), cellv[c].begin(), cellv[c].end());
    }
    return StrategicGame{
        NormalForm(std::move(players), std::move(labels), std::move(flat))};
}

QuantumSimultaneousGame qsim_from_json(const json &doc) {
    return QuantumSimultaneousGame{
        .player_names = strings(field(doc, "", "players"), "/players"),
        .player_dims = dims(doc),
        .rho_init = DensityOperator(matrix(field(doc, "", "rho_init"), "/rho_init")),
        .strategies = channel_lists(doc),
        .povm = povm(doc),
        .payoffs = payoff_vectors(doc),
    };
}

QuantumSequentialGame qseq_from_json(const json &doc) {
    auto players = strings(field(doc, "", "players"), "/players");
    const auto ds = dims(doc);
    if (ds.size() != 1) {
        schema_error("/dims", "a sequential game has exactly one dimension");
    }
    const json &ts = array_at(doc, "", "turn_sequence");
    std::vector<std::size_t> turns;
    for (std::size_t k = 0; k < ts.size(); ++k) {
        const std::size_t p = positive_int(ts[k], child("/turn_sequence", k));
        if (p > players.size()) {
            schema_error(child("/turn_sequence", k),
                         "player id must be in 1.." + std::to_string(players.size()));
        }
        turns.push_back(p - 1);
    }
    const std::size_t n = players.size();
    return QuantumSequentialGame{
        .player_names = std::move(players),
        .dim = ds.front(),
        .rho_init = DensityOperator(matrix(field(doc, "", "rho_init"), "/rho_init")),
        .move_options = channel_lists(doc),
        .turn_map = TurnMap(std::move(turns), n),
        .povm = povm(doc),
        .payoffs = payoff_vectors(doc),
    };
}

AnyGame from_json(const json &doc) {
    const std::string version =
        text(field(doc, "", "schema_version"), "/schema_version");
    if (version != kSchemaVersion) {
        schema_error("/schema_version",
                     "unsupported version '" + version + "' (expected '" +
                         std::string(kSchemaVersion) + "')");
    }
    const std::string kind = text(field(doc, "", "kind"), "/kind");
    if (kind == "strategic") {
        return strategic_from_json(doc);
    }
    if (kind == "qsim") {
        return qsim_from_json(doc);
    }
    if (kind == "qseq") {
        return qseq_from_json(doc);
    }
    schema_error("/kind", "expected one of strategic, qsim, qseq");
}

} // namespace

std::string_view kind_name(const AnyGame &game) noexcept {
    switch (game.index()) {
    case 0:
        return "strategic";
    case 1:
        return "qsim";
    default:
        return "qseq";
    }
}

std::string serialize_game(const AnyGame &game) {
    const json doc = std::visit([](const auto &g) { return to_json(g); }, game);
    return doc.dump(1) + "\n";
}

AnyGame parse_game(std::string_view text_in) {
    json doc;
    try {
        doc = json::parse(text_in);
    } catch (const json::parse_error &e) {
        throw Error(ErrorKind::ParseError, e.what());
    }
    AnyGame game = [&]() -> AnyGame {
        try {
            return from_json(doc);
        } catch (const Error &e) {
            if (e.kind() == ErrorKind::SchemaError) {
                throw;
            }
            // Structural failures from the domain constructors.
            throw Error(ErrorKind::SchemaError, "invalid game document",
                        {std::string(to_string(e.kind())) + ": " + e.what()});
        }
    }();
    const ValidationReport report = validate(game);
    if (!report.empty()) {
        throw Error(ErrorKind::ValidationError,
                    std::string(kind_name(game)) + " game fails validation",
                    describe(report));
    }
    return game;
}

AnyGame load_game(const std::filesystem::path &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw Error(ErrorKind::IoError, "cannot open " + path.string());
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_game(buf.str());
}

void write_text_file(const std::filesystem::path &path, std::string_view text_out) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw Error(ErrorKind::IoError, "cannot write " + path.string());
    }
    out << text_out;
    if (!out) {
        throw Error(ErrorKind::IoError, "failed writing " + path.string());
    }
}

void save_game(const AnyGame &game, const std::filesystem::path &path) {
    write_text_file(path, serialize_game(game));
}

std::string serialize_witness(const EquivalenceWitness &w, WitnessLevel level) {
    const json doc = {{"level", level == WitnessLevel::Reduced ? "reduced" : "raw"},
                      {"maps", w.maps}};
    return doc.dump(1) + "\n";
}

} // namespace qgames
