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

#include "qgames/catalog.hpp"

#include "qgames/error.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <regex>

namespace qgames {

namespace {

const ComplexMatrix &qubit_identity() {
    static const ComplexMatrix id = ComplexMatrix::identity(2);
    return id;
}

/// Heads is |0>, tails |1>. Q wins on heads.
Povm penny_povm() {
    return Povm({{"heads", ComplexMatrix::basis_projector(2, 0)},
                 {"tails", ComplexMatrix::basis_projector(2, 1)}});
}

std::vector<std::vector<double>> penny_payoffs() { return {{-1.0, 1.0}, {1.0, -1.0}}; }

std::vector<QuantumChannel> flip_or_not() {
    return {QuantumChannel::unitary("N", qubit_identity()),
            QuantumChannel::unitary("F", pauli_x())};
}

QuantumSequentialGame random_qseq_from_name(std::string_view name) {
    static const std::regex pattern(
        R"(random-qseq\(\s*(?:seed\s*=\s*)?(\d+)\s*,\s*(?:d\s*=\s*)?(\d+)\s*,\s*(?:m\s*=\s*)?(\d+)\s*\))");
    std::cmatch match;
    if (!std::regex_match(name.data(), name.data() + name.size(), match, pattern)) {
        throw Error(ErrorKind::UnknownName,
                    "expected random-qseq(seed,d,m), got '" + std::string(name) + "'");
    }
    RandomQseqSpec spec;
    spec.seed = std::stoull(match[1].str());
    spec.dim = std::stoul(match[2].str());
    spec.steps = std::stoul(match[3].str());
    if (spec.dim == 0 || spec.steps == 0) {
        throw Error(ErrorKind::UnknownName, "random-qseq needs d >= 1 and m >= 1");
    }
    return random_qseq(spec);
}

Eigen::MatrixXcd ginibre(std::size_t rows, std::size_t cols, Rng &rng) {
    std::normal_distribution<double> normal(0.0, 1.0);
    Eigen::MatrixXcd g(rows, cols);
    for (Eigen::Index i = 0; i < g.rows(); ++i) {
        for (Eigen::Index j = 0; j < g.cols(); ++j) {
            const double re = normal(rng);
            const double im = normal(rng);
            g(i, j) = Complex(re, im);
        }
    }
    return g;
}

Eigen::MatrixXcd haar_unitary(std::size_t dim, Rng &rng) {
    const Eigen::HouseholderQR<Eigen::MatrixXcd> qr(ginibre(dim, dim, rng));
    Eigen::MatrixXcd q = qr.householderQ();
    const Eigen::MatrixXcd r = qr.matrixQR().triangularView<Eigen::Upper>();
    for (Eigen::Index j = 0; j < q.cols(); ++j) {
        const Complex diag = r(j, j);
        const double mag = std::abs(diag);
        if (mag > 0.0) {
            q.col(j) *= diag / mag;
        }
    }
    return q;
}

ComplexMatrix from_eigen(const Eigen::MatrixXcd &m) {
    const std::size_t d = static_cast<std::size_t>(m.rows());
    std::vector<Complex> entries(d * d);
    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = 0; j < d; ++j) {
            entries[i * d + j] = m(static_cast<Eigen::Index>(i),
                                   static_cast<Eigen::Index>(j));
        }
    }
    return ComplexMatrix(d, std::move(entries));
}

std::vector<std::vector<double>> random_payoffs(std::size_t outcomes,
                                                std::size_t players, Rng &rng) {
    std::uniform_real_distribution<double> uniform(-1.0, 1.0);
    std::vector<std::vector<double>> out(outcomes, std::vector<double>(players));
    for (auto &a : out) {
        for (auto &x : a) {
            x = uniform(rng);
        }
    }
    return out;
}

std::vector<std::string> default_names(std::size_t n) {
    std::vector<std::string> names;
    for (std::size_t i = 0; i < n; ++i) {
        names.push_back(std::to_string(i + 1));
    }
    return names;
}

} // namespace

ComplexMatrix pauli_x() { return ComplexMatrix{{0.0, 1.0}, {1.0, 0.0}}; }

ComplexMatrix hadamard() {
    const double s = 1.0 / std::sqrt(2.0);
    return ComplexMatrix{{s, s}, {s, -s}};
}

StrategicGame penny_table1() {
    // Rows P: N, F. Columns Q: NN, NF, FN, FF.
    return StrategicGame{NormalForm({"P", "Q"},
                                    {{"N", "F"}, {"NN", "NF", "FN", "FF"}},
                                    {-1, 1, 1, -1, 1, -1, -1, 1,   //
                                     1, -1, -1, 1, -1, 1, 1, -1})};
}

StrategicGame penny_table2() {
    return StrategicGame{NormalForm({"P", "Q"}, {{"N", "F"}, {"N", "F"}},
                                    {-1, 1, 1, -1,   //
                                     1, -1, -1, 1})};
}

QuantumSequentialGame penny_seq_classical() {
    // Turns Q -> P -> Q; the penny starts heads up.
    return QuantumSequentialGame{
        .player_names = {"P", "Q"},
        .dim = 2,
        .rho_init = DensityOperator(ComplexMatrix::basis_projector(2, 0)),
        .move_options = {flip_or_not(), flip_or_not(), flip_or_not()},
        .turn_map = TurnMap({1, 0, 1}, 2),
        .povm = penny_povm(),
        .payoffs = penny_payoffs(),
    };
}

QuantumSequentialGame penny_seq_quantum() {
    const std::vector<QuantumChannel> q_moves = {
        QuantumChannel::unitary("H", hadamard())};
    return QuantumSequentialGame{
        .player_names = {"P", "Q"},
        .dim = 2,
        .rho_init = DensityOperator(ComplexMatrix::basis_projector(2, 0)),
        .move_options = {q_moves, flip_or_not(), q_moves},
        .turn_map = TurnMap({1, 0, 1}, 2),
        .povm = penny_povm(),
        .payoffs = penny_payoffs(),
    };
}

std::vector<std::string> builtin_names() {
    return {"penny-table1", "penny-table2", "penny-seq-classical",
            "penny-seq-quantum", "random-qseq(seed,d,m)"};
}

AnyGame builtin_catalog(std::string_view name) {
    if (name == "penny-table1") {
        return penny_table1();
    }
    if (name == "penny-table2") {
        return penny_table2();
    }
    if (name == "penny-seq-classical") {
        return penny_seq_classical();
    }
    if (name == "penny-seq-quantum") {
        return penny_seq_quantum();
    }
    if (name.starts_with("random-qseq")) {
        return random_qseq_from_name(name);
    }
    throw Error(ErrorKind::UnknownName,
                "no builtin game named '" + std::string(name) + "'");
}

ComplexMatrix random_unitary(std::size_t dim, Rng &rng) {
    return from_eigen(haar_unitary(dim, rng));
}

ComplexMatrix random_density(std::size_t dim, Rng &rng) {
    const Eigen::MatrixXcd w = ginibre(dim, dim, rng);
    Eigen::MatrixXcd rho = w * w.adjoint();
    rho /= rho.trace();
    rho = 0.5 * (rho + rho.adjoint()).eval();
    return from_eigen(rho);
}

QuantumChannel random_channel(std::string label, std::size_t dim,
                              std::size_t kraus_count, Rng &rng) {
    // Columns 0..dim-1 of a Haar unitary on dim*kraus_count form an isometry
    // V; its dim-row blocks are Kraus operators with sum K^dagger K = V^dagger V = I.
    const Eigen::MatrixXcd u = haar_unitary(dim * kraus_count, rng);
    std::vector<ComplexMatrix> kraus;
    const auto d = static_cast<Eigen::Index>(dim);
    for (std::size_t k = 0; k < kraus_count; ++k) {
        kraus.push_back(
            from_eigen(u.block(static_cast<Eigen::Index>(k) * d, 0, d, d)));
    }
    return QuantumChannel(std::move(label), std::move(kraus));
}

Povm random_diagonal_povm(std::size_t dim, std::size_t outcomes, Rng &rng) {
    std::uniform_real_distribution<double> uniform(0.05, 1.0);
    std::vector<std::vector<double>> weights(outcomes, std::vector<double>(dim));
    for (std::size_t b = 0; b < dim; ++b) {
        double total = 0.0;
        for (std::size_t r = 0; r < outcomes; ++r) {
            weights[r][b] = uniform(rng);
            total += weights[r][b];
        }
        for (std::size_t r = 0; r < outcomes; ++r) {
            weights[r][b] /= total;
        }
    }
    std::vector<PovmElement> els;
    for (std::size_t r = 0; r < outcomes; ++r) {
        els.push_back({"r" + std::to_string(r), ComplexMatrix::diagonal(weights[r])});
    }
    return Povm(std::move(els));
}

QuantumSequentialGame random_qseq(const RandomQseqSpec &spec) {
    Rng rng(spec.seed);
    const std::size_t n =
        spec.players != 0 ? spec.players : std::min<std::size_t>(spec.steps, 2);
    std::vector<std::size_t> turns(spec.steps);
    std::uniform_int_distribution<std::size_t> pick_player(0, n - 1);
    for (std::size_t k = 0; k < spec.steps; ++k) {
        turns[k] = spec.random_turns ? pick_player(rng) : k % n;
    }
    std::uniform_int_distribution<std::size_t> pick_options(1, 3);
    std::vector<std::vector<QuantumChannel>> options(spec.steps);
    for (std::size_t k = 0; k < spec.steps; ++k) {
        const std::size_t count =
            spec.options_per_move != 0 ? spec.options_per_move : pick_options(rng);
        for (std::size_t c = 0; c < count; ++c) {
            options[k].push_back(QuantumChannel::unitary(
                "u" + std::to_string(k) + std::to_string(c),
                random_unitary(spec.dim, rng)));
        }
    }
    std::uniform_int_distribution<std::size_t> pick_outcomes(2, 3);
    const std::size_t outcomes = pick_outcomes(rng);
    auto rho = random_density(spec.dim, rng);
    auto povm = random_diagonal_povm(spec.dim, outcomes, rng);
    return QuantumSequentialGame{
        .player_names = default_names(n),
        .dim = spec.dim,
        .rho_init = DensityOperator(std::move(rho)),
        .move_options = std::move(options),
        .turn_map = TurnMap(std::move(turns), n),
        .povm = std::move(povm),
        .payoffs = random_payoffs(outcomes, n, rng),
    };
}

QuantumSimultaneousGame random_qsim(const RandomQsimSpec &spec) {
    Rng rng(spec.seed);
    const std::size_t n = spec.players;
    std::uniform_int_distribution<std::size_t> pick_count(1, spec.max_strategies);
    std::uniform_int_distribution<std::size_t> pick_kraus(1, 2);
    std::vector<std::vector<QuantumChannel>> strategies(n);
    for (std::size_t i = 0; i < n; ++i) {
        const std::size_t count = pick_count(rng);
        for (std::size_t s = 0; s < count; ++s) {
            strategies[i].push_back(random_channel(
                "c" + std::to_string(s), spec.dim, pick_kraus(rng), rng));
        }
    }
    std::size_t total = 1;
    for (std::size_t i = 0; i < n; ++i) {
        total *= spec.dim;
    }
    std::uniform_int_distribution<std::size_t> pick_outcomes(2, 3);
    const std::size_t outcomes = pick_outcomes(rng);
    auto rho = random_density(total, rng);
    auto povm = random_diagonal_povm(total, outcomes, rng);
    return QuantumSimultaneousGame{
        .player_names = default_names(n),
        .player_dims = std::vector<std::size_t>(n, spec.dim),
        .rho_init = DensityOperator(std::move(rho)),
        .strategies = std::move(strategies),
        .povm = std::move(povm),
        .payoffs = random_payoffs(outcomes, n, rng),
    };
}

NormalForm random_normal_form(const RandomNormalFormSpec &spec) {
    Rng rng(spec.seed);
    const std::size_t n = spec.players;
    std::uniform_int_distribution<std::size_t> pick_count(1, spec.max_strategies);
    std::vector<std::vector<std::string>> labels(n);
    std::vector<std::size_t> counts(n);
    std::size_t cells = 1;
    for (std::size_t i = 0; i < n; ++i) {
        counts[i] = pick_count(rng);
        cells *= counts[i];
        for (std::size_t s = 0; s < counts[i]; ++s) {
            labels[i].push_back("s" + std::to_string(s));
        }
    }
    std::uniform_int_distribution<int> pick_value(-spec.levels, spec.levels);
    std::vector<double> payoffs(cells * n);
    for (auto &x : payoffs) {
        x = pick_value(rng);
    }

    // Copying whole slices keeps earlier duplications intact: if two
    // strategies of player i agree everywhere, copying a slice of player j
    // writes equal values into both.
    std::vector<std::size_t> strides(n);
    std::size_t stride = 1;
    for (std::size_t i = n; i-- > 0;) {
        strides[i] = stride;
        stride *= counts[i];
    }
    std::bernoulli_distribution duplicate(spec.duplicate_rate);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t s = 1; s < counts[i]; ++s) {
            if (!duplicate(rng)) {
                continue;
            }
            std::uniform_int_distribution<std::size_t> pick_source(0, s - 1);
            const std::size_t t = pick_source(rng);
            for (std::size_t flat = 0; flat < cells; ++flat) {
                if ((flat / strides[i]) % counts[i] != s) {
                    continue;
                }
                const std::size_t src = flat - (s - t) * strides[i];
                for (std::size_t k = 0; k < n; ++k) {
                    payoffs[flat * n + k] = payoffs[src * n + k];
                }
            }
        }
    }
    return NormalForm(default_names(n), std::move(labels), std::move(payoffs));
}

NormalForm permute_strategies(const NormalForm &nf,
                              const std::vector<std::vector<std::size_t>> &perm) {
    const std::size_t n = nf.n_players();
    if (perm.size() != n) {
        throw Error(ErrorKind::ShapeMismatch, "one permutation per player expected");
    }
    std::vector<std::vector<std::string>> labels(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (perm[i].size() != nf.strategy_count(i)) {
            throw Error(ErrorKind::ShapeMismatch,
                        "permutation size mismatch for player " + nf.player_name(i));
        }
        labels[i].resize(perm[i].size());
        for (std::size_t s = 0; s < perm[i].size(); ++s) {
            labels[i].at(perm[i][s]) = nf.label(i, s);
        }
    }
    NormalForm shape(nf.player_names(), labels,
                     std::vector<double>(nf.payoffs().size(), 0.0));
    std::vector<double> payoffs(nf.payoffs().size());
    Profile mapped(n);
    for (std::size_t flat = 0; flat < nf.cell_count(); ++flat) {
        const Profile p = nf.profile_at(flat);
        for (std::size_t i = 0; i < n; ++i) {
            mapped[i] = perm[i][p[i]];
        }
        const std::size_t target = shape.flat_index(mapped);
        const auto cell = nf.payoff_at(flat);
        std::copy(cell.begin(), cell.end(), payoffs.begin() + target * n);
    }
    return NormalForm(nf.player_names(), std::move(labels), std::move(payoffs));
}

} // namespace qgames
