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

#include <catch2/catch_amalgamated.hpp>

#include "oracles.hpp"
#include "qgames/catalog.hpp"
#include "qgames/error.hpp"
#include "qgames/transforms.hpp"

#include <cmath>

namespace qgames {
namespace {

using Catch::Matchers::WithinAbs;

QuantumChannel bit_flip() { return QuantumChannel("F", {pauli_x()}); }

QuantumSequentialGame flip_game(std::vector<std::size_t> turns, std::size_t players) {
    const std::size_t m = turns.size();
    std::vector<std::vector<double>> payoffs{std::vector<double>(players),
                                             std::vector<double>(players)};
    for (std::size_t i = 0; i < players; ++i) {
        payoffs[0][i] = 1.0 + static_cast<double>(i);
        payoffs[1][i] = -3.0 * static_cast<double>(i + 1);
    }
    std::vector<std::string> names;
    for (std::size_t i = 0; i < players; ++i) {
        names.push_back(std::string(1, static_cast<char>('A' + i)));
    }
    return QuantumSequentialGame{
        .player_names = names,
        .dim = 2,
        .rho_init = DensityOperator(ComplexMatrix::basis_projector(2, 0)),
        .move_options = std::vector<std::vector<QuantumChannel>>(
            m, {QuantumChannel::identity(2, "N"), bit_flip()}),
        .turn_map = TurnMap(std::move(turns), players),
        .povm = Povm::computational_basis(2),
        .payoffs = payoffs,
    };
}

QuantumSequentialGame unitary_game(std::vector<std::size_t> turns, std::size_t players,
                                   std::uint64_t seed) {
    auto g = flip_game(std::move(turns), players);
    Rng rng(seed);
    for (auto &options : g.move_options) {
        options = {QuantumChannel::unitary("U", random_unitary(2, rng)),
                   QuantumChannel::unitary("V", random_unitary(2, rng))};
    }
    return g;
}

void check_payoff_identity(const QuantumSequentialGame &seq, const SeqToSimResult &res,
                           double tol) {
    const auto nf_sim = tabulate_normal_form(res.game);
    std::size_t checked = 0;
    for (std::size_t f = 0; f < nf_sim.cell_count(); ++f) {
        const auto p = nf_sim.profile_at(f);
        SeqProfile sp(seq.n_players());
        for (std::size_t i = 0; i < seq.n_players(); ++i) {
            sp[i] = res.psi[i][p[i]];
        }
        const auto want = payoff_seq(seq, sp);
        const auto got = payoff_sim(res.game, p);
        for (std::size_t i = 0; i < want.size(); ++i) {
            CHECK_THAT(got[i], WithinAbs(want[i], tol));
        }
        ++checked;
    }
    CHECK(checked == nf_sim.cell_count());
}

TEST_CASE("single-player sim_to_seq", "[transforms]") {
    const auto sim = random_qsim({3, 1, 2, 3});
    const auto seq = sim_to_seq(sim);
    CHECK(seq.turn_map.steps() == 1);
    CHECK(seq.dim == 2);
    for (std::size_t s = 0; s < sim.strategies[0].size(); ++s) {
        const std::size_t p[] = {s};
        const auto a = payoff_sim(sim, p);
        const auto b = payoff_seq(seq, {{s}});
        CHECK_THAT(b[0], WithinAbs(a[0], 1e-12));
    }
}

TEST_CASE("sim_to_seq preserves payoffs", "[transforms][property]") {
    for (std::uint64_t seed = 0; seed < 12; ++seed) {
        const auto sim = random_qsim({seed, 1 + seed % 3, 2, 3});
        const auto seq = sim_to_seq(sim);
        REQUIRE(validate(seq).empty());
        CHECK(seq.turn_map.sequence().size() == sim.n_players());
        const auto a = tabulate_normal_form(sim);
        const auto b = tabulate_normal_form(seq);
        REQUIRE(a.cell_count() == b.cell_count());
        for (std::size_t k = 0; k < a.payoffs().size(); ++k) {
            CHECK_THAT(b.payoffs()[k], WithinAbs(a.payoffs()[k], 1e-9));
        }
    }
}

TEST_CASE("layout for turns (1,2)", "[transforms]") {
    const auto layout = build_layout(flip_game({0, 1}, 2));
    CHECK(layout.slot_count() == 4);
    CHECK(layout.moves_of(0) == 1);
    CHECK(layout.moves_of(1) == 1);
    CHECK(layout.slot(0, 0) == 0);
    CHECK(layout.slot(0, 1) == 1);
    CHECK(layout.slot(1, 0) == 2);
    CHECK(layout.slot(1, 1) == 3);
    CHECK(layout.mover(0) == Move{0, 0});
    CHECK(layout.ancilla(0) == Move{0, 1});
    CHECK(layout.operated_slot(0) == 0);
    CHECK(layout.ancilla_slot(0) == 1);
    CHECK(layout.operated_slot(1) == 2);
    CHECK(layout.ancilla_slot(1) == 3);
    CHECK(layout.player_dims() == std::vector<std::size_t>{4, 4});
}

TEST_CASE("layout for turns (1,2,1)", "[transforms]") {
    const auto layout = build_layout(flip_game({0, 1, 0}, 2));
    CHECK(layout.moves_of(0) == 2);
    CHECK(layout.moves_of(1) == 1);
    CHECK(layout.mover(2) == Move{0, 1});
    CHECK(layout.ancilla(2) == Move{0, 3});
    CHECK(layout.operated_slot(2) == 1);
    CHECK(layout.ancilla_slot(2) == 3);
    CHECK(layout.slot(1, 1) == 5);
    CHECK(layout.player_dims() == std::vector<std::size_t>{16, 4});
}

TEST_CASE("layout slot map is a bijection onto second-half ancillas", "[transforms][property]") {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const auto g = random_qseq({seed, 2, 1 + seed % 4, 1 + seed % 3, 2, true});
        const auto layout = build_layout(g);
        std::vector<int> seen(layout.slot_count(), 0);
        for (std::size_t i = 0; i < layout.n_players(); ++i) {
            for (std::size_t j = 0; j < 2 * layout.moves_of(i); ++j) {
                ++seen[layout.slot(i, j)];
            }
        }
        CHECK(std::all_of(seen.begin(), seen.end(), [](int c) { return c == 1; }));
        for (std::size_t k = 0; k < layout.steps(); ++k) {
            const auto nu = layout.ancilla(k);
            CHECK(nu.move >= layout.moves_of(nu.player));
        }
    }
}

TEST_CASE("single-player single-step layout", "[transforms]") {
    const auto layout = build_layout(flip_game({0}, 1));
    CHECK(layout.slot_count() == 2);
}

TEST_CASE("initial state for m=1 and m=2", "[transforms]") {
    Rng rng(12);
    const auto rho = random_density(2, rng);
    auto g1 = flip_game({0}, 1);
    g1.rho_init = DensityOperator(rho);
    const auto s1 = build_initial_state_sim(build_layout(g1), g1.rho_init);
    CHECK(max_abs_diff(s1.matrix(),
                       testing::kron_oracle(rho, ComplexMatrix::basis_projector(2, 0))) == 0.0);

    auto g2 = flip_game({0, 1}, 2);
    g2.rho_init = DensityOperator(rho);
    const auto s2 = build_initial_state_sim(build_layout(g2), g2.rho_init);
    const auto want = testing::kron_oracle(
        testing::kron_oracle(rho, maximally_entangled_projector(2)),
        ComplexMatrix::basis_projector(2, 0));
    CHECK(max_abs_diff(s2.matrix(), want) < 1e-15);
    CHECK(validate_density(s2).empty());
}

TEST_CASE("K projector", "[transforms]") {
    const auto l1 = build_layout(flip_game({0}, 1));
    const auto k1 = build_k_projector(l1);
    CHECK(k1.slots.empty());
    CHECK(k1.embedded(l1) == ComplexMatrix::identity(4));

    const auto l2 = build_layout(flip_game({0, 1}, 2));
    const auto k2 = build_k_projector(l2);
    CHECK(k2.slots == std::vector<std::size_t>{0, 1});
    const auto k = k2.embedded(l2);
    const auto want = testing::kron_oracle(maximally_entangled_projector(2),
                                           ComplexMatrix::identity(4));
    CHECK(max_abs_diff(k, want) < 1e-15);
    CHECK(max_abs_diff(k * k, k) < 1e-12);
    CHECK(max_abs_diff(k, k.adjoint()) < 1e-12);
    CHECK_THAT(k2.op.trace().real(), WithinAbs(1.0, 1e-15));
}

TEST_CASE("m=1 seq_to_sim is exact and unscaled", "[transforms]") {
    const auto seq = flip_game({0}, 1);
    const auto res = seq_to_sim(seq);
    CHECK(res.payoff_scale == 1.0);
    REQUIRE(res.game.povm.size() == 4);
    CHECK(res.game.povm[0].label == "(1,0)");
    CHECK(res.game.povm[2].label == "(2,0)");
    CHECK(res.game.povm[0].matrix ==
          tensor_product(ComplexMatrix::basis_projector(2, 0), ComplexMatrix::identity(2)));
    CHECK(res.game.povm[2].matrix == ComplexMatrix::zero(4));
    CHECK(res.game.povm[3].matrix == ComplexMatrix::zero(4));
    CHECK(res.game.payoffs[0] == seq.payoffs[0]);
    CHECK(res.game.payoffs[2] == std::vector<double>{0.0});
    check_payoff_identity(seq, res, 0.0);
}

TEST_CASE("m=2 bit-flip game agrees on all four profiles", "[transforms]") {
    const auto seq = flip_game({0, 1}, 2);
    const auto res = seq_to_sim(seq);
    CHECK(res.payoff_scale == 4.0);
    CHECK(res.game.player_dims == std::vector<std::size_t>{4, 4});
    CHECK(res.game.total_dim() == 16);
    CHECK(validate_povm(res.game.povm).empty());
    CHECK(validate(res.game).empty());
    CHECK(tabulate_normal_form(res.game).cell_count() == 4);
    check_payoff_identity(seq, res, 1e-9);
    for (std::size_t r = 0; r < seq.povm.size(); ++r) {
        CHECK(res.game.payoffs[r][0] == 4.0 * seq.payoffs[r][0]);
        CHECK(res.game.payoffs[r + seq.povm.size()] == std::vector<double>{0.0, 0.0});
    }
}

TEST_CASE("m=3 unitary game on the 64-dimensional space", "[transforms]") {
    const auto seq = unitary_game({0, 1, 0}, 2, 31);
    const auto res = seq_to_sim(seq);
    CHECK(res.game.total_dim() == 64);
    CHECK(res.payoff_scale == 16.0);
    CHECK(validate_povm(res.game.povm).empty());
    check_payoff_identity(seq, res, 1e-9);
}

TEST_CASE("post-selection probability", "[transforms]") {
    const auto seq = unitary_game({0, 1, 0}, 2, 7);
    const auto res = seq_to_sim(seq);
    const auto nf = tabulate_normal_form(res.game);
    for (std::size_t f = 0; f < nf.cell_count(); ++f) {
        const auto rho = final_state(res.game, nf.profile_at(f));
        double success = 0.0;
        for (std::size_t r = 0; r < seq.povm.size(); ++r) {
            success += trace_of_product(res.game.povm[r].matrix, rho).real();
        }
        CHECK_THAT(success, WithinAbs(1.0 / 16.0, 1e-9));
    }
}

TEST_CASE("psi witness verifies at the raw level", "[transforms]") {
    for (std::uint64_t seed = 0; seed < 6; ++seed) {
        const auto seq = random_qseq({seed, 2, 1 + seed % 3, 0, 2, true});
        const auto res = seq_to_sim(seq);
        const auto w = psi_witness(res, seq);
        CHECK(verify_witness(tabulate_normal_form(res.game), tabulate_normal_form(seq), w,
                             WitnessLevel::Raw)
                  .holds);
    }
    const auto sim = random_qsim({5, 2, 2, 3});
    CHECK(verify_witness(tabulate_normal_form(sim), tabulate_normal_form(sim_to_seq(sim)),
                         sim_to_seq_witness(sim), WitnessLevel::Raw)
              .holds);
}

TEST_CASE("strategy explosion is reported", "[transforms]") {
    const auto seq = flip_game({0, 1, 0}, 2);
    try {
        (void)seq_to_sim(seq, {7});
        FAIL("expected throw");
    } catch (const Error &e) {
        CHECK(e.kind() == ErrorKind::StrategyExplosion);
    }
    CHECK_NOTHROW(seq_to_sim(seq, {8}));
}

TEST_CASE("invalid input is rejected", "[transforms]") {
    auto seq = flip_game({0}, 1);
    seq.move_options[0].push_back(
        QuantumChannel("dup", {ComplexMatrix::identity(2), ComplexMatrix::identity(2)}));
    CHECK_THROWS_AS(seq_to_sim(seq), Error);
}

TEST_CASE("player with no moves", "[transforms]") {
    const auto seq = flip_game({1, 1}, 2);
    const auto res = seq_to_sim(seq);
    CHECK(res.game.player_dims == std::vector<std::size_t>{1, 16});
    CHECK(res.game.strategies[0].size() == 1);
    CHECK(seq_strategy_label(seq, 0, std::vector<std::size_t>{}) == "-");
    check_payoff_identity(seq, res, 1e-9);
}

} // namespace
} // namespace qgames
