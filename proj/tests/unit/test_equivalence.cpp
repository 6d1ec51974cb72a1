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
#include "qgames/equivalence.hpp"
#include "qgames/error.hpp"

namespace qgames {
namespace {

const EquivalenceWitness kTable1To2{{{0, 1}, {0, 1}}};

NormalForm scaled(const NormalForm &nf, double factor) {
    std::vector<double> pay(nf.payoffs().begin(), nf.payoffs().end());
    for (auto &x : pay) {
        x *= factor;
    }
    return NormalForm(nf.player_names(), nf.strategy_labels(), pay);
}

std::vector<std::vector<std::size_t>> shuffled(const NormalForm &nf, Rng &rng) {
    std::vector<std::vector<std::size_t>> perm(nf.n_players());
    for (std::size_t i = 0; i < nf.n_players(); ++i) {
        perm[i].resize(nf.strategy_count(i));
        std::iota(perm[i].begin(), perm[i].end(), 0);
        std::shuffle(perm[i].begin(), perm[i].end(), rng);
    }
    return perm;
}

TEST_CASE("identity witness verifies against itself", "[equivalence]") {
    const auto nf = penny_table1().normal_form;
    const auto check = verify_witness(nf, nf, identity_witness(nf.strategy_counts()),
                                      WitnessLevel::Raw);
    CHECK(check.holds);
    CHECK(check.max_deviation == 0.0);
}

TEST_CASE("penny-table1 reduced maps onto penny-table2", "[equivalence]") {
    const auto t1 = penny_table1().normal_form;
    const auto t2 = penny_table2().normal_form;
    CHECK(verify_witness(t1, t2, kTable1To2, WitnessLevel::Reduced).holds);
    CHECK_THROWS_AS(verify_witness(t1, t2, identity_witness({2, 2}), WitnessLevel::Raw),
                    Error);
    const EquivalenceWitness swap_redundant{{{0, 1}, {3, 2, 1, 0}}};
    CHECK(verify_witness(t1, t1, swap_redundant, WitnessLevel::Raw).holds);
}

TEST_CASE("swapping P in penny-table2 negates payoffs", "[equivalence]") {
    const auto t2 = penny_table2().normal_form;
    const auto check = verify_witness(t2, t2, {{{1, 0}, {0, 1}}}, WitnessLevel::Reduced);
    CHECK_FALSE(check.holds);
    CHECK(check.max_deviation == 2.0);
}

TEST_CASE("malformed witnesses throw", "[equivalence]") {
    const auto t2 = penny_table2().normal_form;
    CHECK_THROWS_AS(verify_witness(t2, t2, {{{0, 1}}}, WitnessLevel::Raw), Error);
    CHECK_THROWS_AS(verify_witness(t2, t2, {{{0, 0}, {0, 1}}}, WitnessLevel::Raw), Error);
    CHECK_THROWS_AS(verify_witness(t2, t2, {{{0, 1, 2}, {0, 1}}}, WitnessLevel::Raw), Error);
}

TEST_CASE("search finds the identity on a game against itself", "[equivalence]") {
    const auto t2 = penny_table2().normal_form;
    const auto r = search_equivalence(t2, t2);
    REQUIRE(r.status == SearchStatus::Equivalent);
    CHECK(*r.witness == identity_witness(t2.strategy_counts()));
}

TEST_CASE("search reproduces the penny-table1 to penny-table2 witness", "[equivalence]") {
    const auto r = search_equivalence(penny_table1().normal_form, penny_table2().normal_form);
    REQUIRE(r.status == SearchStatus::Equivalent);
    CHECK(*r.witness == kTable1To2);
}

TEST_CASE("scaled payoffs are not equivalent", "[equivalence]") {
    const auto t2 = penny_table2().normal_form;
    const auto doubled = scaled(t2, 2.0);
    CHECK_FALSE(testing::equivalent_oracle(t2, doubled));
    const auto r = search_equivalence(t2, doubled);
    CHECK(r.status == SearchStatus::NotEquivalent);
    CHECK_FALSE(r.witness.has_value());
}

TEST_CASE("shape mismatch after reduction is not equivalent", "[equivalence]") {
    const auto r = search_equivalence(penny_table1().normal_form,
                                      NormalForm({}, {{"a"}, {"b"}}, {0.0, 0.0}));
    CHECK(r.status == SearchStatus::NotEquivalent);
}

TEST_CASE("budget is enforced", "[equivalence]") {
    const auto t1 = penny_table1().normal_form;
    const auto r = search_equivalence(t1, t1, {kDefaultDigits, 1});
    CHECK(r.status == SearchStatus::BudgetExceeded);
}

TEST_CASE("witness algebra", "[equivalence]") {
    const EquivalenceWitness w{{{2, 0, 1}, {1, 0}}};
    const auto inv = invert(w);
    CHECK(inv == EquivalenceWitness{{{1, 2, 0}, {1, 0}}});
    CHECK(compose(w, inv) == identity_witness({3, 2}));
    CHECK(compose(inv, w) == identity_witness({3, 2}));
}

TEST_CASE("search agrees with exhaustive enumeration", "[equivalence][property]") {
    Rng rng(99);
    for (std::uint64_t seed = 0; seed < 80; ++seed) {
        const auto g1 = random_normal_form({seed, 1 + seed % 3, 4, 1, 0.3});
        NormalForm g2 = permute_strategies(g1, shuffled(g1, rng));
        if (seed % 2 == 1) {
            std::vector<double> pay(g2.payoffs().begin(), g2.payoffs().end());
            pay[seed % pay.size()] += 1.0;
            g2 = NormalForm(g2.player_names(), g2.strategy_labels(), pay);
        }
        const bool want = testing::equivalent_oracle(g1, g2);
        const auto r = search_equivalence(g1, g2);
        REQUIRE(r.status != SearchStatus::BudgetExceeded);
        CHECK((r.status == SearchStatus::Equivalent) == want);
        if (r.witness) {
            CHECK(verify_witness(g1, g2, *r.witness, WitnessLevel::Reduced).holds);
        }
    }
}

TEST_CASE("equivalence is reflexive, symmetric and transitive", "[equivalence][property]") {
    Rng rng(2024);
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        const auto g = random_normal_form({seed, 1 + seed % 3, 4, 2, 0.3});
        const auto p1 = shuffled(g, rng);
        const auto h = permute_strategies(g, p1);
        const auto p2 = shuffled(h, rng);
        const auto k = permute_strategies(h, p2);

        const auto self = search_equivalence(g, g);
        REQUIRE(self.status == SearchStatus::Equivalent);
        CHECK(verify_witness(g, g, *self.witness, WitnessLevel::Reduced).holds);

        const EquivalenceWitness w1{p1};
        const EquivalenceWitness w2{p2};
        REQUIRE(verify_witness(g, h, w1, WitnessLevel::Raw).holds);
        CHECK(verify_witness(h, g, invert(w1), WitnessLevel::Raw).holds);
        CHECK(verify_witness(g, k, compose(w1, w2), WitnessLevel::Raw).holds);

        const auto gh = search_equivalence(g, h);
        REQUIRE(gh.status == SearchStatus::Equivalent);
        CHECK(verify_witness(h, g, invert(*gh.witness), WitnessLevel::Reduced).holds);
        const auto hk = search_equivalence(h, k);
        REQUIRE(hk.status == SearchStatus::Equivalent);
        CHECK(verify_witness(g, k, compose(*gh.witness, *hk.witness), WitnessLevel::Reduced)
                  .holds);
    }
}

} // namespace
} // namespace qgames
