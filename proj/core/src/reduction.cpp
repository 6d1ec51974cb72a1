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

#include "qgames/reduction.hpp"

#include "qgames/error.hpp"

#include <cmath>
#include <map>

namespace qgames {

double canonical_round(double x, int digits) {
    const double r = std::round(x * std::pow(10.0, digits));
    return r == 0.0 ? 0.0 : r;
}

namespace {

std::vector<PayoffSignature> all_signatures(const NormalForm &nf,
                                            std::size_t player, int digits) {
    std::vector<PayoffSignature> sigs(nf.strategy_count(player));
    for (std::size_t flat = 0; flat < nf.cell_count(); ++flat) {
        const std::size_t s = nf.profile_at(flat)[player];
        for (const double v : nf.payoff_at(flat)) {
            sigs[s].push_back(canonical_round(v, digits));
        }
    }
    return sigs;
}

} // namespace

PayoffSignature payoff_signature(const NormalForm &nf, std::size_t player,
                                 std::size_t strategy, int digits) {
    if (player >= nf.n_players() || strategy >= nf.strategy_count(player)) {
        throw Error(ErrorKind::IndexOutOfRange, "no such player or strategy");
    }
    return std::move(all_signatures(nf, player, digits)[strategy]);
}

RedundancyPartition compute_redundancy_partition(const NormalForm &nf,
                                                 int digits) {
    RedundancyPartition part;
    part.classes.resize(nf.n_players());
    part.class_of.resize(nf.n_players());
    for (std::size_t i = 0; i < nf.n_players(); ++i) {
        const auto sigs = all_signatures(nf, i, digits);
        std::map<PayoffSignature, std::size_t> seen;
        part.class_of[i].resize(sigs.size());
        for (std::size_t s = 0; s < sigs.size(); ++s) {
            const auto [it, inserted] =
                seen.try_emplace(sigs[s], part.classes[i].size());
            if (inserted) {
                part.classes[i].emplace_back();
            }
            part.classes[i][it->second].push_back(s);
            part.class_of[i][s] = it->second;
        }
    }
    return part;
}

ReducedNormalForm reduce_normal_form(const NormalForm &nf, int digits) {
    RedundancyPartition part = compute_redundancy_partition(nf, digits);
    const std::size_t n = nf.n_players();

    std::vector<std::vector<std::string>> labels(n);
    std::vector<std::vector<std::vector<std::string>>> members(n);
    std::vector<std::size_t> counts(n);
    std::size_t cells = 1;
    for (std::size_t i = 0; i < n; ++i) {
        counts[i] = part.class_count(i);
        cells *= counts[i];
        for (const auto &cls : part.classes[i]) {
            labels[i].push_back(nf.label(i, cls.front()));
            auto &names = members[i].emplace_back();
            for (const auto s : cls) {
                names.push_back(nf.label(i, s));
            }
        }
    }

    std::vector<double> payoffs;
    payoffs.reserve(cells * n);
    Profile reduced(n);
    Profile original(n);
    for (std::size_t flat = 0; flat < cells; ++flat) {
        std::size_t rest = flat;
        for (std::size_t i = n; i-- > 0;) {
            reduced[i] = rest % counts[i];
            rest /= counts[i];
            original[i] = part.representative(i, reduced[i]);
        }
        const auto cell = nf.payoff(original);
        payoffs.insert(payoffs.end(), cell.begin(), cell.end());
    }
    NormalForm rnf(nf.player_names(), std::move(labels), std::move(payoffs));

    // Every member of every class must reproduce the reduced cell.
    for (std::size_t flat = 0; flat < nf.cell_count(); ++flat) {
        const Profile p = nf.profile_at(flat);
        for (std::size_t i = 0; i < n; ++i) {
            reduced[i] = part.class_of[i][p[i]];
        }
        const auto full = nf.payoff_at(flat);
        const auto red = rnf.payoff(reduced);
        for (std::size_t i = 0; i < n; ++i) {
            if (canonical_round(full[i], digits) !=
                canonical_round(red[i], digits)) {
                throw Error(ErrorKind::NumericalInconsistency,
                            "reduced payoff is not well defined at cell " +
                                std::to_string(flat) +
                                "; check the rounding digits");
            }
        }
    }
    return {std::move(rnf), std::move(part), std::move(members)};
}

} // namespace qgames
