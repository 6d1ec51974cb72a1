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

#include "qgames/equivalence.hpp"

#include "qgames/error.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <string>

namespace qgames {

namespace {

void require_bijection(const std::vector<std::size_t> &map, std::size_t target,
                       std::size_t player) {
    if (map.size() != target) {
        throw Error(ErrorKind::ShapeMismatch,
                    "witness map for player " + std::to_string(player + 1) +
                        " has " + std::to_string(map.size()) +
                        " entries, expected " + std::to_string(target));
    }
    std::vector<bool> hit(target, false);
    for (const auto b : map) {
        if (b >= target || hit[b]) {
            throw Error(ErrorKind::ShapeMismatch,
                        "witness map for player " + std::to_string(player + 1) +
                            " is not a bijection");
        }
        hit[b] = true;
    }
}

std::vector<double> rounded(std::span<const double> xs, int digits) {
    std::vector<double> out;
    out.reserve(xs.size());
    for (const double x : xs) {
        out.push_back(canonical_round(x, digits));
    }
    return out;
}

WitnessCheck compare_all(const NormalForm &a, const NormalForm &b,
                         const EquivalenceWitness &w, int digits) {
    WitnessCheck check{true, 0.0};
    const std::size_t n = a.n_players();
    Profile mapped(n);
    for (std::size_t flat = 0; flat < a.cell_count(); ++flat) {
        const Profile p = a.profile_at(flat);
        for (std::size_t i = 0; i < n; ++i) {
            mapped[i] = w.maps[i][p[i]];
        }
        const auto fa = a.payoff_at(flat);
        const auto fb = b.payoff(mapped);
        for (std::size_t i = 0; i < n; ++i) {
            check.max_deviation =
                std::max(check.max_deviation, std::abs(fa[i] - fb[i]));
            if (canonical_round(fa[i], digits) != canonical_round(fb[i], digits)) {
                check.holds = false;
            }
        }
    }
    return check;
}

/// Sorted rounded payoff vectors seen by each class of a player.
std::vector<std::vector<std::vector<double>>>
class_invariants(const NormalForm &rnf, std::size_t player,
                 const std::vector<double> &rounded_payoffs) {
    const std::size_t n = rnf.n_players();
    std::vector<std::vector<std::vector<double>>> inv(rnf.strategy_count(player));
    for (std::size_t flat = 0; flat < rnf.cell_count(); ++flat) {
        const std::size_t c = rnf.profile_at(flat)[player];
        inv[c].emplace_back(rounded_payoffs.begin() + flat * n,
                            rounded_payoffs.begin() + (flat + 1) * n);
    }
    for (auto &v : inv) {
        std::sort(v.begin(), v.end());
    }
    return inv;
}

class BijectionSearch {
  public:
    BijectionSearch(const NormalForm &a, const NormalForm &b,
                    const SearchOptions &opts)
        : a_(a), b_(b), opts_(opts), n_(a.n_players()),
          ra_(rounded(a.payoffs(), opts.digits)),
          rb_(rounded(b.payoffs(), opts.digits)) {
        counts_ = a.strategy_counts();
        const std::size_t longest = *std::max_element(counts_.begin(), counts_.end());
        for (std::size_t c = 0; c < longest; ++c) {
            for (std::size_t i = 0; i < n_; ++i) {
                if (c < counts_[i]) {
                    order_.push_back({i, c});
                }
            }
        }
        allowed_.resize(n_);
        for (std::size_t i = 0; i < n_; ++i) {
            const auto inv_a = class_invariants(a, i, ra_);
            const auto inv_b = class_invariants(b, i, rb_);
            allowed_[i].assign(counts_[i], std::vector<bool>(counts_[i]));
            for (std::size_t c = 0; c < counts_[i]; ++c) {
                for (std::size_t t = 0; t < counts_[i]; ++t) {
                    allowed_[i][c][t] = inv_a[c] == inv_b[t];
                }
            }
        }
        map_.resize(n_);
        used_.resize(n_);
        for (std::size_t i = 0; i < n_; ++i) {
            map_[i].assign(counts_[i], 0);
            used_[i].assign(counts_[i], false);
        }
        assigned_.assign(n_, 0);
    }

    SearchResult run() {
        const bool found = extend(0);
        if (exhausted_) {
            return {SearchStatus::BudgetExceeded, std::nullopt, nodes_};
        }
        if (!found) {
            return {SearchStatus::NotEquivalent, std::nullopt, nodes_};
        }
        return {SearchStatus::Equivalent, EquivalenceWitness{map_}, nodes_};
    }

  private:
    struct Var {
        std::size_t player;
        std::size_t cls;
    };

    bool extend(std::size_t depth) {
        if (depth == order_.size()) {
            return true;
        }
        const auto [player, cls] = order_[depth];
        for (std::size_t target = 0; target < counts_[player]; ++target) {
            if (used_[player][target] || !allowed_[player][cls][target]) {
                continue;
            }
            if (++nodes_ > opts_.budget) {
                exhausted_ = true;
                return false;
            }
            map_[player][cls] = target;
            used_[player][target] = true;
            ++assigned_[player];
            if (consistent(player, cls) && extend(depth + 1)) {
                return true;
            }
            --assigned_[player];
            used_[player][target] = false;
            if (exhausted_) {
                return false;
            }
        }
        return false;
    }

    // Checks every cell whose classes are all assigned and which involves
    // the newly assigned class. Assigned classes form a prefix per player.
    bool consistent(std::size_t player, std::size_t cls) const {
        for (std::size_t i = 0; i < n_; ++i) {
            if (assigned_[i] == 0) {
                return true;
            }
        }
        Profile pa(n_, 0);
        Profile pb(n_);
        pa[player] = cls;
        while (true) {
            for (std::size_t i = 0; i < n_; ++i) {
                pb[i] = map_[i][pa[i]];
            }
            const std::size_t fa = a_.flat_index(pa) * n_;
            const std::size_t fb = b_.flat_index(pb) * n_;
            if (!std::equal(ra_.begin() + fa, ra_.begin() + fa + n_,
                            rb_.begin() + fb)) {
                return false;
            }
            // Odometer over the assigned prefix box, skipping `player`.
            std::size_t i = n_;
            while (i-- > 0) {
                if (i == player) {
                    continue;
                }
                if (++pa[i] < assigned_[i]) {
                    break;
                }
                pa[i] = 0;
            }
            if (i == static_cast<std::size_t>(-1)) {
                return true;
            }
        }
    }

    const NormalForm &a_;
    const NormalForm &b_;
    SearchOptions opts_;
    std::size_t n_;
    std::vector<double> ra_;
    std::vector<double> rb_;
    std::vector<std::size_t> counts_;
    std::vector<Var> order_;
    std::vector<std::vector<std::vector<bool>>> allowed_;
    std::vector<std::vector<std::size_t>> map_;
    std::vector<std::vector<bool>> used_;
    std::vector<std::size_t> assigned_;
    std::uint64_t nodes_ = 0;
    bool exhausted_ = false;
};

} // namespace

EquivalenceWitness identity_witness(const std::vector<std::size_t> &counts) {
    EquivalenceWitness w;
    for (const auto c : counts) {
        auto &m = w.maps.emplace_back(c);
        for (std::size_t k = 0; k < c; ++k) {
            m[k] = k;
        }
    }
    return w;
}

EquivalenceWitness invert(const EquivalenceWitness &w) {
    EquivalenceWitness out;
    for (std::size_t i = 0; i < w.maps.size(); ++i) {
        require_bijection(w.maps[i], w.maps[i].size(), i);
        auto &m = out.maps.emplace_back(w.maps[i].size());
        for (std::size_t a = 0; a < w.maps[i].size(); ++a) {
            m[w.maps[i][a]] = a;
        }
    }
    return out;
}

EquivalenceWitness compose(const EquivalenceWitness &first,
                           const EquivalenceWitness &second) {
    if (first.maps.size() != second.maps.size()) {
        throw Error(ErrorKind::ShapeMismatch,
                    "cannot compose witnesses over different player counts");
    }
    EquivalenceWitness out;
    for (std::size_t i = 0; i < first.maps.size(); ++i) {
        auto &m = out.maps.emplace_back();
        for (const auto b : first.maps[i]) {
            if (b >= second.maps[i].size()) {
                throw Error(ErrorKind::ShapeMismatch,
                            "witnesses do not chain for player " +
                                std::to_string(i + 1));
            }
            m.push_back(second.maps[i][b]);
        }
    }
    return out;
}

WitnessCheck verify_witness(const NormalForm &g1, const NormalForm &g2,
                            const EquivalenceWitness &w, WitnessLevel level,
                            int digits) {
    const std::size_t n = g1.n_players();
    if (g2.n_players() != n) {
        throw Error(ErrorKind::ShapeMismatch,
                    "games have different player counts (" + std::to_string(n) +
                        " vs " + std::to_string(g2.n_players()) + ")");
    }
    if (w.maps.size() != n) {
        throw Error(ErrorKind::ShapeMismatch,
                    "witness covers " + std::to_string(w.maps.size()) +
                        " players, games have " + std::to_string(n));
    }
    if (level == WitnessLevel::Raw) {
        for (std::size_t i = 0; i < n; ++i) {
            if (g1.strategy_count(i) != g2.strategy_count(i)) {
                throw Error(ErrorKind::ShapeMismatch,
                            "player " + std::to_string(i + 1) +
                                " strategy counts differ");
            }
            require_bijection(w.maps[i], g1.strategy_count(i), i);
        }
        return compare_all(g1, g2, w, digits);
    }
    const auto r1 = reduce_normal_form(g1, digits);
    const auto r2 = reduce_normal_form(g2, digits);
    for (std::size_t i = 0; i < n; ++i) {
        if (r1.partition.class_count(i) != r2.partition.class_count(i)) {
            throw Error(ErrorKind::ShapeMismatch,
                        "player " + std::to_string(i + 1) +
                            " reduced class counts differ");
        }
        require_bijection(w.maps[i], r1.partition.class_count(i), i);
    }
    return compare_all(r1.normal_form, r2.normal_form, w, digits);
}

SearchResult search_equivalence(const NormalForm &g1, const NormalForm &g2,
                                const SearchOptions &options) {
    if (g1.n_players() != g2.n_players()) {
        return {SearchStatus::NotEquivalent, std::nullopt, 0};
    }
    const auto r1 = reduce_normal_form(g1, options.digits);
    const auto r2 = reduce_normal_form(g2, options.digits);
    for (std::size_t i = 0; i < g1.n_players(); ++i) {
        if (r1.partition.class_count(i) != r2.partition.class_count(i)) {
            return {SearchStatus::NotEquivalent, std::nullopt, 0};
        }
    }
    auto all1 = rounded(r1.normal_form.payoffs(), options.digits);
    auto all2 = rounded(r2.normal_form.payoffs(), options.digits);
    std::sort(all1.begin(), all1.end());
    std::sort(all2.begin(), all2.end());
    if (all1 != all2) {
        return {SearchStatus::NotEquivalent, std::nullopt, 0};
    }
    return BijectionSearch(r1.normal_form, r2.normal_form, options).run();
}

} // namespace qgames
