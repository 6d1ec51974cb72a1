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

#include "qgames/report.hpp"

#include <cstdio>
#include <sstream>

namespace qgames {

std::string format_payoff(std::span<const double> payoff) {
    std::string out = "(";
    for (std::size_t i = 0; i < payoff.size(); ++i) {
        char buf[32];
        std::snprintf(buf, sizeof buf, "%.10g", payoff[i] == 0.0 ? 0.0 : payoff[i]);
        out += (i == 0 ? "" : ", ");
        out += buf;
    }
    return out + ")";
}

std::string format_class(const std::vector<std::string> &members) {
    std::string out = "{";
    for (std::size_t k = 0; k < members.size(); ++k) {
        out += (k == 0 ? "" : ", ") + members[k];
    }
    return out + "}";
}

std::string render_normal_form(const NormalForm &nf) {
    std::ostringstream out;
    out << "players:";
    for (std::size_t i = 0; i < nf.n_players(); ++i) {
        out << ' ' << nf.player_name(i) << '(' << nf.strategy_count(i) << ')';
    }
    out << '\n';
    for (std::size_t flat = 0; flat < nf.cell_count(); ++flat) {
        const Profile p = nf.profile_at(flat);
        out << "  (";
        for (std::size_t i = 0; i < p.size(); ++i) {
            out << (i == 0 ? "" : ", ") << nf.label(i, p[i]);
        }
        out << ") -> " << format_payoff(nf.payoff_at(flat)) << '\n';
    }
    return out.str();
}

std::string render_reduction(const ReducedNormalForm &reduced) {
    std::ostringstream out;
    const auto &nf = reduced.normal_form;
    for (std::size_t i = 0; i < nf.n_players(); ++i) {
        const auto &classes = reduced.class_members[i];
        out << nf.player_name(i) << ": " << classes.size()
            << (classes.size() == 1 ? " class" : " classes") << '\n';
        for (std::size_t c = 0; c < classes.size(); ++c) {
            out << "  [" << c << "] " << format_class(classes[c]) << '\n';
        }
    }
    out << "reduced normal form:\n";
    for (std::size_t flat = 0; flat < nf.cell_count(); ++flat) {
        const Profile p = nf.profile_at(flat);
        out << "  (";
        for (std::size_t i = 0; i < p.size(); ++i) {
            out << (i == 0 ? "" : ", ") << format_class(reduced.class_members[i][p[i]]);
        }
        out << ") -> " << format_payoff(nf.payoff_at(flat)) << '\n';
    }
    return out.str();
}

std::string render_witness(const EquivalenceWitness &w,
                           const ReducedNormalForm &from,
                           const ReducedNormalForm &to) {
    std::ostringstream out;
    for (std::size_t i = 0; i < w.maps.size(); ++i) {
        out << from.normal_form.player_name(i) << ": ";
        for (std::size_t c = 0; c < w.maps[i].size(); ++c) {
            out << (c == 0 ? "" : "; ") << format_class(from.class_members[i][c])
                << " -> " << format_class(to.class_members[i][w.maps[i][c]]);
        }
        out << '\n';
    }
    return out.str();
}

std::string render_validation(const ValidationReport &report) {
    if (report.empty()) {
        return "valid\n";
    }
    std::string out;
    for (const auto &line : describe(report)) {
        out += line + '\n';
    }
    return out;
}

} // namespace qgames
