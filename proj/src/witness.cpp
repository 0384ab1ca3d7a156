/*
 * Copyright 2026 The Frobius Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *      http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include <sstream>

#include "frobius/model.hpp"

namespace frob {

namespace {

std::string phase_label(const Phase &p) {
    std::ostringstream os;
    os << numerator(p) << "/" << denominator(p);
    return os.str();
}

std::vector<std::pair<std::string, Matrix>> candidates(const GroupAlgebraModel &m, NodeType color,
                                                       int64_t depth) {
    std::string c = color == NodeType::Green ? "green" : "red";
    std::vector<std::pair<std::string, Matrix>> out;
    std::vector<std::pair<std::string, Matrix>> phases;
    for (const auto &g : all_elements(m.basis_group)) {
        Phase a = angle_of(m.basis_group, g);
        Matrix p = color == NodeType::Green ? m.green_phase(a) : m.red_phase(a);
        phases.push_back({c + "-phase(" + phase_label(a) + ")", p});
    }
    out = phases;
    for (int64_t n = 0; n <= depth; ++n) {
        Matrix N = internal_integer_matrix(m, n);
        for (const auto &[label, p] : phases)
            out.push_back({"int(" + std::to_string(n) + ") . " + label, N.compose(p)});
    }
    auto points = set_like(m, color);
    for (size_t i = 0; i < points.size(); ++i)
        for (size_t j = 0; j < points.size(); ++j)
            out.push_back({c + "-proj(" + std::to_string(i) + "," + std::to_string(j) + ")",
                           points[i].compose(points[j].dagger())});
    return out;
}

} // namespace

std::optional<Factorization> no_distributive_law_witness(const GroupAlgebraModel &m, const Matrix &g1,
                                                         const Matrix &h1, int64_t depth) {
    Matrix target = g1.compose(h1); // h1 first, then g1
    auto reds = candidates(m, NodeType::Red, depth);
    auto greens = candidates(m, NodeType::Green, depth);
    for (const auto &[rl, rm] : reds)
        for (const auto &[gl, gm] : greens)
            if (rm.compose(gm) == target) return Factorization{rl, gl, rm, gm};
    return std::nullopt;
}

} // namespace frob
