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

#include "frobius/abelian.hpp"

#include <sstream>

namespace frob {

int64_t AbelianGroup::order() const {
    int64_t n = 1;
    for (int64_t f : factors) n *= f;
    return n;
}

int64_t AbelianGroup::exponent() const {
    int64_t e = 1;
    for (int64_t f : factors) e = ilcm(e, f);
    return e;
}

std::string AbelianGroup::to_string() const {
    if (factors.empty()) return "Z1";
    std::ostringstream os;
    for (size_t i = 0; i < factors.size(); ++i) {
        if (i) os << "x";
        os << "Z" << factors[i];
    }
    return os.str();
}

AbelianGroup parse_group(const std::string &text) {
    AbelianGroup g;
    size_t pos = 0;
    while (pos < text.size()) {
        size_t next = text.find('x', pos);
        std::string part = text.substr(pos, next == std::string::npos ? next : next - pos);
        if (part.size() < 2 || (part[0] != 'Z' && part[0] != 'z'))
            throw parse_error("bad group factor '" + part + "'", pos);
        int64_t n = std::stoll(part.substr(1));
        if (n < 1) throw parse_error("group factor must be positive", pos);
        if (n > 1) g.factors.push_back(n);
        if (next == std::string::npos) break;
        pos = next + 1;
    }
    return g;
}

GroupElement group_zero(const AbelianGroup &g) {
    return GroupElement{std::vector<int64_t>(g.factors.size(), 0)};
}

GroupElement canonicalize(const AbelianGroup &g, GroupElement a) {
    if (a.coords.size() != g.factors.size()) throw domain_error("element/group arity mismatch");
    for (size_t i = 0; i < a.coords.size(); ++i) a.coords[i] = imod(a.coords[i], g.factors[i]);
    return a;
}

GroupElement group_add(const AbelianGroup &g, const GroupElement &a, const GroupElement &b) {
    GroupElement r = a;
    for (size_t i = 0; i < r.coords.size(); ++i) r.coords[i] += b.coords[i];
    return canonicalize(g, r);
}

GroupElement group_neg(const AbelianGroup &g, const GroupElement &a) {
    GroupElement r = a;
    for (auto &c : r.coords) c = -c;
    return canonicalize(g, r);
}

GroupElement group_scale(const AbelianGroup &g, int64_t k, const GroupElement &a) {
    GroupElement r = a;
    for (auto &c : r.coords) c *= k;
    return canonicalize(g, r);
}

int64_t element_index(const AbelianGroup &g, const GroupElement &a) {
    if (a.coords.size() != g.factors.size()) throw domain_error("element/group arity mismatch");
    int64_t idx = 0;
    for (size_t i = 0; i < g.factors.size(); ++i) idx = idx * g.factors[i] + imod(a.coords[i], g.factors[i]);
    return idx;
}

GroupElement element_from_index(const AbelianGroup &g, int64_t idx) {
    GroupElement a{std::vector<int64_t>(g.factors.size(), 0)};
    for (size_t i = g.factors.size(); i-- > 0;) {
        a.coords[i] = idx % g.factors[i];
        idx /= g.factors[i];
    }
    if (idx != 0) throw domain_error("element index out of range");
    return a;
}

std::vector<GroupElement> all_elements(const AbelianGroup &g) {
    std::vector<GroupElement> out;
    int64_t n = g.order();
    out.reserve(n);
    for (int64_t i = 0; i < n; ++i) out.push_back(element_from_index(g, i));
    return out;
}

Rat angle_of(const AbelianGroup &g, const GroupElement &a) {
    Rat angle(0);
    for (size_t i = 0; i < g.factors.size(); ++i)
        angle += Rat(imod(a.coords[i], g.factors[i])) / Rat(g.factors[i]);
    Int whole = numerator(angle) / denominator(angle);
    angle -= Rat(whole);
    if (angle < 0) angle += 1;
    return angle;
}

std::optional<GroupElement> element_from_angle(const AbelianGroup &g, const Rat &angle) {
    for (const auto &a : all_elements(g))
        if (angle_of(g, a) == angle) return a;
    return std::nullopt;
}

FieldScalar Character::value(const GroupElement &a) const {
    FieldScalar v = FieldScalar::one(field);
    for (size_t i = 0; i < factor_values.size(); ++i)
        v = v * factor_values[i].pow(imod(a.coords[i], group.factors[i]));
    return v;
}

std::string Character::to_string() const {
    std::ostringstream os;
    os << "(";
    for (size_t i = 0; i < factor_values.size(); ++i) {
        if (i) os << ", ";
        os << factor_values[i].to_string();
    }
    os << ")";
    return os.str();
}

std::vector<Character> characters(const AbelianGroup &g, const FieldDescriptor &F) {
    std::vector<std::vector<FieldScalar>> per_factor;
    per_factor.reserve(g.factors.size());
    for (int64_t n : g.factors) per_factor.push_back(roots_of_unity(n, F));
    std::vector<Character> out;
    std::vector<size_t> pick(g.factors.size(), 0);
    while (true) {
        Character c{g, F, {}};
        c.factor_values.reserve(pick.size());
        for (size_t i = 0; i < pick.size(); ++i) c.factor_values.push_back(per_factor[i][pick[i]]);
        out.push_back(std::move(c));
        size_t i = 0;
        for (; i < pick.size(); ++i) {
            if (++pick[i] < per_factor[i].size()) break;
            pick[i] = 0;
        }
        if (i == pick.size()) break;
        if (pick.empty()) break;
    }
    return out;
}

bool has_enough_characters(const AbelianGroup &g, const FieldDescriptor &F) {
    return static_cast<int64_t>(characters(g, F).size()) == g.order();
}

} // namespace frob
