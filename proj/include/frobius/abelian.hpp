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

#ifndef FROBIUS_ABELIAN_HPP
#define FROBIUS_ABELIAN_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "frobius/common.hpp"
#include "frobius/field.hpp"

namespace frob {

/// A finite abelian group presented as a product of cyclic factors Z_{n_1} x ... x Z_{n_k}.
struct AbelianGroup {
    std::vector<int64_t> factors;

    int64_t order() const;
    int64_t exponent() const;
    std::string to_string() const;
    bool operator==(const AbelianGroup &) const = default;
};

AbelianGroup parse_group(const std::string &text);

/// An element given by one coordinate per cyclic factor, each reduced mod its order.
struct GroupElement {
    std::vector<int64_t> coords;
    bool operator==(const GroupElement &) const = default;
};

GroupElement group_zero(const AbelianGroup &g);
GroupElement group_add(const AbelianGroup &g, const GroupElement &a, const GroupElement &b);
GroupElement group_neg(const AbelianGroup &g, const GroupElement &a);
GroupElement group_scale(const AbelianGroup &g, int64_t k, const GroupElement &a);
GroupElement canonicalize(const AbelianGroup &g, GroupElement a);

/// Mixed-radix index of an element; the first coordinate is most significant.
/// This fixes the basis ordering used by every matrix in the library.
int64_t element_index(const AbelianGroup &g, const GroupElement &a);
GroupElement element_from_index(const AbelianGroup &g, int64_t idx);
std::vector<GroupElement> all_elements(const AbelianGroup &g);

/// Angle of an element under the canonical inclusion into the circle group,
/// as a rational number of turns in [0, 1).
Rat angle_of(const AbelianGroup &g, const GroupElement &a);

/// Inverse of angle_of when the angle lies in the image; empty otherwise.
std::optional<GroupElement> element_from_angle(const AbelianGroup &g, const Rat &angle);

/// A multiplicative character G -> F*, stored as one root of unity per factor.
struct Character {
    AbelianGroup group;
    FieldDescriptor field;
    std::vector<FieldScalar> factor_values;

    FieldScalar value(const GroupElement &a) const;
    std::string to_string() const;
};

/// All characters of g with values in F, enumerated from per-factor roots of unity.
std::vector<Character> characters(const AbelianGroup &g, const FieldDescriptor &F);

/// True when F contains enough roots of unity for the character group to have
/// the same order as g (i.e. F splits the group algebra into one-dimensional blocks).
bool has_enough_characters(const AbelianGroup &g, const FieldDescriptor &F);

} // namespace frob

#endif
