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

#ifndef FROBIUS_MODEL_HPP
#define FROBIUS_MODEL_HPP

#include <optional>
#include <string>
#include <vector>

#include "frobius/abelian.hpp"
#include "frobius/diagram.hpp"
#include "frobius/linalg.hpp"
#include "frobius/rewrite.hpp"

namespace frob {

/// Scalar conventions for the red (group-law) Frobenius structure.
///  - Integral: all structure maps carry 0/1 entries; red is quasi-special
///    (mul after comul = D * id).
///  - Maschke: red comul carries 1/D and red counit D<e|; red is special.
///  - Unitary: red mul/comul carry 1/sqrt(D) and unit/counit sqrt(D); both
///    algebras are dagger-special.  Requires a square root of D in the field.
enum class Normalization { Integral, Maschke, Unitary };

Normalization parse_normalization(const std::string &text);
std::string normalization_to_string(Normalization n);

/// A group-algebra model over a finite abelian basis group: green structure
/// copies the basis, red structure implements the group law.
struct GroupAlgebraModel {
    AbelianGroup basis_group;
    FieldDescriptor field{FieldKind::Rational, 0};
    Normalization normalization = Normalization::Integral;

    Matrix green_mul, green_unit, green_comul, green_counit;
    Matrix red_mul, red_unit, red_comul, red_counit;
    Matrix antipode;

    int64_t dim() const { return basis_group.order(); }

    /// Diagonal matrix of character values for the given angle.  For cyclic
    /// basis groups any rational angle with a representable root order works;
    /// product groups require an angle in the image of the group.
    Matrix green_phase(const Phase &angle) const;
    /// Green phase conjugated by the character (Fourier) matrix.  Basis-group
    /// angles give the shift permutations.
    Matrix red_phase(const Phase &angle) const;

    /// Character matrix F with F[g][chi] = chi(g); requires enough characters.
    Matrix character_matrix() const;

    /// Matrix of one spider: comul-tower after phase after mul-tower.
    Matrix spider_matrix(NodeType color, int m, int n, const Phase &angle) const;

    Matrix structure(NodeType color, bool mul_side, bool arity_two) const;
};

/// Builds and verifies a model.  For Unitary over a cyclotomic field the
/// order is escalated automatically when sqrt(D) needs a larger one.
GroupAlgebraModel build_model(const AbelianGroup &g, const FieldDescriptor &F, Normalization norm);

/// CLI descriptor form: `Z3@cyclo(12)/unitary`.
GroupAlgebraModel parse_model_descriptor(const std::string &text);

/// Exact evaluation by tensor contraction.  Functorial:
/// eval(d_compose(a,b)) = eval(b).compose(eval(a)); rows are indexed by the
/// outputs (first output most significant), columns by the inputs.
Matrix eval(const Diagram &d, const GroupAlgebraModel &m);

struct SoundnessReport {
    struct Entry {
        std::string rule;
        std::string verdict; // "exact" | "scalar <literal>" | "FAIL"
        bool exact = false;
        bool fail = false;
    };
    std::vector<Entry> entries;
    bool all_exact = true;
    bool any_fail = false;

    std::string to_string() const;
};

/// Compares eval(lhs) and eval(rhs) of every rule via scalar_multiple_of.
SoundnessReport check_rule_soundness(const RuleSet &rs, const GroupAlgebraModel &m);

/// Points copied by the comultiplication of the given color, as columns.
/// Green: the basis vectors.  Red: character vectors, rescaled to satisfy the
/// defining equation under the model's normalization.
std::vector<Matrix> set_like(const GroupAlgebraModel &m, NodeType color);

// --- Matrix-level predicates ----------------------------------------------

Matrix color_transpose(const GroupAlgebraModel &m, NodeType color, const Matrix &M);
Matrix color_conjugate(const GroupAlgebraModel &m, NodeType color, const Matrix &M);
bool is_color_real(const GroupAlgebraModel &m, NodeType color, const Matrix &M);
bool is_unitary_matrix(const GroupAlgebraModel &m, const Matrix &M);
/// Point unbiased w.r.t. color: mul(psi tensor color-conj psi) is a nonzero
/// scalar multiple of the unit.
bool is_unbiased(const GroupAlgebraModel &m, NodeType color, const Matrix &point);
bool is_setlike(const GroupAlgebraModel &m, NodeType color, const Matrix &point);
/// Strength equation plus unitarity.
bool is_phase(const GroupAlgebraModel &m, NodeType color, const Matrix &M);

// --- Internal integers -----------------------------------------------------

/// The matrix |g> -> |n*g| under the Integral normalization; in general,
/// eval of the defining diagram.
Matrix internal_integer_matrix(const GroupAlgebraModel &m, int64_t n);

struct RingOps {
    Matrix sum;     // convolution: red_mul (a tensor b) green_comul
    Matrix product; // composition
};
RingOps ring_ops(const GroupAlgebraModel &m, int64_t a, int64_t b);

/// Path-counting functor onto integer matrices for diagrams over the
/// green-comonoid / red-monoid / antipode fragment; entries reduced mod
/// `modulus` when given.  Independent of eval by construction.
Matrix ha_to_matrix(const Diagram &d, std::optional<int64_t> modulus = std::nullopt);

/// Conjugation of a green phase by the shift permutation of k.
Matrix classical_action(const GroupAlgebraModel &m, const GroupElement &k, const Matrix &alpha);

struct CoprimalityReport {
    bool coprime = false;
    bool red_comonoid_commutes = false;
    bool green_monoid_commutes = false;
    bool consistent() const { return coprime == red_comonoid_commutes && coprime == green_monoid_commutes; }
};
CoprimalityReport coprimality_check(const GroupAlgebraModel &m, int64_t n);

/// True iff the red set-like vectors span the carrier.
bool enough_setlike(const GroupAlgebraModel &m);

struct Factorization {
    std::string red_description, green_description;
    Matrix red_factor, green_factor;
};

/// Searches for red-after-green factorizations of green_after_red = g1*h1
/// over phases, internal integers composed with phases (0..depth), and
/// set-like projector forms.  Returns the first exact factorization found.
std::optional<Factorization> no_distributive_law_witness(const GroupAlgebraModel &m, const Matrix &g1,
                                                         const Matrix &h1, int64_t depth);

} // namespace frob

#endif
