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

#ifndef FROBIUS_FIELD_HPP
#define FROBIUS_FIELD_HPP

#include <complex>
#include <optional>
#include <vector>

#include "frobius/common.hpp"

namespace frob {

/// Scalar backends.  `Real` behaves like `Rational` arithmetically but is a
/// distinct descriptor: it stands for the real-restricted models, where the
/// only roots of unity are +1/-1 and square roots of non-squares are
/// unavailable exactly.
enum class FieldKind { Rational, Real, Cyclotomic, PrimeField, ComplexFloat };

struct FieldDescriptor {
    FieldKind kind = FieldKind::Rational;
    int64_t param = 0; // cyclotomic order n, or the prime p

    static FieldDescriptor rationals() { return {FieldKind::Rational, 0}; }
    static FieldDescriptor reals() { return {FieldKind::Real, 0}; }
    static FieldDescriptor cyclotomic(int64_t n);
    static FieldDescriptor prime_field(int64_t p);
    static FieldDescriptor complex_float() { return {FieldKind::ComplexFloat, 0}; }

    bool operator==(const FieldDescriptor &o) const = default;

    bool exact() const { return kind != FieldKind::ComplexFloat; }
    /// Field characteristic (0 except for prime fields).
    int64_t characteristic() const { return kind == FieldKind::PrimeField ? param : 0; }
    std::string to_string() const;
};

FieldDescriptor parse_field_descriptor(const std::string &text);

/// An exact (or complex-double) scalar tagged with its field.
///
/// Cyclotomic payloads are coefficient vectors of length deg(Phi_n), always
/// reduced mod the n-th cyclotomic polynomial;, rationals are kept in lowest
/// terms by the underlying representation.
class FieldScalar {
  public:
    FieldScalar() = default;

    static FieldScalar zero(const FieldDescriptor &d);
    static FieldScalar one(const FieldDescriptor &d);
    static FieldScalar from_rational(const FieldDescriptor &d, const Rat &q);
    static FieldScalar from_int(const FieldDescriptor &d, int64_t k) { return from_rational(d, Rat(k)); }
    static FieldScalar from_complex(std::complex<double> z);
    /// A cyclotomic element from its coefficient vector (reduced on entry).
    static FieldScalar cyclotomic(int64_t order, std::vector<Rat> coeffs);
    static FieldScalar residue(int64_t p, int64_t r);

    const FieldDescriptor &descriptor() const { return desc_; }
    bool is_zero() const;
    bool is_one() const;
    bool operator==(const FieldScalar &o) const;
    bool operator!=(const FieldScalar &o) const { return !(*this == o); }

    FieldScalar operator+(const FieldScalar &o) const;
    FieldScalar operator-() const;
    FieldScalar operator-(const FieldScalar &o) const { return *this + (-o); }
    FieldScalar operator*(const FieldScalar &o) const;
    FieldScalar inverse() const; // throws on zero
    FieldScalar operator/(const FieldScalar &o) const { return *this * o.inverse(); }
    FieldScalar pow(int64_t e) const;

    /// The conjugation automorphism: identity on Q, R, F_p; zeta -> zeta^(n-1)
    /// extended linearly on cyclotomics; complex conjugation on floats.
    FieldScalar conjugate() const;

    /// Numeric embedding (zeta_n -> exp(2 pi i / n)); used for cross-checks.
    std::complex<double> to_complex() const;

    /// If the value is rational (e.g. a cyclotomic that reduced to degree 0),
    /// return it.
    std::optional<Rat> as_rational() const;

    std::string to_string() const;

    const std::vector<Rat> &cyclotomic_coeffs() const { return cyc_; }
    const Rat &rational_value() const { return rat_; }
    int64_t residue_value() const { return res_; }
    std::complex<double> complex_value() const { return z_; }

  private:
    FieldDescriptor desc_;
    Rat rat_;
    std::vector<Rat> cyc_;
    int64_t res_ = 0;
    std::complex<double> z_{0.0, 0.0};

    void check_same(const FieldScalar &o) const;
};

/// The fixed primitive n-th root of unity of F; throws if F has none.
FieldScalar zeta(int64_t n, const FieldDescriptor &F);

/// Whether F contains a primitive n-th root of unity.
bool has_primitive_root(int64_t n, const FieldDescriptor &F);

/// All solutions of x^n = 1 in F (exhaustive, duplicate-free).
std::vector<FieldScalar> roots_of_unity(int64_t n, const FieldDescriptor &F);

/// A scalar s with s*s = D, if one exists in F; throws otherwise.
FieldScalar sqrt_dim(int64_t D, const FieldDescriptor &F);

/// Smallest cyclotomic order M >= n (a multiple of n) such that Q(zeta_M)
/// contains sqrt(D).  Used by the model builder for order escalation.
int64_t cyclotomic_order_for_sqrt(int64_t D, int64_t n);

/// Re-express `s` in the field `target`.  Supported: Rational/Real into any
/// exact field, Cyclotomic(m) into Cyclotomic(M) with m | M, anything exact
/// into ComplexFloat.
FieldScalar embed(const FieldScalar &s, const FieldDescriptor &target);

/// Parse a scalar literal: `3/4`, `-2`, `z(8)^3`, `f5:2`, `c:1.0+2.0i`, and
/// sums/differences of such terms with optional rational coefficients, e.g.
/// `z(8)^1 + z(8)^7` or `1/2*z(3)^2`.
FieldScalar parse_scalar(const std::string &text, const FieldDescriptor &F);

/// Coefficients of the n-th cyclotomic polynomial (monic, ascending degree).
const std::vector<Rat> &cyclotomic_polynomial(int64_t n);

} // namespace frob

#endif
