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

#include "frobius/field.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <sstream>

namespace frob {

namespace {

constexpr double kPi = 3.14159265358979323846;

// ---------------------------------------------------------------------------
// Dense polynomial arithmetic over Q, ascending-degree coefficient vectors.
// ---------------------------------------------------------------------------

using Poly = std::vector<Rat>;

void trim(Poly &p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

Poly poly_mul(const Poly &a, const Poly &b) {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1, Rat(0));
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    }
    trim(r);
    return r;
}

// Euclidean division a = q*b + r, deg r < deg b.  b must be nonzero.
std::pair<Poly, Poly> poly_divmod(Poly a, const Poly &b) {
    Poly q;
    trim(a);
    if (b.empty()) throw error("polynomial division by zero");
    if (a.size() >= b.size()) q.assign(a.size() - b.size() + 1, Rat(0));
    while (!a.empty() && a.size() >= b.size()) {
        Rat c = a.back() / b.back();
        size_t shift = a.size() - b.size();
        q[shift] = c;
        for (size_t i = 0; i < b.size(); ++i) a[shift + i] -= c * b[i];
        a.pop_back();
        trim(a);
    }
    return {q, a};
}

Poly poly_mod(const Poly &a, const Poly &m) { return poly_divmod(a, m).second; }

// Extended Euclid: returns (g, u, v) with u*a + v*b = g, g monic gcd.
std::tuple<Poly, Poly, Poly> poly_ext_gcd(Poly a, Poly b) {
    Poly u0{Rat(1)}, v0, u1, v1{Rat(1)};
    trim(a);
    trim(b);
    while (!b.empty()) {
        auto [q, r] = poly_divmod(a, b);
        Poly u2 = u0, v2 = v0;
        // u2 -= q*u1 ; v2 -= q*v1
        Poly qu = poly_mul(q, u1), qv = poly_mul(q, v1);
        if (u2.size() < qu.size()) u2.resize(qu.size(), Rat(0));
        for (size_t i = 0; i < qu.size(); ++i) u2[i] -= qu[i];
        if (v2.size() < qv.size()) v2.resize(qv.size(), Rat(0));
        for (size_t i = 0; i < qv.size(); ++i) v2[i] -= qv[i];
        trim(u2);
        trim(v2);
        a = b;
        u0 = u1;
        v0 = v1;
        b = r;
        u1 = u2;
        v1 = v2;
    }
    if (!a.empty() && a.back() != 1) {
        Rat lead = a.back();
        for (auto &c : a) c /= lead;
        for (auto &c : u0) c /= lead;
        for (auto &c : v0) c /= lead;
    }
    return {a, u0, v0};
}

std::mutex g_cache_mutex;

const Poly &cyclo_poly_impl(int64_t n) {
    static std::map<int64_t, Poly> cache;
    std::lock_guard<std::mutex> lock(g_cache_mutex);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    // x^n - 1 divided by the product of Phi_d over proper divisors d | n.
    Poly num(n + 1, Rat(0));
    num[0] = -1;
    num[n] = 1;
    Poly den{Rat(1)};
    for (int64_t d = 1; d < n; ++d) {
        if (n % d != 0) continue;
        // recursive lookup without re-locking
        auto jt = cache.find(d);
        Poly phi_d;
        if (jt != cache.end()) {
            phi_d = jt->second;
        } else {
            // compute by the same recurrence (divisors of d already cached or
            // computed on the way up since we iterate ascending per call)
            Poly nd(d + 1, Rat(0));
            nd[0] = -1;
            nd[d] = 1;
            Poly dd{Rat(1)};
            for (int64_t e = 1; e < d; ++e)
                if (d % e == 0) {
                    auto kt = cache.find(e);
                    if (kt == cache.end()) throw error("cyclotomic cache miss");
                    dd = poly_mul(dd, kt->second);
                }
            auto [q, r] = poly_divmod(nd, dd);
            if (!r.empty()) throw error("cyclotomic division not exact");
            cache.emplace(d, q);
            phi_d = q;
        }
        den = poly_mul(den, phi_d);
    }
    auto [q, r] = poly_divmod(num, den);
    if (!r.empty()) throw error("cyclotomic division not exact");
    auto [pos, _] = cache.emplace(n, q);
    return pos->second;
}

// x^j mod Phi_n for j = 0..n-1, cached per order.
const std::vector<Poly> &power_basis(int64_t n) {
    static std::map<int64_t, std::vector<Poly>> cache;
    const Poly &phi = cyclo_poly_impl(n);
    std::lock_guard<std::mutex> lock(g_cache_mutex);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    std::vector<Poly> powers(n);
    Poly x{Rat(0), Rat(1)};
    Poly cur{Rat(1)};
    for (int64_t j = 0; j < n; ++j) {
        powers[j] = cur;
        cur = poly_mod(poly_mul(cur, x), phi);
    }
    auto [pos, _] = cache.emplace(n, std::move(powers));
    return pos->second;
}

int64_t deg_phi(int64_t n) { return n == 1 ? 1 : euler_phi(n); }

std::string rat_to_string(const Rat &q) {
    std::ostringstream os;
    os << numerator(q);
    if (denominator(q) != 1) os << "/" << denominator(q);
    return os.str();
}

int legendre_symbol(int64_t a, int64_t p) {
    int64_t r = pow_mod(a, (p - 1) / 2, p);
    return r == p - 1 ? -1 : static_cast<int>(r);
}

} // namespace

const std::vector<Rat> &cyclotomic_polynomial(int64_t n) {
    if (n < 1) throw domain_error("cyclotomic order must be >= 1");
    return cyclo_poly_impl(n);
}

// ---------------------------------------------------------------------------
// FieldDescriptor
// ---------------------------------------------------------------------------

FieldDescriptor FieldDescriptor::cyclotomic(int64_t n) {
    if (n < 1) throw domain_error("cyclotomic order must be >= 1");
    return {FieldKind::Cyclotomic, n};
}

FieldDescriptor FieldDescriptor::prime_field(int64_t p) {
    if (!is_prime(p)) throw domain_error("prime field modulus must be prime: " + std::to_string(p));
    return {FieldKind::PrimeField, p};
}

std::string FieldDescriptor::to_string() const {
    switch (kind) {
        case FieldKind::Rational: return "rationals";
        case FieldKind::Real: return "reals";
        case FieldKind::Cyclotomic: return "cyclo(" + std::to_string(param) + ")";
        case FieldKind::PrimeField: return "f" + std::to_string(param);
        case FieldKind::ComplexFloat: return "complex";
    }
    return "?";
}

FieldDescriptor parse_field_descriptor(const std::string &text) {
    if (text == "rationals" || text == "Q" || text == "q") return FieldDescriptor::rationals();
    if (text == "reals" || text == "R" || text == "r") return FieldDescriptor::reals();
    if (text == "complex" || text == "C" || text == "c") return FieldDescriptor::complex_float();
    if (text.rfind("cyclo(", 0) == 0 && text.back() == ')')
        return FieldDescriptor::cyclotomic(std::stoll(text.substr(6, text.size() - 7)));
    if (!text.empty() && (text[0] == 'f' || text[0] == 'F') && text.size() > 1 && std::isdigit(text[1]))
        return FieldDescriptor::prime_field(std::stoll(text.substr(1)));
    throw parse_error("unknown field descriptor '" + text + "'", 0);
}

// ---------------------------------------------------------------------------
// FieldScalar
// ---------------------------------------------------------------------------

FieldScalar FieldScalar::zero(const FieldDescriptor &d) { return from_rational(d, Rat(0)); }
FieldScalar FieldScalar::one(const FieldDescriptor &d) { return from_rational(d, Rat(1)); }

FieldScalar FieldScalar::from_rational(const FieldDescriptor &d, const Rat &q) {
    FieldScalar s;
    s.desc_ = d;
    switch (d.kind) {
        case FieldKind::Rational:
        case FieldKind::Real: s.rat_ = q; break;
        case FieldKind::Cyclotomic:
            s.cyc_.assign(deg_phi(d.param), Rat(0));
            s.cyc_[0] = q;
            break;
        case FieldKind::PrimeField: {
            Int num = numerator(q), den = denominator(q);
            Int p(d.param);
            Int n = num % p;
            if (n < 0) n += p;
            Int dm = den % p;
            if (dm == 0) throw domain_error("denominator divisible by field characteristic");
            int64_t nd = static_cast<int64_t>(n), dd = static_cast<int64_t>(dm);
            int64_t inv = pow_mod(dd, d.param - 2, d.param);
            s.res_ = (nd * inv) % d.param;
            break;
        }
        case FieldKind::ComplexFloat: s.z_ = std::complex<double>(static_cast<double>(q), 0.0); break;
    }
    return s;
}

FieldScalar FieldScalar::from_complex(std::complex<double> z) {
    FieldScalar s;
    s.desc_ = FieldDescriptor::complex_float();
    s.z_ = z;
    return s;
}

FieldScalar FieldScalar::cyclotomic(int64_t order, std::vector<Rat> coeffs) {
    FieldScalar s;
    s.desc_ = FieldDescriptor::cyclotomic(order);
    const Poly &phi = cyclo_poly_impl(order);
    Poly p = std::move(coeffs);
    trim(p);
    p = poly_mod(p, phi);
    p.resize(deg_phi(order), Rat(0));
    s.cyc_ = std::move(p);
    return s;
}

FieldScalar FieldScalar::residue(int64_t p, int64_t r) {
    FieldScalar s;
    s.desc_ = FieldDescriptor::prime_field(p);
    s.res_ = imod(r, p);
    return s;
}

void FieldScalar::check_same(const FieldScalar &o) const {
    if (!(desc_ == o.desc_))
        throw domain_error("field mismatch: " + desc_.to_string() + " vs " + o.desc_.to_string());
}

bool FieldScalar::is_zero() const {
    switch (desc_.kind) {
        case FieldKind::Rational:
        case FieldKind::Real: return rat_ == 0;
        case FieldKind::Cyclotomic:
            return std::all_of(cyc_.begin(), cyc_.end(), [](const Rat &c) { return c == 0; });
        case FieldKind::PrimeField: return res_ == 0;
        case FieldKind::ComplexFloat: return z_ == std::complex<double>(0.0, 0.0);
    }
    return false;
}

bool FieldScalar::is_one() const { return *this == one(desc_); }

bool FieldScalar::operator==(const FieldScalar &o) const {
    if (!(desc_ == o.desc_)) return false;
    switch (desc_.kind) {
        case FieldKind::Rational:
        case FieldKind::Real: return rat_ == o.rat_;
        case FieldKind::Cyclotomic: return cyc_ == o.cyc_;
        case FieldKind::PrimeField: return res_ == o.res_;
        case FieldKind::ComplexFloat: return z_ == o.z_;
    }
    return false;
}

FieldScalar FieldScalar::operator+(const FieldScalar &o) const {
    check_same(o);
    FieldScalar r = *this;
    switch (desc_.kind) {
        case FieldKind::Rational:
        case FieldKind::Real: r.rat_ += o.rat_; break;
        case FieldKind::Cyclotomic:
            for (size_t i = 0; i < cyc_.size(); ++i) r.cyc_[i] += o.cyc_[i];
            break;
        case FieldKind::PrimeField: r.res_ = (res_ + o.res_) % desc_.param; break;
        case FieldKind::ComplexFloat: r.z_ += o.z_; break;
    }
    return r;
}

FieldScalar FieldScalar::operator-() const {
    FieldScalar r = *this;
    switch (desc_.kind) {
        case FieldKind::Rational:
        case FieldKind::Real: r.rat_ = -rat_; break;
        case FieldKind::Cyclotomic:
            for (auto &c : r.cyc_) c = -c;
            break;
        case FieldKind::PrimeField: r.res_ = imod(-res_, desc_.param); break;
        case FieldKind::ComplexFloat: r.z_ = -z_; break;
    }
    return r;
}

FieldScalar FieldScalar::operator*(const FieldScalar &o) const {
    check_same(o);
    FieldScalar r = *this;
    switch (desc_.kind) {
        case FieldKind::Rational:
        case FieldKind::Real: r.rat_ *= o.rat_; break;
        case FieldKind::Cyclotomic: {
            Poly p = poly_mod(poly_mul(cyc_, o.cyc_), cyclo_poly_impl(desc_.param));
            p.resize(deg_phi(desc_.param), Rat(0));
            r.cyc_ = std::move(p);
            break;
        }
        case FieldKind::PrimeField: r.res_ = (res_ * o.res_) % desc_.param; break;
        case FieldKind::ComplexFloat: r.z_ *= o.z_; break;
    }
    return r;
}

FieldScalar FieldScalar::inverse() const {
    if (is_zero()) throw domain_error("division by zero");
    FieldScalar r = *this;
    switch (desc_.kind) {
        case FieldKind::Rational:
        case FieldKind::Real: r.rat_ = Rat(1) / rat_; break;
        case FieldKind::Cyclotomic: {
            Poly a = cyc_;
            trim(a);
            auto [g, u, v] = poly_ext_gcd(a, cyclo_poly_impl(desc_.param));
            if (g.size() != 1) throw error("cyclotomic element not invertible (reduction bug)");
            Poly inv = u;
            for (auto &c : inv) c /= g[0];
            inv = poly_mod(inv, cyclo_poly_impl(desc_.param));
            inv.resize(deg_phi(desc_.param), Rat(0));
            r.cyc_ = std::move(inv);
            break;
        }
        case FieldKind::PrimeField: r.res_ = pow_mod(res_, desc_.param - 2, desc_.param); break;
        case FieldKind::ComplexFloat: r.z_ = 1.0 / z_; break;
    }
    return r;
}

FieldScalar FieldScalar::pow(int64_t e) const {
    if (e < 0) return inverse().pow(-e);
    FieldScalar base = *this;
    FieldScalar acc = one(desc_);
    while (e > 0) {
        if (e & 1) acc = acc * base;
        base = base * base;
        e >>= 1;
    }
    return acc;
}

FieldScalar FieldScalar::conjugate() const {
    switch (desc_.kind) {
        case FieldKind::Rational:
        case FieldKind::Real:
        case FieldKind::PrimeField: return *this;
        case FieldKind::ComplexFloat: return from_complex(std::conj(z_));
        case FieldKind::Cyclotomic: {
            int64_t n = desc_.param;
            const auto &powers = power_basis(n);
            Poly acc(deg_phi(n), Rat(0));
            for (size_t k = 0; k < cyc_.size(); ++k) {
                if (cyc_[k] == 0) continue;
                const Poly &pw = powers[static_cast<size_t>(imod(-(int64_t)k, n))];
                for (size_t i = 0; i < pw.size(); ++i) acc[i] += cyc_[k] * pw[i];
            }
            FieldScalar r = *this;
            r.cyc_ = std::move(acc);
            return r;
        }
    }
    return *this;
}

std::complex<double> FieldScalar::to_complex() const {
    switch (desc_.kind) {
        case FieldKind::Rational:
        case FieldKind::Real: return {static_cast<double>(rat_), 0.0};
        case FieldKind::ComplexFloat: return z_;
        case FieldKind::Cyclotomic: {
            std::complex<double> acc(0.0, 0.0);
            int64_t n = desc_.param;
            for (size_t k = 0; k < cyc_.size(); ++k) {
                if (cyc_[k] == 0) continue;
                double th = 2.0 * kPi * static_cast<double>(k) / static_cast<double>(n);
                acc += static_cast<double>(cyc_[k]) * std::complex<double>(std::cos(th), std::sin(th));
            }
            return acc;
        }
        case FieldKind::PrimeField: throw domain_error("prime-field scalars have no complex embedding");
    }
    return {};
}

std::optional<Rat> FieldScalar::as_rational() const {
    switch (desc_.kind) {
        case FieldKind::Rational:
        case FieldKind::Real: return rat_;
        case FieldKind::Cyclotomic:
            for (size_t i = 1; i < cyc_.size(); ++i)
                if (cyc_[i] != 0) return std::nullopt;
            return cyc_.empty() ? Rat(0) : cyc_[0];
        case FieldKind::PrimeField: return std::nullopt;
        case FieldKind::ComplexFloat: return std::nullopt;
    }
    return std::nullopt;
}

std::string FieldScalar::to_string() const {
    switch (desc_.kind) {
        case FieldKind::Rational:
        case FieldKind::Real: return rat_to_string(rat_);
        case FieldKind::PrimeField: return "f" + std::to_string(desc_.param) + ":" + std::to_string(res_);
        case FieldKind::ComplexFloat: {
            std::ostringstream os;
            os << "c:" << z_.real();
            os << (z_.imag() < 0 ? "-" : "+") << std::abs(z_.imag()) << "i";
            return os.str();
        }
        case FieldKind::Cyclotomic: {
            std::ostringstream os;
            bool first = true;
            for (size_t k = 0; k < cyc_.size(); ++k) {
                if (cyc_[k] == 0) continue;
                Rat c = cyc_[k];
                if (first) {
                    if (c < 0) {
                        os << "-";
                        c = -c;
                    }
                } else {
                    os << (c < 0 ? " - " : " + ");
                    if (c < 0) c = -c;
                }
                first = false;
                if (k == 0) {
                    os << rat_to_string(c);
                } else {
                    if (c != 1) os << rat_to_string(c) << "*";
                    os << "z(" << desc_.param << ")^" << k;
                }
            }
            if (first) return "0";
            return os.str();
        }
    }
    return "?";
}

// ---------------------------------------------------------------------------
// Roots of unity and square roots
// ---------------------------------------------------------------------------

bool has_primitive_root(int64_t n, const FieldDescriptor &F) {
    if (n < 1) return false;
    switch (F.kind) {
        case FieldKind::Rational:
        case FieldKind::Real: return n <= 2;
        case FieldKind::ComplexFloat: return true;
        case FieldKind::PrimeField: return (F.param - 1) % n == 0;
        case FieldKind::Cyclotomic: {
            int64_t m = F.param;
            if (m % n == 0) return true;
            return (m % 2 == 1) && ((2 * m) % n == 0);
        }
    }
    return false;
}

FieldScalar zeta(int64_t n, const FieldDescriptor &F) {
    if (n < 1) throw domain_error("root order must be >= 1");
    if (n == 1) return FieldScalar::one(F);
    switch (F.kind) {
        case FieldKind::Rational:
        case FieldKind::Real:
            if (n == 2) return FieldScalar::from_int(F, -1);
            throw domain_error("no primitive " + std::to_string(n) + "-th root of unity in " + F.to_string());
        case FieldKind::ComplexFloat: {
            double th = 2.0 * kPi / static_cast<double>(n);
            return FieldScalar::from_complex({std::cos(th), std::sin(th)});
        }
        case FieldKind::PrimeField: {
            int64_t p = F.param;
            if ((p - 1) % n != 0)
                throw domain_error("no primitive " + std::to_string(n) + "-th root of unity in " + F.to_string());
            for (int64_t a = 2; a < p; ++a) {
                int64_t c = pow_mod(a, (p - 1) / n, p);
                bool primitive = true;
                for (int64_t d = 1; d < n; ++d)
                    if (n % d == 0 && pow_mod(c, d, p) == 1) {
                        primitive = false;
                        break;
                    }
                if (primitive) return FieldScalar::residue(p, c);
            }
            throw error("failed to locate a primitive root (unreachable for prime p)");
        }
        case FieldKind::Cyclotomic: {
            int64_t m = F.param;
            FieldScalar zm = [&] {
                std::vector<Rat> c(deg_phi(m), Rat(0));
                if (deg_phi(m) > 1) {
                    c[1] = 1;
                    return FieldScalar::cyclotomic(m, c);
                }
                // m == 1 or m == 2: zeta_m is rational
                return FieldScalar::from_int(F, m == 2 ? -1 : 1);
            }();
            if (m % n == 0) return zm.pow(m / n);
            if (m % 2 == 1 && (2 * m) % n == 0) {
                FieldScalar z2m = -zm.pow((m + 1) / 2); // a primitive 2m-th root
                return z2m.pow(2 * m / n);
            }
            throw domain_error("no primitive " + std::to_string(n) + "-th root of unity in " + F.to_string());
        }
    }
    throw error("unreachable");
}

std::vector<FieldScalar> roots_of_unity(int64_t n, const FieldDescriptor &F) {
    std::vector<FieldScalar> out;
    auto push_unique = [&out](const FieldScalar &s) {
        for (const auto &t : out)
            if (t == s) return;
        out.push_back(s);
    };
    switch (F.kind) {
        case FieldKind::Rational:
        case FieldKind::Real:
            push_unique(FieldScalar::one(F));
            if (n % 2 == 0) push_unique(FieldScalar::from_int(F, -1));
            return out;
        case FieldKind::PrimeField: {
            for (int64_t x = 1; x < F.param; ++x)
                if (pow_mod(x, n, F.param) == 1) out.push_back(FieldScalar::residue(F.param, x));
            return out;
        }
        case FieldKind::ComplexFloat: {
            for (int64_t k = 0; k < n; ++k) {
                double th = 2.0 * kPi * static_cast<double>(k) / static_cast<double>(n);
                out.push_back(FieldScalar::from_complex({std::cos(th), std::sin(th)}));
            }
            return out;
        }
        case FieldKind::Cyclotomic: {
            // Every root of unity in Q(zeta_m) is +-zeta_m^k.
            int64_t m = F.param;
            FieldScalar z = zeta(m, F);
            FieldScalar one = FieldScalar::one(F);
            FieldScalar cur = one;
            for (int64_t k = 0; k < m; ++k) {
                if (cur.pow(n).is_one()) push_unique(cur);
                FieldScalar neg = -cur;
                if (neg.pow(n).is_one()) push_unique(neg);
                cur = cur * z;
            }
            return out;
        }
    }
    return out;
}

int64_t cyclotomic_order_for_sqrt(int64_t D, int64_t n) {
    if (D < 0) throw domain_error("dimension must be nonnegative");
    int64_t M = n;
    int64_t f = D;
    // squarefree part
    for (int64_t p = 2; p * p <= f; ++p)
        while (f % (p * p) == 0) f /= p * p;
    int64_t rest = f;
    for (int64_t p = 2; p * p <= rest; ++p) {
        if (rest % p != 0) continue;
        rest /= p;
        if (p == 2) M = ilcm(M, 8);
        else if (p % 4 == 1) M = ilcm(M, p);
        else M = ilcm(M, 4 * p);
    }
    if (rest > 1) {
        int64_t p = rest;
        if (p == 2) M = ilcm(M, 8);
        else if (p % 4 == 1) M = ilcm(M, p);
        else M = ilcm(M, 4 * p);
    }
    return M;
}

FieldScalar sqrt_dim(int64_t D, const FieldDescriptor &F) {
    if (D < 0) throw domain_error("dimension must be nonnegative");
    if (D == 0) return FieldScalar::zero(F);
    switch (F.kind) {
        case FieldKind::ComplexFloat: return FieldScalar::from_complex(std::sqrt(static_cast<double>(D)));
        case FieldKind::Rational:
        case FieldKind::Real: {
            int64_t r = static_cast<int64_t>(std::llround(std::sqrt(static_cast<double>(D))));
            for (int64_t c = std::max<int64_t>(0, r - 2); c <= r + 2; ++c)
                if (c * c == D) return FieldScalar::from_int(F, c);
            throw domain_error("no square root of " + std::to_string(D) + " in " + F.to_string());
        }
        case FieldKind::PrimeField: {
            for (int64_t x = 0; x < F.param; ++x)
                if ((x * x) % F.param == imod(D, F.param)) return FieldScalar::residue(F.param, x);
            throw domain_error("no square root of " + std::to_string(D) + " in " + F.to_string());
        }
        case FieldKind::Cyclotomic: {
            int64_t sq = 1, f = D;
            for (int64_t p = 2; p * p <= f; ++p)
                while (f % (p * p) == 0) {
                    f /= p * p;
                    sq *= p;
                }
            FieldScalar acc = FieldScalar::from_int(F, sq);
            int64_t rest = f;
            auto sqrt_prime = [&F](int64_t p) -> FieldScalar {
                if (p == 2) {
                    FieldScalar z8 = zeta(8, F);
                    return z8 + z8.pow(7);
                }
                // quadratic Gauss sum: g^2 = (-1)^((p-1)/2) * p
                FieldScalar g = FieldScalar::zero(F);
                FieldScalar zp = zeta(p, F);
                for (int64_t a = 1; a < p; ++a) {
                    FieldScalar t = zp.pow(a);
                    if (legendre_symbol(a, p) == 1) g = g + t;
                    else g = g - t;
                }
                if (p % 4 == 1) return g;
                return g * zeta(4, F).inverse(); // sqrt(p) = g / i when g^2 = -p
            };
            for (int64_t p = 2; p * p <= rest; ++p) {
                if (rest % p != 0) continue;
                rest /= p;
                acc = acc * sqrt_prime(p);
            }
            if (rest > 1) acc = acc * sqrt_prime(rest);
            if (!(acc * acc == FieldScalar::from_int(F, D)))
                throw domain_error("no square root of " + std::to_string(D) + " in " + F.to_string());
            return acc;
        }
    }
    throw error("unreachable");
}

// ---------------------------------------------------------------------------
// Embedding and parsing
// ---------------------------------------------------------------------------

FieldScalar embed(const FieldScalar &s, const FieldDescriptor &target) {
    if (s.descriptor() == target) return s;
    if (auto q = s.as_rational()) return FieldScalar::from_rational(target, *q);
    if (target.kind == FieldKind::ComplexFloat) return FieldScalar::from_complex(s.to_complex());
    if (s.descriptor().kind == FieldKind::Cyclotomic && target.kind == FieldKind::Cyclotomic) {
        int64_t m = s.descriptor().param, M = target.param;
        if (M % m != 0) throw domain_error("cannot embed cyclo(" + std::to_string(m) + ") into cyclo(" + std::to_string(M) + ")");
        FieldScalar zM = zeta(M, target);
        FieldScalar acc = FieldScalar::zero(target);
        const auto &coeffs = s.cyclotomic_coeffs();
        for (size_t k = 0; k < coeffs.size(); ++k) {
            if (coeffs[k] == 0) continue;
            acc = acc + FieldScalar::from_rational(target, coeffs[k]) * zM.pow(static_cast<int64_t>(k) * (M / m));
        }
        return acc;
    }
    throw domain_error("no embedding from " + s.descriptor().to_string() + " into " + target.to_string());
}

namespace {

struct ScalarParser {
    const std::string &text;
    const FieldDescriptor &F;
    size_t pos = 0;

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }
    bool eat(char c) {
        skip_ws();
        if (pos < text.size() && text[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }
    int64_t parse_int() {
        skip_ws();
        size_t start = pos;
        if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) ++pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos == start) throw parse_error("expected integer", pos);
        return std::stoll(text.substr(start, pos - start));
    }
    Rat parse_rat() {
        int64_t n = parse_int();
        if (eat('/')) {
            int64_t d = parse_int();
            if (d == 0) throw parse_error("zero denominator", pos);
            return Rat(n) / Rat(d);
        }
        return Rat(n);
    }

    FieldScalar parse_factor() {
        skip_ws();
        if (pos < text.size() && text[pos] == 'z') {
            ++pos;
            if (!eat('(')) throw parse_error("expected '(' after z", pos);
            int64_t n = parse_int();
            if (!eat(')')) throw parse_error("expected ')'", pos);
            int64_t e = 1;
            if (eat('^')) e = parse_int();
            return zeta(n, F).pow(e);
        }
        if (pos + 1 < text.size() && text[pos] == 'f' && std::isdigit(static_cast<unsigned char>(text[pos + 1]))) {
            ++pos;
            int64_t p = parse_int();
            if (!eat(':')) throw parse_error("expected ':' in prime-field literal", pos);
            int64_t r = parse_int();
            if (!(F.kind == FieldKind::PrimeField && F.param == p))
                throw parse_error("prime-field literal for " + std::to_string(p) + " in field " + F.to_string(), pos);
            return FieldScalar::residue(p, r);
        }
        if (pos < text.size() && text[pos] == 'c' && pos + 1 < text.size() && text[pos + 1] == ':') {
            pos += 2;
            size_t consumed = 0;
            std::string rest = text.substr(pos);
            double re = std::stod(rest, &consumed);
            pos += consumed;
            double im = 0.0;
            skip_ws();
            if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
                std::string imtext = text.substr(pos);
                im = std::stod(imtext, &consumed);
                pos += consumed;
                if (!eat('i')) throw parse_error("expected 'i'", pos);
            }
            if (F.kind != FieldKind::ComplexFloat) throw parse_error("complex literal in exact field", pos);
            return FieldScalar::from_complex({re, im});
        }
        return FieldScalar::from_rational(F, parse_rat());
    }

    FieldScalar parse_term() {
        FieldScalar acc = parse_factor();
        while (eat('*')) acc = acc * parse_factor();
        return acc;
    }

    FieldScalar parse_sum() {
        skip_ws();
        bool neg = false;
        if (eat('-')) neg = true;
        else eat('+');
        FieldScalar acc = parse_term();
        if (neg) acc = -acc;
        while (true) {
            skip_ws();
            if (pos >= text.size()) break;
            if (eat('+')) acc = acc + parse_term();
            else if (eat('-')) acc = acc - parse_term();
            else throw parse_error("unexpected character '" + std::string(1, text[pos]) + "'", pos);
        }
        return acc;
    }
};

} // namespace

FieldScalar parse_scalar(const std::string &text, const FieldDescriptor &F) {
    ScalarParser p{text, F};
    return p.parse_sum();
}

} // namespace frob
