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

#ifndef FROBIUS_COMMON_HPP
#define FROBIUS_COMMON_HPP

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace frob {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

/// Base class for all errors raised by the engine.
struct error : std::runtime_error {
    explicit error(const std::string &what) : std::runtime_error(what) {}
};

/// Inputs that violate a precondition (mismatched groups, shapes, ...).
struct domain_error : error {
    explicit domain_error(const std::string &what) : error(what) {}
};

/// Syntax errors from the term / graph / literal parsers.
struct parse_error : error {
    size_t position;
    parse_error(const std::string &what, size_t pos) : error(what + " (at offset " + std::to_string(pos) + ")"), position(pos) {}
};

inline int64_t imod(int64_t a, int64_t m) {
    int64_t r = a % m;
    return r < 0 ? r + m : r;
}

inline int64_t ilcm(int64_t a, int64_t b) { return std::lcm(a, b); }

inline bool is_prime(int64_t p) {
    if (p < 2) return false;
    for (int64_t d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

inline int64_t euler_phi(int64_t n) {
    int64_t result = n;
    for (int64_t p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            while (n % p == 0) n /= p;
            result -= result / p;
        }
    }
    if (n > 1) result -= result / n;
    return result;
}

/// a^e mod m with 64-bit-safe intermediate products (m < 2^31 in practice).
inline int64_t pow_mod(int64_t a, int64_t e, int64_t m) {
    int64_t r = 1 % m;
    a = imod(a, m);
    while (e > 0) {
        if (e & 1) r = (r * a) % m;
        a = (a * a) % m;
        e >>= 1;
    }
    return r;
}

} // namespace frob

#endif
