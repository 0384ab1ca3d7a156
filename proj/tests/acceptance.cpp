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

// End-to-end acceptance checks.  Each test case covers one numbered criterion
// and prints a single PASS/FAIL line for it.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <iostream>
#include <random>

#include "frobius/diagram_io.hpp"
#include "frobius/model.hpp"

using namespace frob;

namespace {

void report(int n, const std::string &what, bool ok) {
    std::cout << "criterion " << n << " (" << what << "): " << (ok ? "PASS" : "FAIL") << std::endl;
    CHECK_MESSAGE(ok, "criterion ", n, ": ", what);
}

GroupAlgebraModel unitary_model(int64_t D) {
    return build_model(parse_group("Z" + std::to_string(D)), FieldDescriptor::cyclotomic(4 * D),
                       Normalization::Unitary);
}

TheorySignature full_signature(const AbelianGroup &g) {
    TheorySignature sig;
    sig.green_phases = g;
    sig.red_phases = g;
    sig.green_classical = g;
    sig.red_classical = g;
    return sig;
}

} // namespace

TEST_CASE("criterion 1: rule soundness") {
    bool ok = true;
    for (int64_t D = 2; D <= 5 && ok; ++D) {
        GroupAlgebraModel m = unitary_model(D);
        RuleSet rs = builtin_ruleset("IF", full_signature(m.basis_group));
        SoundnessReport rep = check_rule_soundness(rs, m);
        if (!rep.all_exact || rep.any_fail) {
            ok = false;
            std::cout << rep.to_string();
        }
    }
    report(1, "all IF rules exact in complex Z_D unitary models, D=2..5", ok);
}

TEST_CASE("criterion 2: internal integer matrices of the Z3 model") {
    GroupAlgebraModel m = parse_model_descriptor("Z3@rationals/integral");
    FieldDescriptor F = m.field;
    auto mat = [&](std::vector<std::vector<int>> rows) {
        Matrix out(3, 3, F);
        for (int64_t r = 0; r < 3; ++r)
            for (int64_t c = 0; c < 3; ++c) out.at(r, c) = FieldScalar::from_int(F, rows[r][c]);
        return out;
    };
    // textbook reference matrices; our basis convention is the transpose
    // (columns index the incoming basis vector), so compare through it.
    Matrix ref0 = mat({{1, 0, 0}, {1, 0, 0}, {1, 0, 0}});
    Matrix ref1 = mat({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
    Matrix ref2 = mat({{1, 0, 0}, {0, 0, 1}, {0, 1, 0}});
    // independent brute-force oracle: |g> -> |n*g|
    auto oracle = [&](int64_t n) {
        Matrix out(3, 3, F);
        for (int64_t g = 0; g < 3; ++g) out.at((n * g) % 3, g) = FieldScalar::one(F);
        return out;
    };
    bool ok = true;
    for (int64_t n = 0; n < 3; ++n) ok = ok && internal_integer_matrix(m, n) == oracle(n);
    ok = ok && internal_integer_matrix(m, 0) == ref0.transpose();
    ok = ok && internal_integer_matrix(m, 1) == ref1;
    ok = ok && internal_integer_matrix(m, 2) == ref2;
    std::cout << "  (convention relative to the textbook matrices: transposed)\n";
    report(2, "internal integers 0,1,2 of the Z3 model match the reference", ok);
}

TEST_CASE("criterion 3: spider theorem on random connected diagrams") {
    std::mt19937 rng(2026);
    bool ok = true;
    // green spiders in the integral Z6 model; red spiders need the unitary
    // normalization for exact loop bookkeeping
    GroupAlgebraModel green_m = parse_model_descriptor("Z6@cyclo(12)/integral");
    GroupAlgebraModel red_m = unitary_model(3);
    int done = 0;
    for (int attempt = 0; attempt < 4000 && done < 200 && ok; ++attempt) {
        int trial = done;
        NodeType color = trial % 2 ? NodeType::Green : NodeType::Red;
        const GroupAlgebraModel &m = color == NodeType::Green ? green_m : red_m;
        int64_t denom = color == NodeType::Green ? 12 : 3;
        std::uniform_int_distribution<int> nspiders(1, 8), legs(0, 2), ph(0, static_cast<int>(denom) - 1);
        // grow a connected diagram: repeatedly feed some outputs of the
        // current diagram into a fresh spider
        Diagram d = d_spider(color, legs(rng), legs(rng) + 1, Rat(ph(rng), denom));
        int count = nspiders(rng);
        for (int k = 1; k < count; ++k) {
            int grab = 1 + (legs(rng) % d.n_outputs() == 0 ? 0 : 1);
            grab = std::min<int>(grab, static_cast<int>(d.n_outputs()));
            Diagram sp = d_spider(color, grab, legs(rng) + 1, Rat(ph(rng), denom));
            Diagram stage = d_tensor(sp, d_identity(static_cast<int>(d.n_outputs()) - grab));
            d = d_compose(d, stage);
        }
        // keep the boundary small so exact evaluation stays cheap at D = 6
        if (d.n_inputs() + d.n_outputs() > 5) continue;
        Diagram n = normalize_spiders(d);
        int64_t spiders = 0;
        for (const auto &[id, nd] : n.nodes)
            if (nd.is_spider()) spiders++;
        // a connected diagram fuses to one spider; the trivial phase-0 (1,1)
        // spider is further smoothed into the bare identity wire
        bool shape = spiders == 1 || (spiders == 0 && diagram_iso(n, d_identity(1)));
        ok = shape && eval(d, m) == eval(n, m);
        done++;
    }
    ok = ok && done == 200;
    report(3, "200 random connected one-color diagrams fuse to a single spider, semantics preserved", ok);
}

TEST_CASE("criterion 4: antipode is the inversion permutation") {
    bool ok = true;
    for (int64_t D = 2; D <= 6 && ok; ++D) {
        GroupAlgebraModel m = build_model(parse_group("Z" + std::to_string(D)), FieldDescriptor::rationals(),
                                          Normalization::Integral);
        Matrix s = eval(d_antipode(), m);
        Matrix expect(D, D, m.field);
        for (int64_t g = 0; g < D; ++g) expect.at((D - g) % D, g) = FieldScalar::one(m.field);
        ok = s == expect && s == s.dagger() && is_unitary_matrix(m, s);
    }
    report(4, "antipode evaluates to |g> -> |-g> and is self-adjoint unitary, D=2..6", ok);
}

TEST_CASE("criterion 5: transposition and Hopf equations in all normalizations") {
    bool ok = true;
    for (const char *g : {"Z2", "Z3"}) {
        for (Normalization norm : {Normalization::Integral, Normalization::Maschke, Normalization::Unitary}) {
            GroupAlgebraModel m = build_model(parse_group(g), FieldDescriptor::cyclotomic(24), norm);
            RuleSet rs = builtin_ruleset("IF", full_signature(m.basis_group));
            SoundnessReport rep = check_rule_soundness(rs, m);
            for (const auto &e : rep.entries) {
                if (e.fail) ok = false;
                if (e.exact) continue;
                // non-exact entries must be rules tagged as dimension powers
                const Rule *r = rs.find(e.rule);
                if (!r || r->scalar_tag != "dim-power") ok = false;
                if (e.rule.rfind("hopf", 0) == 0 || e.rule.rfind("plus-transpose", 0) == 0)
                    if (norm == Normalization::Unitary) ok = false;
            }
            // the headline equations themselves
            for (const char *rn : {"hopf-gr", "hopf-rg"}) {
                const Rule *r = rs.find(rn);
                if (!r || !(eval(r->lhs, m) == eval(r->rhs, m))) ok = false;
            }
        }
    }
    report(5, "transpose-of-unit equations and Hopf law certified in every normalization", ok);
}

TEST_CASE("criterion 6: the dangling-bone scalar counterexample") {
    GroupAlgebraModel m = unitary_model(2);
    Diagram bone = d_compose(d_spider(NodeType::Green, 0, 1), d_spider(NodeType::Red, 1, 0));
    Matrix v = eval(bone, m);
    FieldScalar root2 = sqrt_dim(2, m.field);
    bool ok = v.rows() == 1 && v.cols() == 1 && v.at(0, 0) == root2 && !v.at(0, 0).is_one();
    // the up-to-scalar comparison against the empty diagram reports it exactly
    auto c = eval(d_empty(), m).scalar_multiple_of(v);
    ok = ok && c && *c == root2;
    report(6, "bone scalar in the complex Z2 unitary model is sqrt(2), reported exactly", ok);
}

TEST_CASE("criterion 7: character counts and set-like spanning") {
    AbelianGroup z4 = parse_group("Z4");
    bool ok = characters(z4, FieldDescriptor::reals()).size() == 2 &&
              characters(z4, FieldDescriptor::cyclotomic(4)).size() == 4 &&
              characters(z4, FieldDescriptor::prime_field(5)).size() == 4 &&
              characters(z4, FieldDescriptor::prime_field(7)).size() == 2;
    for (const char *g : {"Z2", "Z3", "Z4", "Z2xZ2"})
        for (const char *f : {"rationals", "F5", "F7"}) {
            AbelianGroup grp = parse_group(g);
            FieldDescriptor F = parse_field_descriptor(f);
            if (F.characteristic() != 0 && grp.order() % F.characteristic() == 0) continue;
            GroupAlgebraModel m = build_model(grp, F, Normalization::Integral);
            if (enough_setlike(m) != has_enough_characters(grp, F)) ok = false;
        }
    report(7, "character counts for Z4 across fields; set-like spanning matches character counting", ok);
}

TEST_CASE("criterion 8: internal integers collapse modulo the exponent") {
    bool ok = true;
    for (const char *g : {"Z2", "Z3", "Z4", "Z5", "Z6", "Z2xZ4"}) {
        GroupAlgebraModel m = build_model(parse_group(g), FieldDescriptor::rationals(), Normalization::Integral);
        int64_t d = m.basis_group.exponent();
        for (int64_t n = -2 * d; n <= 2 * d; ++n)
            if (!(internal_integer_matrix(m, n) == internal_integer_matrix(m, imod(n, d)))) ok = false;
        if (is_prime(d))
            for (int64_t n = 1; n < d; ++n)
                if (!is_unitary_matrix(m, internal_integer_matrix(m, n))) ok = false;
    }
    report(8, "int(n) = int(n mod exponent); nonzero integers unitary at prime exponent", ok);
}

TEST_CASE("criterion 9: coprimality trichotomy") {
    bool ok = true;
    for (int64_t D = 2; D <= 6; ++D) {
        GroupAlgebraModel m = build_model(parse_group("Z" + std::to_string(D)), FieldDescriptor::rationals(),
                                          Normalization::Integral);
        for (int64_t n = 0; n <= 2 * D; ++n)
            if (!coprimality_check(m, n).consistent()) ok = false;
    }
    GroupAlgebraModel z4 = parse_model_descriptor("Z4@rationals/integral");
    CoprimalityReport r2 = coprimality_check(z4, 2), r3 = coprimality_check(z4, 3);
    ok = ok && !r2.coprime && !r2.red_comonoid_commutes && !r2.green_monoid_commutes;
    ok = ok && r3.coprime && r3.red_comonoid_commutes && r3.green_monoid_commutes;
    report(9, "coprimality booleans agree for D=2..6; Z4 cases n=2 (all false) and n=3 (all true)", ok);
}

TEST_CASE("criterion 10: distributive-law hexagon") {
    bool ok = check_yang_baxter(unitary_model(2)).all_ok && check_yang_baxter(unitary_model(3)).all_ok;
    YangBaxterLaws bad = YangBaxterLaws::standard();
    bad.frobenius = [](NodeType) { return d_compose(d_swap(), d_identity(2)); };
    ok = ok && !check_yang_baxter(unitary_model(2), bad).all_ok;
    report(10, "hexagon holds for complex Z2 and Z3; corrupted law detected", ok);
}

TEST_CASE("criterion 11: no reversed factorization in the Z3 model") {
    GroupAlgebraModel m = unitary_model(3);
    Matrix g1 = m.green_phase(Rat(1, 3));
    Matrix h1 = m.red_phase(Rat(1, 3));
    auto w = no_distributive_law_witness(m, g1, h1, 3);
    // sanity: a trivially factorizable pair is found by the same search
    auto trivial = no_distributive_law_witness(m, Matrix::identity(3, m.field), h1, 3);
    bool ok = !w && trivial.has_value();
    std::cout << "  (no reversed factorization for g1 = green phase 1/3, h1 = red phase 1/3, depth 3)\n";
    report(11, "exhaustive search finds no red-after-green factorization for the printed pair", ok);
}

TEST_CASE("criterion 12: path counting agrees with evaluation") {
    std::mt19937 rng(12);
    GroupAlgebraModel m = parse_model_descriptor("Z3@rationals/integral");
    int64_t D = 3;
    bool ok = true;
    for (int trial = 0; trial < 100 && ok; ++trial) {
        // random layered diagram from copy / add / antipode / wires
        std::uniform_int_distribution<int> wd(1, 3), nl(1, 4), pick(0, 5);
        int width = wd(rng);
        Diagram d = d_identity(width);
        int layers = nl(rng);
        for (int l = 0; l < layers; ++l) {
            Diagram layer = d_empty();
            int w = static_cast<int>(d.n_outputs());
            int used = 0;
            while (used < w) {
                int choice = pick(rng);
                if (choice == 0 && w - used >= 2 && layer.n_outputs() + 2 <= 4) {
                    layer = d_tensor(layer, d_spider(NodeType::Red, 2, 1));
                    used += 2;
                } else if (choice == 1 && layer.n_outputs() + 2 <= 3) {
                    layer = d_tensor(layer, d_spider(NodeType::Green, 1, 2));
                    used += 1;
                } else if (choice == 2) {
                    layer = d_tensor(layer, d_antipode());
                    used += 1;
                } else if (choice == 3 && w - used >= 2) {
                    layer = d_tensor(layer, d_swap());
                    used += 2;
                } else {
                    layer = d_tensor(layer, d_identity(1));
                    used += 1;
                }
            }
            if (layer.n_outputs() > 3) continue;
            d = d_compose(d, layer);
        }
        if (d.n_outputs() > 3) continue;
        Matrix A = ha_to_matrix(d, D);
        // interpret the integer matrix as the group map it names
        int64_t ins = d.n_inputs(), outs = d.n_outputs();
        int64_t C = 1, R = 1;
        for (int64_t i = 0; i < ins; ++i) C *= D;
        for (int64_t i = 0; i < outs; ++i) R *= D;
        Matrix expect(R, C, m.field);
        for (int64_t col = 0; col < C; ++col) {
            std::vector<int64_t> in_vals(ins);
            int64_t rem = col;
            for (int64_t i = ins; i-- > 0;) {
                in_vals[i] = rem % D;
                rem /= D;
            }
            int64_t row = 0;
            for (int64_t o = 0; o < outs; ++o) {
                int64_t v = 0;
                for (int64_t i = 0; i < ins; ++i)
                    v += static_cast<int64_t>(numerator(*A.at(o, i).as_rational())) * in_vals[i];
                row = row * D + imod(v, D);
            }
            expect.at(row, col) = FieldScalar::one(m.field);
        }
        ok = eval(d, m) == expect;
    }
    report(12, "100 random additive-fragment diagrams: path counting mod 3 matches evaluation", ok);
}

TEST_CASE("criterion 13: classical action laws") {
    bool ok = true;
    for (const char *desc : {"Z3@cyclo(12)/unitary", "Z4@cyclo(16)/unitary"}) {
        GroupAlgebraModel m = parse_model_descriptor(desc);
        for (const auto &e : all_elements(m.basis_group)) {
            Matrix alpha = m.green_phase(angle_of(m.basis_group, e));
            if (!(classical_action(m, group_zero(m.basis_group), alpha) == alpha)) ok = false;
            for (const auto &k : all_elements(m.basis_group)) {
                Matrix acted = classical_action(m, k, alpha);
                if (!is_phase(m, NodeType::Green, acted)) ok = false;
                for (const auto &k2 : all_elements(m.basis_group)) {
                    Matrix twice = classical_action(m, k, classical_action(m, k2, alpha));
                    if (!(twice == classical_action(m, group_add(m.basis_group, k, k2), alpha))) ok = false;
                }
            }
        }
    }
    report(13, "classical action: identity trivial, composition additive, phases stay phases (Z3, Z4)", ok);
}
