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

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "frobius/diagram_io.hpp"
#include "frobius/model.hpp"

using namespace frob;

namespace {

struct Shared {
    std::string model_desc;
    std::string ruleset = "IF";
    int64_t max_steps = 1000;
    std::string format = "term";
    std::string mode = "exact";
    std::string in_graph;
    bool dot = false;
};

std::optional<GroupAlgebraModel> maybe_model(const Shared &sh) {
    if (sh.model_desc.empty()) return std::nullopt;
    return parse_model_descriptor(sh.model_desc);
}

TermIoOptions io_options(const std::optional<GroupAlgebraModel> &m) {
    TermIoOptions opts;
    if (m) {
        opts.green_group = m->basis_group;
        opts.red_group = m->basis_group;
    }
    return opts;
}

std::string read_all_stdin() {
    std::ostringstream os;
    os << std::cin.rdbuf();
    return os.str();
}

Diagram load_diagram(const Shared &sh, const std::string &term_arg, const TermIoOptions &opts) {
    if (!sh.in_graph.empty()) {
        std::ifstream f(sh.in_graph);
        if (!f) throw error("cannot open graph file '" + sh.in_graph + "'");
        std::ostringstream os;
        os << f.rdbuf();
        return parse_graph(os.str());
    }
    std::string text = term_arg.empty() ? read_all_stdin() : term_arg;
    return parse_term(text, opts);
}

void print_diagram(const Diagram &d, const Shared &sh) {
    if (sh.dot || sh.format == "dot") {
        std::cout << print_dot(d);
        return;
    }
    if (sh.format == "graph") {
        std::cout << print_graph(d);
        return;
    }
    try {
        std::cout << print_term(d) << "\n";
    } catch (const domain_error &) {
        // not layerable as a term; the graph dump is always available
        std::cout << print_graph(d);
    }
}

TheorySignature signature_for(const std::optional<GroupAlgebraModel> &m) {
    TheorySignature sig;
    if (m) {
        sig.green_phases = m->basis_group;
        sig.red_phases = m->basis_group;
        sig.green_classical = m->basis_group;
        sig.red_classical = m->basis_group;
    }
    return sig;
}

void add_shared(CLI::App *cmd, Shared &sh) {
    cmd->add_option("--model", sh.model_desc, "model descriptor, e.g. Z3@cyclo(12)/unitary");
    cmd->add_option("--ruleset", sh.ruleset, "theory name (M, C, F, FG, FG_plus_FH, IF, IFK, COLLAPSE(d))");
    cmd->add_option("--max-steps", sh.max_steps, "rewrite budget");
    cmd->add_option("--format", sh.format, "output format: term|graph|dot");
    cmd->add_option("--mode", sh.mode, "comparison mode: exact|scalar");
    cmd->add_option("--in-graph", sh.in_graph, "read the diagram from a graph dump file");
    cmd->add_flag("--dot", sh.dot, "emit a dot graph description");
}

} // namespace

int main(int argc, char **argv) {
    CLI::App app{"diagram calculus for interacting Frobenius structures over group algebras"};
    app.require_subcommand(1);
    Shared sh;

    std::string term1, term2;
    std::string group_text, field_text;
    int64_t int_n = 0;
    std::optional<int64_t> int_m;
    int64_t depth = 3;
    std::string g1_angle = "0", h1_angle;
    bool use_ruleset = false;

    auto *c_norm = app.add_subcommand("normalize", "rewrite a diagram to normal form");
    c_norm->add_option("term", term1, "term (or stdin)");
    c_norm->add_flag("--rules", use_ruleset, "use the full rule set, not just spider fusion");
    add_shared(c_norm, sh);

    auto *c_eval = app.add_subcommand("eval", "evaluate a diagram to a matrix");
    c_eval->add_option("term", term1, "term (or stdin)");
    add_shared(c_eval, sh);

    auto *c_equiv = app.add_subcommand("equiv", "compare two diagrams semantically");
    c_equiv->add_option("lhs", term1, "first term")->required();
    c_equiv->add_option("rhs", term2, "second term")->required();
    add_shared(c_equiv, sh);

    auto *c_rules = app.add_subcommand("check-rules", "certify a rule set against a model");
    add_shared(c_rules, sh);

    auto *c_chars = app.add_subcommand("characters", "list the characters of a group over a field");
    c_chars->add_option("--group", group_text, "abelian group, e.g. Z4 or Z2xZ2")->required();
    c_chars->add_option("--field", field_text, "field descriptor, e.g. reals, cyclo(8), F5")->required();

    auto *c_int = app.add_subcommand("intring", "internal integer matrices and their ring operations");
    c_int->add_option("-n", int_n, "integer")->required();
    c_int->add_option("-m", int_m, "second integer: also print convolution sum and product");
    add_shared(c_int, sh);

    auto *c_yb = app.add_subcommand("yang-baxter", "check the distributive-law hexagon on generators");
    add_shared(c_yb, sh);

    auto *c_wit = app.add_subcommand("witness-no-distlaw", "search for a reversed factorization");
    c_wit->add_option("--g1", g1_angle, "green phase angle (rational turns)");
    c_wit->add_option("--h1", h1_angle, "red phase angle (rational turns)")->required();
    c_wit->add_option("--depth", depth, "internal-integer search depth");
    add_shared(c_wit, sh);

    auto *c_set = app.add_subcommand("enough-setlike", "do the red set-like points span the carrier?");
    add_shared(c_set, sh);

    CLI11_PARSE(app, argc, argv);

    try {
        if (*c_norm) {
            auto m = maybe_model(sh);
            Diagram d = load_diagram(sh, term1, io_options(m));
            if (use_ruleset) {
                RuleSet rs = builtin_ruleset(sh.ruleset, signature_for(m));
                d = simplify(d, rs, sh.max_steps).diagram;
            } else {
                d = normalize_spiders(d);
            }
            print_diagram(d, sh);
            return 0;
        }
        if (*c_eval) {
            auto m = maybe_model(sh);
            if (!m) throw error("eval requires --model");
            Diagram d = load_diagram(sh, term1, io_options(m));
            std::cout << eval(d, *m).to_string();
            return 0;
        }
        if (*c_equiv) {
            auto m = maybe_model(sh);
            if (!m) throw error("equiv requires --model");
            TermIoOptions opts = io_options(m);
            Diagram d1 = parse_term(term1, opts), d2 = parse_term(term2, opts);
            if (d1.n_inputs() != d2.n_inputs() || d1.n_outputs() != d2.n_outputs())
                throw domain_error("arity mismatch between the two diagrams");
            Matrix a = eval(normalize_spiders(d1), *m), b = eval(normalize_spiders(d2), *m);
            if (a == b) {
                std::cout << "EQUAL exact\n";
                return 0;
            }
            if (sh.mode == "scalar") {
                if (auto c = b.scalar_multiple_of(a)) {
                    std::cout << "UNEQUAL scalar " << c->to_string() << "\n";
                    return 1;
                }
            }
            std::cout << "UNEQUAL\n";
            return 1;
        }
        if (*c_rules) {
            auto m = maybe_model(sh);
            if (!m) throw error("check-rules requires --model");
            RuleSet rs = builtin_ruleset(sh.ruleset, signature_for(m));
            SoundnessReport rep = check_rule_soundness(rs, *m);
            std::cout << rep.to_string();
            return rep.any_fail ? 1 : 0;
        }
        if (*c_chars) {
            AbelianGroup g = parse_group(group_text);
            FieldDescriptor F = parse_field_descriptor(field_text);
            for (const auto &chi : characters(g, F)) std::cout << chi.to_string() << "\n";
            return 0;
        }
        if (*c_int) {
            auto m = maybe_model(sh);
            if (!m) throw error("intring requires --model");
            std::cout << "int(" << int_n << ") =\n" << internal_integer_matrix(*m, int_n).to_string();
            if (int_m) {
                RingOps ops = ring_ops(*m, int_n, *int_m);
                std::cout << "sum =\n" << ops.sum.to_string();
                std::cout << "product =\n" << ops.product.to_string();
            }
            return 0;
        }
        if (*c_yb) {
            auto m = maybe_model(sh);
            if (!m) throw error("yang-baxter requires --model");
            YangBaxterReport rep = check_yang_baxter(*m, YangBaxterLaws::standard());
            std::cout << rep.to_string();
            return rep.all_ok ? 0 : 1;
        }
        if (*c_wit) {
            auto m = maybe_model(sh);
            if (!m) throw error("witness-no-distlaw requires --model");
            Matrix g1 = m->green_phase(parse_phase(g1_angle, m->basis_group));
            Matrix h1 = m->red_phase(parse_phase(h1_angle, m->basis_group));
            auto w = no_distributive_law_witness(*m, g1, h1, depth);
            if (w) {
                std::cout << "FOUND " << w->red_description << " . " << w->green_description << "\n";
                return 0;
            }
            std::cout << "NONE g1=" << g1_angle << " h1=" << h1_angle << " depth=" << depth << "\n";
            return 0;
        }
        if (*c_set) {
            auto m = maybe_model(sh);
            if (!m) throw error("enough-setlike requires --model");
            bool ok = enough_setlike(*m);
            std::cout << (ok ? "yes" : "no") << "\n";
            return ok ? 0 : 1;
        }
    } catch (const parse_error &e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const domain_error &e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const error &e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
