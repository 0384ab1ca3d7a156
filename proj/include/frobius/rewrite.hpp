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

#ifndef FROBIUS_REWRITE_HPP
#define FROBIUS_REWRITE_HPP

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "frobius/diagram.hpp"

namespace frob {

struct GroupAlgebraModel;

/// A directed equation between diagrams of equal boundary arity.  Both sides
/// are stored scalar-explicit: any closed-diagram factor needed for exact
/// model soundness is part of the stored diagrams, and scalar_tag records
/// which convention the sides carry ("unit", "bone(gr)", "bone(rg)",
/// "dim-power").
struct Rule {
    std::string name;
    Diagram lhs, rhs;
    std::string scalar_tag = "unit";
};

/// Phase groups and classical subgroups a rule set is instantiated over.
/// An unset phase group means the circle group (rules are then emitted for a
/// small set of representative angles).
struct TheorySignature {
    std::optional<AbelianGroup> green_phases;
    std::optional<AbelianGroup> red_phases;
    std::optional<AbelianGroup> green_classical;
    std::optional<AbelianGroup> red_classical;
};

struct RuleSet {
    std::string name;
    TheorySignature signature;
    std::vector<Rule> rules;

    const Rule *find(const std::string &rule_name) const;
};

/// Named theories: M, C, F, FG, FG_plus_FH, IF, IFK, COLLAPSE(d).
/// Each theory includes all rules of the one below it in the tower.
RuleSet builtin_ruleset(const std::string &name, const TheorySignature &sig = {});

/// Fixpoint of: fuse adjacent same-color spiders (adding phases), remove
/// spider self-loops, drop phase-0 shape-(1,1) spiders.
Diagram normalize_spiders(const Diagram &d);

/// A boundary-respecting embedding of a rule's left side into a host diagram.
struct Match {
    std::map<NodeId, NodeId> node_map; // lhs interior node -> host node
    // For each lhs boundary (inputs then outputs): the host edge carrying that
    // leg and the endpoint of it that sits on a matched node.
    struct Leg {
        EdgeId host_edge;
        PortRef matched_end;
    };
    std::vector<Leg> legs;

    std::string signature_string() const;
};

std::vector<Match> find_matches(const Diagram &d, const Rule &rule);
Diagram apply_rule(const Diagram &d, const Rule &rule, const Match &site);

struct TraceStep {
    int64_t k;
    std::string rule;
    std::string site;
};

struct SimplifyResult {
    Diagram diagram;
    std::vector<TraceStep> trace;

    std::string trace_text() const;
};

/// Bounded strategy: repeatedly applies, in priority order, collapse rules,
/// spider fusion, copy/unit rules, bialgebra rules, then Hopf, stopping at a
/// fixpoint or after max_steps rule applications.
SimplifyResult simplify(const Diagram &d, const RuleSet &rs, int64_t max_steps);

/// Graph-dump serialization of a rule set: `rule <name> <scalar-tag>` headers,
/// each followed by the lhs and rhs graph blocks.
std::string serialize_ruleset(const RuleSet &rs);

/// The three pairwise laws whose hexagon is checked, as generator-level
/// rewrite outputs.  Tests may override an entry to model a corrupted law.
struct YangBaxterLaws {
    /// Rewrite target for mul∘(phase⊗id): default phase∘mul.
    std::function<Diagram(NodeType color, Phase alpha)> strength;
    /// Rewrite target for (phase⊗id)∘comul: default comul∘phase.
    std::function<Diagram(NodeType color, Phase alpha)> costrength;
    /// Rewrite target for mul∘comul (1→1): default identity wire.
    std::function<Diagram(NodeType color)> special;
    /// Rewrite target for comul∘mul (2→2): default (id⊗mul)∘(comul⊗id).
    std::function<Diagram(NodeType color)> frobenius;

    static YangBaxterLaws standard();
};

struct YangBaxterReport {
    struct Entry {
        std::string triple;
        bool ok;
    };
    std::vector<Entry> entries;
    bool all_ok = true;

    std::string to_string() const;
};

/// Evaluates both composite paths of the distributivity hexagon, for every
/// phase of the model's basis group and both colors where the laws are exact,
/// and reports per-triple equality of the two resulting matrices.
YangBaxterReport check_yang_baxter(const GroupAlgebraModel &m,
                                   const YangBaxterLaws &laws = YangBaxterLaws::standard());

} // namespace frob

#endif
