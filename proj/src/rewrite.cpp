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

#include "frobius/rewrite.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "frobius/diagram_io.hpp"
#include "frobius/model.hpp"

namespace frob {

namespace {

constexpr NodeType kG = NodeType::Green;
constexpr NodeType kR = NodeType::Red;

Diagram sp(NodeType c, int m, int n, Phase p = Phase(0)) { return d_spider(c, m, n, p); }
Diagram cc(const Diagram &a, const Diagram &b) { return d_compose(a, b); }
Diagram tt(const Diagram &a, const Diagram &b) { return d_tensor(a, b); }
Diagram idw(int k = 1) { return d_identity(k); }

// closed scalar diagrams: counit of one color after unit of the other
Diagram bone_gr() { return cc(sp(kR, 0, 1), sp(kG, 1, 0)); } // green-counit after red-unit
Diagram bone_rg() { return cc(sp(kG, 0, 1), sp(kR, 1, 0)); } // red-counit after green-unit

NodeType other(NodeType c) { return c == kG ? kR : kG; }
std::string cname(NodeType c) { return c == kG ? "g" : "r"; }

void add_rule(RuleSet &rs, std::string name, Diagram lhs, Diagram rhs, std::string tag = "unit") {
    if (lhs.n_inputs() != rhs.n_inputs() || lhs.n_outputs() != rhs.n_outputs())
        throw domain_error("rule " + name + " has mismatched boundary arities");
    rs.rules.push_back(Rule{std::move(name), std::move(lhs), std::move(rhs), std::move(tag)});
}

void add_monoid_rules(RuleSet &rs, NodeType c) {
    std::string p = cname(c);
    add_rule(rs, p + "-assoc", cc(tt(sp(c, 2, 1), idw()), sp(c, 2, 1)), cc(tt(idw(), sp(c, 2, 1)), sp(c, 2, 1)));
    add_rule(rs, p + "-unit", cc(tt(sp(c, 0, 1), idw()), sp(c, 2, 1)), idw());
    add_rule(rs, p + "-comm", cc(d_swap(), sp(c, 2, 1)), sp(c, 2, 1));
}

void add_comonoid_rules(RuleSet &rs, NodeType c) {
    std::string p = cname(c);
    add_rule(rs, p + "-coassoc", cc(sp(c, 1, 2), tt(sp(c, 1, 2), idw())), cc(sp(c, 1, 2), tt(idw(), sp(c, 1, 2))));
    add_rule(rs, p + "-counit", cc(sp(c, 1, 2), tt(sp(c, 1, 0), idw())), idw());
    add_rule(rs, p + "-cocomm", cc(sp(c, 1, 2), d_swap()), sp(c, 1, 2));
}

void add_frobenius_rules(RuleSet &rs, NodeType c) {
    std::string p = cname(c);
    add_monoid_rules(rs, c);
    add_comonoid_rules(rs, c);
    add_rule(rs, p + "-frobenius", cc(tt(sp(c, 1, 2), idw()), tt(idw(), sp(c, 2, 1))),
             cc(tt(idw(), sp(c, 1, 2)), tt(sp(c, 2, 1), idw())));
    // red specialness is exact only outside the Integral normalization
    add_rule(rs, p + "-special", cc(sp(c, 1, 2), sp(c, 2, 1)), idw(),
             c == kR ? "dim-power" : "unit");
}

std::vector<Phase> phase_angles(const std::optional<AbelianGroup> &group) {
    std::vector<Phase> out;
    if (group) {
        for (const auto &e : all_elements(*group)) {
            Phase a = angle_of(*group, e);
            if (a != 0) out.push_back(a);
        }
    } else {
        // circle group: representative angles
        out.push_back(Rat(1, 2));
        out.push_back(Rat(1, 3));
    }
    return out;
}

void add_phase_rules(RuleSet &rs, NodeType c, const std::optional<AbelianGroup> &group) {
    std::string p = cname(c);
    for (const Phase &a : phase_angles(group)) {
        std::string suffix = "-" + phase_to_string(a);
        add_rule(rs, p + "-phase-mul" + suffix, cc(tt(sp(c, 1, 1, a), idw()), sp(c, 2, 1)),
                 cc(sp(c, 2, 1), sp(c, 1, 1, a)));
        add_rule(rs, p + "-phase-comul" + suffix, cc(sp(c, 1, 2), tt(sp(c, 1, 1, a), idw())),
                 cc(sp(c, 1, 1, a), sp(c, 1, 2)));
    }
}

// bialgebra block for comonoid color c, monoid color o = other(c)
void add_bialgebra_rules(RuleSet &rs, NodeType c) {
    NodeType o = other(c);
    std::string tag = c == kG ? "bone(gr)" : "bone(rg)";
    std::string nm = c == kG ? "-gr" : "-rg";
    Diagram bone = c == kG ? bone_gr() : bone_rg();

    // comul after mul: copy both, multiply pairwise, times one bone
    Diagram main_rhs = cc(cc(tt(sp(c, 1, 2), sp(c, 1, 2)), tt(tt(idw(), d_swap()), idw())),
                          tt(sp(o, 2, 1), sp(o, 2, 1)));
    add_rule(rs, std::string("bialg-main") + nm, cc(sp(o, 2, 1), sp(c, 1, 2)), tt(main_rhs, bone), tag);
    // comul after unit: the unit is set-like
    add_rule(rs, std::string("bialg-copy") + nm, tt(cc(sp(o, 0, 1), sp(c, 1, 2)), bone),
             tt(sp(o, 0, 1), sp(o, 0, 1)), tag);
    // counit after mul
    add_rule(rs, std::string("bialg-counit-mul") + nm, tt(cc(sp(o, 2, 1), sp(c, 1, 0)), bone),
             tt(sp(c, 1, 0), sp(c, 1, 0)), tag);
}

void add_hopf_rule(RuleSet &rs, NodeType c) {
    NodeType o = other(c);
    std::string nm = c == kG ? "-gr" : "-rg";
    Diagram bone = c == kG ? bone_gr() : bone_rg();
    Diagram lhs = tt(tt(cc(cc(sp(c, 1, 2), tt(d_antipode(), idw())), sp(o, 2, 1)), bone), bone);
    Diagram rhs = cc(sp(c, 1, 0), sp(o, 0, 1));
    add_rule(rs, std::string("hopf") + nm, lhs, rhs, c == kG ? "bone(gr)" : "bone(rg)");
}

void add_plus_rules(RuleSet &rs) {
    // green-transpose of the red counit is the red unit
    Diagram cup_g = sp(kG, 0, 2);
    add_rule(rs, "plus-transpose-counit", cc(cup_g, tt(sp(kR, 1, 0), idw())), sp(kR, 0, 1), "dim-power");
    // red-transpose of the green unit is the green counit
    Diagram cap_r = sp(kR, 2, 0);
    add_rule(rs, "plus-transpose-unit", cc(tt(idw(), sp(kG, 0, 1)), cap_r), sp(kG, 1, 0), "dim-power");
}

void add_antipode_rules(RuleSet &rs) {
    // definition from the two Frobenius structures' cups and caps
    Diagram def = cc(cc(idw(), tt(idw(), sp(kR, 0, 2))), tt(sp(kG, 2, 0), idw()));
    add_rule(rs, "antipode-def", d_antipode(), def, "dim-power");
    add_rule(rs, "s-invol", cc(d_antipode(), d_antipode()), idw());
    for (NodeType c : {kG, kR}) {
        std::string p = cname(c);
        // push s through multiplications and copies toward the boundary
        add_rule(rs, "s-mul-" + p, cc(sp(c, 2, 1), d_antipode()),
                 cc(tt(d_antipode(), d_antipode()), sp(c, 2, 1)));
        add_rule(rs, "s-comul-" + p, cc(d_antipode(), sp(c, 1, 2)),
                 cc(sp(c, 1, 2), tt(d_antipode(), d_antipode())));
        add_rule(rs, "s-unit-" + p, cc(sp(c, 0, 1), d_antipode()), sp(c, 0, 1));
        add_rule(rs, "s-counit-" + p, cc(d_antipode(), sp(c, 1, 0)), sp(c, 1, 0));
    }
}

void add_ifk_rules(RuleSet &rs) {
    const auto &sig = rs.signature;
    if (!sig.green_classical || !sig.red_classical)
        throw domain_error("IFK rule set needs classical subgroups in the signature");
    // red classical subgroup: shifted red units are green-set-like
    for (const auto &e : all_elements(*sig.red_classical)) {
        Phase h = angle_of(*sig.red_classical, e);
        std::string suffix = "-r-" + phase_to_string(h);
        Diagram point = cc(sp(kR, 0, 1), sp(kR, 1, 1, h));
        add_rule(rs, "ifk-setlike" + suffix, tt(cc(point, sp(kG, 1, 2)), bone_gr()), tt(point, point),
                 "bone(gr)");
        add_rule(rs, "ifk-counit" + suffix, cc(point, sp(kG, 1, 0)), bone_gr(), "bone(gr)");
    }
    for (const auto &e : all_elements(*sig.green_classical)) {
        Phase h = angle_of(*sig.green_classical, e);
        std::string suffix = "-g-" + phase_to_string(h);
        Diagram point = cc(sp(kG, 0, 1), sp(kG, 1, 1, h));
        add_rule(rs, "ifk-setlike" + suffix, tt(cc(point, sp(kR, 1, 2)), bone_rg()), tt(point, point),
                 "bone(rg)");
        add_rule(rs, "ifk-counit" + suffix, cc(point, sp(kR, 1, 0)), bone_rg(), "bone(rg)");
    }
}

void add_collapse_rules(RuleSet &rs, int64_t d) {
    if (d < 1) throw domain_error("collapse modulus must be >= 1");
    for (int64_t n = d; n <= 2 * d; ++n)
        add_rule(rs, "collapse-" + std::to_string(n), internal_integer_diagram(n),
                 internal_integer_diagram(n % d), "dim-power");
}

} // namespace

const Rule *RuleSet::find(const std::string &rule_name) const {
    for (const auto &r : rules)
        if (r.name == rule_name) return &r;
    return nullptr;
}

RuleSet builtin_ruleset(const std::string &name, const TheorySignature &sig) {
    RuleSet rs;
    rs.name = name;
    rs.signature = sig;
    if (name == "M") {
        add_monoid_rules(rs, kR);
        return rs;
    }
    if (name == "C") {
        add_comonoid_rules(rs, kG);
        return rs;
    }
    if (name == "F") {
        add_frobenius_rules(rs, kG);
        return rs;
    }
    if (name == "FG") {
        add_frobenius_rules(rs, kG);
        add_phase_rules(rs, kG, sig.green_phases);
        return rs;
    }
    if (name == "FG_plus_FH" || name == "IF" || name == "IFK" || name.rfind("COLLAPSE", 0) == 0) {
        add_frobenius_rules(rs, kG);
        add_frobenius_rules(rs, kR);
        add_phase_rules(rs, kG, sig.green_phases);
        add_phase_rules(rs, kR, sig.red_phases);
        if (name == "FG_plus_FH") return rs;
        add_bialgebra_rules(rs, kG);
        add_bialgebra_rules(rs, kR);
        add_plus_rules(rs);
        add_hopf_rule(rs, kG);
        add_hopf_rule(rs, kR);
        add_antipode_rules(rs);
        if (name == "IF") return rs;
        add_ifk_rules(rs);
        if (name == "IFK") return rs;
        if (name.rfind("COLLAPSE(", 0) == 0 && name.back() == ')') {
            add_collapse_rules(rs, std::stoll(name.substr(9, name.size() - 10)));
            return rs;
        }
    }
    throw domain_error("unknown rule set '" + name + "'");
}

// --- Spider normalization --------------------------------------------------

namespace {

// Fuses spider `b` into spider `a` along edge `via`, removing b.
void fuse_pair(Diagram &d, NodeId a_id, NodeId b_id, EdgeId via) {
    Node a = d.node(a_id), b = d.node(b_id);
    // Collect legs of both spiders except the fusing edge; inputs then outputs.
    struct Leg {
        EdgeId edge;
        PortRef far;   // the endpoint not on a/b
        bool input;
    };
    std::vector<Leg> legs;
    auto collect = [&](NodeId id, const Node &nd) {
        for (const auto &[eid, e] : d.edges) {
            if (eid == via) continue;
            for (const PortRef *p : {&e.a, &e.b}) {
                if (p->node != id) continue;
                PortRef far = (p == &e.a) ? e.b : e.a;
                legs.push_back({eid, far, nd.port_is_input(p->port)});
            }
        }
    };
    collect(a_id, a);
    collect(b_id, b);
    int m = 0, n = 0;
    for (const auto &l : legs) (l.input ? m : n)++;
    NodeId fused = d.add_node(a.type, m, n, canonical_phase(a.phase + b.phase));
    // reattach; legs whose far end was on a/b become self-loops on the fused node
    int in_next = 0, out_next = m;
    std::map<EdgeId, std::vector<PortRef>> new_ends;
    for (const auto &l : legs) {
        int port = l.input ? in_next++ : out_next++;
        new_ends[l.edge].push_back({fused, port});
    }
    for (auto &[eid, ends] : new_ends) {
        Edge &e = d.edges.at(eid);
        if (ends.size() == 2) {
            e.a = ends[0];
            e.b = ends[1];
        } else {
            PortRef far = (e.a.node == a_id || e.a.node == b_id) ? e.b : e.a;
            e.a = ends[0];
            e.b = far;
        }
    }
    d.edges.erase(via);
    d.nodes.erase(a_id);
    d.nodes.erase(b_id);
}

// Removes one self-loop edge on a spider, shrinking its arity.
void drop_self_loop(Diagram &d, NodeId id, EdgeId loop) {
    Node nd = d.node(id);
    const Edge &e = d.edges.at(loop);
    int p1 = e.a.port, p2 = e.b.port;
    int m = nd.m - (nd.port_is_input(p1) ? 1 : 0) - (nd.port_is_input(p2) ? 1 : 0);
    int n = (nd.m + nd.n - 2) - m;
    NodeId fresh = d.add_node(nd.type, m, n, nd.phase);
    int in_next = 0, out_next = m;
    for (const auto &[eid, edge] : d.edges) {
        if (eid == loop) continue;
        Edge &w = d.edges.at(eid);
        for (PortRef *p : {&w.a, &w.b}) {
            if (p->node != id) continue;
            bool input = nd.port_is_input(p->port);
            *p = {fresh, input ? in_next++ : out_next++};
        }
    }
    d.edges.erase(loop);
    d.nodes.erase(id);
}

// One normalization step; returns false at the fixpoint.
bool normalize_step(Diagram &d) {
    // self-loops first (fusion can create them)
    for (const auto &[eid, e] : d.edges) {
        if (e.a.node != e.b.node) continue;
        const Node &nd = d.node(e.a.node);
        if (!nd.is_spider()) continue;
        drop_self_loop(d, e.a.node, eid);
        return true;
    }
    for (const auto &[eid, e] : d.edges) {
        if (e.a.node == e.b.node) continue;
        const Node &na = d.node(e.a.node);
        const Node &nb = d.node(e.b.node);
        if (na.is_spider() && nb.is_spider() && na.type == nb.type) {
            fuse_pair(d, e.a.node, e.b.node, eid);
            return true;
        }
    }
    for (const auto &[nid, nd] : d.nodes) {
        if (!nd.is_spider() || nd.m != 1 || nd.n != 1 || nd.phase != 0) continue;
        auto inc = d.edges_at_node(nid);
        // smooth the trivial spider out like a spliced boundary
        if (inc.size() == 2 && inc[0] == inc[1]) {
            d.edges.erase(inc[0]);
            d.nodes.erase(nid);
            d.bare_loops++;
            return true;
        }
        const Edge e1 = d.edges.at(inc[0]);
        const Edge e2 = d.edges.at(inc[1]);
        PortRef f1 = e1.a.node == nid ? e1.b : e1.a;
        PortRef f2 = e2.a.node == nid ? e2.b : e2.a;
        d.edges.erase(inc[0]);
        d.edges.erase(inc[1]);
        d.nodes.erase(nid);
        d.add_edge(f1, f2);
        return true;
    }
    return false;
}

} // namespace

Diagram normalize_spiders(const Diagram &d) {
    Diagram out = d;
    while (normalize_step(out)) {
    }
    return out;
}

// --- Matching --------------------------------------------------------------

std::string Match::signature_string() const {
    std::ostringstream os;
    bool first = true;
    for (const auto &[l, h] : node_map) {
        if (!first) os << ",";
        first = false;
        os << l << "->" << h;
    }
    os << ";legs";
    for (const auto &leg : legs) os << " " << leg.host_edge << "@" << leg.matched_end.node << ":" << leg.matched_end.port;
    return os.str();
}

namespace {

int side_class(const Node &nd, int port) {
    if (nd.is_spider()) return port < nd.m ? 0 : 1;
    return port;
}

struct PairKey {
    NodeId u, v;
    int cu, cv;
    auto operator<=>(const PairKey &) const = default;
};

PairKey make_key(NodeId u, int cu, NodeId v, int cv) {
    if (std::tie(u, cu) <= std::tie(v, cv)) return {u, v, cu, cv};
    return {v, u, cv, cu};
}

struct Matcher {
    const Diagram &host;
    const Rule &rule;
    std::vector<NodeId> lhs_interior;
    std::vector<NodeId> host_interior;
    std::map<NodeId, NodeId> fwd;
    std::set<NodeId> used;
    std::vector<Match> out;
    std::set<std::string> dedup;

    bool labels_match(const Node &u, const Node &v) const {
        return u.type == v.type && u.m == v.m && u.n == v.n && u.phase == v.phase;
    }

    // edge multiset between matched node/class pairs
    std::map<PairKey, int> lhs_pair_counts() const {
        std::map<PairKey, int> counts;
        for (const auto &[eid, e] : rule.lhs.edges) {
            const Node &na = rule.lhs.node(e.a.node);
            const Node &nb = rule.lhs.node(e.b.node);
            if (na.type == NodeType::Boundary || nb.type == NodeType::Boundary) continue;
            counts[make_key(e.a.node, side_class(na, e.a.port), e.b.node, side_class(nb, e.b.port))]++;
        }
        return counts;
    }

    bool try_complete() {
        // interior-interior edge counts: host must have at least as many
        // parallel edges as the lhs between every matched pair
        auto lhs_counts = lhs_pair_counts();
        std::map<PairKey, int> host_counts;
        std::set<NodeId> image;
        for (const auto &[l, h] : fwd) image.insert(h);
        for (const auto &[eid, e] : host.edges) {
            if (!image.count(e.a.node) || !image.count(e.b.node)) continue;
            const Node &na = host.node(e.a.node);
            const Node &nb = host.node(e.b.node);
            host_counts[make_key(e.a.node, side_class(na, e.a.port), e.b.node, side_class(nb, e.b.port))]++;
        }
        std::map<PairKey, int> needed; // mapped lhs counts
        for (const auto &[k, c] : lhs_counts) {
            PairKey hk = make_key(fwd.at(k.u), k.cu, fwd.at(k.v), k.cv);
            needed[hk] += c;
        }
        for (const auto &[k, c] : needed)
            if (host_counts[k] < c) return false;

        // assign host edges: per host pair-key, lowest edge ids serve the
        // interior lhs edges; the remainder are available as context legs
        std::map<PairKey, std::vector<EdgeId>> host_by_key;
        for (const auto &[eid, e] : host.edges) {
            const Node &na = host.node(e.a.node);
            const Node &nb = host.node(e.b.node);
            bool a_in = image.count(e.a.node), b_in = image.count(e.b.node);
            if (a_in && b_in)
                host_by_key[make_key(e.a.node, side_class(na, e.a.port), e.b.node, side_class(nb, e.b.port))]
                    .push_back(eid);
        }
        std::map<std::pair<NodeId, int>, std::vector<std::pair<EdgeId, PortRef>>> context_legs;
        auto push_context = [&](EdgeId eid, const PortRef &end) {
            const Node &nd = host.node(end.node);
            context_legs[{end.node, side_class(nd, end.port)}].push_back({eid, end});
        };
        for (auto &[k, eids] : host_by_key) {
            std::sort(eids.begin(), eids.end());
            int used_interior = needed.count(k) ? needed.at(k) : 0;
            for (size_t i = used_interior; i < eids.size(); ++i) {
                const Edge &e = host.edges.at(eids[i]);
                push_context(eids[i], e.a);
                push_context(eids[i], e.b);
            }
        }
        for (const auto &[eid, e] : host.edges) {
            bool a_in = image.count(e.a.node), b_in = image.count(e.b.node);
            if (a_in && !b_in) push_context(eid, e.a);
            if (b_in && !a_in) push_context(eid, e.b);
        }
        for (auto &[k, v] : context_legs)
            std::sort(v.begin(), v.end());

        // lhs boundary legs, inputs then outputs, claim context legs in order
        Match match;
        match.node_map = fwd;
        std::map<std::pair<NodeId, int>, size_t> cursor;
        std::vector<NodeId> bnds = rule.lhs.inputs;
        bnds.insert(bnds.end(), rule.lhs.outputs.begin(), rule.lhs.outputs.end());
        for (NodeId b : bnds) {
            const Edge &e = rule.lhs.edges.at(rule.lhs.edges_at({b, 0}).at(0));
            PortRef far = e.a.node == b ? e.b : e.a;
            if (rule.lhs.node(far.node).type == NodeType::Boundary) {
                // bare wire inside the lhs: matched by a host edge with two
                // context ends; not produced by the built-in rules
                return false;
            }
            const Node &fn = rule.lhs.node(far.node);
            std::pair<NodeId, int> key{fwd.at(far.node), side_class(fn, far.port)};
            auto &avail = context_legs[key];
            size_t &cur = cursor[key];
            if (cur >= avail.size()) return false;
            match.legs.push_back({avail[cur].first, avail[cur].second});
            ++cur;
        }
        // require every context leg consumed exactly once overall: counts per
        // key must match (total host legs at a matched node equal lhs legs)
        for (const auto &[k, v] : context_legs)
            if (cursor[k] != v.size()) return false;

        // dedup up to lhs automorphism: identical node maps with legs equal as
        // sets count once
        std::ostringstream canon;
        for (const auto &[l, h] : match.node_map) canon << l << ">" << h << ";";
        std::vector<EdgeId> leg_edges;
        for (const auto &leg : match.legs) leg_edges.push_back(leg.host_edge);
        std::sort(leg_edges.begin(), leg_edges.end());
        for (EdgeId e : leg_edges) canon << e << ",";
        if (dedup.count(canon.str())) return false;
        dedup.insert(canon.str());
        out.push_back(std::move(match));
        return true;
    }

    void extend(size_t idx) {
        if (idx == lhs_interior.size()) {
            try_complete();
            return;
        }
        NodeId u = lhs_interior[idx];
        for (NodeId w : host_interior) {
            if (used.count(w)) continue;
            if (!labels_match(rule.lhs.node(u), host.node(w))) continue;
            fwd[u] = w;
            used.insert(w);
            extend(idx + 1);
            fwd.erase(u);
            used.erase(w);
        }
    }
};

} // namespace

std::vector<Match> find_matches(const Diagram &d, const Rule &rule) {
    Matcher m{d, rule};
    for (const auto &[nid, nd] : rule.lhs.nodes)
        if (nd.type != NodeType::Boundary) m.lhs_interior.push_back(nid);
    for (const auto &[nid, nd] : d.nodes)
        if (nd.type != NodeType::Boundary) m.host_interior.push_back(nid);
    if (m.lhs_interior.empty()) return {}; // wiring-only left sides are not matched
    m.extend(0);
    return m.out;
}

Diagram apply_rule(const Diagram &d, const Rule &rule, const Match &site) {
    std::set<NodeId> matched;
    for (const auto &[l, h] : site.node_map) matched.insert(h);
    // lhs boundary index by host (edge, matched endpoint)
    std::map<std::pair<EdgeId, PortRef>, size_t> leg_lookup;
    for (size_t i = 0; i < site.legs.size(); ++i)
        leg_lookup[{site.legs[i].host_edge, site.legs[i].matched_end}] = i;

    Diagram out;
    out.bare_loops = d.bare_loops + rule.rhs.bare_loops;
    std::map<NodeId, NodeId> host_map;
    for (const auto &[nid, nd] : d.nodes)
        if (!matched.count(nid)) host_map[nid] = out.add_node(nd.type, nd.m, nd.n, nd.phase);
    // one junction per lhs boundary
    std::vector<NodeId> junctions;
    for (size_t i = 0; i < site.legs.size(); ++i) junctions.push_back(out.add_node(NodeType::Boundary, 0, 0));

    auto redirect = [&](EdgeId eid, const PortRef &p) -> std::optional<PortRef> {
        if (!matched.count(p.node)) return PortRef{host_map.at(p.node), p.port};
        auto it = leg_lookup.find({eid, p});
        if (it == leg_lookup.end()) return std::nullopt; // interior lhs edge end
        return PortRef{junctions[it->second], 0};
    };
    for (const auto &[eid, e] : d.edges) {
        auto pa = redirect(eid, e.a);
        auto pb = redirect(eid, e.b);
        if (!pa || !pb) {
            if (pa || pb) throw domain_error("invalid match site: half-consumed edge");
            continue; // fully interior to the match, dropped
        }
        out.add_edge(*pa, *pb);
    }
    // instantiate rhs; its boundaries attach to the junctions by index
    std::map<NodeId, NodeId> rhs_map;
    std::map<NodeId, size_t> rhs_bnd_index;
    for (size_t i = 0; i < rule.rhs.inputs.size(); ++i) rhs_bnd_index[rule.rhs.inputs[i]] = i;
    for (size_t i = 0; i < rule.rhs.outputs.size(); ++i)
        rhs_bnd_index[rule.rhs.outputs[i]] = rule.rhs.inputs.size() + i;
    for (const auto &[nid, nd] : rule.rhs.nodes)
        if (nd.type != NodeType::Boundary) rhs_map[nid] = out.add_node(nd.type, nd.m, nd.n, nd.phase);
    for (const auto &[eid, e] : rule.rhs.edges) {
        auto place = [&](const PortRef &p) -> PortRef {
            if (rule.rhs.node(p.node).type == NodeType::Boundary)
                return {junctions[rhs_bnd_index.at(p.node)], 0};
            return {rhs_map.at(p.node), p.port};
        };
        out.add_edge(place(e.a), place(e.b));
    }
    for (NodeId b : d.inputs) out.inputs.push_back(host_map.at(b));
    for (NodeId b : d.outputs) out.outputs.push_back(host_map.at(b));
    // smooth the junctions away (each carries exactly two edge ends)
    {
        std::set<NodeId> pending(junctions.begin(), junctions.end());
        // reuse the machinery in diagram.cpp via a local copy of its logic
        while (!pending.empty()) {
            NodeId r = *pending.begin();
            pending.erase(pending.begin());
            std::vector<std::pair<EdgeId, bool>> inc;
            for (const auto &[eid, e] : out.edges) {
                if (e.a.node == r) inc.push_back({eid, true});
                if (e.b.node == r) inc.push_back({eid, false});
            }
            if (inc.size() != 2) throw domain_error("rewrite junction has degree " + std::to_string(inc.size()));
            if (inc[0].first == inc[1].first) {
                out.edges.erase(inc[0].first);
                out.bare_loops++;
            } else {
                const Edge e1 = out.edges.at(inc[0].first);
                const Edge e2 = out.edges.at(inc[1].first);
                PortRef p1 = inc[0].second ? e1.b : e1.a;
                PortRef p2 = inc[1].second ? e2.b : e2.a;
                out.edges.erase(inc[0].first);
                out.edges.erase(inc[1].first);
                out.add_edge(p1, p2);
            }
            out.nodes.erase(r);
        }
    }
    out.validate();
    return out;
}

// --- Simplification --------------------------------------------------------

std::string SimplifyResult::trace_text() const {
    std::ostringstream os;
    for (const auto &s : trace) os << "step " << s.k << " " << s.rule << " " << s.site << "\n";
    return os.str();
}

namespace {

int rule_priority(const std::string &name) {
    if (name.rfind("collapse", 0) == 0) return 0;
    if (name.find("unit") != std::string::npos || name.find("copy") != std::string::npos) return 2;
    if (name.rfind("bialg", 0) == 0) return 3;
    if (name.rfind("hopf", 0) == 0) return 4;
    return 5;
}

} // namespace

SimplifyResult simplify(const Diagram &d, const RuleSet &rs, int64_t max_steps) {
    SimplifyResult res{d, {}};
    if (max_steps < 0) throw domain_error("max_steps must be >= 0");
    std::vector<const Rule *> by_prio[6];
    for (const auto &r : rs.rules) by_prio[rule_priority(r.name)].push_back(&r);

    int64_t k = 0;
    // applies the first match that actually changes the diagram; rules whose
    // two sides are graph-isomorphic (commutativity and the like) are skipped
    auto try_rules = [&](const std::vector<const Rule *> &rules) -> bool {
        for (const Rule *r : rules) {
            for (const Match &site : find_matches(res.diagram, *r)) {
                Diagram next = apply_rule(res.diagram, *r, site);
                if (diagram_iso(next, res.diagram)) continue;
                res.trace.push_back({k++, r->name, site.signature_string()});
                res.diagram = std::move(next);
                return true;
            }
        }
        return false;
    };
    while (k < max_steps) {
        bool advanced = try_rules(by_prio[0]);
        if (advanced) continue;
        // priority 1: spider fusion (one full normalization pass as a step)
        {
            Diagram fused = normalize_spiders(res.diagram);
            if (!diagram_iso(fused, res.diagram)) {
                res.diagram = fused;
                res.trace.push_back({k++, "spider-fusion", "-"});
                continue;
            }
        }
        for (int prio : {2, 3, 4, 5}) {
            advanced = try_rules(by_prio[prio]);
            if (advanced) break;
        }
        if (!advanced) break;
    }
    return res;
}

std::string serialize_ruleset(const RuleSet &rs) {
    std::ostringstream os;
    for (const auto &r : rs.rules) {
        os << "rule " << r.name << " " << r.scalar_tag << "\n";
        os << print_graph(r.lhs);
        os << print_graph(r.rhs);
    }
    return os.str();
}

// --- Yang-Baxter -----------------------------------------------------------

YangBaxterLaws YangBaxterLaws::standard() {
    YangBaxterLaws laws;
    laws.strength = [](NodeType c, Phase a) { return cc(sp(c, 2, 1), sp(c, 1, 1, a)); };
    laws.costrength = [](NodeType c, Phase a) { return cc(sp(c, 1, 1, a), sp(c, 1, 2)); };
    laws.special = [](NodeType c) {
        (void)c;
        return idw();
    };
    laws.frobenius = [](NodeType c) { return cc(tt(sp(c, 1, 2), idw()), tt(idw(), sp(c, 2, 1))); };
    return laws;
}

std::string YangBaxterReport::to_string() const {
    std::ostringstream os;
    for (const auto &e : entries) os << "triple " << e.triple << " " << (e.ok ? "ok" : "FAIL") << "\n";
    os << (all_ok ? "yang-baxter ok" : "yang-baxter FAIL") << "\n";
    return os.str();
}

YangBaxterReport check_yang_baxter(const GroupAlgebraModel &m, const YangBaxterLaws &laws) {
    YangBaxterReport rep;
    auto record = [&rep](const std::string &name, bool ok) {
        rep.entries.push_back({name, ok});
        if (!ok) rep.all_ok = false;
    };
    std::vector<Phase> phases;
    for (const auto &e : all_elements(m.basis_group)) phases.push_back(angle_of(m.basis_group, e));

    // Instances of the hexagon: a monoid-phase-comonoid word is rewritten to
    // comonoid-phase-monoid form along two routes; the two results and the
    // direct evaluation of the start must agree.  The green copy algebra is
    // exact in every normalization; red joins it only when dagger-special.
    std::vector<NodeType> colors{kG};
    if (m.normalization == Normalization::Unitary) colors.push_back(kR);

    for (NodeType c : colors) {
        for (const Phase &a : phases) {
            std::string base = cname(c) + "/" + phase_to_string(a);
            // instance 1: mul after (phase x id) after comul, at one wire
            Diagram start1 = cc(cc(sp(c, 1, 2), tt(sp(c, 1, 1, a), idw())), sp(c, 2, 1));
            Matrix s1 = eval(start1, m);
            // route A: strength first, then specialness
            Matrix a1 = eval(cc(sp(c, 1, 2), laws.strength(c, a)), m);
            Matrix a2 = eval(cc(laws.special(c), sp(c, 1, 1, a)), m);
            // route B: costrength first, then specialness
            Matrix b1 = eval(cc(laws.costrength(c, a), sp(c, 2, 1)), m);
            Matrix b2 = eval(cc(sp(c, 1, 1, a), laws.special(c)), m);
            bool ok = (a1 == s1) && (b1 == s1) && (a2 == s1) && (b2 == s1) && (a2 == b2);
            record(base + "/special", ok);

            // instance 2: comul after phase after mul (2->2), via Frobenius
            Diagram start2 = cc(cc(sp(c, 2, 1), sp(c, 1, 1, a)), sp(c, 1, 2));
            Matrix s2 = eval(start2, m);
            // route A: phase out through the comul, then Frobenius rewiring
            Matrix ra = eval(cc(laws.frobenius(c), tt(sp(c, 1, 1, a), idw())), m);
            // route B: phase in through the mul, then Frobenius rewiring
            Matrix rb = eval(cc(tt(sp(c, 1, 1, a), idw()), laws.frobenius(c)), m);
            bool ok2 = (ra == s2) && (rb == s2) && (ra == rb);
            record(base + "/frobenius", ok2);

            // trivial unit/counit triples: already in normal order
            Matrix u = eval(cc(cc(sp(c, 0, 1), sp(c, 1, 1, a)), sp(c, 1, 0)), m);
            record(base + "/unit", u.rows() == 1 && u.cols() == 1);
        }
    }
    return rep;
}

} // namespace frob
