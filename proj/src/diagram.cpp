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

#include "frobius/diagram.hpp"

#include <algorithm>
#include <set>

namespace frob {

Phase canonical_phase(Rat angle) {
    Int whole = numerator(angle) / denominator(angle);
    angle -= Rat(whole);
    if (angle < 0) angle += 1;
    return angle;
}

int Node::port_count() const {
    switch (type) {
        case NodeType::Green:
        case NodeType::Red: return m + n;
        case NodeType::Antipode: return 2;
        case NodeType::Boundary: return 1;
    }
    return 0;
}

bool Node::port_is_input(int port) const {
    switch (type) {
        case NodeType::Green:
        case NodeType::Red: return port < m;
        case NodeType::Antipode: return port == 0;
        case NodeType::Boundary: return false; // role comes from the interface lists
    }
    return false;
}

NodeId Diagram::add_node(NodeType type, int m, int n, Phase phase) {
    if (m < 0 || n < 0) throw domain_error("negative spider arity");
    Node node;
    node.id = next_node_++;
    node.type = type;
    node.m = m;
    node.n = n;
    node.phase = canonical_phase(phase);
    nodes.emplace(node.id, node);
    return node.id;
}

EdgeId Diagram::add_edge(PortRef a, PortRef b) {
    auto check = [this](const PortRef &p) {
        auto it = nodes.find(p.node);
        if (it == nodes.end()) throw domain_error("edge endpoint on missing node");
        if (p.port < 0 || p.port >= it->second.port_count()) throw domain_error("edge endpoint port out of range");
    };
    check(a);
    check(b);
    Edge e{next_edge_++, a, b};
    edges.emplace(e.id, e);
    return e.id;
}

const Node &Diagram::node(NodeId id) const {
    auto it = nodes.find(id);
    if (it == nodes.end()) throw domain_error("missing node " + std::to_string(id));
    return it->second;
}

std::vector<EdgeId> Diagram::edges_at(const PortRef &p) const {
    std::vector<EdgeId> out;
    for (const auto &[eid, e] : edges) {
        if (e.a == p) out.push_back(eid);
        if (e.b == p) out.push_back(eid);
    }
    return out;
}

std::vector<EdgeId> Diagram::edges_at_node(NodeId id) const {
    std::vector<EdgeId> out;
    for (const auto &[eid, e] : edges) {
        if (e.a.node == id) out.push_back(eid);
        if (e.b.node == id) out.push_back(eid);
    }
    return out;
}

void Diagram::validate() const {
    std::map<PortRef, int> degree;
    for (const auto &[eid, e] : edges) {
        degree[e.a]++;
        degree[e.b]++;
        node(e.a.node);
        node(e.b.node);
    }
    std::set<NodeId> boundary;
    for (const auto &[nid, nd] : nodes) {
        for (int p = 0; p < nd.port_count(); ++p) {
            int d = degree.count({nid, p}) ? degree.at({nid, p}) : 0;
            if (d != 1)
                throw domain_error("port " + std::to_string(nid) + ":" + std::to_string(p) + " has degree " +
                                   std::to_string(d));
        }
        if (nd.type == NodeType::Boundary) boundary.insert(nid);
    }
    std::set<NodeId> listed;
    for (NodeId id : inputs) listed.insert(id);
    for (NodeId id : outputs) listed.insert(id);
    if (listed.size() != inputs.size() + outputs.size()) throw domain_error("duplicate boundary listing");
    if (listed != boundary) throw domain_error("interface lists do not match boundary nodes");
}

// --- Builders --------------------------------------------------------------

Diagram d_empty() { return Diagram{}; }

Diagram d_identity(int k) {
    Diagram d;
    for (int i = 0; i < k; ++i) {
        NodeId in = d.add_node(NodeType::Boundary, 0, 0);
        NodeId out = d.add_node(NodeType::Boundary, 0, 0);
        d.add_edge({in, 0}, {out, 0});
        d.inputs.push_back(in);
        d.outputs.push_back(out);
    }
    return d;
}

Diagram d_swap() {
    Diagram d;
    NodeId i0 = d.add_node(NodeType::Boundary, 0, 0);
    NodeId i1 = d.add_node(NodeType::Boundary, 0, 0);
    NodeId o0 = d.add_node(NodeType::Boundary, 0, 0);
    NodeId o1 = d.add_node(NodeType::Boundary, 0, 0);
    d.add_edge({i0, 0}, {o1, 0});
    d.add_edge({i1, 0}, {o0, 0});
    d.inputs = {i0, i1};
    d.outputs = {o0, o1};
    return d;
}

Diagram d_spider(NodeType color, int m, int n, Phase phase) {
    if (color != NodeType::Green && color != NodeType::Red) throw domain_error("spider color must be green or red");
    Diagram d;
    NodeId s = d.add_node(color, m, n, phase);
    for (int i = 0; i < m; ++i) {
        NodeId b = d.add_node(NodeType::Boundary, 0, 0);
        d.add_edge({b, 0}, {s, i});
        d.inputs.push_back(b);
    }
    for (int j = 0; j < n; ++j) {
        NodeId b = d.add_node(NodeType::Boundary, 0, 0);
        d.add_edge({s, m + j}, {b, 0});
        d.outputs.push_back(b);
    }
    return d;
}

Diagram d_antipode() {
    Diagram d;
    NodeId s = d.add_node(NodeType::Antipode, 1, 1);
    NodeId in = d.add_node(NodeType::Boundary, 0, 0);
    NodeId out = d.add_node(NodeType::Boundary, 0, 0);
    d.add_edge({in, 0}, {s, 0});
    d.add_edge({s, 1}, {out, 0});
    d.inputs = {in};
    d.outputs = {out};
    return d;
}

// --- Composition -----------------------------------------------------------

namespace {

// Copies src into dst, returning the node-id remapping.
std::map<NodeId, NodeId> splice_copy(Diagram &dst, const Diagram &src) {
    std::map<NodeId, NodeId> remap;
    for (const auto &[nid, nd] : src.nodes) remap[nid] = dst.add_node(nd.type, nd.m, nd.n, nd.phase);
    for (const auto &[eid, e] : src.edges)
        dst.add_edge({remap.at(e.a.node), e.a.port}, {remap.at(e.b.node), e.b.port});
    dst.bare_loops += src.bare_loops;
    return remap;
}

// Removes a set of degree-2 pass-through nodes, joining their edges.
void smooth_out(Diagram &d, const std::set<NodeId> &removed) {
    std::set<NodeId> pending = removed;
    while (!pending.empty()) {
        NodeId r = *pending.begin();
        pending.erase(pending.begin());
        std::vector<std::pair<EdgeId, bool>> inc; // (edge, endpoint-is-a)
        for (const auto &[eid, e] : d.edges) {
            if (e.a.node == r) inc.push_back({eid, true});
            if (e.b.node == r) inc.push_back({eid, false});
        }
        if (inc.size() != 2) throw domain_error("spliced boundary has degree " + std::to_string(inc.size()));
        if (inc[0].first == inc[1].first) {
            // both ends of one edge: a closed bare wire
            d.edges.erase(inc[0].first);
            d.bare_loops++;
        } else {
            const Edge &e1 = d.edges.at(inc[0].first);
            const Edge &e2 = d.edges.at(inc[1].first);
            PortRef p1 = inc[0].second ? e1.b : e1.a;
            PortRef p2 = inc[1].second ? e2.b : e2.a;
            d.edges.erase(inc[0].first);
            d.edges.erase(inc[1].first);
            d.add_edge(p1, p2);
        }
        d.nodes.erase(r);
    }
}

} // namespace

Diagram d_compose(const Diagram &a, const Diagram &b) {
    if (a.n_outputs() != b.n_inputs())
        throw domain_error("composition arity mismatch: " + std::to_string(a.n_outputs()) + " outputs vs " +
                           std::to_string(b.n_inputs()) + " inputs");
    Diagram out;
    auto ra = splice_copy(out, a);
    auto rb = splice_copy(out, b);
    std::set<NodeId> removed;
    for (size_t i = 0; i < a.outputs.size(); ++i) {
        NodeId na = ra.at(a.outputs[i]);
        NodeId nb = rb.at(b.inputs[i]);
        out.add_edge({na, 0}, {nb, 0});
        removed.insert(na);
        removed.insert(nb);
    }
    smooth_out(out, removed);
    for (NodeId id : a.inputs) out.inputs.push_back(ra.at(id));
    for (NodeId id : b.outputs) out.outputs.push_back(rb.at(id));
    return out;
}

Diagram d_tensor(const Diagram &a, const Diagram &b) {
    Diagram out;
    auto ra = splice_copy(out, a);
    auto rb = splice_copy(out, b);
    for (NodeId id : a.inputs) out.inputs.push_back(ra.at(id));
    for (NodeId id : b.inputs) out.inputs.push_back(rb.at(id));
    for (NodeId id : a.outputs) out.outputs.push_back(ra.at(id));
    for (NodeId id : b.outputs) out.outputs.push_back(rb.at(id));
    return out;
}

namespace {

// Reverses a diagram.  negate_phase selects adjoint vs transpose.
Diagram reverse_diagram(const Diagram &d, bool negate_phase) {
    Diagram out;
    std::map<NodeId, NodeId> remap;
    for (const auto &[nid, nd] : d.nodes) {
        Phase ph = negate_phase ? canonical_phase(-nd.phase) : nd.phase;
        if (nd.is_spider()) remap[nid] = out.add_node(nd.type, nd.n, nd.m, ph);
        else remap[nid] = out.add_node(nd.type, nd.m, nd.n, Phase(0));
    }
    auto remap_port = [&](const PortRef &p) -> PortRef {
        const Node &nd = d.node(p.node);
        if (nd.is_spider()) {
            // old input slot i -> new output slot i; old output slot j -> new input slot j
            if (p.port < nd.m) return {remap.at(p.node), nd.n + p.port};
            return {remap.at(p.node), p.port - nd.m};
        }
        if (nd.type == NodeType::Antipode) return {remap.at(p.node), 1 - p.port};
        return {remap.at(p.node), 0};
    };
    for (const auto &[eid, e] : d.edges) out.add_edge(remap_port(e.a), remap_port(e.b));
    for (NodeId id : d.outputs) out.inputs.push_back(remap.at(id));
    for (NodeId id : d.inputs) out.outputs.push_back(remap.at(id));
    out.bare_loops = d.bare_loops;
    return out;
}

} // namespace

Diagram d_dagger(const Diagram &d) { return reverse_diagram(d, true); }
Diagram d_transpose(const Diagram &d) { return reverse_diagram(d, false); }

Diagram d_conjugate(const Diagram &d) {
    Diagram out = d;
    for (auto &[nid, nd] : out.nodes) nd.phase = canonical_phase(-nd.phase);
    return out;
}

Diagram internal_integer_diagram(int64_t n) {
    if (n < 0) return d_compose(d_antipode(), internal_integer_diagram(-n));
    if (n == 0) return d_compose(d_spider(NodeType::Green, 1, 0), d_spider(NodeType::Red, 0, 1));
    Diagram acc = d_identity(1);
    for (int64_t k = 1; k < n; ++k) {
        // next = red-multiply after (acc tensor id) after green-copy
        acc = d_compose(d_compose(d_spider(NodeType::Green, 1, 2), d_tensor(acc, d_identity(1))),
                        d_spider(NodeType::Red, 2, 1));
    }
    return acc;
}

// --- Isomorphism -----------------------------------------------------------

namespace {

// Leg class used for edge comparison: spider legs on one side are
// interchangeable, antipode ports are not.
int port_class(const Node &nd, int port) {
    if (nd.is_spider()) return port < nd.m ? 0 : 1;
    return port;
}

struct IsoState {
    const Diagram &a, &b;
    std::map<NodeId, NodeId> fwd;
    std::set<NodeId> used;

    // multiset key: ((node1, class1), (node2, class2)) normalized
    using EdgeKey = std::pair<std::pair<NodeId, int>, std::pair<NodeId, int>>;

    static EdgeKey key(const Diagram &d, const Edge &e, const std::map<NodeId, NodeId> *remap) {
        auto end = [&](const PortRef &p) -> std::pair<NodeId, int> {
            NodeId id = remap ? remap->at(p.node) : p.node;
            return {id, port_class(d.node(p.node), p.port)};
        };
        auto x = end(e.a), y = end(e.b);
        return x <= y ? EdgeKey{x, y} : EdgeKey{y, x};
    }

    bool labels_match(const Node &u, const Node &v) const {
        return u.type == v.type && u.m == v.m && u.n == v.n && u.phase == v.phase;
    }

    bool edges_match() const {
        std::multiset<EdgeKey> ka, kb;
        for (const auto &[eid, e] : a.edges) ka.insert(key(a, e, &fwd));
        for (const auto &[eid, e] : b.edges) kb.insert(key(b, e, nullptr));
        return ka == kb;
    }

    bool extend(std::vector<NodeId>::const_iterator it, std::vector<NodeId>::const_iterator end,
                const std::vector<NodeId> &b_interior) {
        if (it == end) return edges_match();
        NodeId u = *it;
        for (NodeId w : b_interior) {
            if (used.count(w)) continue;
            if (!labels_match(a.node(u), b.node(w))) continue;
            fwd[u] = w;
            used.insert(w);
            if (extend(std::next(it), end, b_interior)) return true;
            fwd.erase(u);
            used.erase(w);
        }
        return false;
    }
};

} // namespace

bool diagram_iso(const Diagram &a, const Diagram &b) {
    if (a.n_inputs() != b.n_inputs() || a.n_outputs() != b.n_outputs()) return false;
    if (a.nodes.size() != b.nodes.size() || a.edges.size() != b.edges.size()) return false;
    if (a.bare_loops != b.bare_loops) return false;
    IsoState st{a, b, {}, {}};
    for (size_t i = 0; i < a.inputs.size(); ++i) st.fwd[a.inputs[i]] = b.inputs[i];
    for (size_t i = 0; i < a.outputs.size(); ++i) st.fwd[a.outputs[i]] = b.outputs[i];
    std::vector<NodeId> a_interior, b_interior;
    for (const auto &[nid, nd] : a.nodes)
        if (nd.type != NodeType::Boundary) a_interior.push_back(nid);
    for (const auto &[nid, nd] : b.nodes)
        if (nd.type != NodeType::Boundary) b_interior.push_back(nid);
    if (a_interior.size() != b_interior.size()) return false;
    return st.extend(a_interior.begin(), a_interior.end(), b_interior);
}

} // namespace frob
