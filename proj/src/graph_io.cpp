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

#include <algorithm>
#include <sstream>

#include "frobius/diagram_io.hpp"

namespace frob {

namespace {

char type_letter(NodeType t) {
    switch (t) {
        case NodeType::Green: return 'G';
        case NodeType::Red: return 'R';
        case NodeType::Antipode: return 'S';
        case NodeType::Boundary: break;
    }
    throw domain_error("boundary nodes are not serialized as node lines");
}

NodeType letter_type(char c) {
    switch (c) {
        case 'G': return NodeType::Green;
        case 'R': return NodeType::Red;
        case 'S': return NodeType::Antipode;
    }
    throw parse_error(std::string("unknown node kind '") + c + "'", 0);
}

} // namespace

std::string print_graph(const Diagram &d) {
    // stable interior numbering in node-id order
    std::map<NodeId, int64_t> num;
    for (const auto &[nid, nd] : d.nodes)
        if (nd.type != NodeType::Boundary) num[nid] = static_cast<int64_t>(num.size());
    std::map<NodeId, size_t> in_pos, out_pos;
    for (size_t i = 0; i < d.inputs.size(); ++i) in_pos[d.inputs[i]] = i;
    for (size_t i = 0; i < d.outputs.size(); ++i) out_pos[d.outputs[i]] = i;

    auto endpoint_token = [&](const PortRef &p) -> std::string {
        const Node &nd = d.node(p.node);
        if (nd.type == NodeType::Boundary) {
            if (in_pos.count(p.node)) return "in:" + std::to_string(in_pos.at(p.node));
            return "out:" + std::to_string(out_pos.at(p.node));
        }
        return std::to_string(num.at(p.node)) + ":" + std::to_string(p.port);
    };

    std::ostringstream os;
    os << "frobius-graph v1\n";
    for (const auto &[nid, nd] : d.nodes) {
        if (nd.type == NodeType::Boundary) continue;
        os << "node " << num.at(nid) << " " << type_letter(nd.type) << " " << nd.m << " " << nd.n << " "
           << phase_to_string(nd.phase) << "\n";
    }
    std::vector<std::string> edge_lines;
    for (const auto &[eid, e] : d.edges) {
        if (d.node(e.a.node).type == NodeType::Boundary || d.node(e.b.node).type == NodeType::Boundary) continue;
        std::string ta = endpoint_token(e.a), tb = endpoint_token(e.b);
        if (tb < ta) std::swap(ta, tb);
        edge_lines.push_back("edge " + ta + " " + tb);
    }
    std::sort(edge_lines.begin(), edge_lines.end());
    for (const auto &l : edge_lines) os << l << "\n";
    os << "in";
    for (NodeId b : d.inputs) {
        const Edge &e = d.edges.at(d.edges_at({b, 0}).at(0));
        PortRef other = e.a.node == b ? e.b : e.a;
        os << " " << endpoint_token(other);
    }
    os << "\nout";
    for (NodeId b : d.outputs) {
        const Edge &e = d.edges.at(d.edges_at({b, 0}).at(0));
        PortRef other = e.a.node == b ? e.b : e.a;
        os << " " << endpoint_token(other);
    }
    os << "\n";
    if (d.bare_loops > 0) os << "loops " << d.bare_loops << "\n";
    return os.str();
}

Diagram parse_graph(const std::string &text) {
    std::istringstream is(text);
    std::string line;
    if (!std::getline(is, line) || line != "frobius-graph v1") throw parse_error("missing frobius-graph v1 header", 0);
    Diagram d;
    std::map<int64_t, NodeId> interior;
    struct Attach {
        // one of: interior port, input index, output index
        std::optional<PortRef> port;
        std::optional<size_t> in_idx, out_idx;
    };
    auto parse_token = [&](const std::string &tok) -> Attach {
        size_t colon = tok.find(':');
        if (colon == std::string::npos) throw parse_error("bad endpoint token '" + tok + "'", 0);
        std::string head = tok.substr(0, colon);
        int64_t idx = std::stoll(tok.substr(colon + 1));
        if (head == "in") return Attach{std::nullopt, static_cast<size_t>(idx), std::nullopt};
        if (head == "out") return Attach{std::nullopt, std::nullopt, static_cast<size_t>(idx)};
        int64_t file_id = std::stoll(head);
        if (!interior.count(file_id)) throw parse_error("edge references undeclared node " + head, 0);
        return Attach{PortRef{interior.at(file_id), static_cast<int>(idx)}, std::nullopt, std::nullopt};
    };

    std::vector<std::pair<Attach, Attach>> edges;
    std::vector<Attach> in_list, out_list;
    bool have_in = false, have_out = false;
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        std::istringstream ls(line);
        std::string kw;
        ls >> kw;
        if (kw == "node") {
            int64_t id;
            std::string kind, phase;
            int m, n;
            ls >> id >> kind >> m >> n >> phase;
            if (!ls || kind.size() != 1) throw parse_error("bad node line: " + line, 0);
            interior[id] = d.add_node(letter_type(kind[0]), m, n, parse_phase(phase, std::nullopt));
        } else if (kw == "edge") {
            std::string ta, tb;
            ls >> ta >> tb;
            edges.push_back({parse_token(ta), parse_token(tb)});
        } else if (kw == "in" || kw == "out") {
            std::string tok;
            auto &list = kw == "in" ? in_list : out_list;
            (kw == "in" ? have_in : have_out) = true;
            while (ls >> tok) list.push_back(parse_token(tok));
        } else if (kw == "loops") {
            ls >> d.bare_loops;
        } else {
            throw parse_error("unknown line kind '" + kw + "'", 0);
        }
    }
    if (!have_in || !have_out) throw parse_error("missing in/out lines", 0);

    for (size_t i = 0; i < in_list.size(); ++i) d.inputs.push_back(d.add_node(NodeType::Boundary, 0, 0));
    for (size_t i = 0; i < out_list.size(); ++i) d.outputs.push_back(d.add_node(NodeType::Boundary, 0, 0));
    auto resolve = [&](const Attach &a) -> PortRef {
        if (a.port) return *a.port;
        if (a.in_idx) {
            if (*a.in_idx >= d.inputs.size()) throw parse_error("input index out of range", 0);
            return {d.inputs[*a.in_idx], 0};
        }
        if (*a.out_idx >= d.outputs.size()) throw parse_error("output index out of range", 0);
        return {d.outputs[*a.out_idx], 0};
    };
    for (const auto &[ta, tb] : edges) d.add_edge(resolve(ta), resolve(tb));
    // interface wires; a boundary-to-boundary wire appears in both lists, add once
    std::set<std::pair<PortRef, PortRef>> seen;
    auto add_boundary_edge = [&](PortRef bnd, const Attach &a) {
        PortRef other = resolve(a);
        auto key = std::minmax(bnd, other);
        if (seen.count({key.first, key.second})) return;
        seen.insert({key.first, key.second});
        d.add_edge(bnd, other);
    };
    for (size_t i = 0; i < in_list.size(); ++i) add_boundary_edge({d.inputs[i], 0}, in_list[i]);
    for (size_t i = 0; i < out_list.size(); ++i) add_boundary_edge({d.outputs[i], 0}, out_list[i]);
    d.validate();
    return d;
}

std::string print_dot(const Diagram &d) {
    std::ostringstream os;
    os << "graph frobius {\n  rankdir=LR;\n";
    for (const auto &[nid, nd] : d.nodes) {
        os << "  n" << nid << " [";
        switch (nd.type) {
            case NodeType::Green:
                os << "shape=circle,style=filled,fillcolor=palegreen,label=\"" << phase_to_string(nd.phase) << "\"";
                break;
            case NodeType::Red:
                os << "shape=circle,style=filled,fillcolor=lightcoral,label=\"" << phase_to_string(nd.phase) << "\"";
                break;
            case NodeType::Antipode: os << "shape=square,label=\"s\""; break;
            case NodeType::Boundary: os << "shape=point,label=\"\""; break;
        }
        os << "];\n";
    }
    for (const auto &[eid, e] : d.edges)
        os << "  n" << e.a.node << " -- n" << e.b.node << ";\n";
    os << "}\n";
    return os.str();
}

} // namespace frob
