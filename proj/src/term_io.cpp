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
#include <cctype>
#include <sstream>

#include "frobius/diagram_io.hpp"

namespace frob {

std::string phase_to_string(const Phase &p) {
    std::ostringstream os;
    os << numerator(p);
    if (denominator(p) != 1) os << "/" << denominator(p);
    return os.str();
}

Phase parse_phase(const std::string &text, const std::optional<AbelianGroup> &group) {
    if (text.empty()) throw parse_error("empty phase literal", 0);
    if (text[0] == '(') {
        // tuple of group coordinates
        if (!group) throw parse_error("tuple phase literal requires a finite phase group", 0);
        if (text.back() != ')') throw parse_error("unterminated tuple", text.size());
        GroupElement e;
        std::istringstream is(text.substr(1, text.size() - 2));
        std::string part;
        while (std::getline(is, part, ',')) e.coords.push_back(std::stoll(part));
        if (e.coords.size() != group->factors.size())
            throw parse_error("tuple arity does not match the phase group", 0);
        return angle_of(*group, e);
    }
    size_t slash = text.find('/');
    if (slash != std::string::npos) {
        Int num(text.substr(0, slash));
        Int den(text.substr(slash + 1));
        if (den == 0) throw parse_error("zero denominator in phase", slash);
        return canonical_phase(Rat(num) / Rat(den));
    }
    Int k(text);
    if (group) {
        if (group->factors.size() != 1) throw parse_error("bare integer phase needs a cyclic phase group", 0);
        GroupElement e{{static_cast<int64_t>(k)}};
        return angle_of(*group, e);
    }
    return canonical_phase(Rat(k));
}

// --- Parser ----------------------------------------------------------------

namespace {

struct TermParser {
    const std::string &text;
    const TermIoOptions &opts;
    size_t pos = 0;

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }
    void expect(char c) {
        skip_ws();
        if (pos >= text.size() || text[pos] != c)
            throw parse_error(std::string("expected '") + c + "'", pos);
        ++pos;
    }
    std::string ident() {
        skip_ws();
        size_t start = pos;
        while (pos < text.size() && (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_')) ++pos;
        if (pos == start) throw parse_error("expected a term", pos);
        return text.substr(start, pos - start);
    }
    std::string argument() {
        // raw text up to the matching ',' or ')' at depth 0
        skip_ws();
        size_t start = pos;
        int depth = 0;
        while (pos < text.size()) {
            char c = text[pos];
            if (c == '(') ++depth;
            else if (c == ')') {
                if (depth == 0) break;
                --depth;
            } else if (c == ',' && depth == 0) break;
            ++pos;
        }
        std::string out = text.substr(start, pos - start);
        while (!out.empty() && std::isspace(static_cast<unsigned char>(out.back()))) out.pop_back();
        return out;
    }
    int64_t integer_arg() {
        std::string a = argument();
        try {
            return std::stoll(a);
        } catch (...) {
            throw parse_error("expected integer, got '" + a + "'", pos);
        }
    }

    Diagram parse() {
        Diagram d = term();
        skip_ws();
        if (pos != text.size()) throw parse_error("trailing input", pos);
        return d;
    }

    Diagram term() {
        std::string head = ident();
        if (head == "s") return d_antipode();
        if (head == "id") return d_identity(1);
        if (head == "swap") return d_swap();
        if (head == "g" || head == "r") {
            expect('(');
            int64_t m = integer_arg();
            expect(',');
            int64_t n = integer_arg();
            expect(',');
            std::string ph = argument();
            expect(')');
            NodeType color = head == "g" ? NodeType::Green : NodeType::Red;
            const auto &group = head == "g" ? opts.green_group : opts.red_group;
            return d_spider(color, static_cast<int>(m), static_cast<int>(n), parse_phase(ph, group));
        }
        if (head == "comp" || head == "tens") {
            expect('(');
            Diagram t1 = term();
            expect(',');
            Diagram t2 = term();
            expect(')');
            return head == "comp" ? d_compose(t1, t2) : d_tensor(t1, t2);
        }
        if (head == "int") {
            expect('(');
            int64_t k = integer_arg();
            expect(')');
            return internal_integer_diagram(k);
        }
        throw parse_error("unknown term head '" + head + "'", pos);
    }
};

} // namespace

Diagram parse_term(const std::string &text, const TermIoOptions &opts) {
    TermParser p{text, opts};
    return p.parse();
}

// --- Printer ---------------------------------------------------------------

namespace {

std::string node_term(const Node &nd) {
    if (nd.type == NodeType::Antipode) return "s";
    std::ostringstream os;
    os << (nd.type == NodeType::Green ? "g" : "r") << "(" << nd.m << "," << nd.n << ","
       << phase_to_string(nd.phase) << ")";
    return os.str();
}

std::string identity_term(int k) {
    std::string acc = "id";
    for (int i = 1; i < k; ++i) acc = "tens(" + acc + ",id)";
    return acc;
}

// tens of [left ids, mid, right ids], omitting zero-width factors
std::string pad_term(int left, const std::string &mid, int right) {
    std::string acc = mid;
    if (left > 0) acc = "tens(" + identity_term(left) + "," + acc + ")";
    if (right > 0) acc = "tens(" + acc + "," + identity_term(right) + ")";
    return acc;
}

struct Layering {
    const Diagram &d;
    std::string acc; // term so far; empty until the first layer
    std::vector<EdgeId> wires;

    void emit(const std::string &layer) { acc = acc.empty() ? layer : "comp(" + acc + "," + layer + ")"; }

    // Moves the wire at position `from` to position `to` with adjacent swaps.
    void move_wire(size_t from, size_t to) {
        while (from > to) {
            emit(pad_term(static_cast<int>(from - 1), "swap", static_cast<int>(wires.size() - from - 1)));
            std::swap(wires[from], wires[from - 1]);
            --from;
        }
        while (from < to) {
            emit(pad_term(static_cast<int>(from), "swap", static_cast<int>(wires.size() - from - 2)));
            std::swap(wires[from], wires[from + 1]);
            ++from;
        }
    }

    size_t wire_pos(EdgeId e) const {
        for (size_t i = 0; i < wires.size(); ++i)
            if (wires[i] == e) return i;
        throw domain_error("diagram is not layerable (wire not open)");
    }
};

} // namespace

std::string print_term(const Diagram &d) {
    if (d.bare_loops > 0) throw domain_error("diagram with bare loops has no term form");
    // Orient every edge out-role -> in-role; reject same-role edges.
    auto is_in_role = [&](const PortRef &p) -> bool {
        const Node &nd = d.node(p.node);
        if (nd.type == NodeType::Boundary)
            return std::find(d.outputs.begin(), d.outputs.end(), p.node) != d.outputs.end();
        return nd.port_is_input(p.port);
    };
    std::map<EdgeId, PortRef> edge_src, edge_dst;
    for (const auto &[eid, e] : d.edges) {
        bool ain = is_in_role(e.a), bin = is_in_role(e.b);
        if (ain == bin) throw domain_error("diagram is not layerable (feedback wire)");
        edge_src[eid] = ain ? e.b : e.a;
        edge_dst[eid] = ain ? e.a : e.b;
    }

    Layering lay{d, "", {}};
    for (NodeId in : d.inputs) lay.wires.push_back(d.edges_at({in, 0}).at(0));

    std::set<NodeId> remaining;
    for (const auto &[nid, nd] : d.nodes)
        if (nd.type != NodeType::Boundary) remaining.insert(nid);

    std::set<EdgeId> open(lay.wires.begin(), lay.wires.end());
    while (!remaining.empty()) {
        // find a node all of whose in-edges are open
        NodeId pick = -1;
        for (NodeId nid : remaining) {
            const Node &nd = d.node(nid);
            bool ready = true;
            for (int p = 0; p < nd.port_count() && ready; ++p) {
                if (!nd.port_is_input(p)) continue;
                EdgeId e = d.edges_at({nid, p}).at(0);
                if (!open.count(e)) ready = false;
            }
            if (ready) {
                pick = nid;
                break;
            }
        }
        if (pick < 0) throw domain_error("diagram is not layerable (cycle)");
        const Node &nd = d.node(pick);
        // gather in-edges in port order and bring them to the front, in order
        std::vector<EdgeId> ins;
        for (int p = 0; p < nd.port_count(); ++p)
            if (nd.port_is_input(p)) ins.push_back(d.edges_at({pick, p}).at(0));
        for (size_t i = 0; i < ins.size(); ++i) lay.move_wire(lay.wire_pos(ins[i]), i);
        int m = static_cast<int>(ins.size());
        int rest = static_cast<int>(lay.wires.size()) - m;
        lay.emit(pad_term(0, node_term(nd), rest));
        // replace consumed wires with the node's out-edges in port order
        std::vector<EdgeId> outs;
        for (int p = 0; p < nd.port_count(); ++p)
            if (!nd.port_is_input(p)) outs.push_back(d.edges_at({pick, p}).at(0));
        for (EdgeId e : ins) open.erase(e);
        lay.wires.erase(lay.wires.begin(), lay.wires.begin() + m);
        lay.wires.insert(lay.wires.begin(), outs.begin(), outs.end());
        for (EdgeId e : outs) open.insert(e);
        remaining.erase(pick);
    }

    // permute open wires into output order
    for (size_t i = 0; i < d.outputs.size(); ++i) {
        EdgeId want = d.edges_at({d.outputs[i], 0}).at(0);
        lay.move_wire(lay.wire_pos(want), i);
    }
    if (lay.acc.empty()) {
        // no interior nodes and no swaps needed: a bundle of identity wires
        if (d.inputs.empty()) throw domain_error("empty diagram has no term form");
        return identity_term(static_cast<int>(d.inputs.size()));
    }
    return lay.acc;
}

} // namespace frob
