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

#ifndef FROBIUS_DIAGRAM_HPP
#define FROBIUS_DIAGRAM_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "frobius/abelian.hpp"
#include "frobius/common.hpp"

namespace frob {

using NodeId = int64_t;
using EdgeId = int64_t;

enum class NodeType {
    Green,    // copy-algebra spider, m inputs / n outputs, carries a phase
    Red,      // group-algebra spider, likewise
    Antipode, // 1 -> 1, port 0 in / port 1 out
    Boundary, // single port 0; listed in the diagram's input or output order
};

/// Phases are rational points on the circle, in turns, canonical in [0, 1).
/// Finite phase groups embed by sending an element to its canonical angle.
using Phase = Rat;

Phase canonical_phase(Rat angle);

struct Node {
    NodeId id = -1;
    NodeType type = NodeType::Boundary;
    int m = 0; // input legs (spiders only)
    int n = 0; // output legs
    Phase phase = Phase(0);

    int port_count() const;
    bool is_spider() const { return type == NodeType::Green || type == NodeType::Red; }
    /// True when `port` plays the input role on this node.
    bool port_is_input(int port) const;
};

struct PortRef {
    NodeId node = -1;
    int port = 0;
    bool operator==(const PortRef &) const = default;
    auto operator<=>(const PortRef &) const = default;
};

struct Edge {
    EdgeId id = -1;
    PortRef a, b; // unordered pair
};

/// An open graph: spiders and antipodes wired by edges, with ordered boundary
/// nodes recording the input and output interfaces.  Diagrams are values;
/// every operation returns a fresh diagram.
class Diagram {
  public:
    std::map<NodeId, Node> nodes;
    std::map<EdgeId, Edge> edges;
    std::vector<NodeId> inputs;  // boundary nodes, in interface order
    std::vector<NodeId> outputs; // boundary nodes, in interface order
    /// Closed wires with no node on them (can arise when splicing during
    /// composition); each contributes a factor of the carrier dimension.
    int64_t bare_loops = 0;

    NodeId add_node(NodeType type, int m, int n, Phase phase = Phase(0));
    EdgeId add_edge(PortRef a, PortRef b);

    int n_inputs() const { return static_cast<int>(inputs.size()); }
    int n_outputs() const { return static_cast<int>(outputs.size()); }

    const Node &node(NodeId id) const;
    /// Edges incident to a port (0 or 1 entries in a valid diagram).
    std::vector<EdgeId> edges_at(const PortRef &p) const;
    std::vector<EdgeId> edges_at_node(NodeId id) const;

    /// Checks every non-boundary port has exactly one edge, boundaries have
    /// exactly one, and the interface lists cover all boundary nodes.
    void validate() const;

  private:
    NodeId next_node_ = 0;
    EdgeId next_edge_ = 0;
};

// --- Generator builders ----------------------------------------------------

Diagram d_empty();
Diagram d_identity(int k = 1);
Diagram d_swap();
Diagram d_spider(NodeType color, int m, int n, Phase phase = Phase(0));
Diagram d_antipode();

// --- Categorical structure -------------------------------------------------

/// Pipe a's outputs into b's inputs: the composite runs a first, then b.
Diagram d_compose(const Diagram &a, const Diagram &b);
Diagram d_tensor(const Diagram &a, const Diagram &b);
/// Reverse the diagram and negate all phases (adjoint).
Diagram d_dagger(const Diagram &d);
/// Reverse the diagram keeping phases (transpose).
Diagram d_transpose(const Diagram &d);
/// Negate all phases keeping the shape (entrywise conjugate).
Diagram d_conjugate(const Diagram &d);

/// The 1 -> 1 diagram denoting n as a morphism: 0 is red-unit after green-counit,
/// n+1 the multiply/copy recursion, and negatives compose with the antipode.
Diagram internal_integer_diagram(int64_t n);

/// Boundary-respecting graph isomorphism.  Spider legs on the same side are
/// interchangeable; boundary nodes must correspond by interface position.
bool diagram_iso(const Diagram &a, const Diagram &b);

} // namespace frob

#endif
