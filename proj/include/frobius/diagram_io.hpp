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

#ifndef FROBIUS_DIAGRAM_IO_HPP
#define FROBIUS_DIAGRAM_IO_HPP

#include <optional>
#include <string>

#include "frobius/abelian.hpp"
#include "frobius/diagram.hpp"

namespace frob {

/// Phase-group context for term parsing.  With a finite group set, integer and
/// tuple phase literals are read as group coordinates and mapped to angles;
/// without one (the circle group), literals are rational turns.
struct TermIoOptions {
    std::optional<AbelianGroup> green_group;
    std::optional<AbelianGroup> red_group;
};

/// Grammar: g(m,n,phase) | r(m,n,phase) | s | id | swap | comp(t1,t2) |
/// tens(t1,t2) | int(k).  comp(t1,t2) pipes t1 into t2.
Diagram parse_term(const std::string &text, const TermIoOptions &opts = {});

/// Renders a diagram back into the term grammar by topological layering.
/// Throws domain_error for diagrams with directed cycles or bare loops, which
/// have no term form over these generators.
std::string print_term(const Diagram &d);

/// Structured dump, bit-exact under round-trip: "frobius-graph v1" header,
/// then node/edge/in/out lines.  Boundary nodes appear only through the
/// interface lines; a wire from input i straight to output j shows up as the
/// token out:<j> at position i of the `in` line (and in:<i> on the `out` line).
std::string print_graph(const Diagram &d);
Diagram parse_graph(const std::string &text);

/// Graphviz rendering for debugging.
std::string print_dot(const Diagram &d);

/// Phase formatting shared by term and graph printers: rational turns.
std::string phase_to_string(const Phase &p);
Phase parse_phase(const std::string &text, const std::optional<AbelianGroup> &group);

} // namespace frob

#endif
