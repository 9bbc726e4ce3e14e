// Copyright 2026 The reglab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#pragma once

#include <string>
#include <variant>
#include <vector>

#include "reglab/graph.hpp"

namespace reglab {

// Text format: a header line `graph <n>` or `digraph <n>`, then one `u v`
// pair per line. Blank lines and lines starting with '#' are skipped.
using AnyGraph = std::variant<Graph, Digraph>;

AnyGraph parse_graph_text(const std::string& text);
AnyGraph read_graph_file(const std::string& path);
std::string format_graph(const Graph& g);
std::string format_graph(const Digraph& g);
void write_text_file(const std::string& path, const std::string& text);

// Comma-separated ids and inclusive ranges, e.g. "0-5,7".
VertexSet parse_vertex_set(const std::string& text, int n);
std::string format_vertex_set(const VertexSet& s);
std::vector<int> parse_int_list(const std::string& text);

}  // namespace reglab
