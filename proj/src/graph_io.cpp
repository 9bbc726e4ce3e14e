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


#include "reglab/graph_io.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "reglab/errors.hpp"

namespace reglab {

namespace {

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

int parse_int(const std::string& s) {
  std::size_t used = 0;
  int v = 0;
  try {
    v = std::stoi(s, &used);
  } catch (const std::exception&) {
    throw DomainError("not an integer: '" + s + "'");
  }
  if (used != s.size()) throw DomainError("not an integer: '" + s + "'");
  return v;
}

}  // namespace

AnyGraph parse_graph_text(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  bool have_header = false, directed = false;
  int n = 0;
  std::set<std::pair<int, int>> seen;
  std::vector<std::pair<int, int>> edges;
  while (std::getline(in, line)) {
    ++lineno;
    line = trim(line);
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ls(line);
    std::string a, b, extra;
    ls >> a >> b;
    if (ls >> extra) throw DomainError("line " + std::to_string(lineno) + ": expected two fields");
    if (!have_header) {
      if (a != "graph" && a != "digraph") throw DomainError("missing 'graph <n>' or 'digraph <n>' header");
      directed = a == "digraph";
      n = parse_int(b);
      if (n < 0) throw DomainError("negative vertex count");
      have_header = true;
      continue;
    }
    if (b.empty()) throw DomainError("line " + std::to_string(lineno) + ": expected two fields");
    int u = parse_int(a), v = parse_int(b);
    if (u < 0 || v < 0 || u >= n || v >= n) throw DomainError("line " + std::to_string(lineno) + ": index out of range");
    if (u == v) throw DomainError("line " + std::to_string(lineno) + ": loop");
    std::pair<int, int> key = directed ? std::make_pair(u, v) : std::make_pair(std::min(u, v), std::max(u, v));
    if (!seen.insert(key).second) throw DomainError("line " + std::to_string(lineno) + ": duplicate edge");
    edges.emplace_back(u, v);
  }
  if (!have_header) throw DomainError("empty graph file");
  if (directed) return Digraph(n, edges);
  return Graph(n, edges);
}

AnyGraph read_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DomainError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_graph_text(ss.str());
}

std::string format_graph(const Graph& g) {
  std::ostringstream out;
  out << "graph " << g.n() << "\n";
  for (auto [u, v] : g.edges()) out << u << " " << v << "\n";
  return out.str();
}

std::string format_graph(const Digraph& g) {
  std::ostringstream out;
  out << "digraph " << g.n() << "\n";
  for (auto [u, v] : g.edges()) out << u << " " << v << "\n";
  return out.str();
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw DomainError("cannot write " + path);
  out << text;
}

VertexSet parse_vertex_set(const std::string& text, int n) {
  VertexSet s(n);
  std::istringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    item = trim(item);
    if (item.empty()) continue;
    auto dash = item.find('-', 1);
    int lo = 0, hi = 0;
    if (dash == std::string::npos) {
      lo = hi = parse_int(item);
    } else {
      lo = parse_int(trim(item.substr(0, dash)));
      hi = parse_int(trim(item.substr(dash + 1)));
    }
    if (lo < 0 || hi >= n || lo > hi) throw DomainError("bad vertex range '" + item + "'");
    for (int v = lo; v <= hi; ++v) s.insert(v);
  }
  return s;
}

std::string format_vertex_set(const VertexSet& s) {
  std::vector<int> m = s.members();
  std::string out;
  for (std::size_t i = 0; i < m.size();) {
    std::size_t j = i;
    while (j + 1 < m.size() && m[j + 1] == m[j] + 1) ++j;
    if (!out.empty()) out += ",";
    out += std::to_string(m[i]);
    if (j > i) out += "-" + std::to_string(m[j]);
    i = j + 1;
  }
  return out;
}

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  std::istringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    item = trim(item);
    if (!item.empty()) out.push_back(parse_int(item));
  }
  return out;
}

}  // namespace reglab
