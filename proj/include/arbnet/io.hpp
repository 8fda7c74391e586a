#pragma once

#include <cctype>
#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "errors.hpp"
#include "graph.hpp"
#include "labelled.hpp"
#include "network.hpp"

namespace arbnet::io {

namespace detail {

inline std::string trim(const std::string& s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return s.substr(b, e - b);
}

// Non-blank, non-comment lines with their 1-based line numbers.
inline std::vector<std::pair<std::size_t, std::string>> content_lines(const std::string& text) {
  std::vector<std::pair<std::size_t, std::string>> out;
  std::istringstream in(text);
  std::string line;
  for (std::size_t no = 1; std::getline(in, line); ++no) {
    std::string t = trim(line);
    if (t.empty() || t.front() == '#') continue;
    out.emplace_back(no, std::move(t));
  }
  return out;
}

inline std::vector<std::size_t> read_numbers(const std::string& line, std::size_t no, std::size_t count) {
  std::istringstream in(line);
  std::vector<std::size_t> out;
  std::string tok;
  while (in >> tok) {
    if (tok.find_first_not_of("0123456789") != std::string::npos || tok.size() > 18)
      throw ParseError("expected a non-negative integer, got '" + tok + "'", no);
    out.push_back(std::stoull(tok));
  }
  if (out.size() != count)
    throw ParseError("expected " + std::to_string(count) + " integers, got " + std::to_string(out.size()), no);
  return out;
}

}  // namespace detail

// "n m" header, then m lines "u v" (0-based); blank lines and '#' comments ignored.
inline UndirectedGraph parse_edge_list(const std::string& text) {
  const auto lines = detail::content_lines(text);
  if (lines.empty()) throw ParseError("empty input: missing 'n m' header", 1);
  const auto header = detail::read_numbers(lines[0].second, lines[0].first, 2);
  const std::size_t n = header[0], m = header[1];
  if (n > 100000) throw ParseError("vertex count too large", lines[0].first);
  if (lines.size() - 1 < m)
    throw ParseError("expected " + std::to_string(m) + " edges, found " + std::to_string(lines.size() - 1),
                     lines.back().first);
  if (lines.size() - 1 > m) throw ParseError("unexpected content after the last edge", lines[m + 1].first);
  UndirectedGraph g(n);
  for (std::size_t i = 1; i <= m; ++i) {
    const auto [no, line] = lines[i];
    const auto e = detail::read_numbers(line, no, 2);
    if (e[0] >= n || e[1] >= n) throw ParseError("vertex out of range [0," + std::to_string(n) + ")", no);
    if (e[0] == e[1]) throw ParseError("self-loop", no);
    if (!g.add_edge(e[0], e[1])) throw ParseError("duplicate edge", no);
  }
  return g;
}

inline std::string serialize_edge_list(const UndirectedGraph& g) {
  std::string out = std::to_string(g.size()) + " " + std::to_string(g.edge_count()) + "\n";
  for (auto [u, v] : g.edges()) out += std::to_string(u) + " " + std::to_string(v) + "\n";
  return out;
}

inline std::string serialize_graph6(const UndirectedGraph& g) {
  const std::size_t n = g.size();
  std::string out;
  if (n <= 62) {
    out += static_cast<char>(63 + n);
  } else if (n <= 258047) {
    out += '~';
    for (int shift = 12; shift >= 0; shift -= 6) out += static_cast<char>(63 + ((n >> shift) & 63));
  } else {
    throw PreconditionError("graph6: graph too large");
  }
  int bits = 0, acc = 0;
  for (Vertex j = 1; j < n; ++j)
    for (Vertex i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++bits == 6) {
        out += static_cast<char>(63 + acc);
        bits = acc = 0;
      }
    }
  if (bits) out += static_cast<char>(63 + (acc << (6 - bits)));
  return out;
}

inline UndirectedGraph parse_graph6(std::string text) {
  text = detail::trim(text);
  if (text.rfind(">>graph6<<", 0) == 0) text = text.substr(10);
  if (text.empty()) throw ParseError("empty graph6 string", 1);
  for (char c : text)
    if (c < 63 || c > 126) throw ParseError("invalid graph6 character", 1);
  std::size_t n = 0, pos = 0;
  if (text[0] != '~') {
    n = static_cast<std::size_t>(text[0] - 63);
    pos = 1;
  } else {
    if (text.size() < 4 || text[1] == '~') throw ParseError("unsupported graph6 size prefix", 1);
    for (int i = 1; i <= 3; ++i) n = (n << 6) | static_cast<std::size_t>(text[i] - 63);
    pos = 4;
  }
  const std::size_t pairs = n * (n - (n > 0)) / 2;
  const std::size_t need = (pairs + 5) / 6;
  if (text.size() - pos != need)
    throw ParseError("graph6 body has " + std::to_string(text.size() - pos) + " bytes, expected " +
                         std::to_string(need), 1);
  UndirectedGraph g(n);
  std::size_t k = 0;
  for (Vertex j = 1; j < n; ++j)
    for (Vertex i = 0; i < j; ++i, ++k) {
      const int byte = text[pos + k / 6] - 63;
      if ((byte >> (5 - k % 6)) & 1) g.add_edge(i, j);
    }
  if (pairs % 6) {
    const int last = text.back() - 63;
    if (last & ((1 << (6 - pairs % 6)) - 1)) throw ParseError("graph6 padding bits must be zero", 1);
  }
  return g;
}

// Edge list when the first content line is "n m", graph6 otherwise.
inline UndirectedGraph parse_graph(const std::string& text) {
  const auto lines = detail::content_lines(text);
  if (lines.empty()) throw ParseError("empty input", 1);
  if (lines[0].second.find_first_of(" \t") != std::string::npos ||
      lines[0].second.find_first_not_of("0123456789") == std::string::npos)
    return parse_edge_list(text);
  if (lines.size() != 1) throw ParseError("graph6 input must be a single line", lines[1].first);
  return parse_graph6(lines[0].second);
}

// JSON document with keys arcs, labels, leaves, vertices (in that order), one arc
// or map entry per line. Output is canonical: arcs sorted by parent then child
// position in `vertices`.
inline std::string serialize_network(const LabelledNetwork& ln) {
  const NetworkSpec s = ln.network().spec();
  auto str = [](const std::string& x) { return nlohmann::json(x).dump(); };
  auto object = [&](const auto& m) {
    if (m.empty()) return std::string("{}");
    std::string out = "{\n";
    std::size_t i = 0;
    for (const auto& [k, v] : m)
      out += "    " + str(k) + ": " + std::to_string(v) + (++i < m.size() ? ",\n" : "\n");
    return out + "  }";
  };
  std::string out = "{\n  \"arcs\": [";
  for (std::size_t i = 0; i < s.arcs.size(); ++i)
    out += std::string(i ? ",\n" : "\n") + "    [" + str(s.arcs[i].first) + ", " + str(s.arcs[i].second) + "]";
  out += s.arcs.empty() ? "],\n" : "\n  ],\n";
  out += "  \"labels\": " + object(ln.labels()) + ",\n";
  out += "  \"leaves\": " + object(s.leaves) + ",\n";
  out += "  \"vertices\": [";
  for (std::size_t i = 0; i < s.vertices.size(); ++i) out += (i ? ", " : "") + str(s.vertices[i]);
  return out + "]\n}\n";
}

// Parses and certifies a network document; InvalidNetwork for axiom breaches.
inline LabelledNetwork parse_network(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("malformed network document: ") + e.what());
  }
  if (!j.is_object()) throw ParseError("network document must be an object");
  for (const auto& [key, value] : j.items())
    if (key != "vertices" && key != "arcs" && key != "leaves" && key != "labels")
      throw ParseError("unknown field '" + key + "'");
  for (const char* key : {"vertices", "arcs", "leaves", "labels"})
    if (!j.contains(key)) throw ParseError(std::string("missing field '") + key + "'");

  NetworkSpec s;
  std::map<std::string, int> labels;
  try {
    if (!j["vertices"].is_array() || !j["arcs"].is_array() || !j["leaves"].is_object() ||
        !j["labels"].is_object())
      throw ParseError("vertices and arcs must be arrays, leaves and labels objects");
    for (const auto& v : j["vertices"]) s.vertices.push_back(v.get<std::string>());
    for (const auto& a : j["arcs"]) {
      if (!a.is_array() || a.size() != 2) throw ParseError("each arc must be a [parent, child] pair");
      s.arcs.emplace_back(a[0].get<std::string>(), a[1].get<std::string>());
    }
    for (const auto& [name, t] : j["leaves"].items()) {
      if (!t.is_number_unsigned()) throw ParseError("leaf index of '" + name + "' must be a non-negative integer");
      s.leaves[name] = t.get<std::size_t>();
    }
    for (const auto& [name, t] : j["labels"].items()) {
      if (!t.is_number_integer()) throw ParseError("label of '" + name + "' must be 0 or 1");
      labels[name] = t.get<int>();
    }
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("bad field type: ") + e.what());
  }
  if (s.leaves.empty()) throw ParseError("field 'leaves' must name every leaf");
  return LabelledNetwork(validate_network(s), labels);
}

// Graphviz drawing: arcs point down, label-1 vertices filled, label-0 hollow.
inline std::string to_dot(const LabelledNetwork& ln) {
  const auto& net = ln.network();
  auto quote = [](const std::string& s) {
    std::string q = "\"";
    for (char c : s) {
      if (c == '"' || c == '\\') q += '\\';
      q += c;
    }
    return q + "\"";
  };
  std::string out = "digraph network {\n  rankdir=TB;\n  node [fontsize=10];\n";
  for (Vertex v = 0; v < net.size(); ++v) {
    out += "  " + quote(net.name(v)) + " [";
    if (net.is_leaf(v))
      out += "shape=plaintext, label=" + quote(net.name(v) + " (" + std::to_string(*net.taxon(v)) + ")");
    else if (net.is_branching(v))
      out += std::string("shape=circle, width=0.2, label=\"\", xlabel=") + quote(net.name(v)) +
             (ln.label(v) == 1 ? ", style=filled, fillcolor=black" : ", style=solid, fillcolor=white");
    else
      out += "shape=point, xlabel=" + quote(net.name(v));
    out += "];\n";
  }
  for (auto [u, v] : net.arcs()) out += "  " + quote(net.name(u)) + " -> " + quote(net.name(v)) + ";\n";
  return out + "}\n";
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write '" + path + "'");
  out << content;
}

}  // namespace arbnet::io
