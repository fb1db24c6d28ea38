#include "cfc/io.hpp"

#include <charconv>
#include <istream>
#include <ostream>
#include <sstream>

namespace cfc {
namespace {

class LineReader {
 public:
  explicit LineReader(std::istream& in) : in_(in) {}

  // Next non-comment line; false at end of input.
  bool next(std::string& line) {
    while (std::getline(in_, line)) {
      ++number_;
      if (!line.empty() && line.back() == '\r') line.pop_back();
      auto first = line.find_first_not_of(" \t");
      if (first == std::string::npos || line[first] == 'c') continue;
      return true;
    }
    return false;
  }

  std::size_t line() const { return number_; }

  std::vector<std::uint64_t> numbers(const std::string& line) const {
    std::vector<std::uint64_t> out;
    const char* p = line.data();
    const char* end = p + line.size();
    while (p < end) {
      if (*p == ' ' || *p == '\t') {
        ++p;
        continue;
      }
      std::uint64_t value = 0;
      auto [next, ec] = std::from_chars(p, end, value);
      if (ec != std::errc() || (next < end && *next != ' ' && *next != '\t'))
        throw ParseError(number_, "expected a non-negative integer in '" + line + "'");
      out.push_back(value);
      p = next;
    }
    return out;
  }

  // Parses `p <kind> a [b]`.
  std::vector<std::uint64_t> header(const std::string& kind, std::size_t fields) {
    std::string line;
    if (!next(line)) throw ParseError(number_ + 1, "missing 'p " + kind + "' header");
    std::istringstream ss(line);
    std::string p, k;
    ss >> p >> k;
    if (p != "p" || k != kind) throw ParseError(number_, "expected 'p " + kind + "' header, got '" + line + "'");
    std::string rest;
    std::getline(ss, rest);
    auto values = numbers(rest);
    if (values.size() != fields)
      throw ParseError(number_, "header 'p " + kind + "' takes " + std::to_string(fields) + " numbers");
    return values;
  }

  void expect_end() {
    std::string line;
    if (next(line)) throw ParseError(number_, "unexpected trailing line '" + line + "'");
  }

 private:
  std::istream& in_;
  std::size_t number_ = 0;
};

template <class T>
std::string render(const T& value, void (*writer)(std::ostream&, const T&)) {
  std::ostringstream out;
  writer(out, value);
  return out.str();
}

}  // namespace

Hypergraph read_hypergraph(std::istream& in) {
  LineReader r(in);
  auto head = r.header("cf", 2);
  const std::size_t n = head[0], m = head[1];
  std::vector<std::vector<Vertex>> edges;
  std::string line;
  for (std::size_t e = 0; e < m; ++e) {
    if (!r.next(line)) throw ParseError(r.line() + 1, "expected " + std::to_string(m) + " edges, got " + std::to_string(e));
    auto vs = r.numbers(line);
    if (vs.empty()) throw ParseError(r.line(), "empty edge");
    for (auto v : vs)
      if (v >= n) throw ParseError(r.line(), "vertex " + std::to_string(v) + " out of range");
    edges.emplace_back(vs.begin(), vs.end());
  }
  r.expect_end();
  return Hypergraph(n, std::move(edges));
}

Graph read_graph(std::istream& in) {
  LineReader r(in);
  auto head = r.header("gr", 2);
  const std::size_t n = head[0], m = head[1];
  Graph g(n);
  std::string line;
  for (std::size_t e = 0; e < m; ++e) {
    if (!r.next(line)) throw ParseError(r.line() + 1, "expected " + std::to_string(m) + " edges, got " + std::to_string(e));
    auto vs = r.numbers(line);
    if (vs.size() != 2) throw ParseError(r.line(), "graph edge needs two endpoints");
    if (vs[0] >= n || vs[1] >= n) throw ParseError(r.line(), "endpoint out of range");
    if (vs[0] == vs[1]) throw ParseError(r.line(), "loop at vertex " + std::to_string(vs[0]));
    g.add_edge(vs[0], vs[1]);
  }
  r.expect_end();
  return g;
}

ListAssignment read_lists(std::istream& in) {
  LineReader r(in);
  auto head = r.header("la", 1);
  std::vector<std::vector<Color>> lists;
  std::string line;
  for (std::size_t v = 0; v < head[0]; ++v) {
    if (!r.next(line)) throw ParseError(r.line() + 1, "expected " + std::to_string(head[0]) + " lists");
    auto cs = r.numbers(line);
    if (cs.empty()) throw ParseError(r.line(), "empty list for vertex " + std::to_string(v));
    lists.emplace_back(cs.begin(), cs.end());
  }
  r.expect_end();
  return ListAssignment(std::move(lists));
}

PartialColoring read_coloring(std::istream& in, std::size_t n) {
  std::vector<std::optional<Color>> colors;
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    auto a = line.find_first_not_of(" \t");
    if (a == std::string::npos) continue;
    auto b = line.find_last_not_of(" \t");
    std::string token = line.substr(a, b - a + 1);
    if (token == "-") {
      colors.emplace_back();
      continue;
    }
    Color c = 0;
    auto [p, ec] = std::from_chars(token.data(), token.data() + token.size(), c);
    if (ec != std::errc() || p != token.data() + token.size())
      throw ParseError(number, "expected a color id or '-', got '" + token + "'");
    colors.emplace_back(c);
  }
  if (n != 0 && colors.size() != n)
    throw ParseError(number, "coloring has " + std::to_string(colors.size()) + " entries, expected " + std::to_string(n));
  PartialColoring out(colors.size());
  for (std::size_t v = 0; v < colors.size(); ++v)
    if (colors[v]) out.set(v, *colors[v]);
  return out;
}

void write_hypergraph(std::ostream& out, const Hypergraph& h) {
  out << "p cf " << h.num_vertices() << ' ' << h.num_edges() << '\n';
  for (const auto& e : h.edges()) {
    for (std::size_t i = 0; i < e.size(); ++i) out << (i ? " " : "") << e[i];
    out << '\n';
  }
}

void write_graph(std::ostream& out, const Graph& g) {
  auto edges = g.edge_list();
  out << "p gr " << g.num_vertices() << ' ' << edges.size() << '\n';
  for (auto [u, v] : edges) out << u << ' ' << v << '\n';
}

void write_lists(std::ostream& out, const ListAssignment& lists) {
  out << "p la " << lists.size() << '\n';
  for (const auto& l : lists.lists()) {
    for (std::size_t i = 0; i < l.size(); ++i) out << (i ? " " : "") << l[i];
    out << '\n';
  }
}

void write_coloring(std::ostream& out, const PartialColoring& c) {
  for (Vertex v = 0; v < c.size(); ++v) {
    if (auto col = c[v])
      out << *col << '\n';
    else
      out << "-\n";
  }
}

std::string to_text(const Hypergraph& h) { return render(h, &write_hypergraph); }
std::string to_text(const Graph& g) { return render(g, &write_graph); }
std::string to_text(const ListAssignment& lists) { return render(lists, &write_lists); }
std::string to_text(const PartialColoring& c) { return render(c, &write_coloring); }

}  // namespace cfc
