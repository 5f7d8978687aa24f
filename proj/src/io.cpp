#include "arx/io.hpp"

#include <cctype>
#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "arx/errors.hpp"

namespace arx {

bool TokenReader::next(std::string& tok) {
  tok.clear();
  int c;
  while ((c = in_.peek()) != EOF && std::isspace(c)) {
    if (c == '\n') ++line_;
    in_.get();
  }
  while ((c = in_.peek()) != EOF && !std::isspace(c)) tok.push_back(static_cast<char>(in_.get()));
  return !tok.empty();
}

bool TokenReader::at_end() {
  int c;
  while ((c = in_.peek()) != EOF && std::isspace(c)) {
    if (c == '\n') ++line_;
    in_.get();
  }
  return c == EOF;
}

long long TokenReader::integer(const char* what) {
  std::string tok;
  if (!next(tok)) throw ParseError("line " + std::to_string(line_) + ": expected " + what + ", got end of input");
  long long v = 0;
  auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc() || p != tok.data() + tok.size()) {
    throw ParseError("line " + std::to_string(line_) + ": expected " + what + ", got '" + tok + "'");
  }
  return v;
}

std::string TokenReader::word(const char* what) {
  std::string tok;
  if (!next(tok)) throw ParseError("line " + std::to_string(line_) + ": expected " + what);
  return tok;
}

Graph read_graph_body(TokenReader& tr) {
  long long n = tr.integer("vertex count");
  long long m = tr.integer("edge count");
  if (n < 1 || n > (1LL << 30)) throw ParseError("vertex count out of range");
  if (m < 0 || m > n * (n - 1) / 2) throw ParseError("edge count out of range");
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(m));
  for (long long i = 0; i < m; ++i) {
    long long u = tr.integer("edge endpoint");
    long long v = tr.integer("edge endpoint");
    if (u < 0 || v < 0 || u >= n || v >= n) {
      throw ParseError("line " + std::to_string(tr.line()) + ": endpoint out of range");
    }
    edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
  }
  try {
    return Graph::from_edges(static_cast<Vertex>(n), edges);
  } catch (const InvalidArgument& e) {
    throw ParseError(e.what());
  }
}

Graph read_graph(std::istream& in, bool allow_disconnected) {
  TokenReader tr(in);
  Graph g = read_graph_body(tr);
  if (!tr.at_end()) throw ParseError("line " + std::to_string(tr.line()) + ": trailing content");
  if (!allow_disconnected) require_connected(g);
  return g;
}

void write_graph(std::ostream& out, const Graph& g) {
  out << g.order() << ' ' << g.size() << '\n';
  for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

ColoredInput read_colored_graph(std::istream& in) {
  TokenReader tr(in);
  ColoredInput r;
  r.graph = read_graph_body(tr);
  require_connected(r.graph);
  if (tr.at_end()) return r;
  if (tr.word("'colors'") != "colors") throw ParseError("expected 'colors' line");
  r.colour.resize(static_cast<std::size_t>(r.graph.order()));
  for (auto& c : r.colour) {
    long long x = tr.integer("colour");
    if (x < 1 || x > r.graph.order()) throw ParseError("colour out of range");
    c = static_cast<int>(x);
  }
  if (!tr.at_end()) throw ParseError("trailing content after colours");
  return r;
}

void write_colored_graph(std::ostream& out, const Graph& g, const std::vector<int>& colour) {
  write_graph(out, g);
  out << "colors";
  for (int c : colour) out << ' ' << c;
  out << '\n';
}

std::string read_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

Graph load_graph(const std::string& path) {
  std::istringstream in(read_file(path));
  return read_graph(in);
}

}  // namespace arx
