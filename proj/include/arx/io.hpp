#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "arx/graph.hpp"

namespace arx {

// Text format: a header line "n m" followed by m lines "u v". Throws
// ParseError on malformed text and on loops, duplicate edges or out-of-range
// endpoints; disconnected graphs are rejected unless `allow_disconnected`.
Graph read_graph(std::istream& in, bool allow_disconnected = false);
void write_graph(std::ostream& out, const Graph& g);

struct ColoredInput {
  Graph graph;
  std::vector<int> colour;  // 1-based; empty when the file has no colour line
};

// Graph format followed by an optional line "colors c_0 ... c_{n-1}".
ColoredInput read_colored_graph(std::istream& in);
void write_colored_graph(std::ostream& out, const Graph& g, const std::vector<int>& colour);

Graph load_graph(const std::string& path);
std::string read_file(const std::string& path);

// Internal tokenizer shared by the text formats.
class TokenReader {
 public:
  explicit TokenReader(std::istream& in) : in_(in) {}
  bool next(std::string& tok);
  long long integer(const char* what);
  std::string word(const char* what);
  bool at_end();
  int line() const noexcept { return line_; }

 private:
  std::istream& in_;
  int line_ = 1;
};

// Reads "n m" + edges from a token stream without the connectivity check.
Graph read_graph_body(TokenReader& tr);

}  // namespace arx
