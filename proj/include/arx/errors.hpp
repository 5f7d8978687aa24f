#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "arx/graph.hpp"

namespace arx {

// Input violates an operation's precondition (bad index, empty set, ...).
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// An exhaustive checker was called on a graph above its size cut-off.
class SizeLimit : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed input file.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A class-membership certificate: the algorithm proved that its input is not
// in the graph class the operation is specified for. `witness` holds the
// vertices that demonstrate the violation; what they mean depends on kind().
class Certificate : public std::runtime_error {
 public:
  Certificate(std::string kind, std::string detail, std::vector<Vertex> witness)
      : std::runtime_error(kind + ": " + detail),
        kind_(std::move(kind)),
        detail_(std::move(detail)),
        witness_(std::move(witness)) {}

  const std::string& kind() const noexcept { return kind_; }
  const std::string& detail() const noexcept { return detail_; }
  const std::vector<Vertex>& witness() const noexcept { return witness_; }

 private:
  std::string kind_;
  std::string detail_;
  std::vector<Vertex> witness_;
};

// Witness is an odd closed walk v0 v1 ... v_{2l} (v_{2l} adjacent to v0).
class NotBipartite : public Certificate {
 public:
  explicit NotBipartite(const std::vector<Vertex>& odd_cycle)
      : Certificate("NotBipartite", "odd cycle of length " + std::to_string(odd_cycle.size()), odd_cycle) {}
};

class NotConnected : public Certificate {
 public:
  explicit NotConnected(std::vector<Vertex> unreached)
      : Certificate("NotConnected", "graph is disconnected", std::move(unreached)) {}
};

// Raised by the retract pipelines when a structural guarantee of the class
// fails (empty witness set, overlapping witness sets, colour overflow, ...).
class NotRetract : public Certificate {
 public:
  NotRetract(std::string detail, std::vector<Vertex> witness, int step = -1)
      : Certificate("NotRetract", std::move(detail), std::move(witness)), step_(step) {}
  int step() const noexcept { return step_; }

 private:
  int step_;
};

// Witness is an induced 2K2 (4 vertices: ab, cd), C4 or C5 when one was found.
class NotSplit : public Certificate {
 public:
  NotSplit(std::string detail, std::vector<Vertex> witness)
      : Certificate("NotSplit", std::move(detail), std::move(witness)) {}
};

class NotPlanarEmbedding : public Certificate {
 public:
  NotPlanarEmbedding(std::string detail, std::vector<Vertex> witness = {})
      : Certificate("NotPlanarEmbedding", std::move(detail), std::move(witness)) {}
};

class NotBiconnected : public Certificate {
 public:
  explicit NotBiconnected(Vertex cut_vertex)
      : Certificate("NotBiconnected", "cut vertex " + std::to_string(cut_vertex),
                    {cut_vertex}) {}
};

// The neighbourhood hypergraph of one side has no join tree.
class NotDualHypertree : public Certificate {
 public:
  NotDualHypertree(std::string detail, std::vector<Vertex> witness)
      : Certificate("NotDualHypertree", std::move(detail), std::move(witness)) {}
};

class GateMissing : public Certificate {
 public:
  GateMissing(std::string detail, std::vector<Vertex> witness)
      : Certificate("GateMissing", std::move(detail), std::move(witness)) {}
};

class NoCentralVertexFound : public Certificate {
 public:
  explicit NoCentralVertexFound(std::string detail)
      : Certificate("NoCentralVertexFound", std::move(detail), {}) {}
};

}  // namespace arx
