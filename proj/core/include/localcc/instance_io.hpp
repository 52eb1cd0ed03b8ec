#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>

#include "localcc/signed_graph.hpp"

namespace localcc {

/// Malformed instance text. `line()` is 1-based, 0 when not tied to a line.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

// Instance text format, one directive per line, '#' to end of line is a comment:
//
//   graph complete <n>          |  graph bipartite <n1> <n2>
//   default <+|->
//   <+|-> <u> <v>               (exceptions to the default sign)
//
// Complete graphs take 0 <= u < v < n. Bipartite graphs take u as a V1 index
// and v as a V2 index, both side-local. Repeating a pair is an error.

SignedGraph parse_instance(std::string_view text);
SignedGraph read_instance_file(const std::string& path);

/// Canonical text: the majority sign is the default (ties pick +) and the
/// exception lines are sorted by (u, v).
std::string serialize_instance(const SignedCompleteGraph& g);
std::string serialize_instance(const SignedBipartiteGraph& g);
std::string serialize_instance(const SignedGraph& g);

}  // namespace localcc
