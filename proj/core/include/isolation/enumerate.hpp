#pragma once

#include <cstdint>
#include <functional>
#include <istream>
#include <string>
#include <variant>
#include <vector>

#include "isolation/graph.hpp"

namespace isolab {

inline constexpr int kBuiltinEnumerationCap = 9;

struct BuiltinSource {};
struct Graph6File {
  std::string path;
};
struct Graph6Stdin {};
using GraphSource = std::variant<BuiltinSource, Graph6File, Graph6Stdin>;

/// "builtin", "file:PATH" or "-".
GraphSource parse_source(std::string_view text);

/// Which graphs to stream. The builtin generator needs n_max <= 9; external
/// streams are filtered to orders in [n_min, n_max].
struct EnumSpec {
  int n_min = 1;
  int n_max = 1;
  bool connected_only = true;
  GraphSource source = BuiltinSource{};
  /// On a malformed graph6 line, throw instead of recording and skipping it.
  bool strict_parse = false;

  static EnumSpec builtin(int n, bool connected_only = true) {
    return EnumSpec{n, n, connected_only, BuiltinSource{}, false};
  }
};

struct ParseIssue {
  long line;
  std::string message;
};

struct EnumerationSummary {
  std::uint64_t emitted = 0;
  std::vector<ParseIssue> issues;
};

using GraphVisitor = std::function<void(const Graph&)>;

/// Streams the graphs described by `spec` in a deterministic order. Builtin:
/// one representative per isomorphism class, orders ascending. External:
/// stream order. Throws SizeCapError above the builtin cap and Graph6Error
/// (with its line number) in strict mode.
EnumerationSummary enumerate(const EnumSpec& spec, const GraphVisitor& visit);
/// Same for an already-open graph6 stream.
EnumerationSummary enumerate_graph6(std::istream& in, const EnumSpec& spec,
                                    const GraphVisitor& visit);

std::vector<Graph> enumerate_all(const EnumSpec& spec);

/// Number of connected graphs on n vertices up to isomorphism (n <= 9).
std::uint64_t count_connected(int n);

/// True iff g's upper-triangle string (graph6 bit order) is maximal among all
/// relabelings of g. Exactly one labeled graph per isomorphism class passes.
bool is_canonical(const Graph& g);

}  // namespace isolab
