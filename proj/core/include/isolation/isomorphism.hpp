#pragma once

#include <optional>
#include <vector>

#include "isolation/graph.hpp"

namespace isolab {

inline constexpr int kIsomorphismCap = 9;

/// Exact isomorphism test for graphs with at most 9 vertices: degree-sequence
/// prefilter, then backtracking over degree-compatible assignments. Throws
/// SizeCapError above the cap.
bool is_isomorphic_small(const Graph& a, const Graph& b);

/// A mapping m with a.has_edge(u,v) == b.has_edge(m[u],m[v]), if one exists.
std::optional<std::vector<int>> find_isomorphism_small(const Graph& a, const Graph& b);

/// True iff G[part] is isomorphic to `pattern`. Cheap rejection on vertex and
/// edge counts before any search.
bool induced_is_isomorphic(const Graph& g, VertexSet part, const Graph& pattern);

}  // namespace isolab
