#pragma once

#include "isolation/graph.hpp"

namespace isolab {

/// Spine length floor(n / (k + 1)).
int spine_count(int n, int k);
/// n - k * spine_count(n, k); lies in [a, a + k].
int spine_with_extras(int n, int k);
/// b - a for k = 3: the number of pendant extras hung on the last spine vertex.
int extra_count_p3(int n);

/// The extremal graph B_{n,F}. For n <= |V(F)| this is P_n. Otherwise the
/// labeling is: spine 0..a-1 (a path), extras a..b-1 each joined to spine
/// vertex a-1, then copy i of F on b + i*k .. b + i*k + k-1 with every copy
/// vertex joined to spine vertex i.
Graph build_B(int n, NamedGraph f);

/// B'_{n,P3}: B_{n,P3} with each spine vertex joined only to the middle vertex
/// of its P3 copy. Same labeling as build_B.
Graph build_B_prime_P3(int n);

/// B'_{7r,C6}: a path 0..r-1 where path vertex i is also the pendant vertex of
/// a C6' copy whose 6-cycle sits on r + 6i .. r + 6i + 5 (pendant attached to
/// r + 6i).
Graph build_B_prime_7r_C6(int r);

enum class PatternKind { Path, Cycle };

/// The explicit E_k-isolating sets of paths and cycles used in the degree-2
/// case of the inductions, as 0-based labels on the path 0-...-(n-1) or the
/// cycle 0-...-(n-1)-0:
///   (path, 2): 4i - 1 for 1 <= i <= n/4       (n >= 4)
///   (cycle, 2): 5i - 5 for i <= (n + 4) / 5   (n >= 4)
///   (path, 3): 5i - 1 for 1 <= i <= n/5       (n >= 1, n != 4)
///   (cycle, 3): 6i - 6 for i <= (n + 5) / 6   (n >= 3)
/// P4 is excluded for k = 3: its three edges survive the empty pattern.
VertexSet pattern_isolating_set(PatternKind kind, int n, int k);

}  // namespace isolab
