#include "isolation/prover.hpp"

#include <algorithm>
#include <unordered_map>

#include "isolation/constructions.hpp"
#include "isolation/errors.hpp"
#include "isolation/family.hpp"
#include "isolation/graph6.hpp"
#include "isolation/isomorphism.hpp"

namespace isolab {

std::string format_trace_entry(const TraceEntry& e) {
  return "case=" + e.label + " n=" + std::to_string(e.n) + " v=" + std::to_string(e.v) +
         " |d|=" + std::to_string(e.size);
}

std::string_view top_level_label(std::string_view label) {
  return label.substr(0, label.find('/'));
}

std::optional<std::vector<int>> find_cycle_through(const Graph& g, VertexSet within, int start,
                                                   int length) {
  if (!within.contains(start) || length < 3) return std::nullopt;
  std::vector<int> path{start};
  VertexSet used = VertexSet::single(start);
  auto extend = [&](auto&& self) -> bool {
    const int last = path.back();
    if (static_cast<int>(path.size()) == length) return g.has_edge(last, start);
    for (int u : neighbors_within(g, last, within) - used) {
      path.push_back(u);
      used.insert(u);
      if (self(self)) return true;
      used.erase(u);
      path.pop_back();
    }
    return false;
  };
  if (!extend(extend)) return std::nullopt;
  return path;
}

namespace {

VertexSet star_leaves(const Graph& g, VertexSet h) {
  VertexSet out;
  for (int u : h) {
    if (degree_within(g, u, h) == 1) out.insert(u);
  }
  return out;
}

std::vector<int> cycle_or_throw(const Graph& g, VertexSet h, int y, int length) {
  auto cyc = find_cycle_through(g, h, y, length);
  if (!cyc) {
    throw InternalConsistencyError("no " + std::to_string(length) + "-cycle through vertex " +
                                   std::to_string(y));
  }
  return *cyc;
}

bool is_cycle_of(const Graph& g, VertexSet part, int length) {
  if (part.size() != length || edges_within(g, part) != length) return false;
  for (int u : part) {
    if (degree_within(g, u, part) != 2) return false;
  }
  return component_of(g, part.first(), part) == part;
}

bool is_triangle(const Graph& g, VertexSet part) {
  return part.size() == 3 && edges_within(g, part) == 3;
}

}  // namespace

std::optional<BadClass> classify_bad_component_k2(const Graph& g, VertexSet h,
                                                  VertexSet frontier) {
  const auto tag = s_graph_tag(g, h);
  if (!tag) return std::nullopt;
  auto pendant = [&](int u) { return !g.neighbors(u).intersects(frontier); };
  switch (*tag) {
    case GraphTag::P3: return BadClass::P3;
    case GraphTag::K3: return BadClass::K3;
    case GraphTag::C6: return BadClass::C6;
    case GraphTag::K13: {
      for (int u : star_leaves(g, h)) {
        if (!pendant(u)) return std::nullopt;
      }
      return BadClass::K13;
    }
    case GraphTag::C6P:
    case GraphTag::C6PP: {
      const int leaf = star_leaves(g, h).first();
      if (!pendant(leaf)) return std::nullopt;
      return *tag == GraphTag::C6P ? BadClass::C6P : BadClass::C6PP;
    }
    default: return std::nullopt;
  }
}

VertexSet residual_set_for_bad(const Graph& g, VertexSet h, int y) {
  const auto tag = s_graph_tag(g, h);
  if (!tag) throw PreconditionError("component is not an S-graph");
  if (!h.contains(y)) throw PreconditionError("attachment vertex outside the component");
  switch (*tag) {
    case GraphTag::P3:
    case GraphTag::K3: return {};
    case GraphTag::K13:
      if (degree_within(g, y, h) == 1) throw PreconditionError("attached at a K13 leaf");
      return {};
    case GraphTag::C6:
    case GraphTag::C6P:
    case GraphTag::C6PP: {
      if (degree_within(g, y, h) == 1) throw PreconditionError("attached at a pendant vertex");
      return VertexSet::single(cycle_or_throw(g, h, y, 6)[3]);
    }
    default: throw PreconditionError("component is not an S-graph");
  }
}

VertexSet residual_set_for_bad_k3(const Graph& g, VertexSet h, int y) {
  if (!h.contains(y)) throw PreconditionError("attachment vertex outside the component");
  if (is_triangle(g, h)) return {};
  if (is_cycle_of(g, h, 7)) return VertexSet::single(cycle_or_throw(g, h, y, 7)[3]);
  throw PreconditionError("component is neither K3 nor C7");
}

namespace {

struct Step {
  VertexSet d;
  std::string label;
  int v = -1;
};

/// The data every case after "dominated" works from: v, N[v], and the
/// components of part - N[v] split into bad and good.
struct InductionContext {
  VertexSet part;
  int v = -1;
  VertexSet open_nv;
  VertexSet closed_nv;
  VertexSet pendant;  // leaves of G[part]
  std::vector<VertexSet> bad;
  std::vector<GraphTag> bad_tag;
  VertexSet good_union;  // union of the good components' solutions
};

class Prover {
 public:
  Prover(const Graph& g, int k)
      : g_(g), k_(k), fam_(FamilySpec::edges_at_least(k)) {}

  VertexSet solve(VertexSet part) {
    const std::size_t slot = trace_.size();
    trace_.push_back({});
    Step s = induction_step(part);
    const int bound = bound_for(part);
    if (!s.d.is_subset_of(part) || !is_isolating(g_, s.d, fam_, part) || s.d.size() > bound) {
      throw InternalConsistencyError(
          "case " + s.label + " produced " + s.d.to_string() + " (bound " +
          std::to_string(bound) + ") on " +
          graph6_encode(induced_subgraph(g_, part).graph));
    }
    trace_[slot] = {s.label, part.size(), s.v, s.d.size()};
    return s.d;
  }

  std::vector<TraceEntry> take_trace() { return std::move(trace_); }

  int bound_for(VertexSet part) const {
    if (k_ == 2) return bound_k2(part.size(), leaves(g_, part).size());
    return bound_k3(part.size());
  }

 private:
  VertexSet subsolve(VertexSet part) {
    if (auto it = memo_.find(part.bits()); it != memo_.end()) return it->second;
    VertexSet d = part.size() <= 7 ? exact_iota(g_, fam_, part).witness : solve(part);
    memo_.emplace(part.bits(), d);
    return d;
  }

  /// Union of subsolve over the components of G[region].
  VertexSet solve_all(VertexSet region) {
    VertexSet d;
    for (VertexSet c : components(g_, region)) d |= subsolve(c);
    return d;
  }

  VertexSet residual(VertexSet h, int y) const {
    return k_ == 2 ? residual_set_for_bad(g_, h, y) : residual_set_for_bad_k3(g_, h, y);
  }

  VertexSet nbrs(int u, VertexSet part) const { return neighbors_within(g_, u, part); }
  int attach(int x, VertexSet h) const { return (g_.neighbors(x) & h).first(); }
  VertexSet linked(const InductionContext& c, VertexSet h) const {
    VertexSet out;
    for (int x : c.open_nv) {
      if (g_.neighbors(x).intersects(h)) out.insert(x);
    }
    return out;
  }

  /// Base, pattern and dominated steps shared by both inductions.
  std::optional<Step> simple_step(VertexSet part) {
    if (part.size() <= 7) return Step{exact_iota(g_, fam_, part).witness, "base", -1};
    const int v = max_degree_vertex(part);
    if (degree_within(g_, v, part) <= 2) return Step{pattern_step(part), "path-cycle", -1};
    const VertexSet nv = closed_neighborhood(g_, VertexSet::single(v)) & part;
    if (nv == part) return Step{VertexSet::single(v), "dominated", v};
    return std::nullopt;
  }

  VertexSet pattern_step(VertexSet part) {
    const bool cycle = edges_within(g_, part) == part.size();
    int start = part.first();
    if (!cycle) {
      for (int u : part) {
        if (degree_within(g_, u, part) <= 1) {
          start = u;
          break;
        }
      }
    }
    std::vector<int> order{start};
    VertexSet seen = VertexSet::single(start);
    while (static_cast<int>(order.size()) < part.size()) {
      const VertexSet next = nbrs(order.back(), part) - seen;
      if (next.empty()) throw InternalConsistencyError("max-degree-2 part is not a path or cycle");
      order.push_back(next.first());
      seen.insert(next.first());
    }
    VertexSet d;
    for (int i : pattern_isolating_set(cycle ? PatternKind::Cycle : PatternKind::Path,
                                       part.size(), k_)) {
      d.insert(order[i]);
    }
    return d;
  }

  InductionContext context(VertexSet part, int v) {
    InductionContext c;
    c.part = part;
    c.v = v;
    c.closed_nv = closed_neighborhood(g_, VertexSet::single(v)) & part;
    c.open_nv = c.closed_nv - VertexSet::single(v);
    c.pendant = leaves(g_, part);
    for (VertexSet h : components(g_, part - c.closed_nv)) {
      std::optional<GraphTag> tag;
      if (k_ == 2) {
        if (classify_bad_component_k2(g_, h, c.open_nv)) tag = s_graph_tag(g_, h);
      } else if (is_triangle(g_, h)) {
        tag = GraphTag::K3;
      } else if (is_cycle_of(g_, h, 7)) {
        tag = GraphTag::C7;
      }
      if (tag) {
        c.bad.push_back(h);
        c.bad_tag.push_back(*tag);
      } else {
        c.good_union |= subsolve(h);
      }
    }
    return c;
  }

  int max_degree_vertex(VertexSet part) const {
    int v = -1;
    int best = -1;
    for (int u : part) {
      const int d = degree_within(g_, u, part);
      if (d > best) {
        best = d;
        v = u;
      }
    }
    return v;
  }

  Step induction_step(VertexSet part) {
    if (auto s = simple_step(part)) return *s;
    const int v = max_degree_vertex(part);
    InductionContext c = context(part, v);
    const VertexSet vs = VertexSet::single(v);
    if (c.bad.empty()) return {vs | c.good_union, "h-empty", v};

    for (int x : c.open_nv) {
      int hits = 0;
      for (VertexSet h : c.bad) hits += g_.neighbors(x).intersects(h) ? 1 : 0;
      if (hits >= 2) return case1(c, x);
    }

    // From here every vertex of N(v) meets at most one bad component.
    std::vector<int> xh;
    VertexSet xs;
    VertexSet d = vs | c.good_union;
    for (VertexSet h : c.bad) {
      const int x = linked(c, h).first();
      xh.push_back(x);
      xs.insert(x);
      d |= residual(h, attach(x, h));
    }
    d |= xs;
    const VertexSet w = c.open_nv - xs;
    if (w.size() >= 3) {
      if (k_ == 3) return {d, "case2.1", v};
      const int beta_w = 4 * w.size() - (w & c.pendant).size();
      if (beta_w >= 10) return {d, "case2.1", v};
      return {d - vs, "case2.1/drop-v", v};
    }

    for (std::size_t i = 0; i < c.bad.size(); ++i) {
      if (linked(c, c.bad[i]) == VertexSet::single(xh[i])) return case221(c, c.bad[i], xh[i]);
    }

    if (c.bad.size() == 2) {
      return k_ == 2 ? pair_k2(c, 0, 1) : pair_k3(c, 0);
    }
    if (c.bad.size() == 1) {
      return k_ == 2 ? single_k2(c) : single_k3(c);
    }
    throw InternalConsistencyError("more than two bad components in the last case");
  }

  Step case1(const InductionContext& c, int x) {
    VertexSet d = VertexSet::single(c.v) | VertexSet::single(x) | c.good_union;
    for (VertexSet h : c.bad) {
      if (g_.neighbors(x).intersects(h)) {
        d |= residual(h, attach(x, h));
      } else {
        const int xo = linked(c, h).first();
        d.insert(xo);
        d |= residual(h, attach(xo, h));
      }
    }
    return {d, "case1", c.v};
  }

  Step case221(const InductionContext& c, VertexSet h, int x) {
    const VertexSet gstar = c.part - (h | VertexSet::single(x));
    const VertexSet gv = component_of(g_, c.v, gstar);
    VertexSet d = VertexSet::single(x) | residual(h, attach(x, h)) | solve_all(gstar - gv);
    if (k_ == 2) {
      const auto tag = s_graph_tag(g_, gv);
      if (tag == GraphTag::P3 || tag == GraphTag::K3 || tag == GraphTag::K13) {
        return {d, "case2.2.1/small", c.v};
      }
      if (tag == GraphTag::C6 || tag == GraphTag::C6P || tag == GraphTag::C6PP) {
        d.insert(cycle_or_throw(g_, gv, c.v, 6)[3]);
        return {d, "case2.2.1/cycle", c.v};
      }
    } else {
      if (is_triangle(g_, gv)) return {d, "case2.2.1/small", c.v};
      if (is_cycle_of(g_, gv, 7)) {
        d.insert(cycle_or_throw(g_, gv, c.v, 7)[3]);
        return {d, "case2.2.1/cycle", c.v};
      }
    }
    return {d | subsolve(gv), "case2.2.1/recurse", c.v};
  }

  /// {y} plus D_{x1,H1}, with x1 = x_{H1} and y its attachment, then the rest
  /// of the graph recursively.
  Step pair_attach(const InductionContext& c, VertexSet h1, const std::string& label) {
    const int x1 = linked(c, h1).first();
    const int y = attach(x1, h1);
    const VertexSet y1 = h1 | VertexSet::single(x1);
    return {VertexSet::single(y) | residual(h1, y) | solve_all(c.part - y1), label, c.v};
  }

  Step pair_k2(const InductionContext& c, int i1, int i2) {
    auto dense = [&](int i) {
      const GraphTag t = c.bad_tag[i];
      return t == GraphTag::K3 || t == GraphTag::K13 || t == GraphTag::C6P ||
             t == GraphTag::C6PP;
    };
    if (!dense(i1) && dense(i2)) std::swap(i1, i2);
    if (dense(i1)) return pair_attach(c, c.bad[i1], "case2.2.2/pair-dense");
    if (c.bad_tag[i1] == GraphTag::C6 && c.bad_tag[i2] == GraphTag::C6) {
      return pair_attach(c, c.bad[i1], "case2.2.2/pair-c6c6");
    }
    if (c.bad_tag[i1] == GraphTag::C6) std::swap(i1, i2);
    const VertexSet h1 = c.bad[i1];
    const VertexSet h2 = c.bad[i2];
    const VertexSet ends1 = star_leaves(g_, h1);
    const VertexSet centers = (h1 - ends1) | (h2 - star_leaves(g_, h2));
    const VertexSet vs = VertexSet::single(c.v);
    if (c.bad_tag[i2] == GraphTag::C6) {
      const VertexSet in = ends1 & c.pendant;
      if (in.size() == 2) return pair_attach(c, h1, "case2.2.2/pair-p3c6-leaves");
      const int x1 = linked(c, h1).first();
      const int x2 = linked(c, h2).first();
      if (in.empty()) {
        VertexSet d = vs | VertexSet::single(x1) | VertexSet::single(x2) |
                      residual(h2, attach(x2, h2)) | c.good_union;
        return {d, "case2.2.2/pair-p3c6-open", c.v};
      }
      const int yi = (ends1 - in).first();
      const int x = (g_.neighbors(yi) & c.open_nv).first();
      const VertexSet y1 = h1 | VertexSet::single(x);
      return {VertexSet::single(yi) | solve_all(c.part - y1), "case2.2.2/pair-p3c6-mixed", c.v};
    }
    // Two P3 components.
    const int h = ((ends1 | star_leaves(g_, h2)) & c.pendant).size();
    if (h <= 2) return {vs | centers | c.good_union, "case2.2.2/pair-p3p3-low", c.v};
    VertexSet a = h1;
    VertexSet b = h2;
    if ((star_leaves(g_, b) & c.pendant).size() != 2) std::swap(a, b);
    const int j = (star_leaves(g_, a) & c.pendant).first();
    const int x1 = linked(c, a).first();
    const VertexSet y1 = (a - VertexSet::single(j)) | VertexSet::single(x1);
    VertexSet d = VertexSet::single(attach(x1, a)) | solve_all(c.part - y1 - VertexSet::single(j));
    return {d, "case2.2.2/pair-p3p3-high", c.v};
  }

  /// N(v) = {x1, x1', w}: picks the attachment a and the other linked vertex b.
  struct SingleSetup {
    VertexSet h1;
    int a, b, w;
    VertexSet y;
    VertexSet outside;
  };

  SingleSetup single_setup(const InductionContext& c) {
    SingleSetup s;
    s.h1 = c.bad[0];
    const VertexSet lk = linked(c, s.h1);
    if (c.open_nv.size() != 3 || lk.size() < 2) {
      throw InternalConsistencyError("single bad component without d(v) = 3 and two links");
    }
    // w may be linked to H1 as well; it is whatever is left of N(v).
    const int x1 = lk.first();
    const int x1p = (lk - VertexSet::single(x1)).first();
    s.w = (c.open_nv - VertexSet::single(x1) - VertexSet::single(x1p)).first();
    s.y = c.closed_nv | s.h1;
    s.outside = c.part - s.y;
    const VertexSet reach = g_.neighbors(x1p) | g_.neighbors(s.w);
    if (reach.intersects(s.outside)) {
      s.a = x1;
      s.b = x1p;
    } else {
      s.a = x1p;
      s.b = x1;
    }
    return s;
  }

  /// Shared by the 6-cycle (k = 2) and 7-cycle (k = 3) single cases.
  Step single_cycle(const InductionContext& c, const SingleSetup& s, int len,
                    const std::string& tag) {
    const int y1 = attach(s.a, s.h1);
    const std::vector<int> cyc = cycle_or_throw(g_, s.h1, y1, len);
    const VertexSet yy1 = VertexSet::single(s.a) | VertexSet::single(cyc[0]) |
                          VertexSet::single(cyc[1]) | VertexSet::single(cyc[len - 1]);
    const VertexSet inner = s.y - yy1;
    const bool inner_connected = components(g_, inner).size() == 1;
    const VertexSet bw = VertexSet::single(s.b) | VertexSet::single(s.w);
    auto one = [](int u) { return VertexSet::single(u); };
    if (s.outside.empty()) {
      const std::string label = "case2.2.2/single-" + tag + "-closed";
      if (inner_connected && !is_cycle_of(g_, inner, len)) {
        return {one(y1) | exact_iota(g_, fam_, inner).witness, label, c.v};
      }
      if (inner_connected) {
        if (len == 6) return {one(s.a) | one(cyc[3]), label, c.v};
        return {one(cyc[2]) | one(cyc[5]), label, c.v};
      }
      for (int y : {cyc[1], cyc[len - 1]}) {
        if (g_.neighbors(y).intersects(bw)) return {one(y1) | one(y), label, c.v};
      }
      return {one(s.a) | one(cyc[3]), label, c.v};
    }
    if (inner_connected) {
      return {one(y1) | solve_all(c.part - yy1), "case2.2.2/single-" + tag + "-joined", c.v};
    }
    const VertexSet rest = c.part - (s.y - one(c.v) - one(s.w));
    return {one(y1) | one(attach(s.b, s.h1)) | solve_all(rest),
            "case2.2.2/single-" + tag + "-split", c.v};
  }

  Step single_k2(const InductionContext& c) {
    SingleSetup s = single_setup(c);
    const GraphTag t = c.bad_tag[0];
    auto one = [](int u) { return VertexSet::single(u); };
    if (t == GraphTag::K13 || t == GraphTag::C6P || t == GraphTag::C6PP) {
      const int x1 = linked(c, s.h1).first();
      const int y = attach(x1, s.h1);
      return {one(c.v) | one(y) | residual(s.h1, y) | c.good_union, "case2.2.2/single-sparse",
              c.v};
    }
    if (t == GraphTag::C6) return single_cycle(c, s, 6, "c6");
    // P3 or K3.
    int center = -1;
    for (int u : s.h1) {
      if (degree_within(g_, u, s.h1) == 2) {
        center = u;
        break;
      }
    }
    const VertexSet ly = c.pendant & s.y;
    if (ly.empty()) return {one(c.v) | one(center) | c.good_union, "case2.2.2/single-p3-noleaf", c.v};
    if (c.pendant.contains(s.w)) {
      const VertexSet y1 = one(c.v) | one(s.a) | one(attach(s.a, s.h1)) | one(s.w);
      return {one(s.a) | solve_all(c.part - y1), "case2.2.2/single-p3-leafw", c.v};
    }
    const int ystar = attach(s.a, s.h1);
    if (ystar != attach(s.b, s.h1)) {
      return {one(ystar) | solve_all(c.part - (s.h1 | one(s.a))), "case2.2.2/single-p3-leafy",
              c.v};
    }
    return {one(ystar) | solve_all(c.part - (s.h1 | one(s.a) | one(s.b))),
            "case2.2.2/single-p3-shared", c.v};
  }

  Step pair_k3(const InductionContext& c, int i1) {
    const VertexSet h1 = c.bad[i1];
    const int x1 = linked(c, h1).first();
    const int y = attach(x1, h1);
    const VertexSet ny = closed_neighborhood(g_, VertexSet::single(y));
    const VertexSet y1 = ny & (h1 | VertexSet::single(x1));
    const VertexSet gstar = c.part - y1;
    const VertexSet rest_h = h1 - ny;
    if (!rest_h.empty() && component_of(g_, rest_h.first(), gstar) == rest_h) {
      return {VertexSet::single(y) | residual(h1, y) | solve_all(gstar - rest_h),
              "case2.2.2/pair-split", c.v};
    }
    return {VertexSet::single(y) | solve_all(gstar), "case2.2.2/pair", c.v};
  }

  Step single_k3(const InductionContext& c) {
    SingleSetup s = single_setup(c);
    if (c.bad_tag[0] == GraphTag::C7) return single_cycle(c, s, 7, "c7");
    const int y1 = attach(s.a, s.h1);
    const VertexSet gstar = c.part - (s.h1 | VertexSet::single(s.a));
    const VertexSet gv = component_of(g_, c.v, gstar);
    if (is_cycle_of(g_, gv, 7)) {
      return {VertexSet::single(c.v) | VertexSet::single(s.b) | solve_all(gstar - gv),
              "case2.2.2/single-k3-c7", c.v};
    }
    return {VertexSet::single(y1) | solve_all(gstar), "case2.2.2/single-k3", c.v};
  }

  const Graph& g_;
  int k_;
  FamilySpec fam_;
  std::vector<TraceEntry> trace_;
  std::unordered_map<std::uint64_t, VertexSet> memo_;
};

Certificate run(const Graph& g, int k) {
  if (!is_connected(g)) throw PreconditionError("the prover needs a connected graph");
  Prover p(g, k);
  Certificate cert;
  cert.k = k;
  cert.d = p.solve(g.vertices());
  cert.bound = p.bound_for(g.vertices());
  if (k == 2) cert.beta = beta(g);
  cert.trace = p.take_trace();
  return cert;
}

}  // namespace

Certificate isolate_k2(const Graph& g) {
  const ExceptionClass ex = classify_exception(g, Theorem::K2);
  if (ex.is_exception()) throw ExceptionGraphError("no certificate: " + ex.describe());
  return run(g, 2);
}

Certificate isolate_k3(const Graph& g) {
  const ExceptionClass ex = classify_exception(g, Theorem::K3);
  if (ex.is_exception()) throw ExceptionGraphError("no certificate: " + ex.describe());
  return run(g, 3);
}

}  // namespace isolab
