#include "isolation/bounds.hpp"

#include "isolation/graph6.hpp"
#include "isolation/isomorphism.hpp"

namespace isolab {

Beta14 beta(const Graph& g) { return beta_relative(g, g.vertices()); }

Beta14 beta_relative(const Graph& g, VertexSet part, VertexSet within) {
  return Beta14(4 * part.size() - (leaves(g, within) & part).size());
}

int bound_k1(int n) { return n / 3; }
int bound_k2(int n, int leaves) { return (4 * n - leaves) / 14; }
int bound_k3(int n) { return n / 4; }
int bound_cycles(int n) { return n / 4; }

std::string theorem_name(Theorem t) {
  switch (t) {
    case Theorem::K1: return "k1";
    case Theorem::K2: return "k2";
    case Theorem::K3: return "k3";
    case Theorem::Cycles: return "cycles";
  }
  return "?";
}

Theorem parse_theorem(std::string_view text) {
  if (text == "k1") return Theorem::K1;
  if (text == "k2") return Theorem::K2;
  if (text == "k3") return Theorem::K3;
  if (text == "cycles") return Theorem::Cycles;
  throw PreconditionError("unknown theorem '" + std::string(text) + "' (k1, k2, k3, cycles)");
}

FamilySpec theorem_family(Theorem t) {
  switch (t) {
    case Theorem::K1: return FamilySpec::edges_at_least(1);
    case Theorem::K2: return FamilySpec::edges_at_least(2);
    case Theorem::K3: return FamilySpec::edges_at_least(3);
    case Theorem::Cycles: return FamilySpec::cycles();
  }
  throw PreconditionError("unknown theorem");
}

int theorem_bound(Theorem t, const Graph& g) {
  switch (t) {
    case Theorem::K1: return bound_k1(g.order());
    case Theorem::K2: return bound_k2(g.order(), leaf_count(g));
    case Theorem::K3: return bound_k3(g.order());
    case Theorem::Cycles: return bound_cycles(g.order());
  }
  return 0;
}

std::string ExceptionClass::describe() const {
  const std::string tag = which ? NamedGraph{*which}.name() : "";
  switch (kind) {
    case Kind::NotException: return "none";
    case Kind::SGraph: return "S-graph " + tag;
    case Kind::K2orC5: return *which == GraphTag::K2 ? "2-clique exception" : "5-cycle exception";
    case Kind::K3orC7: return *which == GraphTag::K3 ? "triangle exception" : "7-cycle exception";
    case Kind::Triangle: return "triangle exception";
  }
  return "?";
}

namespace {

bool matches(const Graph& g, VertexSet part, GraphTag tag) {
  return induced_is_isomorphic(g, part, make_graph({tag}));
}

}  // namespace

std::optional<GraphTag> s_graph_tag(const Graph& g, VertexSet part) {
  switch (part.size()) {
    case 3:
      if (matches(g, part, GraphTag::P3)) return GraphTag::P3;
      if (matches(g, part, GraphTag::K3)) return GraphTag::K3;
      return std::nullopt;
    case 4:
      if (matches(g, part, GraphTag::K13)) return GraphTag::K13;
      return std::nullopt;
    case 6:
      if (matches(g, part, GraphTag::C6)) return GraphTag::C6;
      return std::nullopt;
    case 7:
      if (matches(g, part, GraphTag::C6P)) return GraphTag::C6P;
      if (matches(g, part, GraphTag::C6PP)) return GraphTag::C6PP;
      return std::nullopt;
    default:
      return std::nullopt;
  }
}

std::optional<GraphTag> s_graph_tag(const Graph& g) { return s_graph_tag(g, g.vertices()); }

ExceptionClass classify_exception(const Graph& g, Theorem t) {
  const VertexSet all = g.vertices();
  switch (t) {
    case Theorem::K1:
      if (matches(g, all, GraphTag::K2)) return {ExceptionClass::Kind::K2orC5, GraphTag::K2};
      if (matches(g, all, GraphTag::C5)) return {ExceptionClass::Kind::K2orC5, GraphTag::C5};
      return {};
    case Theorem::K2:
      if (auto tag = s_graph_tag(g)) return {ExceptionClass::Kind::SGraph, *tag};
      return {};
    case Theorem::K3:
      if (matches(g, all, GraphTag::K3)) return {ExceptionClass::Kind::K3orC7, GraphTag::K3};
      if (matches(g, all, GraphTag::C7)) return {ExceptionClass::Kind::K3orC7, GraphTag::C7};
      return {};
    case Theorem::Cycles:
      if (matches(g, all, GraphTag::K3)) return {ExceptionClass::Kind::Triangle, GraphTag::K3};
      return {};
  }
  return {};
}

VerificationRecord check_bound(const Graph& g, Theorem t, std::optional<int> budget) {
  if (!is_connected(g)) throw PreconditionError("check_bound needs a connected graph");
  VerificationRecord rec;
  rec.graph6 = graph6_encode(g);
  rec.n = g.order();
  rec.leaves = leaf_count(g);
  rec.bound = theorem_bound(t, g);
  rec.exception = classify_exception(g, t);
  const FamilySpec fam = theorem_family(t);
  std::optional<IsolationResult> result =
      budget ? exact_iota_within(g, fam, *budget) : std::optional(exact_iota(g, fam));
  if (!result) {
    rec.skipped_budget = true;
    return rec;
  }
  rec.iota = result->value;
  rec.iota_witness = result->witness;
  rec.tight = result->value == rec.bound;
  rec.violated = !rec.exception.is_exception() && result->value > rec.bound;
  return rec;
}

}  // namespace isolab
