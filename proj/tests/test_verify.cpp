#include <doctest.h>

#include <nlohmann/json.hpp>
#include <sstream>

#include "isolation/constructions.hpp"
#include "isolation/graph6.hpp"
#include "isolation/isomorphism.hpp"
#include "isolation/verify.hpp"

using namespace isolab;

namespace {

SweepOptions options(Theorem t, int n_max, int jobs) {
  SweepOptions o;
  o.theorem = t;
  o.source = EnumSpec{1, n_max, true, BuiltinSource{}, false};
  o.jobs = jobs;
  o.keep_rows = 1U << 20;
  return o;
}

std::vector<std::string> json_rows(const SweepReport& r) {
  std::vector<std::string> out;
  for (const VerificationRecord& rec : r.rows) out.push_back(record_json(rec));
  return out;
}

}  // namespace

TEST_CASE("sweep results do not depend on the worker count") {
  const SweepReport one = run_sweep(options(Theorem::K2, 7, 1));
  const SweepReport four = run_sweep(options(Theorem::K2, 7, 4));
  CHECK(one.checked == 1 + 1 + 2 + 6 + 21 + 112 + 853);
  CHECK(json_rows(one) == json_rows(four));
  CHECK(one.case_counts == four.case_counts);
  CHECK(one.ok());
}

TEST_CASE("k = 2 sweep finds exactly the S-graphs") {
  const SweepReport r = run_sweep(options(Theorem::K2, 7, 2));
  std::vector<std::string> names;
  for (const ExceptionHit& e : r.exceptions) names.push_back(e.which.describe());
  CHECK(names.size() == 6);
  CHECK(r.violations.empty());
  CHECK(r.errors.empty());
  CHECK(r.tight > 0);
}

TEST_CASE("k = 1 and k = 3 exceptions") {
  const SweepReport k1 = run_sweep(options(Theorem::K1, 7, 2));
  REQUIRE(k1.exceptions.size() == 2);
  CHECK(k1.exceptions[0].graph6 == graph6_encode(complete_graph(2)));
  const SweepReport k3 = run_sweep(options(Theorem::K3, 7, 2));
  REQUIRE(k3.exceptions.size() == 2);
  CHECK(k3.exceptions[0].which.describe() == ExceptionClass{ExceptionClass::Kind::K3orC7,
                                                            GraphTag::K3}.describe());
  CHECK(k3.ok());
}

TEST_CASE("budget gives skipped rows, never violations") {
  SweepOptions o = options(Theorem::K1, 7, 2);
  o.budget = 1;
  const SweepReport r = run_sweep(o);
  CHECK(r.skipped > 0);
  CHECK(r.ok());
  for (const VerificationRecord& rec : r.rows) CHECK(rec.skipped_budget == !rec.iota.has_value());
}

TEST_CASE("rows stream to the sink in input order") {
  std::vector<std::string> streamed;
  const SweepReport r = run_sweep(options(Theorem::K3, 6, 3),
                                  [&](const VerificationRecord& rec) { streamed.push_back(rec.graph6); });
  REQUIRE(streamed.size() == r.rows.size());
  for (std::size_t i = 0; i < streamed.size(); ++i) CHECK(streamed[i] == r.rows[i].graph6);
}

TEST_CASE("JSON rows") {
  const VerificationRecord c7 = check_graph(cycle_graph(7), Theorem::K2, {}, true);
  const auto j = nlohmann::json::parse(record_json(c7));
  for (const char* key : {"graph6", "n", "leaves", "iota", "bound", "exception", "tight",
                          "cert_size", "case_trace"}) {
    CHECK(j.contains(key));
  }
  CHECK(j["graph6"] == "FhCKG");
  CHECK(j["iota"] == 2);
  CHECK(j["exception"].is_null());
  CHECK(j["case_trace"][0].get<std::string>().starts_with("case="));

  const VerificationRecord c6 = check_graph(cycle_graph(6), Theorem::K2, {}, true);
  const auto e = nlohmann::json::parse(record_json(c6));
  CHECK(e["exception"] == "S-graph C6");
  CHECK_FALSE(e.contains("cert_size"));

  const VerificationRecord skipped = check_graph(cycle_graph(9), Theorem::K1, 1, false);
  CHECK(nlohmann::json::parse(record_json(skipped))["iota"].is_null());
}

TEST_CASE("CSV rows") {
  std::ostringstream out;
  write_csv_header(out);
  write_csv_row(out, check_graph(cycle_graph(7), Theorem::K2, {}, true));
  write_csv_row(out, check_graph(cycle_graph(9), Theorem::K1, 1, false));
  CHECK(out.str() ==
        "graph6,n,leaves,iota,bound,exception,tight,cert_size,status\n"
        "FhCKG,7,0,2,2,,true,2,ok\n"
        "HhCGGE@,9,0,,3,,false,,skipped (budget)\n");
}

TEST_CASE("c_{k,n} rows") {
  const CknRow k1n5 = ckn_row(1, 5);
  CHECK(k1n5.c == Ratio{2, 5});
  CHECK(is_isomorphic_small(graph6_decode(k1n5.witness), cycle_graph(5)));
  CHECK(ckn_row(2, 3).c == Ratio{1, 3});
  const CknRow k3n7 = ckn_row(3, 7);
  CHECK(k3n7.c.to_string() == "2/7");
  CHECK(is_isomorphic_small(graph6_decode(k3n7.witness), cycle_graph(7)));
  CHECK(ckn_formula(2, 6) == Ratio{1, 3});
  CHECK(ckn_formula(1, 2) == Ratio{1, 2});
  CHECK(ckn_formula(3, 8) == Ratio{1, 4});
  CHECK_THROWS(ckn_formula(4, 5));
  for (int k = 1; k <= 3; ++k) {
    for (int n = 1; n <= 7; ++n) CHECK(ckn_row(k, n).c == ckn_formula(k, n));
  }
}

TEST_CASE("extremal rows") {
  const auto rows = extremal_rows("B-K3");
  CHECK(rows.size() == 13);
  for (const ExtremalRow& r : rows) CHECK(r.ok);
  const ExtremalRow c6 = extremal_row("Bp-C6", 2);
  CHECK(c6.n == 14);
  CHECK(c6.iota == 4);
  CHECK(c6.ok);
  CHECK_THROWS(extremal_rows("B-K4"));
}
