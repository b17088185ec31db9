#include "doctest.h"

#include "gpq/circuit_io.hpp"
#include "gpq/emit.hpp"
#include "gpq/qsim.hpp"

#include <cmath>
#include <cstdio>
#include <string>

using namespace gpq;

TEST_CASE("csv rendering is canonical") {
  Table t({"name", "count", "value"});
  t.cell(std::string("alpha")).cell(std::int64_t{42}).cell(0.1);
  t.end_row();
  t.cell(std::string("beta")).cell(std::int64_t{-3}).cell(1.0 / 3.0);
  t.end_row();
  CHECK(t.csv() ==
        "name,count,value\n"
        "alpha,42,0.1\n"
        "beta,-3,0.333333333333\n");
}

TEST_CASE("json mirrors the csv rows") {
  Table t({"k", "p"});
  t.cell(2).cell(0.5).end_row();
  CHECK(t.json() == "[\n {\"k\":2,\"p\":0.5}\n]\n");
  CHECK(t.render("csv") == t.csv());
  CHECK(t.render("json") == t.json());
  CHECK_THROWS(t.render("xml"));
}

TEST_CASE("row arity is enforced") {
  Table t({"a", "b"});
  t.cell(1);
  CHECK_THROWS(t.end_row());
}

TEST_CASE("csv-breaking strings are rejected") {
  Table t({"s"});
  CHECK_THROWS(t.cell(std::string("has,comma")));
  CHECK_THROWS(t.cell(std::string("has\nnewline")));
}

TEST_CASE("format_double uses up to twelve significant digits") {
  CHECK(format_double(123456.789012) == "123456.789012");
  CHECK(format_double(0.25) == "0.25");
  CHECK(format_double(1.0) == "1");
}

TEST_CASE("circuit json round-trips through disk") {
  Rng rng(8);
  const QueryCircuit c = random_query_circuit(3, 2, 2, rng);
  const std::string path = "circuit_roundtrip_test.json";
  save_circuit(c, path);
  const QueryCircuit back = load_circuit(path);
  std::remove(path.c_str());

  CHECK(back.layout.dims == c.layout.dims);
  CHECK(back.output_reg == c.output_reg);
  CHECK(back.query_count() == c.query_count());
  CHECK(circuit_to_json(back) == circuit_to_json(c));

  Hypergraph x = Hypergraph::zeros(3, 1);
  x.set_bit(2, 1);
  const BitDistribution a = run_circuit(c, x);
  const BitDistribution b = run_circuit(back, x);
  CHECK(std::abs(a.p1 - b.p1) < 1e-12);
}
