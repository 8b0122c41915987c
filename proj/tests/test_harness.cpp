#include <doctest.h>

#include "coxword/error.hpp"
#include "coxword/registry.hpp"
#include "coxword/suites.hpp"

using namespace coxword;

TEST_CASE("report round-trips through jsonl") {
  auto const h   = load_system("2A3");
  auto const rep = run_suite("hh", h);
  CHECK(rep.pass);
  auto const back = VerificationReport::from_jsonl(rep.to_jsonl());
  CHECK(back.suite == rep.suite);
  CHECK(back.system == rep.system);
  CHECK(back.pass == rep.pass);
  REQUIRE(back.records.size() == rep.records.size());
  for (std::size_t i = 0; i < rep.records.size(); ++i) {
    CHECK(back.records[i].z == rep.records[i].z);
    CHECK(back.records[i].pass == rep.records[i].pass);
    CHECK(back.records[i].data == rep.records[i].data);
  }
  REQUIRE(!rep.records.empty());
  CHECK(back.find(rep.records.front().z) != nullptr);
  CHECK(back.find("nonsense") == nullptr);
}

TEST_CASE("reports do not depend on the thread count") {
  auto const h = load_system("BC3");
  for (auto suite : {"hh-primed", "cardinality"}) {
    SuiteOptions one;
    SuiteOptions four;
    four.threads = 4;
    auto const a = run_suite(suite, h, one);
    auto const b = run_suite(suite, h, four);
    REQUIRE(a.records.size() == b.records.size());
    for (std::size_t i = 0; i < a.records.size(); ++i) {
      CHECK(a.records[i].z == b.records[i].z);
      CHECK(a.records[i].data == b.records[i].data);
    }
  }
}

TEST_CASE("fault injection is caught") {
  auto const   h = load_system("BC3");
  SuiteOptions o;
  o.fault_seed = 0;
  CHECK_FALSE(run_suite("primed-min", h, o).pass);
  CHECK_THROWS_AS(run_suite("no-such-suite", h), UnknownSuite);
}

TEST_CASE("system json round-trip") {
  for (auto name : {"2A3", "H3", "affA2", "2I2(5)"}) {
    auto const h    = load_system(name);
    auto const back = system_from_json(system_to_json(h.system()));
    CHECK(back.matrix() == h.system().matrix());
    CHECK(back.star_map() == h.system().star_map());
  }
}

TEST_CASE("element parsing") {
  auto const h = load_system("2A3");
  CHECK(parse_element(h, "e") == parse_element(h, "()"));
  CHECK(parse_element(h, "e") == parse_element(h, "[1,2,3,4]"));
  CHECK(parse_element(h, "1") == parse_element(h, "s1"));
  CHECK_THROWS(parse_element(h, "9"));
  CHECK(parse_element(h, "(1,4)(2,3)") == parse_element(h, "[4,3,2,1]"));
  CHECK(parse_element(h, "2123") == parse_element(h, "1,2,1,3"));
  CHECK(parse_element(h, "s1") == parse_element(h, "[2,1,3,4]"));
}
