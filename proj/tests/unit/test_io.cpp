#include <doctest.h>

#include "fqg/io.hpp"
#include "fqg/models.hpp"

using namespace fqg;

TEST_CASE("write then parse is the identity on canonical form") {
  for (const std::string name : {"fun:Z2", "fun:S3", "grp:Q8", "kp8"}) {
    auto qg = builtin(name);
    const std::string text = write_quantum_group(*qg);
    auto back = parse_quantum_group(text);
    CHECK(write_quantum_group(*back) == text);
    CHECK((back->delta() - qg->delta()).norm() == doctest::Approx(0.0).epsilon(1e-12));
    CHECK((back->haar_values() - qg->haar_values()).norm() ==
          doctest::Approx(0.0).epsilon(1e-9));
  }
}

TEST_CASE("schema violations are reported as SchemaError") {
  CHECK_THROWS_AS((void)parse_quantum_group("not json"), SchemaError);
  CHECK_THROWS_AS((void)parse_quantum_group("{}"), SchemaError);
  CHECK_THROWS_AS((void)parse_quantum_group(R"({"dim": 0})"), SchemaError);
  // Index out of range.
  CHECK_THROWS_AS((void)parse_quantum_group(R"({
    "dim": 1, "basis": ["e"],
    "mult": [[0, 0, 5, 1.0, 0.0]],
    "star": [[0, 0, 1.0, 0.0]],
    "unit": [[1.0, 0.0]],
    "coproduct": [[0, 0, 0, 1.0, 0.0]],
    "counit": [[1.0, 0.0]]})"),
                  SchemaError);
}

TEST_CASE("non-associative product is an axiom failure, not a schema error") {
  // Well-formed file, broken algebra: e*e = 2e makes the unit law fail.
  const std::string text = R"({
    "dim": 1, "basis": ["e"],
    "mult": [[0, 0, 0, 2.0, 0.0]],
    "star": [[0, 0, 1.0, 0.0]],
    "unit": [[1.0, 0.0]],
    "coproduct": [[0, 0, 0, 1.0, 0.0]],
    "counit": [[1.0, 0.0]]})";
  bool threw = false;
  try {
    (void)parse_quantum_group(text);
  } catch (const ValidationError& e) {
    threw = true;
    bool diagnosed = false;
    for (const auto& c : e.report.checks)
      if (!c.pass && (c.name.find("associativity") != std::string::npos ||
                      c.name.find("unit") != std::string::npos))
        diagnosed = true;
    CHECK(diagnosed);
  }
  CHECK(threw);
}

TEST_CASE("kp8 embedded data validates on load") {
  auto qg = builtin("kp8");
  CHECK(qg->n() == 8);
  CHECK(qg->report().all_passed());
  CHECK_FALSE(qg->is_commutative());
  CHECK_FALSE(qg->is_cocommutative());
}
