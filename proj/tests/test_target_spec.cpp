#include "singcount/target_spec.hpp"
#include "test_support.hpp"

#include <doctest.h>

using namespace singcount;
using singcount::testing::P;

TEST_CASE("target spec parsing") {
  auto pm = parse_target_spec("pm(m=2,d=4)");
  REQUIRE(std::holds_alternative<ProjectiveSpaceSpec>(pm.shape));
  CHECK(std::get<ProjectiveSpaceSpec>(pm.shape).m == 2);
  CHECK(std::get<ProjectiveSpaceSpec>(pm.shape).d == Degree{Integer(4)});
  CHECK(pm.parameters().empty());

  auto sym = parse_target_spec(" pm( m = 3 , d = d ) ");
  CHECK(sym.parameters() == std::vector<std::string>{"d"});
  CHECK(sym.to_string() == "pm(m=3,d=d)");

  auto prod = parse_target_spec("product((m=1,d=d1),(m=1,d=d2),(m=2,d=d1))");
  CHECK(prod.parameters() == std::vector<std::string>{"d1", "d2"});
  CHECK(std::get<ProductSpec>(prod.shape).factors.size() == 3);

  auto neg = parse_target_spec("pm(m=1,d=-3)");
  CHECK(std::get<ProjectiveSpaceSpec>(neg.shape).d == Degree{Integer(-3)});

  CHECK(parse_target_spec("table(file=some/dir/chern.json)").to_string() == "table(file=some/dir/chern.json)");
  CHECK(parse_target_spec("generic(m=4)").to_string() == "generic(m=4)");
}

TEST_CASE("property: printing then parsing a spec is the identity") {
  for (const char* text : {"pm(m=2,d=4)", "pm(m=5,d=t)", "product((m=1,d=d1),(m=1,d=d2))", "product((m=2,d=-1))",
                           "generic(m=1)", "table(file=x.json)"}) {
    auto spec = parse_target_spec(text);
    CHECK(spec.to_string() == text);
    CHECK(parse_target_spec(spec.to_string()) == spec);
  }
}

TEST_CASE("target spec errors") {
  for (const char* bad : {"", "pm", "pm(m=2)", "pm(m=0,d=1)", "pm(m=65,d=1)", "pm(m=2,d=4", "pm(m=2,d=4)x",
                          "sphere(m=2)", "product()", "product((m=1,d=1)", "table(file=)", "pm(m=2,d=H)",
                          "pm(m=2,d=lambda)", "pm(m=2,d=c1)", "pm(m=2,d=x3)", "pm(m=2,d=_h1)", "pm(d=2,m=2)",
                          "pm(m=-1,d=2)"}) {
    CAPTURE(bad);
    CHECK_THROWS_AS(parse_target_spec(bad), ParseError);
  }
}

TEST_CASE("reserved names") {
  CHECK(is_reserved_name("H"));
  CHECK(is_reserved_name("lambda"));
  CHECK(is_reserved_name("c1"));
  CHECK(is_reserved_name("x12"));
  CHECK(is_reserved_name("_tmp"));
  CHECK(is_reserved_name(""));
  CHECK_FALSE(is_reserved_name("d"));
  CHECK_FALSE(is_reserved_name("x"));
  CHECK_FALSE(is_reserved_name("xa"));
  CHECK_FALSE(is_reserved_name("c2"));
}

TEST_CASE("substituting values and building") {
  auto spec = parse_target_spec("product((m=1,d=t),(m=1,d=t))");
  auto fixed = spec.with_values({{"t", 2}});
  CHECK(fixed.to_string() == "product((m=1,d=2),(m=1,d=2))");
  CHECK(fixed.parameters().empty());
  CHECK(spec.with_values({{"s", 2}}) == spec);

  auto target = spec.build();
  CHECK(target->dimension() == 2);
  CHECK(target->eval_monomial(parse_monomial("c1^2")) == P("2*t^2", testing::params({"t"})));
  CHECK(parse_target_spec("generic(m=3)").build()->kind() == ChernTarget::Kind::generic);
  CHECK_THROWS_AS(parse_target_spec("table(file=/nonexistent/chern.json)").build(), TargetError);
}
