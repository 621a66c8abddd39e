#include <doctest.h>

#include "multikostka/error.hpp"
#include "multikostka/json_io.hpp"

using namespace multikostka;

namespace {

ErrorKind kind_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("no error thrown");
  return ErrorKind::InvalidArgument;
}

}  // namespace

TEST_CASE("round trips") {
  const Partition p{4, 3, 1};
  CHECK(json(p).dump() == "[4,3,1]");
  CHECK(json(Partition{}).dump() == "[]");
  CHECK(parse_json_as<Partition>(json(p).dump()) == p);
  CHECK(parse_json_as<Partition>("[3,0,0]") == Partition{3});

  const Multipartition m{{2, 1, 1}, {}, {4}};
  CHECK(json(m).dump() == "[[2,1,1],[],[4]]");
  CHECK(parse_json_as<Multipartition>(json(m).dump()) == m);

  const Tableau t{{2, 1}, {{1, 2}, {3}}};
  CHECK(parse_json_as<Tableau>(json(t).dump()) == t);
  const MultiTableau mt{{t, Tableau{{1}, {{1}}}}};
  CHECK(parse_json_as<MultiTableau>(json(mt).dump()) == mt);

  CHECK(parse_json_as<Composition>("[1,0,2]") == Composition{1, 0, 2});
}

TEST_CASE("counts are decimal strings") {
  const BigCount big("123456789012345678901234567890");
  CHECK(count_to_json(big) == json("123456789012345678901234567890"));
  CHECK(count_from_json(count_to_json(big)) == big);
  CHECK(json(IndexCertificate{{2, 5}}).dump() == R"({"indices":[2,5]})");
  CHECK(json(Constituent{Multipartition{{1}, {}}, 3}).dump() == R"({"label":[[1],[]],"multiplicity":"3"})");
}

TEST_CASE("theta requests") {
  const auto req = parse_json_as<ThetaRequest>(R"({"entries":[{"size":2,"partition":[1]},{"size":3,"partition":[2,1]}],"mu":[5,5]})");
  REQUIRE(req.lambda.entries().size() == 2);
  CHECK(req.lambda.entries()[1].orbit_size == 3);
  CHECK(req.lambda.entries()[1].shape == Partition{2, 1});
  CHECK(req.mu == Partition{5, 5});
}

TEST_CASE("parse errors") {
  CHECK(kind_of([] { parse_json_as<Partition>("[1,"); }) == ErrorKind::ParseError);
  CHECK(kind_of([] { parse_json_as<Partition>(R"({"a":1})"); }) == ErrorKind::ParseError);
  CHECK(kind_of([] { parse_json_as<Partition>("[1.5]"); }) == ErrorKind::ParseError);
  CHECK(kind_of([] { parse_json_as<Partition>("[99999999999]"); }) == ErrorKind::ParseError);
  CHECK(kind_of([] { parse_json_as<Partition>("[1,2]"); }) == ErrorKind::NonMonotone);
  CHECK(kind_of([] { parse_json_as<ThetaRequest>(R"({"entries":[]})"); }) == ErrorKind::ParseError);
  CHECK(kind_of([] { parse_json_as<ThetaRequest>(R"({"entries":[{"size":2,"partition":[]}],"mu":[]})"); }) ==
        ErrorKind::EmptyShape);
}
