#include <cstdio>

#include "doctest.h"
#include "twistcert/bundled.hpp"
#include "twistcert/error.hpp"
#include "twistcert/io.hpp"

using namespace twistcert;

TEST_CASE("enclosure json round-trips exactly") {
  for (Precision bits : {64u, 128u, 256u}) {
    PrecisionGuard g(bits);
    Enclosure e = exp(Enclosure::rational(1, 3)) / Enclosure(7);
    nlohmann::json j = enclosure_to_json(e, bits);
    REQUIRE(j.is_array());
    Enclosure back = enclosure_from_json(j, bits);
    CHECK(mpfr_equal_p(back.lo(), e.lo()));
    CHECK(mpfr_equal_p(back.hi(), e.hi()));
  }
  CHECK_THROWS_AS(enclosure_from_json(nlohmann::json::array({"2", "1"}), 128), InputError);
  CHECK_THROWS_AS(enclosure_from_json(nlohmann::json::array({"x", "1"}), 128), InputError);
}

TEST_CASE("schema tags") {
  nlohmann::json doc = {{"schema", schema_tag("twistcert.demo", 1)}};
  CHECK(doc["schema"] == "twistcert.demo/1");
  CHECK_NOTHROW(require_schema(doc, "twistcert.demo", 1));
  CHECK_THROWS_AS(require_schema(doc, "twistcert.demo", 2), InputError);
  CHECK_THROWS_AS(require_schema(doc, "twistcert.other", 1), InputError);
  CHECK_THROWS_AS(require_schema(nlohmann::json::object(), "twistcert.demo", 1), InputError);
}

TEST_CASE("digests") {
  CHECK(sha256_hex("abc") == "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
  nlohmann::json a = {{"b", 1}, {"a", 2}};
  nlohmann::json b = nlohmann::json::parse(R"({"a":2,"b":1})");
  CHECK(json_digest(a) == json_digest(b));
}

TEST_CASE("files") {
  std::string path = "twistcert_io_test.tmp";
  write_file(path, "hello\n");
  CHECK(read_file(path) == "hello\n");
  std::remove(path.c_str());
  CHECK_THROWS_AS(read_file("/nonexistent/file"), InputError);
}

TEST_CASE("bundled data") {
  auto names = bundled_names();
  CHECK(names.size() == 5);
  CHECK(bundled_file("T10.1.relators").find("signature 2 3 8") != std::string_view::npos);
  CHECK(nlohmann::json::parse(bundled_file("constants.json")).at("schema") == "twistcert.constants/1");
  CHECK_THROWS_AS(bundled_file("missing.json"), InputError);
}
