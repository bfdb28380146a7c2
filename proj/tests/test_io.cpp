#include <doctest.h>

#include "coxrefl/certificate_io.hpp"

using namespace coxrefl;

TEST_CASE("word literals") {
  CHECK(parse_word_literal("e") == Word{});
  CHECK(parse_word_literal("1 3 1") == Word{1, 3, 1});
  CHECK(parse_word_literal("  2\t1 ") == Word{2, 1});
  CHECK(format_word_literal({}) == "e");
  CHECK(format_word_literal({1, 3, 1}) == "1 3 1");
  CHECK_THROWS_AS(parse_word_literal("1 x"), std::invalid_argument);
  CHECK_THROWS_AS(parse_word_literal("0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_word_literal("e 1"), std::invalid_argument);
}

TEST_CASE("certificate round trip") {
  Certificate cert = construct_553(triangle_system(3, 5, 5));
  std::string text = format_certificate(cert);
  ParsedCertificate back = parse_certificate(text);
  CHECK(back.index == cert.index);
  CHECK(back.provenance == cert.provenance);
  CHECK(back.chambers == cert.chambers);
  CHECK(back.generators == cert.generators);

  SUBCASE("chamber count must match the declared index") {
    std::string broken = text;
    broken.replace(broken.find("index 18"), 8, "index 17");
    CHECK_THROWS_AS(parse_certificate(broken), std::invalid_argument);
  }
  SUBCASE("truncated files are rejected") {
    std::string truncated = text.substr(0, text.size() / 2);
    CHECK_THROWS_AS(parse_certificate(truncated), std::invalid_argument);
  }
  SUBCASE("unknown provenance tags are rejected") {
    std::string tagged = text;
    tagged.replace(tagged.find("triangle-553"), 12, "mystery-tag9");
    CHECK_THROWS_AS(parse_certificate(tagged), std::invalid_argument);
  }
}

TEST_CASE("chamber lists") {
  std::vector<Word> chambers = {{}, {1}, {1, 2}};
  std::string text = format_chamber_list(chambers);
  CHECK(parse_chamber_list(text) == chambers);
  CHECK(parse_chamber_list("e\n# note\n\n1 2\n") ==
        std::vector<Word>{{}, {1, 2}});
}

TEST_CASE("provenance tags") {
  for (Provenance p : {Provenance::Triangle553, Provenance::SingleMultipleEdge,
                       Provenance::Extended553, Provenance::FreeProductLift})
    CHECK(provenance_from_string(to_string(p)) == p);
}
