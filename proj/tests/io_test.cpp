#include "doctest.h"
#include "lsa/io.hpp"
#include "support.hpp"

using namespace lsa;
using lsa::test::s;
using lsa::test::t;

TEST_CASE("polynomial encoding") {
  CHECK(to_json(t(-1)) == json::parse(R"({"-2": 1})"));
  CHECK(to_json(HalfLaurent()) == json::object());
  const HalfLaurent f = HalfLaurent::monomial(-3, 5) + s(-1) + 7;
  CHECK(half_laurent_from_json(to_json(f)) == f);

  const HalfLaurent big = HalfLaurent::monomial(BigInt(1) << 90, 4);
  const json j = to_json(big);
  CHECK(j["4"].is_string());
  CHECK(half_laurent_from_json(j) == big);

  CHECK_THROWS_AS(half_laurent_from_json(json::parse(R"({"x": 1})")), Error);
  CHECK_THROWS_AS(half_laurent_from_json(json::parse(R"([1])")), Error);
  CHECK_THROWS_AS(half_laurent_from_json(json::parse(R"({"2": 1.5})")), Error);
}

TEST_CASE("blocks round-trip") {
  for (int n = 1; n <= 4; ++n) {
    const BlockData b = build_springer_block_a(n);
    const BlockData back = block_from_json(to_json(b));
    CHECK(back.name == b.name);
    CHECK(back.omega == b.omega);
    CHECK(back.omega_order == b.omega_order);
    CHECK(back.labels.size() == b.labels.size());
    CHECK(back.provenance == b.provenance);
    CHECK(to_json(back) == to_json(b));
  }
  const json schema = to_json(build_springer_block_a(2));
  CHECK(schema.contains("omega"));
  CHECK(schema["omega"].contains("order"));
  CHECK(schema["omega"].contains("entries"));
  CHECK(schema["orbits"][0].contains("covers"));
}

TEST_CASE("datasets accept a lone block") {
  const BlockData b = build_springer_block_a(2);
  CHECK(dataset_from_json(to_json(b)).size() == 1);
  CHECK(dataset_from_json(dataset_to_json({b, b})).size() == 2);
  CHECK_THROWS_AS(dataset_from_json(json::parse(R"({"name": 3})")), Error);
}

TEST_CASE("results round-trip and carry enough to dualize") {
  const BlockData b = build_springer_block_a(3);
  const SolveResult r = solve(b);
  const json j = to_json(r, b);
  for (const char* key : {"block", "order", "p", "lambda", "p_dual"}) CHECK(j.contains(key));
  const SolveResult back = result_from_json(j);
  CHECK(back.p == r.p);
  CHECK(back.lambda == r.lambda);
  CHECK(back.p_dual == r.p_dual);
  CHECK(back.order == r.order);
  const BlockData skeleton = block_skeleton_from_result_json(j);
  CHECK(dualize_p(back.p, skeleton) == r.p_dual);
}

TEST_CASE("csv export") {
  const BlockData b = build_springer_block_a(2);
  const std::string csv = results_to_csv({solve(b)});
  CHECK(csv.rfind("block,matrix,row,col,value\n", 0) == 0);
  CHECK(csv.find("lambda,\"2\",\"2\",\"-1 + t^2\"") != std::string::npos);
  CHECK(csv.find("p_dual,\"2\",\"1,1\",\"t\"") != std::string::npos);
}

TEST_CASE("character tables round-trip") {
  const CharTable table = char_table_sn(4);
  const CharTable back = char_table_from_json(to_json(table));
  CHECK(validate_table(back).empty());
  CHECK(back.group_order == table.group_order);
  CHECK(coinvariant_pairing(back, "4", "1,1,1,1") == coinvariant_pairing(table, "4", "1,1,1,1"));
}

TEST_CASE("file errors") {
  CHECK_THROWS(read_json_file("/nonexistent/file.json"));
  CHECK_THROWS(write_text_file("/nonexistent/dir/out.json", "x"));
}
