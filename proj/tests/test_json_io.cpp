#include <doctest.h>

#include "schur/error.hpp"
#include "schur/json_io.hpp"
#include "support/support.hpp"

using namespace schur;
using namespace schur::testing;
using nlohmann::json;

TEST_CASE("complex and matrix round trips") {
  CHECK(json_io::to_json(cplx(1.5, -2.0)) == json::parse("[1.5,-2.0]"));
  CHECK(json_io::parse_complex(json(3), "x") == cplx(3.0));
  const CMatrix h = worked_h();
  CHECK(json_io::parse_matrix(json_io::to_json(h), "H") == h);
  CHECK_THROWS_AS(json_io::parse_matrix(json::parse("[[1,2],[3]]"), "H"), Error);
  CHECK_THROWS_AS(json_io::parse_complex(json::parse("[1,2,3]"), "z"), Error);
  Rng rng(81);
  const CMatrix r = random_matrix(3, 4, rng);
  CHECK(json_io::parse_matrix(json::parse(json_io::to_json(r).dump()), "R") == r);
}

TEST_CASE("permutations") {
  const auto p = cyc(4, "(1 2)(3 4)");
  CHECK(json_io::to_json(p) == json::parse("[2,1,4,3]"));
  CHECK(json_io::parse_permutation(json::parse("[2,1,4,3]"), 4, "p") == p);
  CHECK(json_io::parse_permutation(json("(1 2)(3 4)"), 4, "p") == p);
  CHECK_THROWS_AS(json_io::parse_permutation(json::parse("[1,1,2]"), 3, "p"), Error);
  CHECK_THROWS_AS(json_io::parse_permutation(json::parse("[1,2]"), 3, "p"), Error);
}

TEST_CASE("representation descriptors") {
  const auto s3 = PermGroup::symmetric(3);
  const auto b = json_io::parse_rep(json::parse(R"({"kind":"builtin","name":"s3_standard_2d"})"), s3, "rep");
  CHECK(b.dim() == 2);
  json images = {{"kind", "images"}, {"m", 2}, {"images", json::array()}};
  for (const auto& g : s3.generators())
    images["images"].push_back({{"perm", json_io::to_json(g)}, {"matrix", json_io::to_json(b.evaluate(g))}});
  const auto r = json_io::parse_rep(images, s3, "rep");
  for (const auto& s : s3.elements()) CHECK(near(r.evaluate(s), b.evaluate(s), 1e-12));
  images["m"] = 3;
  CHECK_THROWS_AS(json_io::parse_rep(images, s3, "rep"), Error);
  CHECK_THROWS_AS(json_io::parse_rep(json::parse(R"({"kind":"other"})"), s3, "rep"), Error);
}

TEST_CASE("reports serialize") {
  const auto s3 = PermGroup::symmetric(3);
  const auto rep = UnitaryRep::builtin("s3_standard_2d", s3);
  const auto r = schur_check(worked_h(), s3, rep, CVector{-kR3, 0.5});
  const json j = json::parse(json_io::to_json(r).dump());
  CHECK(j["equality"] == true);
  CHECK(json_io::parse_matrix(j["M_H"], "M_H") == r.m_h);
  CHECK(j["diagnosis"]["witness"].is_null());
  CHECK(j["diagnosis"]["support_generators"] == json::parse("[[2,3]]"));
}
