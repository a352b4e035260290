#include "doctest.h"

#include "primesub/audit.hpp"
#include "primesub/io.hpp"

using namespace primesub;

namespace {

template <class F>
std::string schemaPath(F&& f) {
  try {
    f();
  } catch (const SchemaError& e) {
    return e.path();
  }
  return "<none>";
}

template <class F>
long validationIndex(F&& f) {
  try {
    f();
  } catch (const ValidationError& e) {
    return e.index();
  }
  return -999;
}

}  // namespace

TEST_CASE("minimal complex document") {
  const Document d = parseDocument(R"({"ring":{"u":1},"modules":[{"invariants":[],"free":1}]})");
  REQUIRE(d.complex);
  CHECK(d.complex->length() == 1);
  CHECK(d.complex->module(0) == FgModule::free(RingCtx(1), 1));
  CHECK_FALSE(d.subcomplex);
}

TEST_CASE("schema errors carry a path") {
  CHECK(schemaPath([] { parseDocument(R"({"ring":{"u":1},"modules":[{"invariants":[0],"free":1}]})"); }) ==
        "/modules/0/invariants/0");
  CHECK(schemaPath([] { parseDocument(R"({"modules":[]})"); }) == "/ring");
  CHECK(schemaPath([] { parseDocument(R"({"ring":{"u":4},"modules":[{"free":1}]})"); }) == "/ring/u");
  CHECK(schemaPath([] { parseDocument(R"({"ring":{"u":1},"modules":[{"invariants":[4,6]}]})"); }) ==
        "/modules/0/invariants/1");
  CHECK(schemaPath([] { parseDocument(R"({"ring":{"u":3},"modules":[{"invariants":[3]}]})"); }) ==
        "/modules/0/invariants/0");
  CHECK(schemaPath([] {
          parseDocument(R"({"ring":{"u":1},"modules":[{"free":1},{"free":1}],"diffs":[[["1","2"]]]})");
        }) == "/diffs/0/0");
  CHECK(schemaPath([] {
          parseDocument(R"({"ring":{"u":1},"modules":[{"free":1},{"free":1}],"diffs":[[["1/2"]]]})");
        }) == "/diffs/0/0/0");
  CHECK(schemaPath([] { parseDocument("{not json"); }) == "");
}

TEST_CASE("validation errors carry a degree") {
  // ℤ -1-> ℤ -1-> ℤ has d_1 d_2 = 1.
  CHECK(validationIndex([] {
          parseDocument(R"({"ring":{"u":1},"modules":[{"free":1},{"free":1},{"free":1}],"diffs":[[["1"]],[["1"]]]})");
        }) == 1);
  // ℤ/2 -> ℤ by 1 is not well defined.
  CHECK(validationIndex([] {
          parseDocument(R"({"ring":{"u":1},"lo":3,"modules":[{"free":1},{"invariants":[2]}],"diffs":[[["1"]]]})");
        }) == 4);
  // S_1 = ℤ but S_0 = 0 under the identity.
  CHECK(validationIndex([] {
          parseDocument(R"({"ring":{"u":1},"modules":[{"free":1},{"free":1}],"diffs":[[["1"]]],
                            "subcomplex":{"parts":[{"gens":[]},{"gens":[["1"]]}]}})");
        }) == 1);
}

TEST_CASE("documents round-trip") {
  const std::string text =
      R"({"ring":{"u":6},"lo":-1,"modules":[{"invariants":[5],"free":1},{"invariants":[],"free":1}],)"
      R"("diffs":[[["0"],["1/2"]]],"subcomplex":{"parts":[{"gens":[["0","1"]]},{"gens":[["2"]]}]},)"
      R"("avoid":[{"parts":[{"gens":[["1","0"],["0","1"]]},{"gens":[]}]}]})";
  const Document d = parseDocument(text);
  REQUIRE(d.subcomplex);
  CHECK(d.family.size() == 1);
  const Json once = serializeDocument(d);
  const Document again = parseDocument(once.dump());
  CHECK(*again.complex == *d.complex);
  CHECK(*again.subcomplex == *d.subcomplex);
  CHECK(again.family.front() == d.family.front());
  CHECK(serializeDocument(again).dump() == once.dump());
}

TEST_CASE("random documents round-trip") {
  for (std::uint64_t t = 0; t < 150; ++t) {
    Rng rng(trialSeed(4, 0, t));
    const Complex C = randomComplex(rng, GenOptions{});
    Document d;
    d.complex = C;
    d.subcomplex = randomSubcomplex(C, rng);
    const Json j = serializeDocument(d);
    const Document back = parseDocument(j.dump());
    CHECK(*back.complex == C);
    CHECK(*back.subcomplex == *d.subcomplex);
    CHECK(serializeDocument(back) == j);
  }
}

TEST_CASE("cech documents") {
  const Document a = parseDocument(R"({"cech":{"elements":[3,5,7]},
      "subcomplex":{"degree_0":[0],"degree_1":[2,1,1],"degree_2":[1,1,1],"degree_3":[1]}})");
  REQUIRE(a.cech);
  REQUIRE(a.cech->parts);
  CHECK((*a.cech->parts)[1].gens == std::vector<Integer>{2, 1, 1});
  const Document b = parseDocument(serializeDocument(a).dump());
  CHECK(serializeDocument(b) == serializeDocument(a));
  CHECK(parseDocument(R"({"cech":{"elements":[3,5,7]},"subcomplex":{"parts":[{"gens":[0]},{"gens":[2,1,1]},
      {"gens":[1,1,1]},{"gens":[1]}]}})").cech->parts->at(1).gens == (*a.cech->parts)[1].gens);
  CHECK(schemaPath([] { parseDocument(R"({"cech":{"elements":[6,10]}})"); }) == "/cech/elements");
  CHECK(validationIndex([] {
          parseDocument(R"({"cech":{"elements":[3,5,7]},
              "subcomplex":{"degree_0":[1],"degree_1":[2,1,1],"degree_2":[1,1,1],"degree_3":[1]}})");
        }) == 0);
}

TEST_CASE("report layout") {
  Json r = makeReport("prime", "NotPrime");
  Witness w{1, RingElem(2), {RingElem(2)}, "2 * [2] = [4] ∈ S_1"};
  r["ideals"] = idealsJson({{1, Ideal::fromCanonical(4)}});
  r["witness"] = witnessJson(w);
  std::vector<std::string> keys;
  for (const auto& [k, v] : r.items()) keys.push_back(k);
  CHECK(keys == std::vector<std::string>{"command", "verdict", "ideals", "witness", "timing"});
  CHECK(r["witness"]["element"] == Json::array({"2"}));
  CHECK(r["timing"].is_null());
  const std::string human = renderHuman(r);
  CHECK(human.find("prime: NotPrime") == 0);
  CHECK(human.find("P_1 = (4)") != std::string::npos);
  CHECK(human.find("replay: 2 * [2] = [4]") != std::string::npos);
}
