#include <gtest/gtest.h>

#include <string>

#include "burnside/fixtures.hpp"
#include "burnside/io.hpp"
#include "burnside/module.hpp"
#include "burnside/poset.hpp"

using namespace burnside;
using io::Json;
using R = Rational;

TEST(Io, PosetRoundTrip) {
  for (const auto& name : fixtures::poset_names()) {
    const Json doc = io::poset_to_json(fixtures::poset(name));
    const Poset back = io::poset_from_json(doc);
    EXPECT_EQ(io::poset_to_json(back).dump(), doc.dump()) << name;
    EXPECT_EQ(back.size(), fixtures::poset(name).size()) << name;
  }
  const Json diamond = io::poset_to_json(fixtures::poset("diamond"));
  EXPECT_EQ(diamond.at("elements").size(), 4u);
  EXPECT_EQ(diamond.at("greater_than").size(), 4u);  // covers only, (1,4) is implied
}

TEST(Io, AlgebraRoundTrip) {
  for (const auto& name : fixtures::algebra_names()) {
    const auto a = fixtures::algebra<R>(name);
    const Json doc = io::algebra_to_json(a);
    const auto back = io::algebra_from_json<R>(doc);
    EXPECT_EQ(back.dim(), a.dim());
    EXPECT_EQ(back.labels(), a.labels());
    EXPECT_EQ(io::algebra_to_json(back).dump(), doc.dump()) << name;
  }
  const auto inc = incidence_algebra<R>(fixtures::poset("diamond"));
  const Json doc = io::algebra_to_json(inc.algebra);
  EXPECT_EQ(io::algebra_to_json(io::algebra_from_json<R>(doc)).dump(), doc.dump());
}

TEST(Io, ModuleRoundTrip) {
  const auto inc = incidence_algebra<R>(fixtures::poset("chain3"));
  for (const auto& m : simple_modules(inc)) {
    const Json doc = io::module_to_json(m);
    const auto back = io::module_from_json<R>(doc, inc.algebra);
    EXPECT_EQ(io::module_to_json(back).dump(), doc.dump());
  }
}

TEST(Io, ClassifiesDocuments) {
  EXPECT_EQ(io::classify(Json{{"elements", Json::array()}, {"greater_than", Json::array()}}),
            io::DocKind::poset);
  EXPECT_EQ(io::classify(Json{{"table", Json::array()}}), io::DocKind::algebra);
  EXPECT_EQ(io::classify(Json{{"modules", Json::array()}}), io::DocKind::family);
  EXPECT_THROW(io::classify(Json{{"something", 1}}), std::invalid_argument);
  EXPECT_THROW(io::classify(Json::array()), std::invalid_argument);
}

TEST(Io, RejectsMalformedDocuments) {
  EXPECT_THROW(io::poset_from_json(Json{{"elements", "1"}, {"greater_than", Json::array()}}),
               std::invalid_argument);
  EXPECT_THROW(io::poset_from_json(Json{{"elements", Json::array({"1"})},
                                        {"greater_than", Json::array({Json::array({"1"})})}}),
               std::invalid_argument);

  Json bad_algebra = io::algebra_to_json(fixtures::base_field_algebra<R>());
  bad_algebra["unit"] = Json::array();
  EXPECT_THROW(io::algebra_from_json<R>(bad_algebra), std::invalid_argument);

  Json wrong_field = io::algebra_to_json(fixtures::base_field_algebra<R>());
  wrong_field["field"] = "Fp:5";
  EXPECT_THROW(io::algebra_from_json<R>(wrong_field), std::invalid_argument);

  /* a non-associative table is a schema-level rejection, not a crash */
  Json doc;
  doc["field"] = "Q";
  doc["dim"] = 2;
  doc["basis"] = Json::array({"1", "x"});
  doc["unit"] = Json::array({"1", "0"});
  doc["table"] = Json::array();
  for (int i = 0; i < 2; ++i) {
    Json plane = Json::array();
    for (int j = 0; j < 2; ++j) plane.push_back(Json::array({"0", "1"}));
    doc["table"].push_back(plane);
  }
  EXPECT_THROW(io::algebra_from_json<R>(doc), std::invalid_argument);

  const auto inc = incidence_algebra<R>(fixtures::poset("chain2"));
  Json mod = io::module_to_json(simple_modules(inc)[0]);
  mod["action"][1][0][0] = "1/2";
  EXPECT_THROW(io::module_from_json<R>(mod, inc.algebra), std::invalid_argument);
}

TEST(Io, ScalarFormat) {
  EXPECT_EQ(k_str(R(0)), "0");
  EXPECT_EQ(k_str(R(-3)), "-3");
  EXPECT_EQ(k_str(R(2) / R(3)), "2/3");
  EXPECT_EQ(FieldOps<R>::parse("-5/10"), R(-1) / R(2));
  EXPECT_THROW(FieldOps<R>::parse("1/0"), std::invalid_argument);
  EXPECT_THROW(FieldOps<R>::parse("pi"), std::invalid_argument);
}
