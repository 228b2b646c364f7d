#include <doctest.h>

#include "detseq/compose.hpp"
#include "detseq/lexicon.hpp"

using namespace detseq;

namespace {

const Lexicon& lex() {
  static const Lexicon instance = builtin_lexicon();
  return instance;
}

DetUnit unit_for(const char* lemma) {
  auto dets = lex().find_determiners(lemma);
  if (!dets.empty()) return simple_unit(dets.front());
  auto card = lex().classify_cardinal(lemma);
  REQUIRE(card.has_value());
  return cardinal_unit(*card);
}

NounEntry noun_for(const char* lemma) {
  auto n = lex().find_common_noun(lemma);
  REQUIRE(n.has_value());
  return *n;
}

}  // namespace

TEST_CASE("leaf phrases expose the anchor's own features") {
  const DetPhrase these = leaf(unit_for("these"));
  CHECK(these.root.defin == Polarity::Plus);
  CHECK(these.root.agr == Agr::ThreePl);
  CHECK(these.units.size() == 1);
  CHECK(these.trace.empty());

  const DetPhrase three = leaf(unit_for("three"));
  CHECK(three.root.defin == Polarity::Plus);
  CHECK(three.root.quan == Polarity::Plus);
  CHECK(three.root.card == Polarity::Plus);
  CHECK(three.root.constancy == Polarity::Plus);
  CHECK(three.root.agr == Agr::ThreePl);

  const DetPhrase part = leaf(partitive_unit(PartitiveInner{}, lex().partitive_row(), "of"));
  CHECK(part.root.defin == Polarity::Minus);
  CHECK(part.root.constancy == Polarity::Plus);
  CHECK(part.root.agr == Agr::Unspec);
}

TEST_CASE("adjunction takes the anchor's features and the foot's agr") {
  auto result = adjoin(unit_for("all"), leaf(unit_for("the")));
  REQUIRE_FALSE(is_clash(result));
  const DetPhrase& phrase = std::get<DetPhrase>(result);
  // root is all's own row except agr, which comes from the foot
  CHECK(phrase.root.quan == Polarity::Plus);
  CHECK(phrase.root.agr == Agr::ThreeSgPl);
  CHECK(phrase.units.size() == 2);
  CHECK(phrase.units.front().lemma == "all");
  REQUIRE(phrase.trace.size() == 1);
  CHECK(phrase.trace[0].root_after == phrase.root);
}

TEST_CASE("selectional clash names the feature") {
  // what requires card+, no is card-
  auto result = adjoin(unit_for("what"), leaf(unit_for("no")));
  REQUIRE(is_clash(result));
  const Clash& clash = std::get<Clash>(result);
  CHECK(clash.stage == ClashStage::Selectional);
  CHECK(clash.feature == "card");
  CHECK(clash.left == "+");
  CHECK(clash.right == "-");
}

TEST_CASE("demonstratives must agree with the phrase they modify") {
  auto result = adjoin(unit_for("these"), leaf(unit_for("one")));
  REQUIRE(is_clash(result));
  CHECK(std::get<Clash>(result).stage == ClashStage::FootAgreement);

  auto ok = adjoin(unit_for("these"), leaf(unit_for("three")));
  REQUIRE_FALSE(is_clash(ok));
  CHECK(std::get<DetPhrase>(ok).root.agr == Agr::ThreePl);
}

TEST_CASE("determiners without an auxiliary tree cannot adjoin") {
  for (const char* lemma : {"no", "few", "many", "my"}) {
    auto result = adjoin(unit_for(lemma), leaf(unit_for("the")));
    REQUIRE(is_clash(result));
    CHECK(std::get<Clash>(result).stage == ClashStage::NoAuxTree);
  }
}

TEST_CASE("compose_sequence works right to left and reports the failing index") {
  auto these_three = compose_sequence({unit_for("these"), unit_for("three")});
  REQUIRE_FALSE(is_clash(these_three));
  CHECK(std::get<DetPhrase>(these_three).root.agr == Agr::ThreePl);

  auto bad = compose_sequence({unit_for("all"), unit_for("what"), unit_for("no")});
  REQUIRE(is_clash(bad));
  const Clash& clash = std::get<Clash>(bad);
  CHECK(clash.stage == ClashStage::Selectional);
  CHECK(clash.position == 1);

  // single-unit composition equals the leaf
  auto single = compose_sequence({unit_for("the")});
  REQUIRE_FALSE(is_clash(single));
  CHECK(std::get<DetPhrase>(single).root == leaf(unit_for("the")).root);
  CHECK(std::get<DetPhrase>(single).trace.empty());
}

TEST_CASE("attach_to_noun checks requirements and agreement") {
  auto her_dog = attach_to_noun(leaf(unit_for("her")), noun_for("dog"));
  REQUIRE_FALSE(is_clash(her_dog));
  CHECK(std::get<NpFeatures>(her_dog).agr == Agr::ThreeSg);
  CHECK(std::get<NpFeatures>(her_dog).wh == Polarity::Minus);

  auto bare_dog = attach_to_noun(std::nullopt, noun_for("dog"));
  REQUIRE(is_clash(bare_dog));
  CHECK(std::get<Clash>(bare_dog).stage == ClashStage::DetRequired);

  auto bare_water = attach_to_noun(std::nullopt, noun_for("water"));
  REQUIRE_FALSE(is_clash(bare_water));
  CHECK(std::get<NpFeatures>(bare_water).agr == Agr::ThreeSg);

  auto these_book = attach_to_noun(leaf(unit_for("these")), noun_for("book"));
  REQUIRE(is_clash(these_book));
  CHECK(std::get<Clash>(these_book).stage == ClashStage::NounAgreement);

  auto the_albert = attach_to_noun(leaf(unit_for("the")), *lex().find_proper_noun("Albert"));
  REQUIRE(is_clash(the_albert));
  CHECK(std::get<Clash>(the_albert).stage == ClashStage::DetRequired);

  auto what_dogs = attach_to_noun(leaf(unit_for("what")), noun_for("dogs"));
  REQUIRE_FALSE(is_clash(what_dogs));
  CHECK(std::get<NpFeatures>(what_dogs).wh == Polarity::Plus);
  CHECK(std::get<NpFeatures>(what_dogs).agr == Agr::ThreePl);
}

TEST_CASE("root-feature and agr-source laws hold over every determiner pair") {
  std::vector<DetUnit> units;
  for (const auto& [key, e] : lex().determiner_entries()) units.push_back(simple_unit(e));
  for (const auto& [key, e] : lex().genitive_pronoun_entries())
    units.push_back(simple_unit(e));
  units.push_back(cardinal_unit(*lex().classify_cardinal("three")));
  units.push_back(cardinal_unit(*lex().classify_cardinal("one")));

  int adjunctions = 0;
  for (const DetUnit& anchor : units) {
    for (const DetUnit& foot_unit : units) {
      const DetPhrase foot = leaf(foot_unit);
      auto result = adjoin(anchor, foot);
      if (is_clash(result)) continue;
      ++adjunctions;
      const DetPhrase& phrase = std::get<DetPhrase>(result);
      for (std::size_t i = 0; i < kPolarityFields.size(); ++i)
        CHECK(phrase.root.*kPolarityFields[i] == anchor.own.*kPolarityFields[i]);
      if (!anchor.agree_with_foot) CHECK(phrase.root.agr == foot.root.agr);
    }
  }
  CHECK(adjunctions > 0);
}

TEST_CASE("a unit without an auxiliary tree is rejected in non-final position") {
  // [no X] fails for every X, and adding more anchors to the left cannot help.
  for (const auto& [key, e] : lex().determiner_entries()) {
    auto result = compose_sequence({unit_for("no"), simple_unit(e)});
    REQUIRE(is_clash(result));
    CHECK(std::get<Clash>(result).stage == ClashStage::NoAuxTree);
    CHECK(std::get<Clash>(result).position == 0);

    auto longer = compose_sequence({unit_for("all"), unit_for("no"), simple_unit(e)});
    CHECK(is_clash(longer));
  }
}
