#include <doctest.h>

#include <vector>

#include "detseq/features.hpp"
#include "detseq/lexicon.hpp"

using namespace detseq;

namespace {

const std::vector<Polarity> kAllPolarities = {Polarity::Plus, Polarity::Minus,
                                              Polarity::Unspec};
const std::vector<Agr> kAllAgr = {Agr::ThreeSg, Agr::ThreePl, Agr::ThreeSgPl,
                                  Agr::Unspec};

// A pool of bundles that covers every row shape in the built-in tables.
std::vector<FeatureBundle> bundle_pool() {
  std::vector<FeatureBundle> pool;
  const Lexicon lex = builtin_lexicon();
  for (const auto& [key, e] : lex.determiner_entries()) {
    pool.push_back(e.own);
    if (e.selection) pool.push_back(*e.selection);
  }
  pool.push_back(lex.genitive_row());
  pool.push_back(lex.cardinal_row().own);
  pool.push_back(lex.partitive_row().own);
  pool.push_back(FeatureBundle{});  // all unspecified
  FeatureBundle wh_only;
  wh_only.wh = Polarity::Plus;
  pool.push_back(wh_only);
  return pool;
}

}  // namespace

TEST_CASE("polarity meet basics") {
  CHECK(unify_polarity(Polarity::Plus, Polarity::Unspec) == Polarity::Plus);
  CHECK(unify_polarity(Polarity::Unspec, Polarity::Minus) == Polarity::Minus);
  CHECK(unify_polarity(Polarity::Minus, Polarity::Minus) == Polarity::Minus);
  CHECK_FALSE(unify_polarity(Polarity::Plus, Polarity::Minus).has_value());
}

TEST_CASE("agr meet basics") {
  CHECK(unify_agr(Agr::ThreeSgPl, Agr::ThreeSg) == Agr::ThreeSg);
  CHECK(unify_agr(Agr::ThreeSgPl, Agr::ThreePl) == Agr::ThreePl);
  CHECK(unify_agr(Agr::Unspec, Agr::ThreePl) == Agr::ThreePl);
  CHECK_FALSE(unify_agr(Agr::ThreeSg, Agr::ThreePl).has_value());
}

TEST_CASE("polarity meet is commutative, associative, idempotent") {
  for (Polarity a : kAllPolarities) {
    CHECK(unify_polarity(a, a) == a);
    CHECK(unify_polarity(a, Polarity::Unspec) == a);
    CHECK(unify_polarity(Polarity::Unspec, a) == a);
    for (Polarity b : kAllPolarities) {
      CHECK(unify_polarity(a, b) == unify_polarity(b, a));
      for (Polarity c : kAllPolarities) {
        auto ab = unify_polarity(a, b);
        auto bc = unify_polarity(b, c);
        auto left = ab ? unify_polarity(*ab, c) : std::nullopt;
        auto right = bc ? unify_polarity(a, *bc) : std::nullopt;
        CHECK(left == right);
      }
    }
  }
}

TEST_CASE("agr meet is commutative, associative, idempotent") {
  for (Agr a : kAllAgr) {
    CHECK(unify_agr(a, a) == a);
    CHECK(unify_agr(a, Agr::Unspec) == a);
    CHECK(unify_agr(Agr::Unspec, a) == a);
    for (Agr b : kAllAgr) {
      CHECK(unify_agr(a, b) == unify_agr(b, a));
      for (Agr c : kAllAgr) {
        auto ab = unify_agr(a, b);
        auto bc = unify_agr(b, c);
        auto left = ab ? unify_agr(*ab, c) : std::nullopt;
        auto right = bc ? unify_agr(a, *bc) : std::nullopt;
        CHECK(left == right);
      }
    }
  }
}

TEST_CASE("satisfy merges table rows pointwise") {
  const Lexicon lex = builtin_lexicon();
  const DetEntry the = lex.find_determiners("the").front();
  const DetEntry all = lex.find_determiners("all").front();
  const DetEntry what = lex.find_determiners("what").front();

  // "all the": the's own row meets all's restriction.
  REQUIRE(all.selection.has_value());
  auto merged = satisfy(the.own, *all.selection);
  REQUIRE(merged.has_value());
  CHECK(merged->defin == Polarity::Plus);
  CHECK(merged->agr == Agr::ThreeSgPl);

  // "all what": what is wh+, all requires wh-.
  CHECK_FALSE(satisfy(what.own, *all.selection).has_value());
  auto failed = satisfy_explain(what.own, *all.selection);
  REQUIRE(std::holds_alternative<FeatureClash>(failed));
  CHECK(std::get<FeatureClash>(failed).feature == "wh");

  // The all-unspecified restriction changes nothing.
  CHECK(satisfy(the.own, FeatureBundle{}) == the.own);
}

TEST_CASE("satisfy diagnostic reports the first clash in fixed order") {
  FeatureBundle target;
  target.quan = Polarity::Plus;
  target.card = Polarity::Plus;
  FeatureBundle restriction;
  restriction.quan = Polarity::Minus;
  restriction.card = Polarity::Minus;
  auto result = satisfy_explain(target, restriction);
  REQUIRE(std::holds_alternative<FeatureClash>(result));
  CHECK(std::get<FeatureClash>(result).feature == "quan");
}

TEST_CASE("satisfy is symmetric and its result is below both inputs") {
  const auto pool = bundle_pool();
  for (const FeatureBundle& a : pool) {
    for (const FeatureBundle& b : pool) {
      auto ab = satisfy(a, b);
      auto ba = satisfy(b, a);
      CHECK(ab.has_value() == ba.has_value());
      if (!ab) continue;
      CHECK(*ab == *ba);
      const FeatureBundle& met = *ab;
      for (std::size_t i = 0; i < kPolarityFields.size(); ++i) {
        CHECK(polarity_leq(met.*kPolarityFields[i], a.*kPolarityFields[i]));
        CHECK(polarity_leq(met.*kPolarityFields[i], b.*kPolarityFields[i]));
      }
      CHECK(agr_leq(met.agr, a.agr));
      CHECK(agr_leq(met.agr, b.agr));
    }
  }
}

TEST_CASE("value tokens round-trip") {
  for (Polarity p : {Polarity::Plus, Polarity::Minus})
    CHECK(parse_polarity(to_token(p)) == p);
  for (Agr a : {Agr::ThreeSg, Agr::ThreePl, Agr::ThreeSgPl})
    CHECK(parse_agr(to_token(a)) == a);
  CHECK_FALSE(parse_polarity("?").has_value());
  CHECK_FALSE(parse_agr("2sg").has_value());
}
