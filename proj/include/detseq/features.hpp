#pragma once

// Feature values and the eight-feature bundle carried by determiners and
// determiner-phrase nodes, plus the meet (unification) operations over them.

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>

namespace detseq {

enum class Polarity : std::uint8_t { Plus, Minus, Unspec };

// Third-person number agreement. ThreeSgPl is the number-neutral value that
// unifies with both ThreeSg and ThreePl; Unspec sits above everything.
enum class Agr : std::uint8_t { ThreeSg, ThreePl, ThreeSgPl, Unspec };

struct FeatureBundle {
  Polarity defin = Polarity::Unspec;
  Polarity quan = Polarity::Unspec;
  Polarity card = Polarity::Unspec;
  Polarity gen = Polarity::Unspec;
  Polarity wh = Polarity::Unspec;
  Polarity decreas = Polarity::Unspec;
  Polarity constancy = Polarity::Unspec;  // printed as "const"
  Agr agr = Agr::Unspec;

  bool operator==(const FeatureBundle&) const = default;
};

// The seven polarity-valued features in fixed diagnostic order.
using PolarityField = Polarity FeatureBundle::*;
inline constexpr std::array<PolarityField, 7> kPolarityFields = {
    &FeatureBundle::defin,   &FeatureBundle::quan, &FeatureBundle::card,
    &FeatureBundle::gen,     &FeatureBundle::wh,   &FeatureBundle::decreas,
    &FeatureBundle::constancy};
inline constexpr std::array<const char*, 7> kPolarityNames = {
    "defin", "quan", "card", "gen", "wh", "decreas", "const"};

// Meet operations. Unspec is the identity; clashing values give no result.
std::optional<Polarity> unify_polarity(Polarity a, Polarity b);
std::optional<Agr> unify_agr(Agr a, Agr b);

// Pointwise meet of all eight features; absent on any clash.
std::optional<FeatureBundle> satisfy(const FeatureBundle& target,
                                     const FeatureBundle& restriction);

// Diagnostic companion to satisfy(): on failure names the first clashing
// feature in the order defin, quan, card, gen, wh, decreas, const, agr.
struct FeatureClash {
  std::string feature;
  std::string target_value;
  std::string restriction_value;
};
std::variant<FeatureBundle, FeatureClash> satisfy_explain(
    const FeatureBundle& target, const FeatureBundle& restriction);

// Lattice order helpers: leq(a, b) holds when a is at least as specific as b.
bool polarity_leq(Polarity a, Polarity b);
bool agr_leq(Agr a, Agr b);

// Value tokens as they appear in lexicon files and reports. Unspec maps to
// the empty string (a blank table cell).
std::string_view to_token(Polarity v);
std::string_view to_token(Agr v);
std::optional<Polarity> parse_polarity(std::string_view token);
std::optional<Agr> parse_agr(std::string_view token);

// "defin=+ quan=- ... agr=3pl" with unspecified features omitted.
std::string format_features(const FeatureBundle& fb);

}  // namespace detseq
