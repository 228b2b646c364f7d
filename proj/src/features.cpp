#include "detseq/features.hpp"

namespace detseq {

std::optional<Polarity> unify_polarity(Polarity a, Polarity b) {
  if (a == Polarity::Unspec) return b;
  if (b == Polarity::Unspec) return a;
  if (a == b) return a;
  return std::nullopt;
}

std::optional<Agr> unify_agr(Agr a, Agr b) {
  if (a == Agr::Unspec) return b;
  if (b == Agr::Unspec) return a;
  if (a == b) return a;
  if (a == Agr::ThreeSgPl) return b;  // 3sgpl covers both 3sg and 3pl
  if (b == Agr::ThreeSgPl) return a;
  return std::nullopt;  // 3sg against 3pl
}

std::optional<FeatureBundle> satisfy(const FeatureBundle& target,
                                     const FeatureBundle& restriction) {
  FeatureBundle out;
  for (std::size_t i = 0; i < kPolarityFields.size(); ++i) {
    auto field = kPolarityFields[i];
    auto met = unify_polarity(target.*field, restriction.*field);
    if (!met) return std::nullopt;
    out.*field = *met;
  }
  auto agr = unify_agr(target.agr, restriction.agr);
  if (!agr) return std::nullopt;
  out.agr = *agr;
  return out;
}

std::variant<FeatureBundle, FeatureClash> satisfy_explain(
    const FeatureBundle& target, const FeatureBundle& restriction) {
  FeatureBundle out;
  for (std::size_t i = 0; i < kPolarityFields.size(); ++i) {
    auto field = kPolarityFields[i];
    auto met = unify_polarity(target.*field, restriction.*field);
    if (!met) {
      return FeatureClash{kPolarityNames[i], std::string(to_token(target.*field)),
                          std::string(to_token(restriction.*field))};
    }
    out.*field = *met;
  }
  auto agr = unify_agr(target.agr, restriction.agr);
  if (!agr) {
    return FeatureClash{"agr", std::string(to_token(target.agr)),
                        std::string(to_token(restriction.agr))};
  }
  out.agr = *agr;
  return out;
}

bool polarity_leq(Polarity a, Polarity b) {
  return b == Polarity::Unspec || a == b;
}

bool agr_leq(Agr a, Agr b) {
  if (b == Agr::Unspec || a == b) return true;
  return b == Agr::ThreeSgPl && (a == Agr::ThreeSg || a == Agr::ThreePl);
}

std::string_view to_token(Polarity v) {
  switch (v) {
    case Polarity::Plus: return "+";
    case Polarity::Minus: return "-";
    case Polarity::Unspec: return "";
  }
  return "";
}

std::string_view to_token(Agr v) {
  switch (v) {
    case Agr::ThreeSg: return "3sg";
    case Agr::ThreePl: return "3pl";
    case Agr::ThreeSgPl: return "3sgpl";
    case Agr::Unspec: return "";
  }
  return "";
}

std::optional<Polarity> parse_polarity(std::string_view token) {
  if (token == "+") return Polarity::Plus;
  if (token == "-") return Polarity::Minus;
  return std::nullopt;
}

std::optional<Agr> parse_agr(std::string_view token) {
  if (token == "3sg") return Agr::ThreeSg;
  if (token == "3pl") return Agr::ThreePl;
  if (token == "3sgpl") return Agr::ThreeSgPl;
  return std::nullopt;
}

std::string format_features(const FeatureBundle& fb) {
  std::string out;
  auto append = [&out](std::string_view name, std::string_view value) {
    if (value.empty()) return;
    if (!out.empty()) out += ' ';
    out += name;
    out += '=';
    out += value;
  };
  for (std::size_t i = 0; i < kPolarityFields.size(); ++i)
    append(kPolarityNames[i], to_token(fb.*kPolarityFields[i]));
  append("agr", to_token(fb.agr));
  return out;
}

}  // namespace detseq
