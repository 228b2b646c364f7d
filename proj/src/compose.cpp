#include "detseq/compose.hpp"

namespace detseq {

const char* to_string(ClashStage stage) {
  switch (stage) {
    case ClashStage::NoAuxTree: return "NoAuxTree";
    case ClashStage::Selectional: return "Selectional";
    case ClashStage::FootAgreement: return "FootAgreement";
    case ClashStage::NounAgreement: return "NounAgreement";
    case ClashStage::DetRequired: return "DetRequired";
    case ClashStage::AdverbLicense: return "AdverbLicense";
    case ClashStage::WhPosition: return "WhPosition";
    case ClashStage::UnknownToken: return "UnknownToken";
    case ClashStage::NoParse: return "NoParse";
  }
  return "NoParse";
}

namespace {

std::string value_or_blank(const std::string& v) {
  return v.empty() ? "unspecified" : v;
}

}  // namespace

std::string describe(const Clash& clash) {
  const std::string pos = " at position " + std::to_string(clash.position);
  switch (clash.stage) {
    case ClashStage::NoAuxTree:
      return "\"" + clash.detail + "\" combines only with nouns; it cannot modify a determiner phrase" + pos;
    case ClashStage::Selectional:
      return clash.feature + ": " + value_or_blank(clash.left) + " required, " +
             value_or_blank(clash.right) + " found" + pos;
    case ClashStage::FootAgreement:
      return "agr: \"" + clash.detail + "\" is " + value_or_blank(clash.left) +
             " but the phrase it modifies is " + value_or_blank(clash.right) + pos;
    case ClashStage::NounAgreement:
      return "agr: determiner phrase " + value_or_blank(clash.left) + " vs noun " +
             value_or_blank(clash.right) + pos;
    case ClashStage::DetRequired:
      return clash.detail + pos;
    case ClashStage::AdverbLicense:
      return clash.detail + pos;
    case ClashStage::WhPosition:
      return "wh+ determiner \"" + clash.detail + "\" outside the leftmost position" + pos;
    case ClashStage::UnknownToken:
      return "unknown word \"" + clash.detail + "\"" + pos;
    case ClashStage::NoParse:
      return "no noun-phrase parse (stuck near position " + std::to_string(clash.position) + ")";
  }
  return "clash";
}

DetUnit simple_unit(const DetEntry& entry) {
  DetUnit u;
  u.kind = UnitKind::Simple;
  u.lemma = entry.lemma;
  u.text = entry.lemma;
  u.own = entry.own;
  u.selection = entry.selection;
  u.agree_with_foot = entry.agree_with_foot;
  return u;
}

DetUnit cardinal_unit(const DetEntry& entry) {
  DetUnit u = simple_unit(entry);
  u.kind = UnitKind::Cardinal;
  return u;
}

DetUnit genitive_unit(GenitiveInner inner, const FeatureBundle& gen_row, std::string text) {
  DetUnit u;
  u.kind = UnitKind::Genitive;
  u.lemma = "'s";
  u.text = std::move(text);
  u.own = gen_row;
  u.selection = std::nullopt;  // genitives combine only with nouns
  u.genitive = std::make_shared<GenitiveInner>(std::move(inner));
  return u;
}

DetUnit partitive_unit(PartitiveInner inner, const DetEntry& part_row, std::string text) {
  DetUnit u;
  u.kind = UnitKind::Partitive;
  u.lemma = "of";
  u.text = std::move(text);
  u.own = part_row.own;
  u.selection = part_row.selection;
  u.agree_with_foot = part_row.agree_with_foot;
  u.partitive = std::make_shared<PartitiveInner>(std::move(inner));
  return u;
}

DetPhrase leaf(const DetUnit& unit) {
  DetPhrase p;
  p.root = unit.own;
  p.units = {unit};
  return p;
}

std::variant<DetPhrase, Clash> adjoin(const DetUnit& anchor, const DetPhrase& foot) {
  if (!anchor.selection) {
    Clash c;
    c.stage = ClashStage::NoAuxTree;
    c.detail = anchor.text;
    return c;
  }

  auto merged = satisfy_explain(foot.root, *anchor.selection);
  if (auto* fail = std::get_if<FeatureClash>(&merged)) {
    Clash c;
    c.stage = ClashStage::Selectional;
    c.feature = fail->feature;
    c.left = fail->restriction_value;  // what the anchor requires
    c.right = fail->target_value;      // what the foot offers
    c.detail = anchor.text;
    return c;
  }

  FeatureBundle root = anchor.own;
  if (anchor.agree_with_foot) {
    auto agr = unify_agr(anchor.own.agr, foot.root.agr);
    if (!agr) {
      Clash c;
      c.stage = ClashStage::FootAgreement;
      c.feature = "agr";
      c.left = std::string(to_token(anchor.own.agr));
      c.right = std::string(to_token(foot.root.agr));
      c.detail = anchor.text;
      return c;
    }
    root.agr = *agr;
  } else {
    root.agr = foot.root.agr;
  }

  DetPhrase out;
  out.root = root;
  out.units.reserve(foot.units.size() + 1);
  out.units.push_back(anchor);
  out.units.insert(out.units.end(), foot.units.begin(), foot.units.end());
  out.trace = foot.trace;
  out.trace.push_back(AdjunctionStep{anchor, foot.root, std::get<FeatureBundle>(merged), root});
  return out;
}

std::variant<DetPhrase, Clash> compose_sequence(const std::vector<DetUnit>& units) {
  DetPhrase cur = leaf(units.back());
  for (int i = static_cast<int>(units.size()) - 2; i >= 0; --i) {
    auto next = adjoin(units[i], cur);
    if (auto* clash = std::get_if<Clash>(&next)) {
      clash->position = i;
      return *clash;
    }
    cur = std::move(std::get<DetPhrase>(next));
  }
  return cur;
}

std::variant<NpFeatures, Clash> attach_to_noun(const std::optional<DetPhrase>& detp,
                                               const NounEntry& noun) {
  if (!noun.takes_det && detp) {
    Clash c;
    c.stage = ClashStage::DetRequired;
    c.detail = "proper noun \"" + noun.lemma + "\" takes no determiner";
    return c;
  }
  if (noun.det_required && !detp) {
    Clash c;
    c.stage = ClashStage::DetRequired;
    c.detail = "noun \"" + noun.lemma + "\" requires a determiner";
    return c;
  }
  const Agr det_agr = detp ? detp->root.agr : Agr::Unspec;
  auto agr = unify_agr(det_agr, noun.agr);
  if (!agr) {
    Clash c;
    c.stage = ClashStage::NounAgreement;
    c.feature = "agr";
    c.left = std::string(to_token(det_agr));
    c.right = std::string(to_token(noun.agr));
    c.detail = noun.lemma;
    return c;
  }
  NpFeatures np;
  np.wh = detp ? detp->root.wh : Polarity::Minus;
  np.agr = *agr;
  return np;
}

}  // namespace detseq
