#pragma once

// Determiner-phrase composition: a determiner anchors an initial tree to
// stand alone, or an auxiliary tree to adjoin onto an existing phrase. The
// anchor's own features become the new root, with two exceptions: agr flows
// up from the foot (unless the anchor insists on agreeing with it too), and
// wh is ultimately handed on to the noun phrase.

#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "detseq/features.hpp"
#include "detseq/lexicon.hpp"

namespace detseq {

enum class ClashStage {
  NoAuxTree,      // anchor combines only with nouns
  Selectional,    // foot violates the anchor's restriction
  FootAgreement,  // anchor must agree with the foot and cannot
  NounAgreement,  // determiner phrase vs head noun
  DetRequired,    // missing or forbidden determiner
  AdverbLicense,  // adverb modifying something it may not
  WhPosition,     // wh+ outside the leftmost slot
  UnknownToken,
  NoParse,
};

const char* to_string(ClashStage stage);

struct Clash {
  ClashStage stage = ClashStage::NoParse;
  std::string feature;      // set for Selectional / FootAgreement / NounAgreement
  std::string left, right;  // required vs found, or the two clashing values
  int position = 0;         // unit index from compose, token index from the parser
  std::string detail;       // lemma or violated condition

  bool operator==(const Clash&) const = default;
};

// One human-readable line, e.g. "card: + required, - found at position 1".
std::string describe(const Clash& clash);

enum class UnitKind { Simple, Cardinal, Genitive, Partitive };

struct GenitiveInner;
struct PartitiveInner;

// One determiner slot in a phrase: a lexical determiner, a cardinal, an
// embedded-NP genitive, or a partitive.
struct DetUnit {
  UnitKind kind = UnitKind::Simple;
  std::string lemma;
  std::string text;  // surface form, e.g. "a kind of"
  FeatureBundle own;
  std::optional<FeatureBundle> selection;
  bool agree_with_foot = false;
  std::shared_ptr<const GenitiveInner> genitive;    // kind == Genitive
  std::shared_ptr<const PartitiveInner> partitive;  // kind == Partitive
};

struct AdjunctionStep {
  DetUnit anchor;
  FeatureBundle foot_root_before;
  FeatureBundle merged_foot;  // foot root after the selectional meet
  FeatureBundle root_after;
};

struct DetPhrase {
  FeatureBundle root;
  std::vector<DetUnit> units;  // leftmost first
  std::vector<AdjunctionStep> trace;
};

// The noun phrase embedded in a genitive determiner ("[John 's friend] 's").
struct GenitiveInner {
  std::optional<DetPhrase> detp;
  NounEntry head;
  Polarity wh = Polarity::Minus;
  Agr agr = Agr::Unspec;
};

// The material under a partitive determiner ("[a kind] of", "[all] of").
// head is absent for the bare-determiner form.
struct PartitiveInner {
  std::optional<DetPhrase> detp;
  std::optional<NounEntry> head;
};

DetUnit simple_unit(const DetEntry& entry);
DetUnit cardinal_unit(const DetEntry& entry);
DetUnit genitive_unit(GenitiveInner inner, const FeatureBundle& gen_row, std::string text);
DetUnit partitive_unit(PartitiveInner inner, const DetEntry& part_row, std::string text);

struct NpFeatures {
  Polarity wh = Polarity::Minus;
  Agr agr = Agr::Unspec;
};

// Any single determiner stands alone as a complete phrase.
DetPhrase leaf(const DetUnit& unit);

// Adjoins anchor onto foot. The new root copies the anchor's seven non-agr
// features; agr comes from the foot, met with the anchor's own agr when the
// anchor requires agreement.
std::variant<DetPhrase, Clash> adjoin(const DetUnit& anchor, const DetPhrase& foot);

// Rightmost unit anchors the initial tree; the others adjoin right to left.
// A clash carries the 0-based index of the failing unit.
std::variant<DetPhrase, Clash> compose_sequence(const std::vector<DetUnit>& units);

// Combines a (possibly absent) determiner phrase with a head noun: checks
// determiner requirements and number agreement, and passes wh through.
std::variant<NpFeatures, Clash> attach_to_noun(const std::optional<DetPhrase>& detp,
                                               const NounEntry& noun);

inline bool is_clash(const std::variant<DetPhrase, Clash>& r) {
  return std::holds_alternative<Clash>(r);
}
inline bool is_clash(const std::variant<NpFeatures, Clash>& r) {
  return std::holds_alternative<Clash>(r);
}

}  // namespace detseq
