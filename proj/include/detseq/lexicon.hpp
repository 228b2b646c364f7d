#pragma once

// Lexical entries for determiners, nouns, adverbs and the genitive marker,
// the built-in tables, cardinal-number recognition, and the TSV file format.

#include <iosfwd>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "detseq/features.hpp"

namespace detseq {

enum class LexCategory {
  Determiner,
  CommonNoun,
  ProperNoun,
  GenitivePronoun,
  GenitiveMarker,  // the detached 's, category G
  PartitiveHeadNoun,
  Adverb,
  Preposition,
};

struct DetEntry {
  std::string lemma;
  FeatureBundle own;
  // Absent selection means the determiner anchors no auxiliary tree: it
  // combines only with nouns and cannot modify another determiner.
  std::optional<FeatureBundle> selection;
  bool agree_with_foot = false;
  LexCategory category = LexCategory::Determiner;  // or GenitivePronoun

  bool operator==(const DetEntry&) const = default;
};

struct NounEntry {
  std::string lemma;
  Agr agr = Agr::Unspec;
  bool det_required = false;  // singular count nouns
  bool takes_det = true;      // false for proper nouns
  bool mass = false;
  LexCategory category = LexCategory::CommonNoun;

  bool operator==(const NounEntry&) const = default;
};

enum class AdverbClass { NPClass1, NPClass2, DetClass3 };

struct AdverbEntry {
  std::string lemma;
  AdverbClass cls = AdverbClass::NPClass1;

  bool operator==(const AdverbEntry&) const = default;
};

// Immutable after construction; lookups never fail hard — unknown tokens
// simply return no entries. Determiner/noun/adverb lookup is
// case-insensitive; proper nouns match exactly as written.
class Lexicon {
 public:
  std::vector<DetEntry> find_determiners(const std::string& token) const;
  std::optional<NounEntry> find_common_noun(const std::string& token) const;
  std::optional<NounEntry> find_proper_noun(const std::string& token) const;
  std::optional<NounEntry> find_partitive_head(const std::string& token) const;
  std::optional<AdverbEntry> find_adverb(const std::string& token) const;
  bool is_genitive_marker(const std::string& token) const;
  bool is_partitive_of(const std::string& token) const;

  // Cardinal tokens: the number words one..twenty, hundred, thousand, and
  // digit strings with value >= 1. "one" (and digit value 1) is 3sg, the
  // rest 3pl.
  std::optional<DetEntry> classify_cardinal(const std::string& token) const;

  bool known(const std::string& token) const;

  // Pseudo-entries: the CARD row template (agr 3pl), the PART row, and the
  // feature row shared by all genitive determiners.
  const DetEntry& cardinal_row() const { return cardinal_row_; }
  const DetEntry& partitive_row() const { return partitive_row_; }
  const FeatureBundle& genitive_row() const { return genitive_row_; }

  // Adding an entry with the same lemma and category replaces the old one.
  void add(const DetEntry& e);
  void add(const NounEntry& e);
  void add(const AdverbEntry& e);

  const std::map<std::string, DetEntry>& determiner_entries() const { return dets_; }
  const std::map<std::string, DetEntry>& genitive_pronoun_entries() const { return genpros_; }
  const std::map<std::string, NounEntry>& common_noun_entries() const { return nouns_; }
  const std::map<std::string, NounEntry>& proper_noun_entries() const { return propns_; }
  const std::map<std::string, NounEntry>& partitive_head_entries() const { return part_heads_; }
  const std::map<std::string, AdverbEntry>& adverb_entries() const { return adverbs_; }

  bool operator==(const Lexicon&) const = default;

 private:
  friend Lexicon builtin_lexicon();

  std::map<std::string, DetEntry> dets_;
  std::map<std::string, DetEntry> genpros_;
  std::map<std::string, NounEntry> nouns_;
  std::map<std::string, NounEntry> propns_;
  std::map<std::string, NounEntry> part_heads_;
  std::map<std::string, AdverbEntry> adverbs_;
  std::set<std::string> markers_;       // "'s"
  std::set<std::string> prepositions_;  // "of"
  std::map<std::string, Agr> number_words_;
  DetEntry cardinal_row_;
  DetEntry partitive_row_;
  FeatureBundle genitive_row_;
};

// The built-in lexicon: determiner and restriction tables, genitive
// pronouns, the marker 's, cardinal and partitive pseudo-entries, the
// determiner adverbs, and a small noun inventory.
Lexicon builtin_lexicon();

// The single-word determiner inventory plus a cardinal representative, in a
// fixed order; the domain enumerated by the sequence oracle.
std::vector<DetEntry> core_determiner_inventory(const Lexicon& lex);

// TSV lexicon files. Lines: category, lemma, own features, optional
// "sel:" restriction column, optional flags column. Entries merge over the
// built-in lexicon, shadowing same-lemma same-category entries.
// Throws std::runtime_error naming the offending line on malformed input.
Lexicon load_lexicon(std::istream& in);
Lexicon load_lexicon_file(const std::string& path);

// Serializes the file-expressible entries back to the TSV format.
std::string format_lexicon_tsv(const Lexicon& lex);

std::string ascii_lower(std::string s);

}  // namespace detseq
