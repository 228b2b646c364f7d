#pragma once

// Tokenization and noun-phrase parsing: leading adverbs, a determiner
// sequence (with recursive genitive and partitive sub-phrases), and a head
// noun. Produces every analysis, or clash diagnostics when none survive.

#include <optional>
#include <string>
#include <vector>

#include "detseq/compose.hpp"
#include "detseq/lexicon.hpp"

namespace detseq {

// Whitespace split; a trailing 's is detached into its own token.
// Throws std::invalid_argument("empty phrase") on blank input.
std::vector<std::string> tokenize(const std::string& text);

struct AdverbUse {
  AdverbEntry adverb;
  int target_unit = -1;  // -1: the whole NP (classes 1-2); else unit index (class 3)
};

struct NpAnalysis {
  std::vector<AdverbUse> adverbs;
  std::optional<DetPhrase> detp;
  NounEntry head;
  Polarity np_wh = Polarity::Minus;
  Agr np_agr = Agr::Unspec;
};

std::vector<NpAnalysis> parse_np(const std::vector<std::string>& tokens,
                                 const Lexicon& lex);

// Adverb licensing. Classes 1-2 look at the whole NP; class 3 looks at the
// determiner unit the adverb precedes. Returns the violation, if any.
struct NpAdverbContext {
  Polarity np_wh = Polarity::Minus;
  const DetPhrase* detp = nullptr;  // null for determinerless NPs
};
std::optional<Clash> license_adverb(const AdverbEntry& adverb, const NpAdverbContext& np);
std::optional<Clash> license_adverb(const AdverbEntry& adverb, const DetUnit& unit);

struct Judgment {
  std::vector<NpAnalysis> analyses;  // nonempty iff grammatical
  std::vector<Clash> clashes;        // rightmost progress first
  bool grammatical() const { return !analyses.empty(); }
};

Judgment judge(const std::string& text, const Lexicon& lex);

// Display helpers: "[almost all [the]] people" style bracketing.
std::string render_detp(const DetPhrase& detp, const std::vector<AdverbUse>& adverbs);
std::string render_analysis(const NpAnalysis& analysis);

// Maximum depth of genitive-inside-genitive nesting in the analysis.
int genitive_depth(const NpAnalysis& analysis);

}  // namespace detseq
