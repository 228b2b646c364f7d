#pragma once

// Corpus regression cases: expected verdicts (and optional agreement / wh
// checks) for whole phrases, loaded from TSV and replayed through judge().

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "detseq/lexicon.hpp"

namespace detseq {

struct CorpusCase {
  enum class Expect { Ok, Bad, KnownDivergent };
  Expect expect = Expect::Ok;
  std::string phrase;
  std::optional<Agr> expected_agr;
  std::optional<Polarity> expected_wh;
  std::string note;
  int line = 0;
};

// Columns: expectation, phrase, optional checks ("agr=3pl wh=-"), note.
// Throws std::runtime_error naming the line on malformed input.
std::vector<CorpusCase> load_corpus(std::istream& in);
std::vector<CorpusCase> load_corpus_file(const std::string& path);

struct CorpusResult {
  int total = 0;
  int checked = 0;  // cases that count toward pass/fail
  int passed = 0;
  int failed = 0;
  int divergent = 0;  // known-divergent cases, reported but never failing
  std::vector<std::string> lines;  // one report line per case, input order

  bool ok() const { return failed == 0; }
};

CorpusResult run_corpus(const std::vector<CorpusCase>& cases, const Lexicon& lex);

}  // namespace detseq
