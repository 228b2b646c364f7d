#pragma once

// Exhaustive determiner-sequence enumeration with a deliberately simple
// independent judge for cross-checking the composition engine.

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "detseq/compose.hpp"
#include "detseq/lexicon.hpp"

namespace detseq {

struct EnumerationReport {
  int max_len = 0;
  std::vector<std::string> det_inventory;
  std::vector<std::pair<std::vector<std::string>, FeatureBundle>> accepted;
  std::vector<std::pair<std::vector<std::string>, Clash>> rejected;
};

// Composes every sequence of length 1..max_len over the inventory and
// attaches it to the noun. Sequences are visited in length order, then
// lexicographically by inventory index. Requires 1 <= max_len <= 4;
// throws std::invalid_argument otherwise.
EnumerationReport enumerate_sequences(const std::vector<DetEntry>& inventory,
                                      int max_len, const NounEntry& noun);

// Independent re-derivation of the same verdict: literal pairwise checks of
// each determiner's restriction against the next determiner's own features,
// and an explicit agreement table threaded right to left through the
// sequence and the noun. Shares no code with the composition engine.
bool naive_judge(const std::vector<DetEntry>& sequence, const NounEntry& noun);

// TSV rows: verdict, sequence, root features, clash stage/feature.
void write_report_tsv(const EnumerationReport& report, std::ostream& out);

// Runs every sequence of length 1..max_len through both the composition
// engine and naive_judge, collecting the sequences on which they disagree.
struct OracleCheck {
  long long sequences = 0;
  std::vector<std::vector<std::string>> disagreements;
};
OracleCheck cross_check_oracle(const std::vector<DetEntry>& inventory, int max_len,
                               const NounEntry& noun);

}  // namespace detseq
