#include "detseq/enumerate.hpp"

#include <map>
#include <ostream>
#include <stdexcept>

namespace detseq {

EnumerationReport enumerate_sequences(const std::vector<DetEntry>& inventory,
                                      int max_len, const NounEntry& noun) {
  if (inventory.empty()) throw std::invalid_argument("empty determiner inventory");
  if (max_len < 1 || max_len > 4)
    throw std::invalid_argument("max_len must be between 1 and 4");

  EnumerationReport report;
  report.max_len = max_len;
  for (const DetEntry& e : inventory) report.det_inventory.push_back(e.lemma);

  const int n = static_cast<int>(inventory.size());
  for (int len = 1; len <= max_len; ++len) {
    std::vector<int> idx(len, 0);
    while (true) {
      std::vector<DetUnit> units;
      std::vector<std::string> lemmas;
      units.reserve(len);
      for (int k = 0; k < len; ++k) {
        const DetEntry& e = inventory[idx[k]];
        units.push_back(e.own.card == Polarity::Plus ? cardinal_unit(e) : simple_unit(e));
        lemmas.push_back(e.lemma);
      }

      auto composed = compose_sequence(units);
      if (auto* clash = std::get_if<Clash>(&composed)) {
        report.rejected.emplace_back(std::move(lemmas), *clash);
      } else {
        const DetPhrase& phrase = std::get<DetPhrase>(composed);
        auto attached = attach_to_noun(phrase, noun);
        if (auto* clash = std::get_if<Clash>(&attached)) {
          Clash c = *clash;
          c.position = len;  // the noun slot
          report.rejected.emplace_back(std::move(lemmas), std::move(c));
        } else {
          report.accepted.emplace_back(std::move(lemmas), phrase.root);
        }
      }

      // odometer over inventory indices
      int pos = len - 1;
      while (pos >= 0 && ++idx[pos] == n) idx[pos--] = 0;
      if (pos < 0) break;
    }
  }
  return report;
}

namespace {

// Codes 0=3sg 1=3pl 2=3sgpl 3=unspecified; -1 is a clash. Spelled out in
// full so this stays independent of the engine's unification.
constexpr int kAgrMeet[4][4] = {
    // 3sg  3pl  3sgpl unspec
    {0, -1, 0, 0},    // 3sg
    {-1, 1, 1, 1},    // 3pl
    {0, 1, 2, 2},     // 3sgpl
    {0, 1, 2, 3},     // unspec
};

int agr_code(Agr a) {
  switch (a) {
    case Agr::ThreeSg: return 0;
    case Agr::ThreePl: return 1;
    case Agr::ThreeSgPl: return 2;
    case Agr::Unspec: return 3;
  }
  return 3;
}

bool literal_polarity_ok(Polarity required, Polarity found) {
  return required == Polarity::Unspec || found == Polarity::Unspec || required == found;
}

}  // namespace

bool naive_judge(const std::vector<DetEntry>& sequence, const NounEntry& noun) {
  if (sequence.empty()) return false;

  // Each determiner's restriction against the literal feature row of the
  // determiner to its right.
  for (std::size_t i = 0; i + 1 < sequence.size(); ++i) {
    const DetEntry& left = sequence[i];
    const DetEntry& right = sequence[i + 1];
    if (!left.selection) return false;
    const FeatureBundle& sel = *left.selection;
    const FeatureBundle& own = right.own;
    if (!literal_polarity_ok(sel.defin, own.defin)) return false;
    if (!literal_polarity_ok(sel.quan, own.quan)) return false;
    if (!literal_polarity_ok(sel.card, own.card)) return false;
    if (!literal_polarity_ok(sel.gen, own.gen)) return false;
    if (!literal_polarity_ok(sel.wh, own.wh)) return false;
    if (!literal_polarity_ok(sel.decreas, own.decreas)) return false;
    if (!literal_polarity_ok(sel.constancy, own.constancy)) return false;
    if (sel.agr != Agr::Unspec && own.agr != Agr::Unspec && sel.agr != own.agr)
      return false;
  }

  // Agreement threads from the rightmost determiner leftward; determiners
  // that insist on agreeing fold their own value in.
  int cur = agr_code(sequence.back().own.agr);
  for (int i = static_cast<int>(sequence.size()) - 2; i >= 0; --i) {
    if (sequence[i].agree_with_foot) {
      cur = kAgrMeet[agr_code(sequence[i].own.agr)][cur];
      if (cur < 0) return false;
    }
  }
  return kAgrMeet[cur][agr_code(noun.agr)] >= 0;
}

OracleCheck cross_check_oracle(const std::vector<DetEntry>& inventory, int max_len,
                               const NounEntry& noun) {
  if (inventory.empty()) throw std::invalid_argument("empty determiner inventory");
  if (max_len < 1 || max_len > 4)
    throw std::invalid_argument("max_len must be between 1 and 4");

  OracleCheck check;
  const int n = static_cast<int>(inventory.size());
  for (int len = 1; len <= max_len; ++len) {
    std::vector<int> idx(len, 0);
    while (true) {
      std::vector<DetEntry> entries;
      std::vector<DetUnit> units;
      for (int k = 0; k < len; ++k) {
        const DetEntry& e = inventory[idx[k]];
        entries.push_back(e);
        units.push_back(e.own.card == Polarity::Plus ? cardinal_unit(e) : simple_unit(e));
      }

      bool engine_accepts = false;
      auto composed = compose_sequence(units);
      if (auto* phrase = std::get_if<DetPhrase>(&composed))
        engine_accepts = !is_clash(attach_to_noun(*phrase, noun));

      ++check.sequences;
      if (engine_accepts != naive_judge(entries, noun)) {
        std::vector<std::string> lemmas;
        for (const DetEntry& e : entries) lemmas.push_back(e.lemma);
        check.disagreements.push_back(std::move(lemmas));
      }

      int pos = len - 1;
      while (pos >= 0 && ++idx[pos] == n) idx[pos--] = 0;
      if (pos < 0) break;
    }
  }
  return check;
}

void write_report_tsv(const EnumerationReport& report, std::ostream& out) {
  std::map<std::string, int> rank;
  for (std::size_t i = 0; i < report.det_inventory.size(); ++i)
    rank.try_emplace(report.det_inventory[i], static_cast<int>(i));
  auto seq_less = [&rank](const std::vector<std::string>& a,
                          const std::vector<std::string>& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    for (std::size_t k = 0; k < a.size(); ++k) {
      const int ra = rank.count(a[k]) ? rank.at(a[k]) : -1;
      const int rb = rank.count(b[k]) ? rank.at(b[k]) : -1;
      if (ra != rb) return ra < rb;
    }
    return false;
  };
  auto joined = [](const std::vector<std::string>& lemmas) {
    std::string s;
    for (const std::string& l : lemmas) {
      if (!s.empty()) s += ' ';
      s += l;
    }
    return s;
  };
  auto write_accept = [&](const std::pair<std::vector<std::string>, FeatureBundle>& row) {
    out << "accept\t" << joined(row.first) << '\t' << format_features(row.second) << "\t\n";
  };
  auto write_reject = [&](const std::pair<std::vector<std::string>, Clash>& row) {
    out << "reject\t" << joined(row.first) << "\t\t" << to_string(row.second.stage);
    if (!row.second.feature.empty()) out << ':' << row.second.feature;
    out << '@' << row.second.position << '\n';
  };

  // Both partitions are already in enumeration order; interleave them back
  // into one stream ordered by length, then inventory rank.
  std::size_t a = 0, r = 0;
  while (a < report.accepted.size() && r < report.rejected.size()) {
    if (seq_less(report.accepted[a].first, report.rejected[r].first))
      write_accept(report.accepted[a++]);
    else
      write_reject(report.rejected[r++]);
  }
  while (a < report.accepted.size()) write_accept(report.accepted[a++]);
  while (r < report.rejected.size()) write_reject(report.rejected[r++]);
}

}  // namespace detseq
