#include "detseq/parse.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace detseq {

std::vector<std::string> tokenize(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  std::string tok;
  while (in >> tok) {
    if (tok.size() > 2 && tok.rfind("'s") == tok.size() - 2) {
      out.push_back(tok.substr(0, tok.size() - 2));
      out.push_back("'s");
    } else {
      out.push_back(tok);
    }
  }
  if (out.empty()) throw std::invalid_argument("empty phrase");
  return out;
}

std::optional<Clash> license_adverb(const AdverbEntry& adverb, const NpAdverbContext& np) {
  Clash c;
  c.stage = ClashStage::AdverbLicense;
  switch (adverb.cls) {
    case AdverbClass::NPClass1:
      if (np.np_wh == Polarity::Minus) return std::nullopt;
      c.detail = "\"" + adverb.lemma + "\" modifies only wh- noun phrases";
      return c;
    case AdverbClass::NPClass2: {
      if (!np.detp) {
        c.detail = "\"" + adverb.lemma + "\" does not modify noun phrases without determiners";
        return c;
      }
      const FeatureBundle& r = np.detp->root;
      const bool ok = (r.defin == Polarity::Minus && r.constancy == Polarity::Plus) ||
                      r.gen == Polarity::Plus ||
                      (!np.detp->units.empty() && np.detp->units.front().lemma == "the");
      if (ok) return std::nullopt;
      c.detail = "\"" + adverb.lemma +
                 "\" requires a defin- const+ determiner, a genitive, or \"the\"";
      return c;
    }
    case AdverbClass::DetClass3:
      c.detail = "\"" + adverb.lemma + "\" modifies determiners, not whole noun phrases";
      return c;
  }
  return c;
}

std::optional<Clash> license_adverb(const AdverbEntry& adverb, const DetUnit& unit) {
  Clash c;
  c.stage = ClashStage::AdverbLicense;
  if (adverb.cls != AdverbClass::DetClass3) {
    c.detail = "\"" + adverb.lemma + "\" modifies noun phrases, not single determiners";
    return c;
  }
  if (unit.own.card == Polarity::Plus) return std::nullopt;
  if (unit.lemma == "all" || unit.lemma == "double" || unit.lemma == "half")
    return std::nullopt;
  c.detail = "\"" + adverb.lemma + "\" modifies only card+ determiners or all/double/half; \"" +
             unit.text + "\" is neither";
  return c;
}

namespace {

struct SeqParse {
  std::vector<DetUnit> units;
  std::vector<int> unit_starts;  // token index of each unit
  std::vector<AdverbUse> adv3;   // target indices into units
};

struct CoreNp {
  std::optional<DetPhrase> detp;
  NounEntry head;
  Polarity wh = Polarity::Minus;
  Agr agr = Agr::Unspec;
  std::vector<AdverbUse> adv3;
};

// Recursive-descent parser over a token span, memoized per span. Every
// unification or licensing failure along any path is kept for diagnostics.
class Parser {
 public:
  Parser(const std::vector<std::string>& toks, const Lexicon& lex)
      : toks_(toks), lex_(lex) {}

  std::vector<NpAnalysis> parse_top() {
    const int n = static_cast<int>(toks_.size());
    std::vector<NpAnalysis> out;
    if (n >= 2) {
      if (auto adv = lex_.find_adverb(toks_[0]);
          adv && adv->cls != AdverbClass::DetClass3) {
        for (const CoreNp& c : core_np(1, n)) {
          NpAdverbContext ctx{c.wh, c.detp ? &*c.detp : nullptr};
          if (auto clash = license_adverb(*adv, ctx)) {
            clash->position = 0;
            record(*clash);
            continue;
          }
          out.push_back(to_analysis(c, adv));
        }
      }
    }
    for (const CoreNp& c : core_np(0, n)) out.push_back(to_analysis(c, std::nullopt));
    return out;
  }

  // Deduplicated, ordered by rightmost progress first.
  std::vector<Clash> failures() const {
    std::vector<Clash> out;
    for (const Clash& c : failures_) {
      if (std::find(out.begin(), out.end(), c) == out.end()) out.push_back(c);
    }
    std::stable_sort(out.begin(), out.end(),
                     [](const Clash& a, const Clash& b) { return a.position > b.position; });
    return out;
  }

 private:
  static NpAnalysis to_analysis(const CoreNp& c, const std::optional<AdverbEntry>& np_adv) {
    NpAnalysis a;
    if (np_adv) a.adverbs.push_back(AdverbUse{*np_adv, -1});
    a.adverbs.insert(a.adverbs.end(), c.adv3.begin(), c.adv3.end());
    a.detp = c.detp;
    a.head = c.head;
    a.np_wh = c.wh;
    a.np_agr = c.agr;
    return a;
  }

  void record(Clash c) { failures_.push_back(std::move(c)); }

  std::string join(int i, int j) const {
    std::string s;
    for (int k = i; k < j; ++k) {
      if (!s.empty()) s += ' ';
      s += toks_[k];
    }
    return s;
  }

  // NP over [i, j): DetSeq? followed by a single-token head noun.
  const std::vector<CoreNp>& core_np(int i, int j) {
    auto key = std::make_pair(i, j);
    if (auto it = np_memo_.find(key); it != np_memo_.end()) return it->second;
    std::vector<CoreNp> out;
    if (j - i >= 1) {
      std::vector<NounEntry> heads;
      if (auto n = lex_.find_common_noun(toks_[j - 1])) heads.push_back(*n);
      if (auto n = lex_.find_proper_noun(toks_[j - 1])) heads.push_back(*n);
      for (const NounEntry& head : heads) {
        if (i == j - 1) {
          add_np(out, std::nullopt, head, {}, j - 1);
        } else {
          for (const SeqParse& sp : det_seqs(i, j - 1)) {
            auto composed = compose_sequence(sp.units);
            if (auto* clash = std::get_if<Clash>(&composed)) {
              Clash c = *clash;
              c.position = sp.unit_starts[c.position];
              record(c);
              continue;
            }
            add_np(out, std::get<DetPhrase>(composed), head, sp.adv3, j - 1);
          }
        }
      }
    }
    return np_memo_.emplace(key, std::move(out)).first->second;
  }

  void add_np(std::vector<CoreNp>& out, std::optional<DetPhrase> detp,
              const NounEntry& head, std::vector<AdverbUse> adv3, int noun_pos) {
    auto res = attach_to_noun(detp, head);
    if (auto* clash = std::get_if<Clash>(&res)) {
      Clash c = *clash;
      c.position = noun_pos;
      record(c);
      return;
    }
    const NpFeatures& np = std::get<NpFeatures>(res);
    out.push_back(CoreNp{std::move(detp), head, np.wh, np.agr, std::move(adv3)});
  }

  // All ways to cut [i, j) into determiner units, each optionally preceded
  // by a class-3 adverb.
  const std::vector<SeqParse>& det_seqs(int i, int j) {
    auto key = std::make_pair(i, j);
    if (auto it = seq_memo_.find(key); it != seq_memo_.end()) return it->second;
    std::vector<SeqParse> out;

    auto extend = [&](int start, const std::optional<AdverbEntry>& adv, int adv_pos) {
      for (int m = start + 1; m <= j; ++m) {
        for (const DetUnit& unit : units_spanning(start, m)) {
          if (adv) {
            if (auto clash = license_adverb(*adv, unit)) {
              clash->position = adv_pos;
              record(*clash);
              continue;
            }
          }
          std::vector<AdverbUse> own_adv;
          if (adv) own_adv.push_back(AdverbUse{*adv, 0});
          if (m == j) {
            out.push_back(SeqParse{{unit}, {start}, own_adv});
          } else {
            for (const SeqParse& rest : det_seqs(m, j)) {
              SeqParse sp;
              sp.units.push_back(unit);
              sp.units.insert(sp.units.end(), rest.units.begin(), rest.units.end());
              sp.unit_starts.push_back(start);
              sp.unit_starts.insert(sp.unit_starts.end(), rest.unit_starts.begin(),
                                    rest.unit_starts.end());
              sp.adv3 = own_adv;
              for (AdverbUse use : rest.adv3) {
                use.target_unit += 1;
                sp.adv3.push_back(use);
              }
              out.push_back(std::move(sp));
            }
          }
        }
      }
    };

    extend(i, std::nullopt, -1);
    if (j - i >= 2) {
      if (auto adv = lex_.find_adverb(toks_[i]); adv && adv->cls == AdverbClass::DetClass3)
        extend(i + 1, adv, i);
    }
    return seq_memo_.emplace(key, std::move(out)).first->second;
  }

  // Determiner units covering exactly [i, j).
  const std::vector<DetUnit>& units_spanning(int i, int j) {
    auto key = std::make_pair(i, j);
    if (auto it = unit_memo_.find(key); it != unit_memo_.end()) return it->second;
    std::vector<DetUnit> out;

    if (j == i + 1) {
      for (const DetEntry& e : lex_.find_determiners(toks_[i]))
        out.push_back(simple_unit(e));
      if (auto card = lex_.classify_cardinal(toks_[i]))
        out.push_back(cardinal_unit(*card));
    }

    // Genitive: an embedded NP with the marker after the whole phrase.
    if (j - i >= 2 && lex_.is_genitive_marker(toks_[j - 1])) {
      for (const CoreNp& np : core_np(i, j - 1)) {
        GenitiveInner inner{np.detp, np.head, np.wh, np.agr};
        out.push_back(genitive_unit(std::move(inner), lex_.genitive_row(), join(i, j)));
      }
    }

    if (j - i >= 2 && lex_.is_partitive_of(toks_[j - 1])) {
      // Partitive, head-noun form: DetSeq? head "of". The inner determiners
      // must agree with the head noun before the unit is formed.
      if (auto head = lex_.find_partitive_head(toks_[j - 2])) {
        if (j - 2 == i) {
          add_partitive(out, std::nullopt, *head, i, j);
        } else {
          for (const SeqParse& sp : det_seqs(i, j - 2)) {
            auto composed = compose_sequence(sp.units);
            if (auto* clash = std::get_if<Clash>(&composed)) {
              Clash c = *clash;
              c.position = sp.unit_starts[c.position];
              record(c);
              continue;
            }
            add_partitive(out, std::get<DetPhrase>(composed), *head, i, j);
          }
        }
      }
      // Partitive, bare-determiner form: [adv3] DetUnit "of".
      for (const DetUnit& unit : units_spanning(i, j - 1)) {
        PartitiveInner inner{leaf(unit), std::nullopt};
        out.push_back(partitive_unit(std::move(inner), lex_.partitive_row(), join(i, j)));
      }
      if (j - 1 - i >= 2) {
        if (auto adv = lex_.find_adverb(toks_[i]); adv && adv->cls == AdverbClass::DetClass3) {
          for (const DetUnit& unit : units_spanning(i + 1, j - 1)) {
            if (auto clash = license_adverb(*adv, unit)) {
              clash->position = i;
              record(*clash);
              continue;
            }
            PartitiveInner inner{leaf(unit), std::nullopt};
            out.push_back(partitive_unit(std::move(inner), lex_.partitive_row(), join(i, j)));
          }
        }
      }
    }

    return unit_memo_.emplace(key, std::move(out)).first->second;
  }

  void add_partitive(std::vector<DetUnit>& out, std::optional<DetPhrase> inner_detp,
                     const NounEntry& head, int i, int j) {
    auto res = attach_to_noun(inner_detp, head);
    if (auto* clash = std::get_if<Clash>(&res)) {
      Clash c = *clash;
      c.position = j - 2;
      record(c);
      return;
    }
    PartitiveInner inner{std::move(inner_detp), head};
    out.push_back(partitive_unit(std::move(inner), lex_.partitive_row(), join(i, j)));
  }

  const std::vector<std::string>& toks_;
  const Lexicon& lex_;
  std::map<std::pair<int, int>, std::vector<CoreNp>> np_memo_;
  std::map<std::pair<int, int>, std::vector<SeqParse>> seq_memo_;
  std::map<std::pair<int, int>, std::vector<DetUnit>> unit_memo_;
  std::vector<Clash> failures_;
};

}  // namespace

std::vector<NpAnalysis> parse_np(const std::vector<std::string>& tokens,
                                 const Lexicon& lex) {
  if (tokens.empty()) throw std::invalid_argument("empty phrase");
  Parser parser(tokens, lex);
  return parser.parse_top();
}

Judgment judge(const std::string& text, const Lexicon& lex) {
  const std::vector<std::string> toks = tokenize(text);
  Judgment result;

  std::vector<Clash> unknown;
  for (std::size_t i = 0; i < toks.size(); ++i) {
    if (!lex.known(toks[i])) {
      Clash c;
      c.stage = ClashStage::UnknownToken;
      c.position = static_cast<int>(i);
      c.detail = toks[i];
      unknown.push_back(std::move(c));
    }
  }
  if (!unknown.empty()) {
    result.clashes = std::move(unknown);
    return result;
  }

  Parser parser(toks, lex);
  result.analyses = parser.parse_top();
  if (result.analyses.empty()) {
    result.clashes = parser.failures();
    if (result.clashes.empty()) {
      Clash c;
      c.stage = ClashStage::NoParse;
      c.position = static_cast<int>(toks.size()) - 1;
      result.clashes.push_back(std::move(c));
    }
  }
  return result;
}

namespace {

std::string render_from(const std::vector<DetUnit>& units, std::size_t idx,
                        const std::map<int, std::string>& adv_at) {
  std::string s = "[";
  if (auto it = adv_at.find(static_cast<int>(idx)); it != adv_at.end())
    s += it->second + " ";
  s += units[idx].text;
  if (idx + 1 < units.size()) s += " " + render_from(units, idx + 1, adv_at);
  s += "]";
  return s;
}

}  // namespace

std::string render_detp(const DetPhrase& detp, const std::vector<AdverbUse>& adverbs) {
  std::map<int, std::string> adv_at;
  for (const AdverbUse& use : adverbs)
    if (use.target_unit >= 0) adv_at[use.target_unit] = use.adverb.lemma;
  if (detp.units.empty()) return "[]";
  return render_from(detp.units, 0, adv_at);
}

std::string render_analysis(const NpAnalysis& analysis) {
  std::string s;
  for (const AdverbUse& use : analysis.adverbs)
    if (use.target_unit < 0) s += use.adverb.lemma + " ";
  if (analysis.detp) s += render_detp(*analysis.detp, analysis.adverbs) + " ";
  s += analysis.head.lemma;
  return s;
}

namespace {

int unit_genitive_depth(const DetUnit& unit);

int detp_genitive_depth(const DetPhrase& detp) {
  int d = 0;
  for (const DetUnit& u : detp.units) d = std::max(d, unit_genitive_depth(u));
  return d;
}

int unit_genitive_depth(const DetUnit& unit) {
  int d = 0;
  if (unit.kind == UnitKind::Genitive && unit.genitive) {
    d = 1;
    if (unit.genitive->detp) d += detp_genitive_depth(*unit.genitive->detp);
  } else if (unit.kind == UnitKind::Partitive && unit.partitive && unit.partitive->detp) {
    d = detp_genitive_depth(*unit.partitive->detp);
  }
  return d;
}

}  // namespace

int genitive_depth(const NpAnalysis& analysis) {
  return analysis.detp ? detp_genitive_depth(*analysis.detp) : 0;
}

}  // namespace detseq
