#include "detseq/lexicon.hpp"

#include <cctype>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace detseq {
namespace {

constexpr Polarity P = Polarity::Plus;
constexpr Polarity M = Polarity::Minus;
constexpr Agr SG = Agr::ThreeSg;
constexpr Agr PL = Agr::ThreePl;
constexpr Agr SGPL = Agr::ThreeSgPl;

FeatureBundle row(Polarity defin, Polarity quan, Polarity card, Polarity gen,
                  Polarity wh, Polarity decreas, Polarity constancy, Agr agr) {
  FeatureBundle fb;
  fb.defin = defin;
  fb.quan = quan;
  fb.card = card;
  fb.gen = gen;
  fb.wh = wh;
  fb.decreas = decreas;
  fb.constancy = constancy;
  fb.agr = agr;
  return fb;
}

// Restriction imposed by the central determiners: they adjoin only onto
// cardinal determiner phrases, and nothing adjoins onto wh+.
FeatureBundle central_selection() {
  FeatureBundle fb;
  fb.card = P;
  fb.wh = M;
  return fb;
}

// Restriction row of "all", shared by the predeterminers half and double.
FeatureBundle predet_selection() {
  FeatureBundle fb;
  fb.defin = P;
  fb.quan = M;
  fb.card = M;
  fb.wh = M;
  return fb;
}

DetEntry det(std::string lemma, FeatureBundle own,
             std::optional<FeatureBundle> selection, bool agree_with_foot,
             LexCategory cat = LexCategory::Determiner) {
  return DetEntry{std::move(lemma), own, std::move(selection), agree_with_foot, cat};
}

NounEntry noun(std::string lemma, Agr agr, bool det_required, bool mass = false) {
  NounEntry n;
  n.lemma = std::move(lemma);
  n.agr = agr;
  n.det_required = det_required;
  n.mass = mass;
  return n;
}

bool is_digits(const std::string& s) {
  if (s.empty()) return false;
  for (unsigned char c : s)
    if (!std::isdigit(c)) return false;
  return true;
}

}  // namespace

std::string ascii_lower(std::string s) {
  for (char& c : s) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return s;
}

std::vector<DetEntry> Lexicon::find_determiners(const std::string& token) const {
  std::vector<DetEntry> out;
  const std::string key = ascii_lower(token);
  if (auto it = dets_.find(key); it != dets_.end()) out.push_back(it->second);
  if (auto it = genpros_.find(key); it != genpros_.end()) out.push_back(it->second);
  return out;
}

std::optional<NounEntry> Lexicon::find_common_noun(const std::string& token) const {
  if (auto it = nouns_.find(ascii_lower(token)); it != nouns_.end()) return it->second;
  return std::nullopt;
}

std::optional<NounEntry> Lexicon::find_proper_noun(const std::string& token) const {
  if (auto it = propns_.find(token); it != propns_.end()) return it->second;
  return std::nullopt;
}

std::optional<NounEntry> Lexicon::find_partitive_head(const std::string& token) const {
  if (auto it = part_heads_.find(ascii_lower(token)); it != part_heads_.end())
    return it->second;
  return std::nullopt;
}

std::optional<AdverbEntry> Lexicon::find_adverb(const std::string& token) const {
  if (auto it = adverbs_.find(ascii_lower(token)); it != adverbs_.end()) return it->second;
  return std::nullopt;
}

bool Lexicon::is_genitive_marker(const std::string& token) const {
  return markers_.count(token) > 0;
}

bool Lexicon::is_partitive_of(const std::string& token) const {
  return prepositions_.count(ascii_lower(token)) > 0;
}

std::optional<DetEntry> Lexicon::classify_cardinal(const std::string& token) const {
  const std::string key = ascii_lower(token);
  DetEntry entry = cardinal_row_;
  if (auto it = number_words_.find(key); it != number_words_.end()) {
    entry.lemma = key;
    entry.own.agr = it->second;
    return entry;
  }
  if (is_digits(key)) {
    // Cardinality is defined only for values >= 1.
    std::size_t first = key.find_first_not_of('0');
    if (first == std::string::npos) return std::nullopt;
    entry.lemma = key;
    entry.own.agr = (key.substr(first) == "1") ? SG : PL;
    return entry;
  }
  return std::nullopt;
}

bool Lexicon::known(const std::string& token) const {
  return !find_determiners(token).empty() || find_common_noun(token).has_value() ||
         find_proper_noun(token).has_value() || find_partitive_head(token).has_value() ||
         find_adverb(token).has_value() || is_genitive_marker(token) ||
         is_partitive_of(token) || classify_cardinal(token).has_value();
}

void Lexicon::add(const DetEntry& e) {
  auto& table = e.category == LexCategory::GenitivePronoun ? genpros_ : dets_;
  table.insert_or_assign(ascii_lower(e.lemma), e);
}

void Lexicon::add(const NounEntry& e) {
  switch (e.category) {
    case LexCategory::ProperNoun:
      propns_.insert_or_assign(e.lemma, e);
      break;
    case LexCategory::PartitiveHeadNoun:
      part_heads_.insert_or_assign(ascii_lower(e.lemma), e);
      break;
    default:
      nouns_.insert_or_assign(ascii_lower(e.lemma), e);
      break;
  }
}

void Lexicon::add(const AdverbEntry& e) {
  adverbs_.insert_or_assign(ascii_lower(e.lemma), e);
}

Lexicon builtin_lexicon() {
  Lexicon lex;

  const auto central = central_selection();
  const auto predet = predet_selection();

  // Determiner feature table. Demonstratives also require agreement with
  // the phrase they adjoin onto; everyone else passes the foot's agr up
  // unchanged.
  lex.add(det("all", row(P, P, M, M, M, M, P, PL), predet, false));
  lex.add(det("this", row(P, M, M, M, M, M, P, SG), central, true));
  lex.add(det("that", row(P, M, M, M, M, M, P, SG), central, true));
  lex.add(det("these", row(P, M, M, M, M, M, P, PL), central, true));
  lex.add(det("those", row(P, M, M, M, M, M, P, PL), central, true));
  lex.add(det("what", row(P, M, M, M, P, M, P, SGPL), central, false));
  lex.add(det("the", row(P, M, M, M, M, M, P, SGPL), central, false));
  lex.add(det("every", row(P, P, M, M, M, M, P, SG), central, false));
  lex.add(det("each", row(P, P, M, M, M, M, P, SG), central, false));
  lex.add(det("any", row(M, P, M, M, M, M, P, SG), central, false));
  lex.add(det("a", row(M, M, M, M, M, M, P, SG), central, false));
  lex.add(det("no", row(P, P, M, M, M, M, P, SGPL), std::nullopt, false));
  lex.add(det("few", row(M, P, M, M, M, P, M, PL), std::nullopt, false));
  lex.add(det("many", row(M, P, M, M, M, M, M, PL), std::nullopt, false));

  // Extension entries beyond the core table: the predeterminers half and
  // double (all's row, number-neutral), and some (any's row, number-neutral).
  lex.add(det("half", row(P, P, M, M, M, M, P, SGPL), predet, false));
  lex.add(det("double", row(P, P, M, M, M, M, P, SGPL), predet, false));
  lex.add(det("some", row(M, P, M, M, M, M, P, SGPL), std::nullopt, false));

  // Genitive determiners share one feature row; agr is left open since the
  // possessor itself does not constrain the possessed noun's number.
  lex.genitive_row_ = row(P, M, M, P, M, M, P, Agr::Unspec);
  for (const char* pron : {"my", "your", "his", "her", "its", "our", "their"})
    lex.add(det(pron, lex.genitive_row_, std::nullopt, false, LexCategory::GenitivePronoun));

  lex.markers_.insert("'s");
  lex.prepositions_.insert("of");

  lex.cardinal_row_ = det("CARD", row(P, P, P, M, M, M, P, PL), std::nullopt, false);
  {
    FeatureBundle part_sel;
    part_sel.wh = M;
    lex.partitive_row_ = det("PART", row(M, M, M, M, M, M, P, Agr::Unspec), part_sel, false);
  }

  const char* ones[] = {"one", "two", "three", "four", "five", "six", "seven",
                        "eight", "nine", "ten", "eleven", "twelve", "thirteen",
                        "fourteen", "fifteen", "sixteen", "seventeen",
                        "eighteen", "nineteen", "twenty"};
  for (const char* w : ones) lex.number_words_[w] = PL;
  lex.number_words_["one"] = SG;
  lex.number_words_["hundred"] = PL;
  lex.number_words_["thousand"] = PL;

  for (const char* a : {"especially", "even", "just", "only"})
    lex.add(AdverbEntry{a, AdverbClass::NPClass1});
  for (const char* a : {"hardly", "merely", "simply"})
    lex.add(AdverbEntry{a, AdverbClass::NPClass2});
  for (const char* a : {"almost", "approximately", "relatively"})
    lex.add(AdverbEntry{a, AdverbClass::DetClass3});

  lex.add(noun("dog", SG, true));
  lex.add(noun("dogs", PL, false));
  lex.add(noun("book", SG, true));
  lex.add(noun("books", PL, false));
  lex.add(noun("people", PL, false));
  lex.add(noun("machine", SG, true));
  lex.add(noun("machines", PL, false));
  lex.add(noun("attempt", SG, true));
  lex.add(noun("attempts", PL, false));
  lex.add(noun("water", SG, false, true));
  lex.add(noun("friend", SG, true));
  lex.add(noun("uncle", SG, true));
  lex.add(noun("mother", SG, true));
  lex.add(noun("day", SG, true));
  lex.add(noun("days", PL, false));

  // Partitive head nouns double as ordinary common nouns.
  for (auto [lemma, agr] : std::initializer_list<std::pair<const char*, Agr>>{
           {"kind", SG}, {"kinds", PL}, {"part", SG}, {"parts", PL}}) {
    lex.add(noun(lemma, agr, agr == SG));
    NounEntry head = noun(lemma, agr, agr == SG);
    head.category = LexCategory::PartitiveHeadNoun;
    lex.add(head);
  }

  for (const char* name : {"Albert", "John"}) {
    NounEntry pn;
    pn.lemma = name;
    pn.agr = SG;
    pn.takes_det = false;
    pn.category = LexCategory::ProperNoun;
    lex.add(pn);
  }

  return lex;
}

std::vector<DetEntry> core_determiner_inventory(const Lexicon& lex) {
  std::vector<DetEntry> out;
  for (const char* lemma : {"all", "this", "that", "these", "those", "what", "the",
                            "every", "each", "any", "a", "no", "few", "many"}) {
    auto hits = lex.find_determiners(lemma);
    if (!hits.empty()) out.push_back(hits.front());
  }
  if (auto card = lex.classify_cardinal("three")) out.push_back(*card);
  return out;
}

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

std::vector<std::string> split_ws(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream in(s);
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

[[noreturn]] void load_error(int line, const std::string& what) {
  throw std::runtime_error("lexicon line " + std::to_string(line) + ": " + what);
}

// Parses space-separated name=value feature pairs into a bundle.
FeatureBundle parse_feature_pairs(const std::string& text, int line, bool allow_polarity) {
  FeatureBundle fb;
  for (const std::string& pair : split_ws(text)) {
    auto eq = pair.find('=');
    if (eq == std::string::npos) load_error(line, "expected name=value, got \"" + pair + "\"");
    const std::string name = pair.substr(0, eq);
    const std::string value = pair.substr(eq + 1);
    if (name == "agr") {
      auto agr = parse_agr(value);
      if (!agr) load_error(line, "unknown agr value \"" + value + "\"");
      fb.agr = *agr;
      continue;
    }
    bool matched = false;
    for (std::size_t i = 0; i < kPolarityNames.size(); ++i) {
      if (name == kPolarityNames[i]) {
        if (!allow_polarity)
          load_error(line, "feature \"" + name + "\" not allowed for this category");
        auto pol = parse_polarity(value);
        if (!pol) load_error(line, "unknown value \"" + value + "\" for feature " + name);
        fb.*kPolarityFields[i] = *pol;
        matched = true;
        break;
      }
    }
    if (!matched) load_error(line, "unknown feature \"" + name + "\"");
  }
  return fb;
}

struct LineFlags {
  std::optional<bool> agree_with_foot;
  bool det_required = false;
  bool mass = false;
};

LineFlags parse_flags(const std::string& text, int line) {
  LineFlags flags;
  for (const std::string& flag : split_ws(text)) {
    if (flag == "det_required") {
      flags.det_required = true;
    } else if (flag == "mass") {
      flags.mass = true;
    } else if (flag.rfind("foot_agr=", 0) == 0) {
      const std::string v = flag.substr(9);
      if (v == "agree")
        flags.agree_with_foot = true;
      else if (v == "pass")
        flags.agree_with_foot = false;
      else
        load_error(line, "unknown foot_agr value \"" + v + "\"");
    } else {
      load_error(line, "unknown flag \"" + flag + "\"");
    }
  }
  return flags;
}

}  // namespace

Lexicon load_lexicon(std::istream& in) {
  Lexicon lex = builtin_lexicon();
  std::string raw;
  int lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    if (!raw.empty() && raw.back() == '\r') raw.pop_back();
    if (raw.empty() || raw[0] == '#') continue;
    std::vector<std::string> cols = split(raw, '\t');
    if (cols.size() < 2) load_error(lineno, "expected at least category and lemma columns");
    const std::string& category = cols[0];
    const std::string& lemma = cols[1];
    if (lemma.empty()) load_error(lineno, "empty lemma");

    std::optional<FeatureBundle> selection;
    LineFlags flags;
    const std::string own_text = cols.size() > 2 ? cols[2] : "";
    for (std::size_t i = 3; i < cols.size(); ++i) {
      if (cols[i].empty()) continue;
      if (cols[i].rfind("sel:", 0) == 0) {
        selection = parse_feature_pairs(cols[i].substr(4), lineno, true);
      } else {
        LineFlags more = parse_flags(cols[i], lineno);
        if (more.agree_with_foot) flags.agree_with_foot = more.agree_with_foot;
        flags.det_required |= more.det_required;
        flags.mass |= more.mass;
      }
    }

    if (category == "det" || category == "genpro") {
      DetEntry e;
      e.lemma = ascii_lower(lemma);
      e.own = parse_feature_pairs(own_text, lineno, true);
      e.selection = selection;
      if (selection && selection->wh != Polarity::Minus)
        load_error(lineno, "selection must specify wh=- (nothing adjoins onto wh+)");
      e.agree_with_foot = flags.agree_with_foot.value_or(false);
      e.category = category == "genpro" ? LexCategory::GenitivePronoun
                                        : LexCategory::Determiner;
      lex.add(e);
    } else if (category == "noun" || category == "propn") {
      if (selection) load_error(lineno, "sel: not allowed for nouns");
      NounEntry n;
      n.lemma = category == "propn" ? lemma : ascii_lower(lemma);
      n.agr = parse_feature_pairs(own_text, lineno, false).agr;
      n.det_required = flags.det_required;
      n.mass = flags.mass;
      if (n.mass) n.det_required = false;
      if (category == "propn") {
        if (n.det_required)
          load_error(lineno, "det_required not allowed for proper nouns");
        n.takes_det = false;
        n.category = LexCategory::ProperNoun;
      }
      lex.add(n);
    } else if (category == "adv1" || category == "adv2" || category == "adv3") {
      if (selection || !own_text.empty())
        load_error(lineno, "adverb lines take no features");
      AdverbEntry a;
      a.lemma = ascii_lower(lemma);
      a.cls = category == "adv1"   ? AdverbClass::NPClass1
              : category == "adv2" ? AdverbClass::NPClass2
                                   : AdverbClass::DetClass3;
      lex.add(a);
    } else {
      load_error(lineno, "unknown category \"" + category + "\"");
    }
  }
  return lex;
}

Lexicon load_lexicon_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open lexicon file: " + path);
  return load_lexicon(in);
}

std::string format_lexicon_tsv(const Lexicon& lex) {
  std::ostringstream out;
  out << "# category\tlemma\tfeatures\t[sel: restriction]\t[flags]\n";
  for (const auto& [key, e] : lex.determiner_entries()) {
    out << "det\t" << e.lemma << '\t' << format_features(e.own);
    if (e.selection) out << "\tsel:" << format_features(*e.selection);
    out << "\tfoot_agr=" << (e.agree_with_foot ? "agree" : "pass") << '\n';
  }
  for (const auto& [key, e] : lex.genitive_pronoun_entries()) {
    out << "genpro\t" << e.lemma << '\t' << format_features(e.own);
    out << "\tfoot_agr=" << (e.agree_with_foot ? "agree" : "pass") << '\n';
  }
  for (const auto& [key, n] : lex.common_noun_entries()) {
    out << "noun\t" << n.lemma << '\t' << format_features(FeatureBundle{.agr = n.agr});
    if (n.det_required || n.mass) {
      out << '\t';
      if (n.det_required) out << "det_required";
      if (n.mass) out << (n.det_required ? " mass" : "mass");
    }
    out << '\n';
  }
  for (const auto& [key, n] : lex.proper_noun_entries())
    out << "propn\t" << n.lemma << '\t' << format_features(FeatureBundle{.agr = n.agr}) << '\n';
  for (const auto& [key, a] : lex.adverb_entries()) {
    const char* cat = a.cls == AdverbClass::NPClass1   ? "adv1"
                      : a.cls == AdverbClass::NPClass2 ? "adv2"
                                                       : "adv3";
    out << cat << '\t' << a.lemma << '\n';
  }
  return out.str();
}

}  // namespace detseq
