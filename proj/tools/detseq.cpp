// Command-line front end: judge phrases, inspect composition traces,
// enumerate determiner sequences, and replay corpus regressions.

#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "detseq/corpus.hpp"
#include "detseq/enumerate.hpp"
#include "detseq/lexicon.hpp"
#include "detseq/parse.hpp"

namespace {

using namespace detseq;

std::string join_words(const std::vector<std::string>& words) {
  std::string s;
  for (const std::string& w : words) {
    if (!s.empty()) s += ' ';
    s += w;
  }
  return s;
}

const char* wh_text(Polarity wh) {
  switch (wh) {
    case Polarity::Plus: return "+";
    case Polarity::Minus: return "-";
    case Polarity::Unspec: return "unspec";
  }
  return "unspec";
}

std::string agr_text(Agr agr) {
  auto tok = to_token(agr);
  return tok.empty() ? "unspec" : std::string(tok);
}

bool has_partitive(const DetPhrase& detp) {
  for (const DetUnit& u : detp.units) {
    if (u.kind == UnitKind::Partitive) return true;
    if (u.kind == UnitKind::Genitive && u.genitive && u.genitive->detp &&
        has_partitive(*u.genitive->detp))
      return true;
  }
  return false;
}

void print_judgment(const Judgment& judgment, const std::string& format) {
  if (format == "tsv") {
    if (judgment.grammatical()) {
      std::cout << "grammatical\t" << judgment.analyses.size() << '\n';
      for (const NpAnalysis& a : judgment.analyses)
        std::cout << "analysis\t" << agr_text(a.np_agr) << '\t' << wh_text(a.np_wh)
                  << '\t' << render_analysis(a) << '\n';
    } else {
      std::cout << "ungrammatical\t" << judgment.clashes.size() << '\n';
      for (const Clash& c : judgment.clashes)
        std::cout << "clash\t" << to_string(c.stage) << '\t' << c.feature << '\t'
                  << c.left << '\t' << c.right << '\t' << c.position << '\n';
    }
    return;
  }

  if (judgment.grammatical()) {
    std::cout << "verdict: grammatical\n";
    int i = 0;
    bool partitive = false;
    for (const NpAnalysis& a : judgment.analyses) {
      std::cout << "analysis " << ++i << ": agr=" << agr_text(a.np_agr)
                << " wh=" << wh_text(a.np_wh) << " :: " << render_analysis(a) << '\n';
      if (a.detp && has_partitive(*a.detp)) partitive = true;
    }
    if (partitive)
      std::cout << "note: \"of\" phrase read as a partitive determiner; "
                   "prepositional attachment to the head noun is not considered\n";
  } else {
    std::cout << "verdict: ungrammatical\n";
    int i = 0;
    for (const Clash& c : judgment.clashes)
      std::cout << "clash " << ++i << ": " << describe(c) << " [" << to_string(c.stage)
                << "]\n";
  }
}

const char* kind_name(UnitKind kind) {
  switch (kind) {
    case UnitKind::Simple: return "simple";
    case UnitKind::Cardinal: return "cardinal";
    case UnitKind::Genitive: return "genitive";
    case UnitKind::Partitive: return "partitive";
  }
  return "simple";
}

int adverb_class_number(AdverbClass cls) {
  switch (cls) {
    case AdverbClass::NPClass1: return 1;
    case AdverbClass::NPClass2: return 2;
    case AdverbClass::DetClass3: return 3;
  }
  return 0;
}

void print_trace(const NpAnalysis& a) {
  for (const AdverbUse& use : a.adverbs) {
    std::cout << "  adverb: " << use.adverb.lemma << " -> ";
    if (use.target_unit < 0) {
      std::cout << "noun phrase";
    } else {
      std::cout << "unit " << use.target_unit;
      if (a.detp) std::cout << " \"" << a.detp->units[use.target_unit].text << "\"";
    }
    std::cout << " (class " << adverb_class_number(use.adverb.cls);
    if (use.target_unit >= 0 && a.detp) {
      const DetUnit& target = a.detp->units[use.target_unit];
      std::cout << (target.own.card == Polarity::Plus ? ": card+"
                                                      : ": in {all, double, half}");
    }
    std::cout << ")\n";
  }
  if (a.detp) {
    for (std::size_t k = 0; k < a.detp->units.size(); ++k) {
      const DetUnit& u = a.detp->units[k];
      std::cout << "  unit " << k << ": " << u.text << " (" << kind_name(u.kind)
                << ") {" << format_features(u.own) << "}\n";
    }
    if (a.detp->trace.empty()) {
      std::cout << "  steps: none (single determiner)\n";
    } else {
      int s = 0;
      for (const AdjunctionStep& step : a.detp->trace) {
        std::cout << "  step " << ++s << ": anchor=\"" << step.anchor.text
                  << "\" selection=ok root={" << format_features(step.root_after)
                  << "} agr-source=";
        if (step.anchor.agree_with_foot) {
          std::cout << "anchor&foot (" << agr_text(step.anchor.own.agr) << "^"
                    << agr_text(step.foot_root_before.agr) << " -> "
                    << agr_text(step.root_after.agr) << ")";
        } else {
          std::cout << "foot (" << agr_text(step.foot_root_before.agr) << ")";
        }
        std::cout << '\n';
      }
    }
  }
  std::cout << "  noun: " << a.head.lemma << " agr=" << agr_text(a.head.agr)
            << " -> np agr=" << agr_text(a.np_agr) << " wh=" << wh_text(a.np_wh) << '\n';
}

int cmd_judge(const std::string& phrase, const Lexicon& lex, const std::string& format,
              bool with_trace) {
  const Judgment judgment = judge(phrase, lex);
  std::cout << "phrase: " << phrase << '\n';
  print_judgment(judgment, format);
  if (with_trace && judgment.grammatical() && format != "tsv") {
    int i = 0;
    for (const NpAnalysis& a : judgment.analyses) {
      std::cout << "trace for analysis " << ++i << ":\n";
      print_trace(a);
    }
  }
  return judgment.grammatical() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"determiner-phrase grammar engine"};
  app.require_subcommand(1);

  std::string lexicon_path;
  std::string format = "text";
  app.add_option("--lexicon", lexicon_path,
                 "TSV lexicon merged over the built-in entries");
  app.add_option("--format", format, "output format")
      ->check(CLI::IsMember({"text", "tsv"}));

  std::vector<std::string> judge_words;
  CLI::App* judge_cmd = app.add_subcommand("judge", "judge a phrase");
  judge_cmd->add_option("phrase", judge_words, "phrase to judge");

  std::vector<std::string> analyze_words;
  CLI::App* analyze_cmd =
      app.add_subcommand("analyze", "judge a phrase and show its composition trace");
  analyze_cmd->add_option("phrase", analyze_words, "phrase to analyze");

  std::string dets_csv;
  bool core = false;
  int max_len = 3;
  std::string noun_lemma = "people";
  bool check = false;
  CLI::App* enum_cmd =
      app.add_subcommand("enumerate", "enumerate and judge determiner sequences");
  enum_cmd->add_option("--dets", dets_csv, "comma-separated determiner inventory");
  enum_cmd->add_flag("--core", core, "use the full built-in determiner inventory");
  enum_cmd->add_option("--max-len", max_len, "maximum sequence length (1-4)");
  enum_cmd->add_option("--noun", noun_lemma, "noun the sequences attach to");
  enum_cmd->add_flag("--check-oracle", check,
                     "also run the independent judge and fail on disagreement");

  std::string corpus_path;
  CLI::App* corpus_cmd = app.add_subcommand("corpus", "run a corpus regression file");
  corpus_cmd->add_option("path", corpus_path, "corpus TSV file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    const Lexicon lex =
        lexicon_path.empty() ? builtin_lexicon() : load_lexicon_file(lexicon_path);

    if (app.got_subcommand(judge_cmd))
      return cmd_judge(join_words(judge_words), lex, format, false);

    if (app.got_subcommand(analyze_cmd))
      return cmd_judge(join_words(analyze_words), lex, format, true);

    if (app.got_subcommand(enum_cmd)) {
      std::vector<DetEntry> inventory;
      if (core || dets_csv.empty()) {
        inventory = core_determiner_inventory(lex);
      } else {
        std::istringstream in(dets_csv);
        std::string lemma;
        while (std::getline(in, lemma, ',')) {
          if (lemma.empty()) continue;
          auto dets = lex.find_determiners(lemma);
          if (!dets.empty()) {
            inventory.push_back(dets.front());
          } else if (auto card = lex.classify_cardinal(lemma)) {
            inventory.push_back(*card);
          } else {
            throw std::runtime_error("unknown determiner \"" + lemma + "\"");
          }
        }
      }
      auto noun = lex.find_common_noun(noun_lemma);
      if (!noun) throw std::runtime_error("unknown noun \"" + noun_lemma + "\"");

      const EnumerationReport report = enumerate_sequences(inventory, max_len, *noun);
      write_report_tsv(report, std::cout);
      if (check) {
        const OracleCheck oracle = cross_check_oracle(inventory, max_len, *noun);
        std::cerr << "oracle: " << oracle.sequences << " sequences, "
                  << oracle.disagreements.size() << " disagreements\n";
        if (!oracle.disagreements.empty()) {
          for (const auto& seq : oracle.disagreements)
            std::cerr << "disagree: " << join_words(seq) << '\n';
          return 1;
        }
      }
      return 0;
    }

    if (app.got_subcommand(corpus_cmd)) {
      const std::vector<CorpusCase> cases = load_corpus_file(corpus_path);
      const CorpusResult result = run_corpus(cases, lex);
      for (const std::string& line : result.lines) std::cout << line << '\n';
      std::cout << result.total << " cases: " << result.passed << " passed, "
                << result.failed << " failed, " << result.divergent
                << " known-divergent\n";
      return result.ok() ? 0 : 1;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}
