#include "detseq/corpus.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include "detseq/parse.hpp"

namespace detseq {
namespace {

[[noreturn]] void corpus_error(int line, const std::string& what) {
  throw std::runtime_error("corpus line " + std::to_string(line) + ": " + what);
}

std::vector<std::string> split_tabs(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == '\t') {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

}  // namespace

std::vector<CorpusCase> load_corpus(std::istream& in) {
  std::vector<CorpusCase> cases;
  std::string raw;
  int lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    if (!raw.empty() && raw.back() == '\r') raw.pop_back();
    if (raw.empty() || raw[0] == '#') continue;
    std::vector<std::string> cols = split_tabs(raw);
    if (cols.size() < 2) corpus_error(lineno, "expected expectation and phrase columns");

    CorpusCase c;
    c.line = lineno;
    if (cols[0] == "OK")
      c.expect = CorpusCase::Expect::Ok;
    else if (cols[0] == "BAD")
      c.expect = CorpusCase::Expect::Bad;
    else if (cols[0] == "KNOWN_DIVERGENT")
      c.expect = CorpusCase::Expect::KnownDivergent;
    else
      corpus_error(lineno, "unknown expectation \"" + cols[0] + "\"");

    c.phrase = cols[1];
    if (c.phrase.empty()) corpus_error(lineno, "empty phrase");

    if (cols.size() > 2 && !cols[2].empty()) {
      std::istringstream checks(cols[2]);
      std::string item;
      while (checks >> item) {
        if (item.rfind("agr=", 0) == 0) {
          auto agr = parse_agr(item.substr(4));
          if (!agr) corpus_error(lineno, "unknown agr value \"" + item.substr(4) + "\"");
          c.expected_agr = agr;
        } else if (item.rfind("wh=", 0) == 0) {
          auto wh = parse_polarity(item.substr(3));
          if (!wh) corpus_error(lineno, "unknown wh value \"" + item.substr(3) + "\"");
          c.expected_wh = wh;
        } else {
          corpus_error(lineno, "unknown check \"" + item + "\"");
        }
      }
    }
    if (cols.size() > 3) c.note = cols[3];
    cases.push_back(std::move(c));
  }
  return cases;
}

std::vector<CorpusCase> load_corpus_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open corpus file: " + path);
  return load_corpus(in);
}

namespace {

// True when some analysis carries the expected agr and wh values.
bool checks_match(const CorpusCase& c, const Judgment& judgment) {
  if (!c.expected_agr && !c.expected_wh) return true;
  for (const NpAnalysis& a : judgment.analyses) {
    if (c.expected_agr && a.np_agr != *c.expected_agr) continue;
    if (c.expected_wh && a.np_wh != *c.expected_wh) continue;
    return true;
  }
  return false;
}

std::string verdict_text(const Judgment& judgment) {
  if (judgment.grammatical()) {
    const NpAnalysis& a = judgment.analyses.front();
    std::string s = "grammatical";
    if (a.np_agr != Agr::Unspec) s += " agr=" + std::string(to_token(a.np_agr));
    s += " wh=";
    s += a.np_wh == Polarity::Plus ? "+" : "-";
    return s;
  }
  std::string s = "ungrammatical";
  if (!judgment.clashes.empty()) s += ": " + describe(judgment.clashes.front());
  return s;
}

}  // namespace

CorpusResult run_corpus(const std::vector<CorpusCase>& cases, const Lexicon& lex) {
  CorpusResult result;
  for (const CorpusCase& c : cases) {
    ++result.total;
    const Judgment judgment = judge(c.phrase, lex);
    const std::string got = verdict_text(judgment);

    std::string line;
    if (c.expect == CorpusCase::Expect::KnownDivergent) {
      ++result.divergent;
      line = "DIVERGENT \"" + c.phrase + "\" -> " + got + " (known divergence, not counted)";
    } else {
      ++result.checked;
      const bool want_ok = c.expect == CorpusCase::Expect::Ok;
      bool pass = judgment.grammatical() == want_ok;
      if (pass && want_ok && !checks_match(c, judgment)) pass = false;
      if (pass) {
        ++result.passed;
        line = "pass \"" + c.phrase + "\" -> " + got;
      } else {
        ++result.failed;
        line = "FAIL \"" + c.phrase + "\" expected " + (want_ok ? "OK" : "BAD");
        if (c.expected_agr) line += " agr=" + std::string(to_token(*c.expected_agr));
        if (c.expected_wh)
          line += std::string(" wh=") + (*c.expected_wh == Polarity::Plus ? "+" : "-");
        line += ", got " + got;
      }
    }
    if (!c.note.empty()) line += "  # " + c.note;
    result.lines.push_back(std::move(line));
  }
  return result;
}

}  // namespace detseq
