#pragma once

// Text, JSON and CSV serialization.

#include "analysis.hpp"
#include "extremal.hpp"
#include "modone.hpp"
#include "numeric.hpp"
#include "verdict.hpp"
#include "word.hpp"

#include "json.hpp"

#include <cctype>
#include <fstream>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

namespace sturmian::io {

using Json = nlohmann::ordered_json;

// Plain text words: alphabet line of comma-separated names, then the body.
// Ultimately periodic words use "u|v" as the body.

using ParsedWord = std::variant<FiniteWord, UltimatelyPeriodicWord>;

inline std::string alphabet_line(const Alphabet& alphabet) {
  std::string out;
  for (std::size_t i = 0; i < alphabet.size(); ++i) {
    if (i) out += ',';
    out += alphabet.name(Letter(i));
  }
  return out;
}

inline std::string write_text(const FiniteWord& w) { return alphabet_line(w.alphabet()) + "\n" + w.str() + "\n"; }

inline std::string write_text(const UltimatelyPeriodicWord& w) {
  return alphabet_line(w.alphabet()) + "\n" + w.str() + "\n";
}

inline Alphabet parse_alphabet_line(std::string_view line) {
  std::vector<std::string> names;
  std::size_t i = 0;
  while (i <= line.size()) {
    std::size_t j = line.find(',', i);
    if (j == std::string_view::npos) j = line.size();
    std::string name(line.substr(i, j - i));
    while (!name.empty() && std::isspace(static_cast<unsigned char>(name.back()))) name.pop_back();
    while (!name.empty() && std::isspace(static_cast<unsigned char>(name.front()))) name.erase(name.begin());
    names.push_back(name);
    i = j + 1;
  }
  return Alphabet(std::move(names));
}

inline ParsedWord read_text(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string header;
  std::string body;
  if (!std::getline(in, header)) throw std::invalid_argument("word file: missing alphabet line");
  std::getline(in, body);
  Alphabet alphabet = parse_alphabet_line(header);
  auto bar = body.find('|');
  if (bar == std::string::npos) return FiniteWord::parse(alphabet, body);
  return UltimatelyPeriodicWord(FiniteWord::parse(alphabet, std::string_view(body).substr(0, bar)),
                                FiniteWord::parse(alphabet, std::string_view(body).substr(bar + 1)));
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open '" + path + "'");
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

struct DigitFile {
  unsigned base = 2;
  ParsedWord digits;
};

/// One line base, one line digits (or "u|v").
inline DigitFile read_digit_file(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string base_line;
  std::string body;
  if (!std::getline(in, base_line)) throw std::invalid_argument("digit file: missing base line");
  std::getline(in, body);
  Integer base = parse_integer(base_line);
  if (base < 2 || base > 36) throw std::invalid_argument("digit file: base must be in 2..36");
  unsigned b = static_cast<unsigned>(base);
  Alphabet alphabet = Alphabet::digits(b);
  auto bar = body.find('|');
  if (bar == std::string::npos) return {b, FiniteWord::parse(alphabet, body)};
  return {b, UltimatelyPeriodicWord(FiniteWord::parse(alphabet, std::string_view(body).substr(0, bar)),
                                    FiniteWord::parse(alphabet, std::string_view(body).substr(bar + 1)))};
}

// JSON.

inline Json to_json(const Rational& x) { return to_string(x); }

inline Json to_json(const RationalInterval& iv) { return Json{{"lo", to_string(iv.lo())}, {"hi", to_string(iv.hi())}}; }

inline Json to_json(const std::vector<FiniteWord>& words) {
  Json out = Json::array();
  for (const auto& w : words) out.push_back(w.str());
  return out;
}

inline Json to_json(const ComplexityTable& t) {
  Json out = Json::array();
  for (const auto& e : t.entries) out.push_back(Json{{"k", e.k}, {"p", e.p}, {"exact", e.exact}});
  return out;
}

inline Json to_json(const BoundedVerdict& v) {
  Json out{{"check", v.check}, {"status", to_string(v.status)}, {"K", v.K}, {"L", v.L}};
  if (v.P) out["P"] = *v.P;
  if (v.witness) {
    out["witness"] = Json{{"shift", v.witness->shift},
                          {"depth", v.witness->depth},
                          {"expected", v.witness->expected},
                          {"found", v.witness->found}};
    if (!v.witness->note.empty()) out["witness"]["note"] = v.witness->note;
  } else {
    out["witness"] = nullptr;
  }
  out["undecided"] = v.undecided;
  out["decided_strict"] = v.all_decided_strict;
  if (!v.detail.empty()) out["detail"] = v.detail;
  return out;
}

inline Json to_json(const Covering& c) {
  return Json{{"length", to_string(c.length)}, {"lo", to_string(c.lo)}, {"hi", to_string(c.hi)}};
}

inline Json to_json(const CoveringBounds& c) {
  return Json{{"covering_length", Json{{"lo", to_string(c.lo)}, {"hi", to_string(c.hi)}}},
              {"interval", Json{{"lo", to_string(c.nominal.lo)}, {"hi", to_string(c.nominal.hi)}}},
              {"enclosure_width", to_string(c.width)}};
}

inline Json to_json(const ClassificationReport& r) {
  Json out{{"base", r.base}, {"length", r.length}, {"values", r.values}, {"adjacent", r.adjacent}};
  out["k"] = r.k ? Json(*r.k) : Json(nullptr);
  out["balanced"] = r.balanced ? Json(*r.balanced) : Json(nullptr);
  out["periodic"] = r.periodic ? Json(r.periodic->str()) : Json(nullptr);
  out["classification"] = r.verdict;
  out["interval"] = r.interval_kind;
  out["characteristic_shift"] = r.characteristic_shift ? Json(*r.characteristic_shift) : Json(nullptr);
  return out;
}

// CSV.

inline std::string to_csv(const std::vector<RationalInterval>& table) {
  std::string out = "n,lo,hi\n";
  for (std::size_t n = 0; n < table.size(); ++n) {
    out += std::to_string(n) + "," + to_string(table[n].lo()) + "," + to_string(table[n].hi()) + "\n";
  }
  return out;
}

}  // namespace sturmian::io
