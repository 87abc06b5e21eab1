// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Text formats.
//
// Element syntax is `3` or `3*`. A set is a whitespace separated list of
// elements, optionally wrapped in braces and separated by commas. An
// ordering lists its top half largest first, separated by `>`.
//
// Representation file:
//
//   kind: orthogonal
//   n: 2
//   m: 0
//   k: 2
//   labels: 1 2 1* 2*
//   0 1 1 0
//   -1 0 0 1
//
// Basis file:
//
//   n: 2
//   k: 2
//   1 2
//   1* 2*
//
// Oriented output: a `#` line naming the sign convention, `n: <int>`, then
// `<sign> <basis>` per basis.
// Blank lines and lines starting with `#` are skipped by every reader.

#ifndef LAGMAT_IO_HPP_
#define LAGMAT_IO_HPP_

#include <cctype>
#include <charconv>
#include <istream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "lagmat/collection.hpp"
#include "lagmat/error.hpp"
#include "lagmat/ground.hpp"
#include "lagmat/matrix.hpp"
#include "lagmat/repr.hpp"
#include "lagmat/signmap.hpp"

namespace lagmat {

namespace detail {

struct Token {
  std::string_view text;
  int column = 1;  // 1-based
};

inline std::vector<Token> tokenize(std::string_view line,
                                   std::string_view separators = " \t,") {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    if (separators.find(line[i]) != std::string_view::npos ||
        line[i] == '\r') {
      ++i;
      continue;
    }
    const std::size_t start = i;
    while (i < line.size() && separators.find(line[i]) == std::string_view::npos &&
           line[i] != '\r') {
      ++i;
    }
    out.push_back({line.substr(start, i - start), static_cast<int>(start) + 1});
  }
  return out;
}

inline bool parse_int(std::string_view s, int& out) {
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  return ec == std::errc() && ptr == s.data() + s.size();
}

inline std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
    s.remove_prefix(1);
  }
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
    s.remove_suffix(1);
  }
  return s;
}

inline bool skippable(std::string_view line) {
  const std::string_view t = trim(line);
  return t.empty() || t.front() == '#';
}

// Lines of a stream with their 1-based numbers. A '#' starts a comment
// that runs to the end of the line; blank lines are dropped.
inline std::vector<std::pair<int, std::string>> content_lines(
    std::istream& in) {
  std::vector<std::pair<int, std::string>> out;
  std::string line;
  int number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (const auto hash = line.find('#'); hash != std::string::npos) {
      line.erase(hash);
    }
    if (!skippable(line)) out.emplace_back(number, line);
  }
  return out;
}

inline Element parse_element_token(const Token& tok, int n, int line) {
  std::string_view s = tok.text;
  const bool starred = !s.empty() && s.back() == '*';
  if (starred) s.remove_suffix(1);
  int index = 0;
  if (!parse_int(s, index)) {
    throw ParseError(line, tok.column,
                     "expected an element, got '" + std::string(tok.text) + "'");
  }
  if (index < 1 || (n > 0 && index > n)) {
    throw ParseError(line, tok.column,
                     "element " + std::string(tok.text) + " outside [n]");
  }
  return {index, starred};
}

inline std::string_view strip_braces(std::string_view s, int& offset) {
  offset = 0;
  const std::string_view t = trim(s);
  offset = static_cast<int>(t.data() - s.data());
  if (t.size() >= 2 && t.front() == '{' && t.back() == '}') {
    ++offset;
    return t.substr(1, t.size() - 2);
  }
  return t;
}

// Parses `line` as a set of elements of [n] (n = 0 skips the range check).
inline ElementSet parse_set_line(std::string_view line, int n, int line_no) {
  int offset = 0;
  const std::string_view body = strip_braces(line, offset);
  ElementSet out;
  for (const Token& tok : tokenize(body)) {
    const Token shifted{tok.text, tok.column + offset};
    const Element e = parse_element_token(shifted, n, line_no);
    if (out.contains(e)) {
      throw ParseError(line_no, shifted.column,
                       "repeated element " + to_string(e));
    }
    out.insert(e);
  }
  return out;
}

// `key: value` header line; returns false when the line is not a header.
inline bool split_header(std::string_view line, std::string& key,
                         std::string_view& value, int& value_column) {
  const std::size_t colon = line.find(':');
  if (colon == std::string_view::npos) return false;
  const std::string_view k = trim(line.substr(0, colon));
  if (k.empty()) return false;
  for (char ch : k) {
    if (!std::isalpha(static_cast<unsigned char>(ch))) return false;
  }
  key = std::string(k);
  value = line.substr(colon + 1);
  value_column = static_cast<int>(colon) + 2;
  return true;
}

inline int header_int(std::string_view value, int column, int line) {
  const std::string_view t = trim(value);
  int out = 0;
  if (!parse_int(t, out)) {
    throw ParseError(line, column,
                     "expected an integer, got '" + std::string(t) + "'");
  }
  return out;
}

}  // namespace detail

inline Element parse_element(std::string_view text, int n = 0) {
  const auto toks = detail::tokenize(text);
  if (toks.size() != 1) throw ParseError(1, 1, "expected one element");
  return detail::parse_element_token(toks.front(), n, 1);
}

inline ElementSet parse_set(std::string_view text, int n = 0) {
  return detail::parse_set_line(text, n, 1);
}

// "3 > 2 > 1" (top half, largest first). A full listing of 2n elements is
// also accepted; its bottom half must be the reversed star of the top.
inline AdmissibleOrdering parse_ordering(std::string_view text,
                                         Variant variant) {
  std::vector<Element> list;
  for (const auto& tok : detail::tokenize(text, " \t>{}")) {
    list.push_back(detail::parse_element_token(tok, 0, 1));
  }
  if (list.empty()) throw ParseError(1, 1, "empty ordering");
  if (list.size() % 2 == 0) {
    const std::size_t n = list.size() / 2;
    bool full = true;
    for (std::size_t p = 0; p < n; ++p) {
      if (list[2 * n - 1 - p] != star(list[p])) full = false;
    }
    if (full) list.resize(n);
  }
  try {
    return AdmissibleOrdering(std::move(list), variant);
  } catch (const InvalidOrdering& e) {
    throw ParseError(1, 1, e.what());
  }
}

inline Representation read_representation(std::istream& in) {
  const auto lines = detail::content_lines(in);
  std::map<std::string, std::pair<int, int>> ints;  // key -> (value, line)
  std::optional<Kind> kind;
  std::optional<std::pair<int, std::string>> label_line;
  int label_column = 1;
  std::size_t cursor = 0;
  for (; cursor < lines.size(); ++cursor) {
    const auto& [no, text] = lines[cursor];
    std::string key;
    std::string_view value;
    int column = 1;
    if (!detail::split_header(text, key, value, column)) break;
    if (key == "kind") {
      const std::string_view v = detail::trim(value);
      if (v == "orthogonal") {
        kind = Kind::Orthogonal;
      } else if (v == "symplectic") {
        kind = Kind::Symplectic;
      } else if (v == "general") {
        kind = Kind::General;
      } else {
        throw ParseError(no, column, "unknown kind '" + std::string(v) + "'");
      }
    } else if (key == "n" || key == "m" || key == "k") {
      ints[key] = {detail::header_int(value, column, no), no};
    } else if (key == "labels") {
      label_line = std::make_pair(no, std::string(value));
      label_column = column;
    } else {
      throw ParseError(no, 1, "unknown header '" + key + "'");
    }
  }
  const int last_header = cursor > 0 ? lines[cursor - 1].first : 1;
  if (!kind) throw ParseError(last_header, 1, "missing header 'kind'");
  for (const char* key : {"n", "m", "k"}) {
    if (!ints.count(key)) {
      throw ParseError(last_header, 1,
                       std::string("missing header '") + key + "'");
    }
  }
  const int n = ints["n"].first;
  const int m = ints["m"].first;
  const int k = ints["k"].first;
  if (n < 1 || n > kMaxGround - 1) {
    throw ParseError(ints["n"].second, 1, "n must be in [1, 63]");
  }
  if (m < 0) throw ParseError(ints["m"].second, 1, "m must be >= 0");
  if (k < 0 || k > n) throw ParseError(ints["k"].second, 1, "k must be in [0, n]");
  const int cols = 2 * n + m;
  std::vector<int> labels;
  if (label_line) {
    const auto toks = detail::tokenize(label_line->second);
    if (static_cast<int>(toks.size()) != cols) {
      throw ParseError(label_line->first, label_column,
                       "expected " + std::to_string(cols) + " labels");
    }
    for (const auto& tok : toks) {
      const detail::Token at{tok.text, tok.column + label_column - 1};
      int code = 0;
      if (!at.text.empty() && at.text.back() != '*' &&
          detail::parse_int(at.text, code) && code > 2 * n && code <= cols) {
        labels.push_back(code);
        continue;
      }
      labels.push_back(
          element_code(detail::parse_element_token(at, n, label_line->first), n));
    }
  }
  if (lines.size() - cursor != static_cast<std::size_t>(k)) {
    const int where = cursor < lines.size() ? lines[cursor].first : last_header;
    throw ParseError(where, 1,
                     "expected " + std::to_string(k) + " matrix rows, got " +
                         std::to_string(lines.size() - cursor));
  }
  Matrix mat(k, cols);
  for (int r = 0; r < k; ++r) {
    const auto& [no, text] = lines[cursor + r];
    const auto toks = detail::tokenize(text);
    if (static_cast<int>(toks.size()) != cols) {
      throw ParseError(no, 1,
                       "expected " + std::to_string(cols) + " entries, got " +
                           std::to_string(toks.size()));
    }
    for (int c = 0; c < cols; ++c) {
      if (!parse_rational(toks[c].text, mat(r, c))) {
        throw ParseError(no, toks[c].column,
                         "bad rational '" + std::string(toks[c].text) + "'");
      }
    }
  }
  try {
    return Representation(n, m, std::move(mat), *kind, std::move(labels));
  } catch (const InvalidRepresentation& e) {
    throw ParseError(label_line ? label_line->first : last_header, 1, e.what());
  }
}

inline Representation parse_representation(const std::string& text) {
  std::istringstream in(text);
  return read_representation(in);
}

inline void write_representation(std::ostream& out, const Representation& rep) {
  const int n = rep.n();
  out << "kind: " << to_string(rep.kind()) << '\n'
      << "n: " << n << '\n'
      << "m: " << rep.m() << '\n'
      << "k: " << rep.k() << '\n'
      << "labels:";
  for (int c = 0; c < rep.matrix().cols(); ++c) {
    out << ' ';
    if (c < 2 * n) {
      out << to_string(rep.label_element(c));
    } else {
      out << rep.labels()[c];
    }
  }
  out << '\n';
  for (int r = 0; r < rep.k(); ++r) {
    for (int c = 0; c < rep.matrix().cols(); ++c) {
      if (c > 0) out << ' ';
      out << to_string(rep.matrix()(r, c));
    }
    out << '\n';
  }
}

inline std::string format_representation(const Representation& rep) {
  std::ostringstream out;
  write_representation(out, rep);
  return out.str();
}

// Elements separated by single spaces, no braces.
inline std::string format_set(const ElementSet& s) { return to_string(s); }

inline BasisCollection read_basis_collection(std::istream& in) {
  const auto lines = detail::content_lines(in);
  std::optional<int> n;
  std::optional<int> k;
  std::size_t cursor = 0;
  int last_header = 1;
  for (; cursor < lines.size(); ++cursor) {
    const auto& [no, text] = lines[cursor];
    std::string key;
    std::string_view value;
    int column = 1;
    if (!detail::split_header(text, key, value, column)) break;
    last_header = no;
    if (key == "n") {
      n = detail::header_int(value, column, no);
    } else if (key == "k") {
      k = detail::header_int(value, column, no);
    } else {
      throw ParseError(no, 1, "unknown header '" + key + "'");
    }
  }
  if (!n || !k) throw ParseError(last_header, 1, "missing header 'n' or 'k'");
  if (*n < 0 || *n > kMaxGround || *k < 0 || *k > *n) {
    throw ParseError(last_header, 1, "need 0 <= k <= n <= 64");
  }
  std::vector<ElementSet> sets;
  for (; cursor < lines.size(); ++cursor) {
    const auto& [no, text] = lines[cursor];
    ElementSet s = detail::parse_set_line(text, *n, no);
    if (s.size() != *k || !s.is_admissible()) {
      throw ParseError(no, 1,
                       "basis must be an admissible " + std::to_string(*k) +
                           "-set");
    }
    sets.push_back(s);
  }
  if (sets.empty()) {
    throw ParseError(last_header, 1, "basis file lists no bases");
  }
  return BasisCollection(*n, *k, std::move(sets));
}

inline BasisCollection parse_basis_collection(const std::string& text) {
  std::istringstream in(text);
  return read_basis_collection(in);
}

inline void write_basis_collection(std::ostream& out,
                                   const BasisCollection& b) {
  out << "n: " << b.n() << '\n' << "k: " << b.rank() << '\n';
  for (const auto& s : b) out << format_set(s) << '\n';
}

inline std::string format_basis_collection(const BasisCollection& b) {
  std::ostringstream out;
  write_basis_collection(out, b);
  return out.str();
}

inline void write_signmap(std::ostream& out, const SignMap& p) {
  out << "# signs up to a global flip; + on the lexicographically least "
         "basis\n"
      << "n: " << p.n() << '\n';
  for (const auto& s : p.support_sets()) {
    out << (p.at(s) > 0 ? '+' : '-');
    if (s.size() > 0) out << ' ' << format_set(s);
    out << '\n';
  }
}

inline std::string format_signmap(const SignMap& p) {
  std::ostringstream out;
  write_signmap(out, p);
  return out.str();
}

// Reads an `n:` header and `<sign> <basis>` lines of admissible n-sets.
inline SignMap read_signmap(std::istream& in) {
  const auto lines = detail::content_lines(in);
  if (lines.empty()) throw ParseError(1, 1, "missing header 'n'");
  std::string key;
  std::string_view value;
  int column = 1;
  const auto& [first_no, first] = lines.front();
  if (!detail::split_header(first, key, value, column) || key != "n") {
    throw ParseError(first_no, 1, "missing header 'n'");
  }
  const int n = detail::header_int(value, column, first_no);
  if (n < 0 || n > 24) throw ParseError(first_no, column, "n must be in [0, 24]");
  SignMap out(n);
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto& [number, line] = lines[i];
    const std::string_view t = detail::trim(line);
    const int col = static_cast<int>(line.find(t.front())) + 1;
    if (t.front() != '+' && t.front() != '-') {
      throw ParseError(number, col, "expected '+' or '-'");
    }
    const ElementSet s = detail::parse_set_line(t.substr(1), n, number);
    if (s.size() != n || !s.is_admissible()) {
      throw ParseError(number, col + 1, "not an admissible n-set");
    }
    out.set(s, t.front() == '+' ? 1 : -1);
  }
  return out;
}

inline SignMap parse_signmap(const std::string& text) {
  std::istringstream in(text);
  return read_signmap(in);
}

}  // namespace lagmat

#endif  // LAGMAT_IO_HPP_
