#pragma once

#include <algorithm>
#include <cctype>
#include <charconv>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "borel/monomial_ideal.hpp"
#include "borel/polynomial.hpp"

// Text formats: the ideal file and polynomial/monomial syntax.
//
//   # comment
//   name: codim-3 example
//   ring: x y z            (or `ring: 3` for x1 x2 x3)
//   I: x^2, x*y,
//      y^3 - 2/3*x*z^2
//   expect: wlp true

namespace borel {

struct IdealFile {
  std::vector<std::string> names;
  std::vector<Polynomial> generators;
  std::optional<std::string> name;
  std::vector<std::string> expectations;

  std::size_t num_vars() const noexcept { return names.size(); }
};

namespace detail {

/// Characters of the text being parsed with their source positions.
class SourceText {
 public:
  void append(std::string_view s, std::size_t line, std::size_t first_col) {
    for (std::size_t k = 0; k < s.size(); ++k) chars_.push_back({s[k], line, first_col + k});
    // Separator so tokens never join across lines.
    chars_.push_back({' ', line, first_col + s.size()});
  }

  std::size_t size() const noexcept { return chars_.size(); }
  char at(std::size_t k) const { return k < chars_.size() ? chars_[k].c : '\0'; }
  std::size_t line(std::size_t k) const { return k < chars_.size() ? chars_[k].line : last_line(); }
  std::size_t column(std::size_t k) const { return k < chars_.size() ? chars_[k].col : last_col(); }

 private:
  struct Char {
    char c;
    std::size_t line, col;
  };
  std::size_t last_line() const { return chars_.empty() ? 1 : chars_.back().line; }
  std::size_t last_col() const { return chars_.empty() ? 1 : chars_.back().col; }
  std::vector<Char> chars_;
};

inline bool is_ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
inline bool is_ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

class PolynomialParser {
 public:
  PolynomialParser(const SourceText& src, const std::vector<std::string>& names) : src_(src), names_(names) {}

  /// Comma-separated polynomials up to the end of the text.
  std::vector<Polynomial> parse_list() {
    std::vector<Polynomial> out;
    skip_space();
    if (pos_ >= src_.size()) return out;
    for (;;) {
      out.push_back(parse_polynomial());
      skip_space();
      if (pos_ >= src_.size()) break;
      expect(',');
    }
    return out;
  }

  Polynomial parse_single() {
    Polynomial p = parse_polynomial();
    skip_space();
    if (pos_ < src_.size()) error("unexpected '" + std::string(1, peek()) + "'");
    return p;
  }

 private:
  Polynomial parse_polynomial() {
    const std::size_t n = names_.size();
    std::vector<Polynomial::Term> terms;
    skip_space();
    bool negative = false;
    if (peek() == '-' || peek() == '+') {
      negative = peek() == '-';
      ++pos_;
    }
    for (;;) {
      auto term = parse_term();
      if (negative) term.coeff = -term.coeff;
      terms.push_back(std::move(term));
      skip_space();
      if (peek() == '+' || peek() == '-') {
        negative = peek() == '-';
        ++pos_;
        continue;
      }
      break;
    }
    return Polynomial(n, std::move(terms));
  }

  Polynomial::Term parse_term() {
    skip_space();
    Rational coeff = 1;
    std::vector<Monomial::Exponent> exps(names_.size(), 0);
    bool any = false;
    for (;;) {
      skip_space();
      if (std::isdigit(static_cast<unsigned char>(peek()))) {
        coeff *= parse_rational();
      } else if (is_ident_start(peek())) {
        auto [var, power] = parse_power();
        exps[var] += power;
      } else {
        error(any ? "expected a factor after '*'" : "expected a coefficient or variable");
      }
      any = true;
      skip_space();
      if (peek() != '*') break;
      ++pos_;
    }
    return {Monomial(std::move(exps)), coeff};
  }

  Rational parse_rational() {
    std::string num = digits();
    skip_space();
    if (peek() == '/') {
      ++pos_;
      skip_space();
      if (!std::isdigit(static_cast<unsigned char>(peek()))) error("expected a denominator");
      const std::size_t at = pos_;
      std::string den = digits();
      if (den.find_first_not_of('0') == std::string::npos) error_at(at, "zero denominator");
      Rational q{Integer(num), Integer(den)};
      q.canonicalize();
      return q;
    }
    return Rational(Integer(num));
  }

  std::pair<std::size_t, Monomial::Exponent> parse_power() {
    const std::size_t at = pos_;
    std::string id;
    while (is_ident_char(peek())) id += src_.at(pos_++);
    std::size_t var = lookup(id, at);
    skip_space();
    Monomial::Exponent power = 1;
    if (peek() == '^') {
      ++pos_;
      skip_space();
      const std::size_t exp_at = pos_;
      if (!std::isdigit(static_cast<unsigned char>(peek()))) error("expected an exponent after '^'");
      std::string e = digits();
      auto res = std::from_chars(e.data(), e.data() + e.size(), power);
      if (res.ec != std::errc()) error_at(exp_at, "exponent out of range");
    }
    return {var, power};
  }

  std::size_t lookup(const std::string& id, std::size_t at) const {
    for (std::size_t k = 0; k < names_.size(); ++k)
      if (names_[k] == id) return k;
    // Indexed names x1..xn work in any ring.
    if (id.size() >= 2 && id[0] == 'x' && id.find_first_not_of("0123456789", 1) == std::string::npos && id[1] != '0') {
      std::size_t k = 0;
      auto res = std::from_chars(id.data() + 1, id.data() + id.size(), k);
      if (res.ec == std::errc() && k >= 1 && k <= names_.size()) return k - 1;
    }
    throw Error(ErrorKind::UnknownVariable, "line " + std::to_string(src_.line(at)) + ", column " +
                                               std::to_string(src_.column(at)) + ": unknown variable '" + id + "'");
  }

  std::string digits() {
    std::string s;
    while (std::isdigit(static_cast<unsigned char>(peek()))) s += src_.at(pos_++);
    return s;
  }

  void skip_space() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_.at(pos_)))) ++pos_;
  }

  void expect(char c) {
    skip_space();
    if (peek() != c) error(std::string("expected '") + c + "'" + (pos_ < src_.size() ? std::string(", found '") + peek() + "'" : ""));
    ++pos_;
  }

  char peek() const { return src_.at(pos_); }

  [[noreturn]] void error(const std::string& msg) const { error_at(pos_, msg); }
  [[noreturn]] void error_at(std::size_t at, const std::string& msg) const {
    throw SyntaxError(src_.line(at), src_.column(at), msg);
  }

  const SourceText& src_;
  const std::vector<std::string>& names_;
  std::size_t pos_ = 0;
};

inline std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

inline std::vector<std::string> parse_ring(std::string_view body, std::size_t line, std::size_t col) {
  std::vector<std::string> names;
  std::size_t k = 0;
  while (k < body.size()) {
    if (std::isspace(static_cast<unsigned char>(body[k])) || body[k] == ',') {
      ++k;
      continue;
    }
    std::size_t start = k;
    while (k < body.size() && !std::isspace(static_cast<unsigned char>(body[k])) && body[k] != ',') ++k;
    names.emplace_back(body.substr(start, k - start));
    const auto& id = names.back();
    bool numeric = id.find_first_not_of("0123456789") == std::string::npos;
    if (numeric) {
      if (names.size() != 1 || !trim(body.substr(k)).empty())
        throw SyntaxError(line, col + start, "a variable count must stand alone");
      std::size_t count = 0;
      std::from_chars(id.data(), id.data() + id.size(), count);
      if (count == 0 || count > 64) throw SyntaxError(line, col + start, "variable count must be between 1 and 64");
      names.clear();
      for (std::size_t v = 1; v <= count; ++v) names.push_back("x" + std::to_string(v));
      return names;
    }
    if (!is_ident_start(id[0]) || !std::all_of(id.begin(), id.end(), is_ident_char))
      throw SyntaxError(line, col + start, "invalid variable name '" + id + "'");
    for (std::size_t p = 0; p + 1 < names.size(); ++p)
      if (names[p] == id) throw SyntaxError(line, col + start, "duplicate variable '" + id + "'");
  }
  if (names.empty()) throw SyntaxError(line, col, "ring needs at least one variable");
  return names;
}

}  // namespace detail

/// Parses an ideal file. Errors carry 1-based line and column.
inline IdealFile parse_ideal(std::string_view text) {
  IdealFile out;
  detail::SourceText gens;
  bool have_ring = false, have_ideal = false, in_ideal = false;

  std::size_t line_no = 0, start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    ++line_no;
    start = end + 1;

    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    if (detail::trim(line).empty()) {
      if (end == text.size()) break;
      continue;
    }

    std::size_t indent = 0;
    while (indent < line.size() && std::isspace(static_cast<unsigned char>(line[indent]))) ++indent;
    std::size_t colon = line.find(':');
    std::string key = colon == std::string_view::npos ? "" : std::string(detail::trim(line.substr(0, colon)));
    const bool keyed = key == "ring" || key == "I" || key == "name" || key == "expect";

    if (!keyed) {
      if (!in_ideal) throw SyntaxError(line_no, indent + 1, "expected 'ring:', 'I:', 'name:' or 'expect:'");
      gens.append(line, line_no, 1);
    } else {
      in_ideal = false;
      std::string_view body = line.substr(colon + 1);
      const std::size_t body_col = colon + 2;
      if (key == "ring") {
        if (have_ring) throw SyntaxError(line_no, indent + 1, "duplicate 'ring:' line");
        out.names = detail::parse_ring(body, line_no, body_col);
        have_ring = true;
      } else if (key == "I") {
        if (have_ideal) throw SyntaxError(line_no, indent + 1, "duplicate 'I:' line");
        have_ideal = in_ideal = true;
        gens.append(body, line_no, body_col);
      } else if (key == "name") {
        out.name = std::string(detail::trim(body));
      } else {
        out.expectations.emplace_back(detail::trim(body));
      }
    }
    if (end == text.size()) break;
  }
  if (!have_ring) throw SyntaxError(1, 1, "missing 'ring:' line");
  if (!have_ideal) throw SyntaxError(line_no == 0 ? 1 : line_no, 1, "missing 'I:' line");
  detail::PolynomialParser parser(gens, out.names);
  out.generators = parser.parse_list();
  return out;
}

/// Parses one polynomial over the given variable names.
inline Polynomial parse_polynomial(std::string_view text, const std::vector<std::string>& names) {
  detail::SourceText src;
  src.append(text, 1, 1);
  detail::PolynomialParser parser(src, names);
  return parser.parse_single();
}

/// Comma-separated polynomials over the given variable names.
inline std::vector<Polynomial> parse_polynomials(std::string_view text, const std::vector<std::string>& names) {
  detail::SourceText src;
  src.append(text, 1, 1);
  detail::PolynomialParser parser(src, names);
  return parser.parse_list();
}

/// Monomial generators as a monomial ideal; fails when some generator has
/// more than one term.
inline MonomialIdeal monomial_ideal(const IdealFile& f) {
  std::vector<Monomial> gens;
  for (const auto& p : f.generators) {
    if (p.is_zero()) continue;
    if (!p.is_monomial()) fail(ErrorKind::InvalidArgument, "expected monomial generators, got " + to_string(p, f.names));
    gens.push_back(p.leading_monomial());
  }
  return MonomialIdeal(f.num_vars(), std::move(gens));
}

/// Prints an ideal file that parse_ideal reads back to an equal value.
inline std::string to_text(const IdealFile& f) {
  std::string out;
  if (f.name) out += "name: " + *f.name + "\n";
  out += "ring:";
  for (const auto& v : f.names) out += " " + v;
  out += "\nI: ";
  for (std::size_t k = 0; k < f.generators.size(); ++k) out += (k ? ", " : "") + to_string(f.generators[k], f.names);
  out += "\n";
  for (const auto& e : f.expectations) out += "expect: " + e + "\n";
  return out;
}

inline IdealFile ideal_file(const MonomialIdeal& I, std::vector<std::string> names = {}) {
  IdealFile f;
  if (names.empty())
    for (std::size_t v = 1; v <= I.num_vars(); ++v) names.push_back("x" + std::to_string(v));
  f.names = std::move(names);
  for (const auto& g : I.generators()) f.generators.push_back(Polynomial::from_monomial(g));
  return f;
}

}  // namespace borel
