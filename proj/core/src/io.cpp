// Copyright 2026 The liaison Authors
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

#include "liaison/io.hpp"

#include <cctype>
#include <limits>
#include <sstream>

namespace liaison {

ParseError::ParseError(const std::string& message, int line, int column)
    : std::runtime_error(std::to_string(line) + ":" + std::to_string(column) + ": " + message),
      message_(message),
      line_(line),
      column_(column) {}

namespace {

class Scanner {
 public:
  explicit Scanner(std::string_view text) : text_(text) {}

  // Skips blanks, newlines and comments.
  void skip() {
    while (pos_ < text_.size()) {
      const char c = text_[pos_];
      if (c == '#') {
        while (pos_ < text_.size() && text_[pos_] != '\n') advance();
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        advance();
      } else {
        break;
      }
    }
  }

  bool done() {
    skip();
    return pos_ >= text_.size();
  }
  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
  char get() {
    const char c = peek();
    advance();
    return c;
  }
  bool digit() const { return std::isdigit(static_cast<unsigned char>(peek())) != 0; }
  bool alpha() const { return std::isalpha(static_cast<unsigned char>(peek())) != 0; }

  [[noreturn]] void fail(const std::string& message) const { throw ParseError(message, line_, col_); }
  [[noreturn]] void fail_at(const std::string& message, int line, int col) const {
    throw ParseError(message, line, col);
  }
  int line() const { return line_; }
  int col() const { return col_; }

  std::string word() {
    std::string w;
    while (alpha() || digit() || peek() == '_') w += get();
    return w;
  }

  // Unsigned decimal; reduced mod `modulus` when nonzero, else range-checked.
  std::uint64_t number(std::uint64_t modulus = 0) {
    if (!digit()) fail("expected a number");
    std::uint64_t v = 0;
    while (digit()) {
      const auto d = static_cast<std::uint64_t>(get() - '0');
      if (modulus != 0) {
        v = (v * 10 + d) % modulus;
      } else {
        if (v > (std::numeric_limits<std::uint64_t>::max() - d) / 10) fail("number too large");
        v = v * 10 + d;
      }
    }
    return v;
  }

 private:
  void advance() {
    if (pos_ >= text_.size()) return;
    if (text_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int col_ = 1;
};

void skip_inline(Scanner& s) {
  while (s.peek() == ' ' || s.peek() == '\t') s.get();
}

void expect_keyword(Scanner& s, const std::string& kw) {
  s.skip();
  const int line = s.line(), col = s.col();
  const std::string w = s.word();
  if (w != kw) s.fail_at("expected '" + kw + "'", line, col);
}

// Variable reference x<k>. Reads only the digits after 'x' so that
// juxtaposed factors like x0x1 split correctly.
int variable(Scanner& s, int nvars) {
  const int line = s.line(), col = s.col();
  if (s.peek() != 'x') s.fail_at("unknown variable '" + s.word() + "'", line, col);
  s.get();
  std::string digits;
  while (s.digit() && digits.size() < 4) digits += s.get();
  if (digits.empty() || s.digit()) s.fail_at("unknown variable", line, col);
  const int idx = std::stoi(digits);
  if (idx >= nvars) s.fail_at("unknown variable 'x" + digits + "'", line, col);
  return idx;
}

// term := factor ( ['*'] factor )*, factor := integer | x<k> ['^' integer]
Term term(Scanner& s, const Ring& ring) {
  const auto& F = ring.field;
  Monomial mono(ring.nvars);
  Coeff coeff = 1;
  bool any = false;
  for (;;) {
    skip_inline(s);
    if (s.digit()) {
      coeff = F.mul(coeff, static_cast<Coeff>(s.number(ring.prime())));
    } else if (s.alpha()) {
      const int idx = variable(s, ring.nvars);
      int power = 1;
      skip_inline(s);
      if (s.peek() == '^') {
        s.get();
        skip_inline(s);
        const std::uint64_t e = s.number();
        if (e > 1000) s.fail("exponent too large");
        power = static_cast<int>(e);
      }
      const int total = mono[idx] + power;
      if (total > std::numeric_limits<Exponent>::max()) s.fail("exponent too large");
      mono.set(idx, total);
    } else {
      if (!any) s.fail("expected a term");
      break;
    }
    any = true;
    skip_inline(s);
    if (s.peek() == '*') {
      s.get();
      skip_inline(s);
      if (!s.digit() && !s.alpha()) s.fail("expected a factor after '*'");
    } else if (!s.digit() && !s.alpha()) {
      break;
    }
  }
  return {mono, coeff};
}

Polynomial polynomial(Scanner& s, const Ring& ring) {
  std::vector<Term> terms;
  bool negate = false;
  skip_inline(s);
  if (s.peek() == '-' || s.peek() == '+') negate = s.get() == '-';
  for (;;) {
    Term t = term(s, ring);
    if (negate) t.coeff = ring.field.neg(t.coeff);
    terms.push_back(t);
    s.skip();
    if (s.peek() != '+' && s.peek() != '-') break;
    negate = s.get() == '-';
    s.skip();
  }
  return Polynomial::from_terms(ring, std::move(terms));
}

}  // namespace

IdealFile parse_ideal_file(std::string_view text) {
  Scanner s(text);
  expect_keyword(s, "ring");
  skip_inline(s);
  const int pl = s.line(), pc = s.col();
  const std::uint64_t p = s.number();
  if (p >= (std::uint64_t{1} << 31) || !is_prime(p)) s.fail_at(std::to_string(p) + " is not a prime below 2^31", pl, pc);
  skip_inline(s);
  const int nl = s.line(), nc = s.col();
  const std::uint64_t nvars = s.number();
  if (nvars < 1 || nvars > static_cast<std::uint64_t>(kMaxVars)) {
    s.fail_at("variable count must lie in [1, " + std::to_string(kMaxVars) + "]", nl, nc);
  }
  IdealFile out;
  out.ring = Ring(static_cast<std::uint32_t>(p), static_cast<int>(nvars));

  expect_keyword(s, "ideal");
  for (;;) {
    s.skip();
    const int gl = s.line(), gc = s.col();
    Polynomial f = polynomial(s, out.ring);
    if (!f.is_homogeneous()) s.fail_at("inhomogeneous generator", gl, gc);
    out.generators.push_back(std::move(f));
    s.skip();
    if (s.peek() != ',') break;
    s.get();
  }
  if (!s.done()) s.fail("unexpected text after the generator list");
  return out;
}

std::string format_ideal_file(const Ring& ring, std::span<const Polynomial> generators) {
  std::string out = "ring " + std::to_string(ring.prime()) + " " + std::to_string(ring.nvars) + "\nideal ";
  for (std::size_t i = 0; i < generators.size(); ++i) {
    if (i > 0) out += ", ";
    out += to_string(generators[i]);
  }
  return out + "\n";
}

std::string render_betti(const BettiDiagram& d) {
  const int len = d.length();
  if (len < 0) return "";
  int lo = std::numeric_limits<int>::max();
  for (const auto& [key, rank] : d.entries()) lo = std::min(lo, key.second - key.first);
  std::ostringstream os;
  const auto totals = d.totals();
  for (std::size_t i = 0; i < totals.size(); ++i) os << (i ? " " : "") << totals[i];
  os << '\n';
  for (int r = lo; r <= d.max_stratum(); ++r) {
    for (int i = 0; i <= len; ++i) {
      if (i) os << ' ';
      const int v = d.rank(i, i + r);
      if (v) {
        os << v;
      } else {
        os << "--";
      }
    }
    os << '\n';
  }
  return os.str();
}

std::string render_betti_raw(const BettiDiagram& d) {
  std::ostringstream os;
  for (const auto& [key, rank] : d.entries()) os << key.first << ' ' << key.second << ' ' << rank << '\n';
  return os.str();
}

}  // namespace liaison
