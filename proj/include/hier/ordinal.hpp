#pragma once

// Ordinal notations in Cantor normal form over an uninterpreted base symbol
// Omega (written `w` in text).  Every countable slot is a finite integer, so
// the notations cover exactly the ordinals below the first fixed point of
// x -> Omega^x whose coefficients are all finite.

#include <algorithm>
#include <cctype>
#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace hier {

class Ordinal;

struct OrdinalTerm;

class Ordinal {
 public:
  Ordinal() = default;
  // Finite ordinal n.
  static Ordinal finite(std::uint64_t n);
  // Omega^exponent * coefficient.
  static Ordinal monomial(Ordinal exponent, std::uint64_t coefficient = 1);

  const std::vector<OrdinalTerm>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_finite() const;
  // Coefficient of the Omega^0 term, i.e. n in lambda + n.
  std::uint64_t finite_part() const;
  bool is_successor() const { return finite_part() > 0; }
  // Nesting depth of Omega: 0 for finite, 1 for w*3+2, 2 for w^w, ...
  int depth() const;

  // Builds from arbitrary terms; zero coefficients are dropped and the
  // exponents must be strictly decreasing.
  static Ordinal from_terms(std::vector<OrdinalTerm> terms);

 private:
  std::vector<OrdinalTerm> terms_;
};

struct OrdinalTerm {
  Ordinal exponent;
  std::uint64_t coefficient = 1;
};

enum class Parity { even, odd };

std::strong_ordering cmp_ord(const Ordinal& a, const Ordinal& b);

inline bool operator==(const Ordinal& a, const Ordinal& b) { return cmp_ord(a, b) == 0; }
inline std::strong_ordering operator<=>(const Ordinal& a, const Ordinal& b) { return cmp_ord(a, b); }

inline Ordinal Ordinal::finite(std::uint64_t n) {
  Ordinal r;
  if (n > 0) r.terms_.push_back(OrdinalTerm{Ordinal{}, n});
  return r;
}

inline Ordinal Ordinal::monomial(Ordinal exponent, std::uint64_t coefficient) {
  Ordinal r;
  if (coefficient > 0) r.terms_.push_back(OrdinalTerm{std::move(exponent), coefficient});
  return r;
}

inline Ordinal Ordinal::from_terms(std::vector<OrdinalTerm> terms) {
  Ordinal r;
  for (auto& t : terms) {
    if (t.coefficient == 0) continue;
    if (!r.terms_.empty() && cmp_ord(r.terms_.back().exponent, t.exponent) != std::strong_ordering::greater)
      throw std::invalid_argument("ordinal terms must have strictly decreasing exponents");
    r.terms_.push_back(std::move(t));
  }
  return r;
}

inline bool Ordinal::is_finite() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].exponent.is_zero());
}

inline std::uint64_t Ordinal::finite_part() const {
  if (terms_.empty() || !terms_.back().exponent.is_zero()) return 0;
  return terms_.back().coefficient;
}

inline int Ordinal::depth() const {
  int d = 0;
  for (const auto& t : terms_)
    if (!t.exponent.is_zero()) d = std::max(d, 1 + t.exponent.depth());
  return d;
}

inline std::strong_ordering cmp_ord(const Ordinal& a, const Ordinal& b) {
  const auto& x = a.terms();
  const auto& y = b.terms();
  for (std::size_t i = 0; i < x.size() && i < y.size(); ++i) {
    if (auto c = cmp_ord(x[i].exponent, y[i].exponent); c != 0) return c;
    if (auto c = x[i].coefficient <=> y[i].coefficient; c != 0) return c;
  }
  return x.size() <=> y.size();
}

inline Parity parity(const Ordinal& a) {
  return a.finite_part() % 2 == 0 ? Parity::even : Parity::odd;
}

// Ordinal sum; terms of a below the leading exponent of b are absorbed.
inline Ordinal add(const Ordinal& a, const Ordinal& b) {
  if (b.is_zero()) return a;
  const OrdinalTerm& lead = b.terms().front();
  std::vector<OrdinalTerm> out;
  std::uint64_t carry = 0;
  for (const auto& t : a.terms()) {
    auto c = cmp_ord(t.exponent, lead.exponent);
    if (c == std::strong_ordering::greater) {
      out.push_back(t);
    } else {
      if (c == 0) carry = t.coefficient;
      break;
    }
  }
  out.push_back(OrdinalTerm{lead.exponent, lead.coefficient + carry});
  for (std::size_t i = 1; i < b.terms().size(); ++i) out.push_back(b.terms()[i]);
  return Ordinal::from_terms(std::move(out));
}

inline Ordinal omega_pow(const Ordinal& a) { return Ordinal::monomial(a, 1); }

inline Ordinal succ(const Ordinal& a) { return add(a, Ordinal::finite(1)); }

// Text form: `w^2*3+w+1`.  Exponents other than a natural number or a bare
// power of w are parenthesised: `w^(w+1)`.
std::string to_string(const Ordinal& a);

namespace detail {

inline std::string exponent_string(const Ordinal& e) {
  if (e.is_finite()) return std::to_string(e.finite_part());
  if (e.terms().size() == 1 && e.terms()[0].coefficient == 1) return to_string(e);
  return "(" + to_string(e) + ")";
}

}  // namespace detail

inline std::string to_string(const Ordinal& a) {
  if (a.is_zero()) return "0";
  std::string s;
  for (const auto& t : a.terms()) {
    if (!s.empty()) s += "+";
    if (t.exponent.is_zero()) {
      s += std::to_string(t.coefficient);
      continue;
    }
    s += "w";
    if (!(t.exponent.is_finite() && t.exponent.finite_part() == 1)) s += "^" + detail::exponent_string(t.exponent);
    if (t.coefficient != 1) s += "*" + std::to_string(t.coefficient);
  }
  return s;
}

class OrdinalSyntaxError : public std::runtime_error {
 public:
  OrdinalSyntaxError(std::size_t pos, const std::string& what)
      : std::runtime_error("ordinal syntax error at " + std::to_string(pos) + ": " + what), pos_(pos) {}
  std::size_t position() const { return pos_; }

 private:
  std::size_t pos_;
};

namespace detail {

class OrdinalParser {
 public:
  explicit OrdinalParser(std::string_view text) : text_(text) {}

  Ordinal parse() {
    Ordinal r = sum();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected trailing input");
    return r;
  }

 private:
  // ord := term ('+' term)*   -- summation goes through add(), so `1+w` is w
  Ordinal sum() {
    Ordinal r = term();
    while (accept('+')) r = add(r, term());
    return r;
  }

  // term := nat | 'w' ('^' exponent)? ('*' nat)?
  Ordinal term() {
    skip_ws();
    if (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) return Ordinal::finite(nat());
    if (!accept('w')) fail("expected 'w' or a natural number");
    Ordinal exponent = Ordinal::finite(1);
    if (accept('^')) exponent = exponent_atom();
    std::uint64_t coefficient = 1;
    if (accept('*')) coefficient = nat();
    return Ordinal::monomial(std::move(exponent), coefficient);
  }

  // exponent := nat | 'w' ('^' exponent)? | '(' ord ')'
  Ordinal exponent_atom() {
    skip_ws();
    if (accept('(')) {
      Ordinal r = sum();
      if (!accept(')')) fail("expected ')'");
      return r;
    }
    if (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) return Ordinal::finite(nat());
    if (!accept('w')) fail("expected exponent");
    Ordinal e = Ordinal::finite(1);
    if (accept('^')) e = exponent_atom();
    return omega_pow(e);
  }

  std::uint64_t nat() {
    skip_ws();
    std::size_t start = pos_;
    std::uint64_t v = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      v = v * 10 + static_cast<std::uint64_t>(text_[pos_] - '0');
      if (v > (1ULL << 40)) fail("natural number too large");
      ++pos_;
    }
    if (start == pos_) fail("expected a natural number");
    return v;
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  [[noreturn]] void fail(const std::string& what) const { throw OrdinalSyntaxError(pos_, what); }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace detail

inline Ordinal parse_ordinal(std::string_view text) { return detail::OrdinalParser(text).parse(); }

}  // namespace hier
