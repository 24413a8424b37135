#pragma once

// Variable-free terms over {join, *, bottom, 0..k-1}.
//
//   join := star (('|' | '⊔') star)*
//   star := atom ('*' star)?            right associative, binds tighter than join
//   atom := nat | 'bot' | '⊥' | '(' join ')' | 's' '(' join ')'
//
// F*G adjoins a root labeled F on top of G; s(F) is F*bot.

#include <cctype>
#include <stdexcept>
#include <string>
#include <string_view>

#include "forest.hpp"

namespace hier {

class TermSyntaxError : public std::runtime_error {
 public:
  TermSyntaxError(std::size_t pos, const std::string& what)
      : std::runtime_error("term syntax error at " + std::to_string(pos) + ": " + what), pos_(pos) {}
  std::size_t position() const { return pos_; }

 private:
  std::size_t pos_;
};

namespace detail {

class TermParser {
 public:
  TermParser(std::string_view text, int k) : text_(text), k_(k) {}

  Forest parse() {
    Forest f = join_expr();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected trailing input");
    return f;
  }

 private:
  Forest join_expr() {
    Forest f = star_expr();
    while (accept("|") || accept("⊔")) f = join(f, star_expr());
    return f;
  }

  Forest star_expr() {
    std::size_t at = (skip_ws(), pos_);
    Forest lhs = atom();
    if (!accept("*")) return lhs;
    if (lhs.empty()) fail_at(at, "the left operand of '*' must be nonempty");
    Forest rhs = star_expr();
    return as_forest(wrap(Label::nested(std::move(lhs)), std::move(rhs)));
  }

  Forest atom() {
    skip_ws();
    if (accept("bot") || accept("⊥")) return Forest::bottom();
    if (accept("(")) {
      Forest f = join_expr();
      expect(")");
      return f;
    }
    std::size_t at = pos_;
    if (accept("s")) {
      expect("(");
      Forest f = join_expr();
      expect(")");
      if (f.empty()) fail_at(at, "s() of the empty forest");
      return as_forest(wrap(Label::nested(std::move(f)), {}));
    }
    if (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      long v = 0;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        v = v * 10 + (text_[pos_] - '0');
        if (v > 1000000) fail_at(at, "color too large");
        ++pos_;
      }
      if (k_ > 0 && v >= k_) fail_at(at, "color " + std::to_string(v) + " out of range for k=" + std::to_string(k_));
      return as_forest(leaf(static_cast<int>(v)));
    }
    fail("expected a color, 'bot', 's(' or '('");
  }

  bool accept(std::string_view tok) {
    skip_ws();
    if (text_.substr(pos_, tok.size()) == tok) {
      pos_ += tok.size();
      return true;
    }
    return false;
  }

  void expect(std::string_view tok) {
    if (!accept(tok)) fail("expected '" + std::string(tok) + "'");
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  [[noreturn]] void fail(const std::string& what) const { throw TermSyntaxError(pos_, what); }
  [[noreturn]] void fail_at(std::size_t at, const std::string& what) const { throw TermSyntaxError(at, what); }

  std::string_view text_;
  int k_;
  std::size_t pos_ = 0;
};

std::string print_raw(const Forest& f);

inline std::string print_raw(const Tree& t) {
  std::string lhs;
  if (t.label.is_color()) {
    lhs = std::to_string(t.label.color());
  } else {
    const Forest& l = t.label.forest();
    bool atomic = l.trees.size() == 1 && l.trees[0].children.empty();
    lhs = atomic ? print_raw(l) : "(" + print_raw(l) + ")";
  }
  if (t.children.empty()) return t.label.is_color() ? lhs : "s(" + print_raw(t.label.forest()) + ")";
  std::string rhs = t.children.trees.size() == 1 ? print_raw(t.children) : "(" + print_raw(t.children) + ")";
  return lhs + "*" + rhs;
}

inline std::string print_raw(const Forest& f) {
  if (f.empty()) return "bot";
  std::string s;
  for (std::size_t i = 0; i < f.trees.size(); ++i) {
    if (i) s += "|";
    s += print_raw(f.trees[i]);
  }
  return s;
}

}  // namespace detail

// k <= 0 disables the color range check.
inline Forest parse_term(std::string_view text, int k = 0) { return detail::TermParser(text, k).parse(); }

// Prints the normal form, so equivalent forests print identically.
inline std::string print_term(const Forest& f) { return detail::print_raw(normalize(f)); }

// Prints the forest exactly as structured.
inline std::string print_term_raw(const Forest& f) { return detail::print_raw(f); }

}  // namespace hier
