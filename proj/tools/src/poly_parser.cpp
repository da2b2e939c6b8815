#include "polyinc/cli/poly_parser.hpp"

#include <cctype>

namespace polyinc::cli {

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  MultiPoly parse() {
    MultiPoly p = expr();
    skip();
    if (pos_ != text_.size()) fail(std::string("unexpected '") + text_[pos_] + "'");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_); }

  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  std::string digits() {
    skip();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected digits");
    return std::string(text_.substr(start, pos_ - start));
  }

  MultiPoly expr() {
    MultiPoly p = term();
    while (true) {
      if (accept('+'))
        p += term();
      else if (accept('-'))
        p -= term();
      else
        return p;
    }
  }

  MultiPoly term() {
    MultiPoly p = factor();
    while (accept('*')) p = p * factor();
    return p;
  }

  MultiPoly factor() {
    if (accept('-')) return -factor();
    MultiPoly b = base();
    if (accept('^')) {
      const std::size_t at = pos_;
      std::string e = digits();
      if (e.size() > 3 || std::stoul(e) > kMaxExponent) {
        pos_ = at;
        fail("exponent exceeds " + std::to_string(kMaxExponent));
      }
      return b.pow(static_cast<unsigned>(std::stoul(e)));
    }
    return b;
  }

  MultiPoly base() {
    skip();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      MultiPoly p = expr();
      if (!accept(')')) fail("expected ')'");
      return p;
    }
    if (c == 'x' || c == 'y' || c == 'z') {
      ++pos_;
      return MultiPoly::variable(3, static_cast<std::size_t>(c - 'x'));
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      Int num(digits());
      Int den(1);
      if (accept('/')) {
        const std::size_t at = pos_;
        den = Int(digits());
        if (den == 0) {
          pos_ = at;
          fail("zero denominator");
        }
      }
      Rat r(num, den);
      r.canonicalize();
      return MultiPoly::constant(3, r);
    }
    fail(std::string("unexpected '") + c + "'");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

MultiPoly parse_poly(std::string_view text) { return Parser(text).parse(); }

}  // namespace polyinc::cli
