#include "wcs/parser.hpp"

#include <cctype>
#include <charconv>

namespace wcs {

namespace {

class Parser {
 public:
  explicit Parser(std::string_view src) : src_(src) {}

  PeriodicExpr parse() {
    PeriodicExpr e = expr();
    skip_ws();
    if (pos_ != src_.size()) fail({"operator", "end of input"});
    return e;
  }

 private:
  std::string_view src_;
  std::size_t pos_ = 0;

  void skip_ws() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
  }

  char peek() {
    skip_ws();
    return pos_ < src_.size() ? src_[pos_] : '\0';
  }

  bool accept(char c) {
    if (peek() == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  [[noreturn]] void fail(std::vector<std::string> expected) {
    std::string msg = "parse error at offset " + std::to_string(pos_) + ": expected ";
    for (std::size_t i = 0; i < expected.size(); ++i) {
      if (i) msg += " or ";
      msg += expected[i];
    }
    if (pos_ < src_.size()) msg += std::string(", found '") + src_[pos_] + "'";
    else msg += ", found end of input";
    throw ParseError(pos_, std::move(expected), msg);
  }

  void expect(char c) {
    if (!accept(c)) fail({std::string("'") + c + "'"});
  }

  PeriodicExpr expr() {
    PeriodicExpr e = term();
    for (;;) {
      if (accept('+')) e = e + term();
      else if (accept('-')) e = e - term();
      else return e;
    }
  }

  PeriodicExpr term() {
    PeriodicExpr e = factor();
    for (;;) {
      if (accept('*')) {
        e = e * factor();
      } else if (peek() == '/') {
        const std::size_t at = ++pos_;
        PeriodicExpr den = factor();
        try {
          e = e / den;
        } catch (const std::invalid_argument& ex) {
          throw ParseError(at, {"non-zero denominator"}, ex.what());
        }
      } else {
        return e;
      }
    }
  }

  PeriodicExpr factor() {
    PeriodicExpr b = base();
    if (accept('^')) {
      skip_ws();
      const std::size_t start = pos_;
      if (pos_ < src_.size() && src_[pos_] == '-') ++pos_;
      int n = 0;
      auto [ptr, ec] = std::from_chars(src_.data() + pos_, src_.data() + src_.size(), n);
      if (ec != std::errc() || ptr == src_.data() + pos_) {
        pos_ = start;
        fail({"integer exponent"});
      }
      pos_ = static_cast<std::size_t>(ptr - src_.data());
      if (src_[start] == '-') n = -n;
      try {
        b = pow(b, n);
      } catch (const std::invalid_argument& ex) {
        throw ParseError(start, {"non-zero base"}, ex.what());
      }
    }
    return b;
  }

  PeriodicExpr base() {
    const char c = peek();
    if (c == '-') {
      ++pos_;
      return -base();
    }
    if (c == '(') {
      ++pos_;
      PeriodicExpr e = expr();
      expect(')');
      return e;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return number();
    if (std::isalpha(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (pos_ < src_.size() && std::isalpha(static_cast<unsigned char>(src_[pos_]))) ++pos_;
      const std::string_view word = src_.substr(start, pos_ - start);
      if (word == "alpha") return PeriodicExpr::alpha();
      if (word == "a") return PeriodicExpr::param();
      if (word == "sin" || word == "cos") {
        expect('(');
        PeriodicExpr arg = expr();
        expect(')');
        return word == "sin" ? sin(arg) : cos(arg);
      }
      pos_ = start;
      fail({"'alpha'", "'a'", "'sin'", "'cos'"});
    }
    fail({"number", "'alpha'", "'a'", "'sin'", "'cos'", "'('", "'-'"});
  }

  PeriodicExpr number() {
    const std::size_t start = pos_;
    while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    if (pos_ < src_.size() && src_[pos_] == '.') {
      ++pos_;
      while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    }
    const std::string_view lit = src_.substr(start, pos_ - start);
    if (lit == ".") {
      pos_ = start;
      fail({"number"});
    }
    double v = 0.0;
    auto [ptr, ec] = std::from_chars(lit.data(), lit.data() + lit.size(), v);
    if (ec != std::errc() || ptr != lit.data() + lit.size()) {
      pos_ = start;
      fail({"number"});
    }
    return PeriodicExpr::constant(v);
  }
};

}  // namespace

PeriodicExpr parse_expr(std::string_view source) { return Parser(source).parse(); }

}  // namespace wcs
