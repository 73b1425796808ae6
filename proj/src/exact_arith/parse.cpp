#include <cctype>
#include <string>

#include "qjfrac/errors.hpp"
#include "qjfrac/serialize.hpp"

namespace qjfrac {

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  QRatFn parse() {
    QRatFn v = expr();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected trailing input");
    return v;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError("parse error at offset " + std::to_string(pos_) + ": " + msg + " in \"" +
                     std::string(text_) + "\"");
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  QRatFn expr() {
    QRatFn v = term();
    for (;;) {
      if (accept('+')) {
        v += term();
      } else if (accept('-')) {
        v -= term();
      } else {
        return v;
      }
    }
  }

  QRatFn term() {
    QRatFn v = factor();
    for (;;) {
      if (accept('*')) {
        v *= factor();
      } else if (accept('/')) {
        v /= factor();
      } else {
        return v;
      }
    }
  }

  QRatFn factor() {
    if (accept('-')) return -factor();
    if (accept('+')) return factor();
    return power();
  }

  QRatFn power() {
    QRatFn base = atom();
    if (!accept('^')) return base;
    bool negative = accept('-');
    skip_space();
    Integer e = integer();
    if (!e.fits_sint_p() || abs(e) > 100000) fail("exponent out of range");
    int k = static_cast<int>(e.get_si());
    return pow(base, negative ? -k : k);
  }

  Integer integer() {
    skip_space();
    size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected integer");
    return Integer(std::string(text_.substr(start, pos_ - start)));
  }

  QRatFn atom() {
    skip_space();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      QRatFn v = expr();
      if (!accept(')')) fail("expected ')'");
      return v;
    }
    if (c == 'q') {
      ++pos_;
      return QRatFn::q();
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return QRatFn(Rational(integer()));
    fail(std::string("unexpected character '") + c + "'");
  }

  std::string_view text_;
  size_t pos_ = 0;
};

}  // namespace

QRatFn parse_qratfn(std::string_view text) { return Parser(text).parse(); }

}  // namespace qjfrac
