#include "leibniz/scalar.hpp"

#include <cctype>
#include <ostream>
#include <stdexcept>

namespace leibniz {

Scalar Scalar::fraction(long num, long den) {
  if (den == 0) throw std::domain_error("fraction: zero denominator");
  return Scalar(Rational(Integer(num), Integer(den)));
}

Scalar& Scalar::operator+=(const Scalar& o) {
  re_ += o.re_;
  im_ += o.im_;
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  re_ -= o.re_;
  im_ -= o.im_;
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  Rational re = re_ * o.re_ - im_ * o.im_;
  Rational im = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
  if (o.is_zero()) throw std::domain_error("Scalar: division by zero");
  // 1/(a+bi) = (a-bi)/(a^2+b^2)
  Rational n = o.norm();
  Rational re = (re_ * o.re_ + im_ * o.im_) / n;
  Rational im = (im_ * o.re_ - re_ * o.im_) / n;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

std::string rational_str(const Rational& r) {
  std::string s = numerator(r).str();
  if (denominator(r) != 1) {
    s += "/";
    s += denominator(r).str();
  }
  return s;
}

std::string Scalar::str() const {
  if (is_zero()) return "0";
  std::string out;
  if (!re_.is_zero()) out = rational_str(re_);
  if (!im_.is_zero()) {
    std::string im;
    if (im_ == 1)
      im = "i";
    else if (im_ == -1)
      im = "-i";
    else
      im = rational_str(im_) + "*i";
    if (!out.empty() && im[0] != '-') out += "+";
    out += im;
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.str(); }

int scalar_cmp(const Scalar& a, const Scalar& b) {
  if (a.real() != b.real()) return a.real() < b.real() ? -1 : 1;
  if (a.imag() != b.imag()) return a.imag() < b.imag() ? -1 : 1;
  return 0;
}

namespace {

// One signed term of the scalar grammar: rational, rational*i, or bare i.
struct Term {
  Rational value;
  bool imaginary = false;
};

class ScalarParser {
public:
  explicit ScalarParser(const std::string& text) : s_(text) {}

  Scalar run() {
    skip_ws();
    if (eof()) fail("empty scalar");
    Rational re = 0, im = 0;
    bool first = true;
    while (!eof()) {
      int sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = (get() == '-') ? -1 : 1;
        skip_ws();
      } else if (!first) {
        fail("expected '+' or '-' between terms");
      }
      Term t = term();
      if (t.imaginary)
        im += sign * t.value;
      else
        re += sign * t.value;
      first = false;
      skip_ws();
    }
    return Scalar(re, im);
  }

private:
  bool eof() const { return pos_ >= s_.size(); }
  char peek() const { return s_[pos_]; }
  char get() { return s_[pos_++]; }
  void skip_ws() {
    while (!eof() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  [[noreturn]] void fail(const std::string& why) const {
    throw std::invalid_argument("scalar parse error at position " +
                                std::to_string(pos_) + ": " + why + " in \"" + s_ + "\"");
  }

  Integer integer() {
    if (eof() || !std::isdigit(static_cast<unsigned char>(peek()))) fail("expected digit");
    std::string digits;
    while (!eof() && std::isdigit(static_cast<unsigned char>(peek()))) digits += get();
    return Integer(digits);
  }

  Term term() {
    if (peek() == 'i') {
      get();
      return {Rational(1), true};
    }
    Integer num = integer();
    Integer den = 1;
    skip_ws();
    if (!eof() && peek() == '/') {
      get();
      skip_ws();
      den = integer();
      if (den == 0) fail("zero denominator");
    }
    Term t{Rational(num, den), false};
    skip_ws();
    if (!eof() && (peek() == '*' || peek() == 'i')) {
      if (peek() == '*') {
        get();
        skip_ws();
        if (eof() || peek() != 'i') fail("expected 'i' after '*'");
      }
      get();  // consume 'i'
      t.imaginary = true;
    }
    return t;
  }

  const std::string& s_;
  std::size_t pos_ = 0;
};

}  // namespace

Scalar Scalar::parse(const std::string& text) { return ScalarParser(text).run(); }

Rational parse_rational(const std::string& text) {
  Scalar s = Scalar::parse(text);
  if (!s.is_real()) throw std::invalid_argument("expected a real rational: " + text);
  return s.real();
}

}  // namespace leibniz
