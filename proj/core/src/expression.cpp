#include "twistzhu/expression.hpp"

#include <cctype>
#include <vector>

namespace twistzhu {

ParseError::ParseError(const std::string& what, std::size_t position)
    : std::invalid_argument(what + " at position " + std::to_string(position)),
      position_(position) {}

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : s_(text) {}

  Vector vector_expr() {
    Vector out;
    Scalar sign = leading_sign();
    for (;;) {
      auto [coeff, mono] = term();
      out.add(mono, sign * coeff);
      skip();
      if (at('+') || at('-')) {
        sign = s_[pos_] == '-' ? Scalar(-1) : Scalar(1);
        ++pos_;
        continue;
      }
      return out;
    }
  }

  TensorVector tensor_expr(int k) {
    // Slot bookkeeping only; no mode of the model is evaluated.
    const TensorPower shape(heisenberg(), k);
    TensorVector out;
    Scalar sign = leading_sign();
    for (;;) {
      skip();
      Scalar coeff(1);
      if (digit()) {
        coeff = rational();
        expect('*');
      }
      skip();
      TensorVector piece;
      if (at('[')) {
        ++pos_;
        std::vector<Vector> slots;
        for (;;) {
          slots.push_back(vector_expr());
          skip();
          if (at(']')) {
            ++pos_;
            break;
          }
          expect('|');
        }
        if (static_cast<int>(slots.size()) != k)
          fail("tensor literal has " + std::to_string(slots.size()) + " slots, expected " +
               std::to_string(k));
        piece = shape.tensor_product(slots);
      } else {
        piece = shape.one_tensor(vector_expr(), 1);
      }
      out.add_scaled(piece, CycloScalar(sign * coeff));
      skip();
      if (at('+') || at('-')) {
        sign = s_[pos_] == '-' ? Scalar(-1) : Scalar(1);
        ++pos_;
        continue;
      }
      return out;
    }
  }

  void finish() {
    skip();
    if (pos_ != s_.size()) fail(std::string("unexpected '") + s_[pos_] + "'");
  }

 private:
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_); }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool at(char c) const { return pos_ < s_.size() && s_[pos_] == c; }
  bool digit() const { return pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])); }

  void expect(char c) {
    skip();
    if (!at(c)) {
      if (pos_ >= s_.size()) fail(std::string("expected '") + c + "' but input ended");
      fail(std::string("expected '") + c + "', found '" + s_[pos_] + "'");
    }
    ++pos_;
  }

  void expect_word(std::string_view w) {
    for (char c : w) expect(c);
  }

  Scalar leading_sign() {
    skip();
    if (at('-')) {
      ++pos_;
      return Scalar(-1);
    }
    if (at('+')) ++pos_;
    return Scalar(1);
  }

  long integer() {
    skip();
    if (!digit()) fail("expected a number");
    long value = 0;
    while (digit()) {
      value = value * 10 + (s_[pos_] - '0');
      if (value > 1'000'000) fail("number too large");
      ++pos_;
    }
    return value;
  }

  Scalar rational() {
    const long num = integer();
    skip();
    if (!at('/')) return Scalar(num);
    ++pos_;
    const std::size_t where = pos_;
    const long den = integer();
    if (den == 0) throw ParseError("zero denominator", where);
    return Scalar(num, den);
  }

  std::pair<Scalar, FockMonomial> term() {
    skip();
    Scalar coeff(1);
    if (digit()) {
      coeff = rational();
      expect('*');
    }
    std::vector<int> parts;
    for (;;) {
      skip();
      if (at('a')) {
        ++pos_;
        expect('(');
        expect('-');
        const std::size_t where = pos_;
        const long n = integer();
        if (n < 1) throw ParseError("mode index must be a negative integer", where);
        expect(')');
        long times = 1;
        skip();
        if (at('^')) {
          ++pos_;
          const std::size_t at_exponent = pos_;
          times = integer();
          if (times > 64) throw ParseError("exponent too large", at_exponent);
        }
        for (long i = 0; i < times; ++i) parts.push_back(static_cast<int>(n));
        continue;
      }
      if (at('|')) {
        ++pos_;
        expect_word("0>");
        return {coeff, FockMonomial(std::move(parts))};
      }
      if (pos_ >= s_.size()) fail("expected 'a(-n)' or '|0>' but input ended");
      fail(std::string("expected 'a(-n)' or '|0>', found '") + s_[pos_] + "'");
    }
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

Vector parse_vector(std::string_view text) {
  Parser p(text);
  Vector v = p.vector_expr();
  p.finish();
  return v;
}

TensorVector parse_tensor(std::string_view text, int k) {
  if (k < 1) throw std::invalid_argument("parse_tensor: k must be positive");
  Parser p(text);
  TensorVector v = p.tensor_expr(k);
  p.finish();
  return v;
}

}  // namespace twistzhu
