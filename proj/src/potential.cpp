#include "gauss_hodge/potential.hpp"

#include <cctype>
#include <stdexcept>
#include <string>

namespace gauss_hodge {

namespace {

constexpr int kWorkCapacity = 64;

template <class R>
class Parser {
 public:
  Parser(std::string_view text, int n) : text_(text), n_(n) {}

  ComplexField<R> run() {
    auto v = expr();
    skip();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return v;
  }

 private:
  using C = Complex<R>;
  using Field = ComplexField<R>;

  [[noreturn]] void fail(const std::string& what) const {
    throw std::invalid_argument("potential: " + what + " at offset " + std::to_string(pos_));
  }

  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool eat(char c) {
    skip();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  bool eat_word(std::string_view w) {
    skip();
    if (text_.substr(pos_, w.size()) == w) {
      pos_ += w.size();
      return true;
    }
    return false;
  }

  Field constant(const C& c) const { return Field::constant(2 * n_, kWorkCapacity, c); }

  Field expr() {
    Field acc = term();
    for (;;) {
      if (eat('+'))
        acc += term();
      else if (eat('-'))
        acc -= term();
      else
        return acc;
    }
  }

  Field term() {
    Field acc = unary();
    while (eat('*')) acc = multiply(acc, unary()).with_capacity(kWorkCapacity);
    return acc;
  }

  Field unary() {
    if (eat('-')) return -unary();
    if (eat('+')) return unary();
    return power();
  }

  Field power() {
    Field base = atom();
    if (!eat('^')) return base;
    const int e = integer();
    Field acc = constant(C(1));
    for (int k = 0; k < e; ++k) acc = multiply(acc, base).with_capacity(kWorkCapacity);
    return acc;
  }

  int integer() {
    skip();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected an integer");
    return std::stoi(std::string(text_.substr(start, pos_ - start)));
  }

  int coordinate_index() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) {
      if (n_ != 1) fail("bare z is only allowed on C^1");
      return 1;
    }
    const int j = std::stoi(std::string(text_.substr(start, pos_ - start)));
    if (j < 1 || j > n_) fail("coordinate index out of range");
    return j;
  }

  Field atom() {
    skip();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    if (eat('(')) {
      Field v = expr();
      if (!eat(')')) fail("expected ')'");
      return v;
    }
    if (eat_word("conj")) {
      if (!eat('(')) fail("expected '(' after conj");
      Field v = expr();
      if (!eat(')')) fail("expected ')'");
      return conj(v);
    }
    if (eat_word("zbar")) return multiply_by_zbar(constant(C(1)), coordinate_index());
    if (eat_word("z")) return multiply_by_z(constant(C(1)), coordinate_index());
    if (eat('i')) return constant(C::i());
    const char c = text_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
      const std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isdigit(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '.' ||
              text_[pos_] == '/'))
        ++pos_;
      return constant(C(parse_real<R>(text_.substr(start, pos_ - start))));
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  std::string_view text_;
  int n_;
  std::size_t pos_ = 0;
};

}  // namespace

template <class R>
ComplexField<R> parse_potential(std::string_view text, int n, int capacity) {
  if (n < 1) throw std::invalid_argument("potential: complex dimension must be positive");
  return Parser<R>(text, n).run().with_capacity(capacity);
}

template ComplexField<Rational> parse_potential<Rational>(std::string_view, int, int);
template ComplexField<double> parse_potential<double>(std::string_view, int, int);

}  // namespace gauss_hodge
