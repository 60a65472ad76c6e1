#include "sra/parse.hpp"

#include <cctype>
#include <functional>
#include <optional>
#include <string>

#include "sra/errors.hpp"

namespace sra {

namespace {

template <class V>
class Parser {
 public:
  using Symbol = std::function<std::optional<V>(char, long, std::size_t)>;
  using Lift = std::function<V(const CycloNum&)>;

  Parser(std::string_view text, Lift lift, Symbol symbol) : s_(text), lift_(std::move(lift)), symbol_(std::move(symbol)) {}

  V run() {
    skip();
    if (pos_ == s_.size()) throw ParseError("empty expression", pos_);
    V v = expr();
    skip();
    if (pos_ != s_.size()) throw ParseError(std::string("unexpected '") + s_[pos_] + "'", pos_);
    return v;
  }

 private:
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool eat(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  bool at_digit() const { return pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])); }
  std::string digits() {
    std::size_t start = pos_;
    while (at_digit()) ++pos_;
    return std::string(s_.substr(start, pos_ - start));
  }
  long small_int(const std::string& d, std::size_t at) {
    if (d.size() > 9) throw ParseError("integer too large", at);
    return std::stol(d);
  }

  V expr() {
    skip();
    bool neg = false;
    if (eat('-'))
      neg = true;
    else
      eat('+');
    V v = term();
    if (neg) v = lift_(CycloNum(-1)) * v;
    while (true) {
      if (eat('+'))
        v = v + term();
      else if (eat('-'))
        v = v - term();
      else
        break;
    }
    return v;
  }

  V term() {
    V v = power();
    while (eat('*')) v = v * power();
    return v;
  }

  V power() {
    V base = atom();
    if (eat('^')) {
      skip();
      std::size_t at = pos_;
      if (!at_digit()) throw ParseError("expected exponent", pos_);
      long k = small_int(digits(), at);
      if (k > 64) throw ParseError("exponent too large", at);
      V r = lift_(CycloNum(1));
      for (long i = 0; i < k; ++i) r = r * base;
      return r;
    }
    return base;
  }

  V atom() {
    skip();
    if (pos_ >= s_.size()) throw ParseError("unexpected end of expression", pos_);
    std::size_t at = pos_;
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      V v = expr();
      if (!eat(')')) throw ParseError("expected ')'", pos_);
      return v;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      mpz_class num(digits(), 10);
      mpz_class den(1);
      skip();
      if (pos_ < s_.size() && s_[pos_] == '/') {
        ++pos_;
        skip();
        std::size_t dat = pos_;
        if (!at_digit()) throw ParseError("expected denominator", pos_);
        den = mpz_class(digits(), 10);
        if (den == 0) throw ParseError("zero denominator", dat);
      }
      return lift_(CycloNum(Rational(num, den)));
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      ++pos_;
      long index = -1;
      if (at_digit()) index = small_int(digits(), at + 1);
      if (c == 'i' && index < 0) return lift_(CycloNum::i());
      if (c == 'z') {
        if (index <= 0) throw ParseError("root of unity needs a positive order", at);
        if (index > 100000) throw ParseError("root of unity order too large", at);
        return lift_(CycloNum::root_of_unity(static_cast<int>(index), 1));
      }
      auto v = symbol_(c, index, at);
      if (!v) throw ParseError(std::string("unknown symbol '") + c + (index >= 0 ? std::to_string(index) : "") + "'", at);
      return *v;
    }
    throw ParseError(std::string("unexpected '") + c + "'", at);
  }

  std::string_view s_;
  std::size_t pos_ = 0;
  Lift lift_;
  Symbol symbol_;
};

}  // namespace

AlgElem parse_expression(const AlgebraPtr& alg, std::string_view text) {
  int n = alg->n();
  auto lift = [&](const CycloNum& c) { return alg->scalar(c); };
  auto symbol = [&](char c, long idx, std::size_t at) -> std::optional<AlgElem> {
    switch (c) {
      case 'a':
      case 'b':
        if (idx != 0 && idx != 1) throw ParseError("generator index must be 0 or 1", at);
        return alg->gen(static_cast<Letter>((c == 'a' ? 0 : 2) + idx));
      case 'R':
      case 'S':
        if (idx < 0) throw ParseError("group element needs an index", at);
        return alg->group(GroupElem(n, c == 'R' ? GroupKind::R : GroupKind::S, idx));
      case 'L':
      case 'Q':
        if (idx < 0) throw ParseError("L/Q needs an index", at);
        return c == 'L' ? alg->L(idx) : alg->Q(idx);
      case 's':
        if (idx >= 0) return std::nullopt;
        return alg->singlet();
      case 'T':
        if (idx != 0 && idx != 1 && idx != 10 && idx != 11) throw ParseError("T needs two indices in {0,1}", at);
        return alg->sl2(static_cast<int>(idx / 10), static_cast<int>(idx % 10));
      default:
        return std::nullopt;
    }
  };
  return Parser<AlgElem>(text, lift, symbol).run();
}

CycloNum parse_scalar(std::string_view text) {
  auto lift = [](const CycloNum& c) { return c; };
  auto symbol = [](char, long, std::size_t) -> std::optional<CycloNum> { return std::nullopt; };
  return Parser<CycloNum>(text, lift, symbol).run();
}

}  // namespace sra
