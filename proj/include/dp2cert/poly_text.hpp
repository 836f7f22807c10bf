#pragma once

// Plain-text polynomial format.
//
// Canonical printing: terms joined by " + " in exponent-map order, each term
// `coeff * w^2 x y^3` with zero exponents omitted; coefficients are sums of
// rational components over the ring basis, `p/q`, `p/q*rt` (rt = sqrt(D)),
// `p/q*i`, `p/q*rt*i`.  Multi-component coefficients are parenthesized inside
// terms.  The parser accepts a superset: +, -, *, /, ^, parentheses, and
// juxtaposition as multiplication, so hand-written input like
// "w^2 - 3/2*(1 - rt)*x^2*y^2" also parses.  Printing then parsing is
// bit-exact.

#include "dp2cert/poly.hpp"

#include <cctype>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace dp2 {

namespace detail {

inline void coeff_components(const Rational& c,
                             std::vector<std::pair<Rational, const char*>>& out) {
  if (c != 0) out.emplace_back(c, "");
}
template <long long D>
void coeff_components(const QuadExt<D>& c,
                      std::vector<std::pair<Rational, const char*>>& out) {
  if (c.a != 0) out.emplace_back(c.a, "");
  if (c.b != 0) out.emplace_back(c.b, "rt");
}
template <long long D>
void coeff_components(const Tower<D>& c,
                      std::vector<std::pair<Rational, const char*>>& out) {
  if (c.u.a != 0) out.emplace_back(c.u.a, "");
  if (c.u.b != 0) out.emplace_back(c.u.b, "rt");
  if (c.v.a != 0) out.emplace_back(c.v.a, "i");
  if (c.v.b != 0) out.emplace_back(c.v.b, "rt*i");
}

template <class C>
std::string coeff_to_text(const C& c, std::size_t* component_count = nullptr) {
  std::vector<std::pair<Rational, const char*>> comps;
  coeff_components(c, comps);
  if (component_count) *component_count = comps.size();
  if (comps.empty()) return "0";
  std::string s;
  for (std::size_t i = 0; i < comps.size(); ++i) {
    if (i) s += " + ";
    s += to_string(comps[i].first);
    if (comps[i].second[0] != '\0') s += std::string("*") + comps[i].second;
  }
  return s;
}

template <class C>
bool coeff_is_one(const C& c) { return c == C(1); }

}  // namespace detail

template <class C>
std::string to_text(const WeightedForm<C>& f) {
  if (f.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : f.terms()) {
    if (!first) out += " + ";
    first = false;
    std::string mono;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (m[i] == 0) continue;
      if (!mono.empty()) mono += " ";
      mono += f.vars()[i];
      if (m[i] > 1) mono += "^" + std::to_string(m[i]);
    }
    std::size_t ncomp = 0;
    std::string cs = detail::coeff_to_text(c, &ncomp);
    if (mono.empty()) {
      out += cs;
    } else if (detail::coeff_is_one(c)) {
      out += mono;
    } else if (ncomp > 1) {
      out += "(" + cs + ") * " + mono;
    } else {
      out += cs + " * " + mono;
    }
  }
  return out;
}

namespace detail {

struct FormToken {
  enum Kind { Number, Ident, Plus, Minus, Star, Slash, Caret, LParen, RParen, End } kind;
  std::string text;
};

inline std::vector<FormToken> lex_form(std::string_view s) {
  std::vector<FormToken> toks;
  std::size_t i = 0;
  while (i < s.size()) {
    char c = s[i];
    if (std::isspace(static_cast<unsigned char>(c))) { ++i; continue; }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
      toks.push_back({FormToken::Number, std::string(s.substr(i, j - i))});
      i = j;
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t j = i;
      while (j < s.size() &&
             (std::isalnum(static_cast<unsigned char>(s[j])) || s[j] == '_')) ++j;
      toks.push_back({FormToken::Ident, std::string(s.substr(i, j - i))});
      i = j;
      continue;
    }
    FormToken::Kind k;
    switch (c) {
      case '+': k = FormToken::Plus; break;
      case '-': k = FormToken::Minus; break;
      case '*': k = FormToken::Star; break;
      case '/': k = FormToken::Slash; break;
      case '^': k = FormToken::Caret; break;
      case '(': k = FormToken::LParen; break;
      case ')': k = FormToken::RParen; break;
      default:
        throw std::invalid_argument(std::string("parse_form: unexpected character '") + c + "'");
    }
    toks.push_back({k, std::string(1, c)});
    ++i;
  }
  toks.push_back({FormToken::End, ""});
  return toks;
}

template <class C>
struct RingFlags;
template <>
struct RingFlags<Rational> {
  static constexpr long long D = -7;  // unused buffer field
  static constexpr bool rt = false, im = false;
};
template <long long d>
struct RingFlags<QuadExt<d>> {
  static constexpr long long D = d;
  static constexpr bool rt = true, im = false;
};
template <long long d>
struct RingFlags<Tower<d>> {
  static constexpr long long D = d;
  static constexpr bool rt = true, im = true;
};

inline bool narrow_coeff(const Tower<-7>& t, Rational& out) {
  if (t.u.b != 0 || !t.v.is_zero()) return false;
  out = t.u.a;
  return true;
}
template <long long d>
bool narrow_coeff(const Tower<d>& t, QuadExt<d>& out) {
  if (!t.v.is_zero()) return false;
  out = t.u;
  return true;
}
template <long long d>
bool narrow_coeff(const Tower<d>& t, Tower<d>& out) {
  out = t;
  return true;
}

template <class C>
class FormParser {
  using Wide = Tower<RingFlags<C>::D>;
  using Poly = WeightedForm<Wide>;

 public:
  FormParser(std::string_view text, std::vector<std::string> vars, std::vector<int> weights)
      : toks_(lex_form(text)), vars_(std::move(vars)), weights_(std::move(weights)) {}

  WeightedForm<C> run() {
    Poly p = parse_expr();
    expect(FormToken::End, "trailing input");
    WeightedForm<C> out(vars_, weights_);
    for (const auto& [m, c] : p.terms()) {
      C narrowed(0);
      if (!narrow_coeff(c, narrowed))
        throw std::invalid_argument("parse_form: coefficient not in target ring");
      out.add_term(m, narrowed);
    }
    return out;
  }

 private:
  const FormToken& peek() const { return toks_[pos_]; }
  FormToken take() { return toks_[pos_++]; }
  void expect(FormToken::Kind k, const char* what) {
    if (peek().kind != k) throw std::invalid_argument(std::string("parse_form: expected ") + what);
    ++pos_;
  }

  Poly parse_expr() {
    Poly acc = parse_unary_term();
    while (peek().kind == FormToken::Plus || peek().kind == FormToken::Minus) {
      bool neg = take().kind == FormToken::Minus;
      Poly rhs = parse_unary_term();
      acc = neg ? acc - rhs : acc + rhs;
    }
    return acc;
  }

  Poly parse_unary_term() {
    if (peek().kind == FormToken::Minus) {
      take();
      return -parse_unary_term();
    }
    return parse_term();
  }

  static bool starts_primary(const FormToken& t) {
    return t.kind == FormToken::Number || t.kind == FormToken::Ident ||
           t.kind == FormToken::LParen;
  }

  Poly parse_term() {
    Poly acc = parse_power();
    for (;;) {
      if (peek().kind == FormToken::Star) {
        take();
        Poly rhs = (peek().kind == FormToken::Minus) ? parse_unary_term_factor() : parse_power();
        acc = acc * rhs;
      } else if (peek().kind == FormToken::Slash) {
        take();
        Poly rhs = parse_power();
        acc = acc * invert_constant(rhs);
      } else if (starts_primary(peek())) {
        acc = acc * parse_power();  // juxtaposition, e.g. "x^2 y^2"
      } else {
        break;
      }
    }
    return acc;
  }

  Poly parse_unary_term_factor() {
    take();  // '-'
    return -parse_power();
  }

  Poly parse_power() {
    Poly base = parse_primary();
    if (peek().kind == FormToken::Caret) {
      take();
      if (peek().kind != FormToken::Number)
        throw std::invalid_argument("parse_form: exponent must be a number");
      unsigned long e = std::stoul(take().text);
      if (e > 64) throw std::invalid_argument("parse_form: exponent too large");
      return base.pow(static_cast<unsigned>(e));
    }
    return base;
  }

  Poly parse_primary() {
    const FormToken t = take();
    switch (t.kind) {
      case FormToken::Number:
        return Poly::constant(vars_, weights_, Wide(Rational(Int(t.text))));
      case FormToken::LParen: {
        Poly inner = parse_expr();
        expect(FormToken::RParen, "')'");
        return inner;
      }
      case FormToken::Ident: {
        if (t.text == "rt") {
          if (!RingFlags<C>::rt)
            throw std::invalid_argument("parse_form: 'rt' not allowed in this ring");
          return Poly::constant(vars_, weights_, Wide(QuadExt<RingFlags<C>::D>::sqrt_d()));
        }
        if (t.text == "i") {
          if (!RingFlags<C>::im)
            throw std::invalid_argument("parse_form: 'i' not allowed in this ring");
          return Poly::constant(vars_, weights_, Wide::imaginary_unit());
        }
        for (std::size_t k = 0; k < vars_.size(); ++k)
          if (vars_[k] == t.text) return Poly::variable(vars_, weights_, k);
        throw std::invalid_argument("parse_form: unknown identifier '" + t.text + "'");
      }
      default:
        throw std::invalid_argument("parse_form: unexpected token '" + t.text + "'");
    }
  }

  Poly invert_constant(const Poly& p) {
    if (p.terms().size() != 1 || p.terms().begin()->first != typename Poly::Monomial(vars_.size(), 0))
      throw std::invalid_argument("parse_form: division only by nonzero constants");
    return Poly::constant(vars_, weights_, p.terms().begin()->second.inverse());
  }

  std::vector<FormToken> toks_;
  std::size_t pos_ = 0;
  std::vector<std::string> vars_;
  std::vector<int> weights_;
};

}  // namespace detail

template <class C>
WeightedForm<C> parse_form(std::string_view text, const std::vector<std::string>& vars,
                           const std::vector<int>& weights) {
  return detail::FormParser<C>(text, vars, weights).run();
}

}  // namespace dp2
