#pragma once

// Text form of polynomials over cyclotomic fields.
//
//   expression := ['+'|'-'] term (('+'|'-') term)*
//   term       := factor ('*' factor)*
//   factor     := primary ('^' int)*
//   primary    := rational | 'zeta(' int ')' | 'sqrt(' int ')' | var | '(' expression ')'
//   rational   := int ('/' int)?
//
// 'i' denotes zeta(4) unless it is declared as a variable. Extra named
// parameters can be bound to constants.

#include <cctype>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "cubicfold/exactnum.hpp"
#include "cubicfold/mpoly/multipoly.hpp"

namespace cubicfold {

using CycPoly = MultiPoly<Cyclotomic>;

class ParseError : public std::invalid_argument {
 public:
  ParseError(const std::string& what, std::size_t pos)
      : std::invalid_argument(what + " at position " + std::to_string(pos)), position(pos) {}
  std::size_t position;
};

namespace detail {

class PolyParser {
 public:
  PolyParser(const std::string& text, const std::vector<std::string>& vars,
             const std::map<std::string, Cyclotomic>& params)
      : s_(text), vars_(vars), params_(params), n_(vars.size()) {}

  CycPoly run() {
    order_ = ambient_order();
    pos_ = 0;
    CycPoly p = expression();
    skip();
    if (pos_ != s_.size()) throw ParseError("unexpected character '" + std::string(1, s_[pos_]) + "'", pos_);
    return p;
  }

 private:
  // lcm of all root literals (and bound parameters) so every constant lives in one field
  unsigned ambient_order() {
    unsigned order = 1;
    for (const auto& [name, value] : params_) order = std::lcm(order, value.order());
    pos_ = 0;
    while (pos_ < s_.size()) {
      if (std::isalpha(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_') {
        std::size_t start = pos_;
        std::string id = identifier();
        skip();
        bool call = pos_ < s_.size() && s_[pos_] == '(';
        if (call && (id == "zeta" || id == "sqrt")) {
          ++pos_;
          long k = signed_int();
          skip();
          if (id == "zeta") {
            if (k < 1 || k > 5000) throw ParseError("unsupported root literal zeta(" + std::to_string(k) + ")", start);
            order = std::lcm(order, static_cast<unsigned>(k));
          } else {
            if (k == 0 || k > 100000 || k < -100000)
              throw ParseError("unsupported root literal sqrt(" + std::to_string(k) + ")", start);
            order = std::lcm(order, sqrt_conductor(k));
          }
        } else if (id == "i" && !is_var(id) && !params_.count(id)) {
          order = std::lcm(order, 4u);
        }
      } else {
        ++pos_;
      }
    }
    if (order > 5000) throw ParseError("combined root order too large", 0);
    return order;
  }

  bool is_var(const std::string& id) const {
    for (const auto& v : vars_)
      if (v == id) return true;
    return false;
  }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  std::string identifier() {
    std::size_t start = pos_;
    while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
    return s_.substr(start, pos_ - start);
  }

  Integer digits() {
    skip();
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) throw ParseError("expected integer", start);
    return Integer(s_.substr(start, pos_ - start));
  }

  long signed_int() {
    skip();
    bool neg = false;
    if (pos_ < s_.size() && s_[pos_] == '-') {
      neg = true;
      ++pos_;
    }
    Integer v = digits();
    if (!v.fits_slong_p()) throw ParseError("integer too large", pos_);
    return neg ? -v.get_si() : v.get_si();
  }

  void expect(char c) {
    skip();
    if (pos_ >= s_.size() || s_[pos_] != c) throw ParseError(std::string("expected '") + c + "'", pos_);
    ++pos_;
  }

  CycPoly constant(const Cyclotomic& c) const { return CycPoly::constant(n_, c.embed(order_)); }

  CycPoly expression() {
    skip();
    bool negate = false;
    if (pos_ < s_.size() && (s_[pos_] == '+' || s_[pos_] == '-')) {
      negate = s_[pos_] == '-';
      ++pos_;
    }
    CycPoly acc = term();
    if (negate) acc = -acc;
    for (;;) {
      skip();
      if (pos_ >= s_.size() || (s_[pos_] != '+' && s_[pos_] != '-')) break;
      char op = s_[pos_++];
      CycPoly t = term();
      acc = op == '+' ? acc + t : acc - t;
    }
    return acc;
  }

  CycPoly term() {
    CycPoly acc = factor();
    for (;;) {
      skip();
      if (pos_ >= s_.size() || s_[pos_] != '*') break;
      ++pos_;
      acc *= factor();
    }
    return acc;
  }

  CycPoly factor() {
    CycPoly base = primary();
    for (;;) {
      skip();
      if (pos_ >= s_.size() || s_[pos_] != '^') break;
      ++pos_;
      std::size_t at = pos_;
      Integer e = digits();
      if (e > 64) throw ParseError("exponent too large", at);
      base = base.pow(static_cast<unsigned>(e.get_ui()));
    }
    return base;
  }

  CycPoly primary() {
    skip();
    if (pos_ >= s_.size()) throw ParseError("unexpected end of input", pos_);
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      CycPoly inner = expression();
      expect(')');
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      Integer num = digits();
      Integer den = 1;
      if (pos_ < s_.size() && s_[pos_] == '/') {
        ++pos_;
        std::size_t at = pos_;
        den = digits();
        if (den == 0) throw ParseError("zero denominator", at);
      }
      return constant(Cyclotomic(make_rational(num, den)));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      std::string id = identifier();
      for (std::size_t i = 0; i < vars_.size(); ++i)
        if (vars_[i] == id) return CycPoly::variable(n_, i);
      if (auto it = params_.find(id); it != params_.end()) return constant(it->second);
      skip();
      if ((id == "zeta" || id == "sqrt") && pos_ < s_.size() && s_[pos_] == '(') {
        ++pos_;
        long k = signed_int();
        expect(')');
        if (id == "zeta") return constant(Cyclotomic::zeta(static_cast<unsigned>(k)));
        return constant(cyclotomic_sqrt(k, sqrt_conductor(k)));
      }
      if (id == "i") return constant(Cyclotomic::zeta(4));
      throw ParseError("unknown variable '" + id + "'", start);
    }
    throw ParseError(std::string("unexpected character '") + c + "'", pos_);
  }

  const std::string& s_;
  const std::vector<std::string>& vars_;
  const std::map<std::string, Cyclotomic>& params_;
  std::size_t n_;
  std::size_t pos_ = 0;
  unsigned order_ = 1;
};

inline std::string format_coefficient(const Cyclotomic& c, bool& negative) {
  negative = false;
  if (c.is_rational()) {
    Rational q = c.rational_part();
    negative = sgn(q) < 0;
    return Rational(abs(q)).get_str();
  }
  return "(" + c.to_string() + ")";
}

}  // namespace detail

/// Parses text over the given ordered variable names. Coefficients are embedded in the
/// smallest cyclotomic field containing every root literal in the text.
inline CycPoly parse_poly(const std::string& text, const std::vector<std::string>& variables,
                          const std::map<std::string, Cyclotomic>& params = {}) {
  return detail::PolyParser(text, variables, params).run();
}

inline std::vector<std::string> default_names(std::size_t n, const std::string& prefix = "x") {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.push_back(prefix + std::to_string(i));
  return names;
}

/// Canonical text in grevlex order; parse_poly(format_poly(p)) == p.
inline std::string format_poly(const CycPoly& p, const std::vector<std::string>& names) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : p.terms()) {
    bool negative = false;
    std::string coeff = detail::format_coefficient(c, negative);
    if (first)
      out += negative ? "-" : "";
    else
      out += negative ? " - " : " + ";
    first = false;
    bool constant_term = m.degree == 0;
    if (constant_term) {
      out += coeff;
    } else {
      if (coeff != "1") out += coeff + "*";
      out += m.to_string(names);
    }
  }
  return out;
}

inline std::string format_poly(const CycPoly& p) { return format_poly(p, default_names(p.nvars())); }

}  // namespace cubicfold
