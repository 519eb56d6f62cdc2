#include "lefschetz/integral_search.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "lefschetz/linalg.hpp"

namespace lefschetz {

namespace {

struct Token {
  enum class Kind { Plus, Minus, Star, Caret, Number, Variable, End };
  Kind kind;
  std::string text;
  std::size_t pos;
};

class Lexer {
 public:
  explicit Lexer(const std::string& s) : s_(s) {}

  Token next() {
    while (i_ < s_.size() && (s_[i_] == ' ' || s_[i_] == '\t')) ++i_;
    const std::size_t start = i_;
    if (i_ >= s_.size()) return {Token::Kind::End, "", start};
    const char c = s_[i_];
    if (c == '+') { ++i_; return {Token::Kind::Plus, "+", start}; }
    if (c == '-') { ++i_; return {Token::Kind::Minus, "-", start}; }
    if (c == '*') { ++i_; return {Token::Kind::Star, "*", start}; }
    if (c == '^') { ++i_; return {Token::Kind::Caret, "^", start}; }
    if (c >= '0' && c <= '9') {
      std::size_t j = i_;
      while (j < s_.size() && ((s_[j] >= '0' && s_[j] <= '9') || s_[j] == '/')) ++j;
      Token t{Token::Kind::Number, s_.substr(i_, j - i_), start};
      i_ = j;
      return t;
    }
    if (c == 'x') {
      std::size_t j = i_ + 1;
      while (j < s_.size() && s_[j] >= '0' && s_[j] <= '9') ++j;
      if (j == i_ + 1) throw PolynomialParseError("variable without index at position " + std::to_string(start));
      Token t{Token::Kind::Variable, s_.substr(i_, j - i_), start};
      i_ = j;
      return t;
    }
    throw PolynomialParseError(std::string("unexpected character '") + c + "' at position " +
                               std::to_string(start));
  }

 private:
  const std::string& s_;
  std::size_t i_ = 0;
};

}  // namespace

Polynomial Polynomial::parse(const std::string& text, int min_vars) {
  Lexer lex(text);
  Token tok = lex.next();
  if (tok.kind == Token::Kind::End) throw PolynomialParseError("empty polynomial expression");

  struct RawTerm {
    Rational coeff;
    std::map<int, int> exps;  // variable index (0-based) -> exponent
  };
  std::vector<RawTerm> raw;
  int max_var = min_vars;

  while (tok.kind != Token::Kind::End) {
    Rational sign(1);
    while (tok.kind == Token::Kind::Plus || tok.kind == Token::Kind::Minus) {
      if (tok.kind == Token::Kind::Minus) sign = -sign;
      tok = lex.next();
    }
    RawTerm term;
    term.coeff = sign;
    bool saw_factor = false;
    for (;;) {
      if (tok.kind == Token::Kind::Number) {
        term.coeff *= Rational::parse(tok.text);
        saw_factor = true;
        tok = lex.next();
      } else if (tok.kind == Token::Kind::Variable) {
        const int idx = std::stoi(tok.text.substr(1)) - 1;
        if (idx < 0) throw PolynomialParseError("variables are numbered from x1");
        tok = lex.next();
        int exp = 1;
        if (tok.kind == Token::Kind::Caret) {
          tok = lex.next();
          if (tok.kind != Token::Kind::Number || tok.text.find('/') != std::string::npos)
            throw PolynomialParseError("exponent must be a nonnegative integer");
          exp = std::stoi(tok.text);
          tok = lex.next();
        }
        term.exps[idx] += exp;
        max_var = std::max(max_var, idx + 1);
        saw_factor = true;
      } else {
        break;
      }
      if (tok.kind == Token::Kind::Star) {
        tok = lex.next();
        continue;
      }
      break;
    }
    if (!saw_factor)
      throw PolynomialParseError("expected a term at position " + std::to_string(tok.pos));
    raw.push_back(std::move(term));
  }

  Polynomial p(max_var);
  for (const auto& term : raw) {
    std::vector<int> exps(static_cast<std::size_t>(max_var), 0);
    for (const auto& [var, e] : term.exps) exps[static_cast<std::size_t>(var)] = e;
    p.add_term(exps, term.coeff);
  }
  return p;
}

int Polynomial::max_single_degree() const {
  int d = 0;
  for (const auto& [exps, coeff] : terms_)
    for (int e : exps) d = std::max(d, e);
  return d;
}

void Polynomial::add_term(const std::vector<int>& exponents, const Rational& coeff) {
  if (static_cast<int>(exponents.size()) != num_vars_)
    throw std::invalid_argument("exponent vector length mismatch");
  if (coeff.is_zero()) return;
  auto it = terms_.find(exponents);
  if (it == terms_.end()) {
    terms_.emplace(exponents, coeff);
    return;
  }
  it->second += coeff;
  if (it->second.is_zero()) terms_.erase(it);
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  Polynomial out(num_vars_);
  out.terms_ = terms_;
  for (const auto& [exps, coeff] : o.terms_) out.add_term(exps, coeff);
  return out;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
  Polynomial out(num_vars_);
  for (const auto& [e1, c1] : terms_)
    for (const auto& [e2, c2] : o.terms_) {
      std::vector<int> e(static_cast<std::size_t>(num_vars_));
      for (int i = 0; i < num_vars_; ++i)
        e[static_cast<std::size_t>(i)] = e1[static_cast<std::size_t>(i)] + e2[static_cast<std::size_t>(i)];
      out.add_term(e, c1 * c2);
    }
  return out;
}

Polynomial Polynomial::scaled(const Rational& s) const {
  Polynomial out(num_vars_);
  if (s.is_zero()) return out;
  for (const auto& [exps, coeff] : terms_) out.add_term(exps, coeff * s);
  return out;
}

Rational Polynomial::eval(const std::vector<Rational>& point) const {
  if (static_cast<int>(point.size()) != num_vars_)
    throw std::invalid_argument("evaluation point length mismatch");
  Rational acc(0);
  for (const auto& [exps, coeff] : terms_) {
    Rational term = coeff;
    for (int i = 0; i < num_vars_; ++i)
      for (int e = 0; e < exps[static_cast<std::size_t>(i)]; ++e) term *= point[static_cast<std::size_t>(i)];
    acc += term;
  }
  return acc;
}

Rational Polynomial::eval_integers(const std::vector<mpz_class>& point) const {
  std::vector<Rational> rational_point;
  rational_point.reserve(point.size());
  for (const auto& z : point) rational_point.emplace_back(mpq_class(z));
  return eval(rational_point);
}

Polynomial Polynomial::substitute_linear(const RationalMatrix& a) const {
  if (a.rows() != num_vars_ || a.cols() != num_vars_)
    throw std::invalid_argument("substitution matrix must be square of side num_vars");
  // Linear form for each original variable: x_j := sum_i a(i,j) y_i.
  std::vector<Polynomial> forms;
  forms.reserve(static_cast<std::size_t>(num_vars_));
  for (int j = 0; j < num_vars_; ++j) {
    Polynomial form(num_vars_);
    for (int i = 0; i < num_vars_; ++i) {
      std::vector<int> e(static_cast<std::size_t>(num_vars_), 0);
      e[static_cast<std::size_t>(i)] = 1;
      form.add_term(e, a.at(i, j));
    }
    forms.push_back(std::move(form));
  }
  Polynomial out(num_vars_);
  for (const auto& [exps, coeff] : terms_) {
    Polynomial term(num_vars_);
    term.add_term(std::vector<int>(static_cast<std::size_t>(num_vars_), 0), coeff);
    for (int j = 0; j < num_vars_; ++j)
      for (int e = 0; e < exps[static_cast<std::size_t>(j)]; ++e) term = term * forms[static_cast<std::size_t>(j)];
    out = out + term;
  }
  return out;
}

std::string Polynomial::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [exps, coeff] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << coeff.str();
    for (int i = 0; i < num_vars_; ++i) {
      const int e = exps[static_cast<std::size_t>(i)];
      if (e == 0) continue;
      os << "*x" << (i + 1);
      if (e > 1) os << "^" << e;
    }
  }
  return os.str();
}

LatticePoint find_nonvanishing_point(const Polynomial& p) {
  if (p.is_zero())
    throw std::invalid_argument("the zero polynomial vanishes everywhere; no lattice point exists");
  const int n = p.num_vars();
  if (n == 0) return {};  // nonzero constant: the empty point already works

  const int d = p.max_single_degree();
  const int side = d + 1;
  std::vector<mpz_class> z(static_cast<std::size_t>(n), 0);
  for (;;) {
    if (!p.eval_integers(z).is_zero()) return {z};
    int i = 0;
    for (; i < n; ++i) {  // first coordinate varies fastest
      if (++z[static_cast<std::size_t>(i)] < side) break;
      z[static_cast<std::size_t>(i)] = 0;
    }
    if (i == n)
      throw std::logic_error(
          "nonzero polynomial vanished on the whole degree grid; this cannot happen");
  }
}

IntegralCombination integral_combination(const RationalMatrix& a, const Polynomial& p) {
  const int n = p.num_vars();
  if (a.rows() != n || a.cols() != n)
    throw std::invalid_argument("change-of-basis matrix must be n x n for an n-variable polynomial");
  if (p.is_zero()) throw std::invalid_argument("polynomial must be nonzero");
  if (rank(a) != n) throw std::invalid_argument("change-of-basis matrix is singular");

  const Polynomial q = p.substitute_linear(a);
  if (q.is_zero())
    throw std::logic_error("q = p(A^T x) vanished for a nonsingular A and nonzero p");

  IntegralCombination out;
  out.z = find_nonvanishing_point(q);
  out.c.assign(static_cast<std::size_t>(n), Rational(0));
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < n; ++i)
      out.c[static_cast<std::size_t>(j)] += a.at(i, j) * Rational(mpq_class(out.z.coords[static_cast<std::size_t>(i)]));
  out.value = p.eval(out.c);
  return out;
}

}  // namespace lefschetz
