#include "waring/poly.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

namespace waring {

bool GrlexDesc::operator()(const ExponentVector& a,
                           const ExponentVector& b) const {
  int da = std::accumulate(a.begin(), a.end(), 0);
  int db = std::accumulate(b.begin(), b.end(), 0);
  if (da != db) return da > db;
  return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
}

std::vector<ExponentVector> monomials_of_degree(int r, int d) {
  std::vector<ExponentVector> out;
  ExponentVector cur(r + 1, 0);
  // Recursive enumeration emits vectors in descending lex order directly.
  auto rec = [&](auto&& self, int var, int remaining) -> void {
    if (var == r) {
      cur[var] = remaining;
      out.push_back(cur);
      return;
    }
    for (int e = remaining; e >= 0; --e) {
      cur[var] = e;
      self(self, var + 1, remaining - e);
    }
  };
  rec(rec, 0, d);
  return out;
}

long long binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  long long acc = 1;
  for (int i = 1; i <= k; ++i) acc = acc * (n - k + i) / i;
  return acc;
}

HomogeneousForm HomogeneousForm::monomial(int r, const ExponentVector& exps,
                                          const Scalar& coeff) {
  int d = std::accumulate(exps.begin(), exps.end(), 0);
  HomogeneousForm f(r, d, coeff.field());
  f.set_coeff(exps, coeff);
  return f;
}

Scalar HomogeneousForm::coeff(const ExponentVector& exps) const {
  auto it = terms_.find(exps);
  return it == terms_.end() ? Scalar::zero(field_) : it->second;
}

void HomogeneousForm::set_coeff(const ExponentVector& exps,
                                const Scalar& value) {
  if (static_cast<int>(exps.size()) != r_ + 1)
    fail(ErrorCode::DimensionMismatch, "exponent vector length != r+1");
  if (std::accumulate(exps.begin(), exps.end(), 0) != d_)
    fail(ErrorCode::NotHomogeneous, "exponent vector degree != form degree");
  for (int e : exps)
    if (e < 0) fail(ErrorCode::InvalidArgument, "negative exponent");
  if (value.is_zero())
    terms_.erase(exps);
  else
    terms_[exps] = value;
}

Scalar HomogeneousForm::evaluate(const std::vector<Scalar>& coords) const {
  if (static_cast<int>(coords.size()) != r_ + 1)
    fail(ErrorCode::DimensionMismatch, "point has wrong number of coordinates");
  Scalar acc = Scalar::zero(field_);
  for (const auto& [exps, c] : terms_) {
    Scalar term = c;
    for (int i = 0; i <= r_; ++i)
      for (int e = 0; e < exps[i]; ++e) term *= coords[i];
    acc += term;
  }
  return acc;
}

HomogeneousForm HomogeneousForm::operator+(const HomogeneousForm& rhs) const {
  if (r_ != rhs.r_ || d_ != rhs.d_)
    fail(ErrorCode::DimensionMismatch, "form addition shape mismatch");
  HomogeneousForm out(*this);
  for (const auto& [exps, c] : rhs.terms_) out.set_coeff(exps, out.coeff(exps) + c);
  return out;
}

HomogeneousForm HomogeneousForm::operator*(const HomogeneousForm& rhs) const {
  if (r_ != rhs.r_)
    fail(ErrorCode::DimensionMismatch, "form product variable mismatch");
  HomogeneousForm out(r_, d_ + rhs.d_, field_);
  for (const auto& [ea, ca] : terms_)
    for (const auto& [eb, cb] : rhs.terms_) {
      ExponentVector e(ea);
      for (std::size_t i = 0; i < e.size(); ++i) e[i] += eb[i];
      out.set_coeff(e, out.coeff(e) + ca * cb);
    }
  return out;
}

HomogeneousForm HomogeneousForm::scaled(const Scalar& c) const {
  HomogeneousForm out(r_, d_, field_);
  if (c.is_zero()) return out;
  for (const auto& [exps, v] : terms_) out.set_coeff(exps, v * c);
  return out;
}

bool HomogeneousForm::operator==(const HomogeneousForm& rhs) const {
  if (r_ != rhs.r_ || d_ != rhs.d_ || !(field_ == rhs.field_)) return false;
  return terms_ == rhs.terms_;
}

std::string HomogeneousForm::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [exps, c] : terms_) {
    Scalar coeff = c;
    bool negative = false;
    if (field_.is_rational() && coeff.rational_value() < 0) {
      negative = true;
      coeff = -coeff;
    }
    if (first) {
      if (negative) os << "-";
      first = false;
    } else {
      os << (negative ? " - " : " + ");
    }
    std::string vars;
    for (std::size_t i = 0; i < exps.size(); ++i) {
      if (exps[i] == 0) continue;
      if (!vars.empty()) vars += "*";
      vars += "x" + std::to_string(i);
      if (exps[i] > 1) vars += "^" + std::to_string(exps[i]);
    }
    if (vars.empty()) {
      os << coeff.to_string();
    } else if (coeff.is_one()) {
      os << vars;
    } else {
      os << coeff.to_string() << "*" << vars;
    }
  }
  return os.str();
}

namespace {

struct Token {
  enum Kind { Number, Variable, Caret, Star, Plus, Minus, End } kind;
  std::string text;  // number literal
  int index = 0;     // variable index
};

std::vector<Token> tokenize(const std::string& text) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < text.size()) {
    char ch = text[i];
    if (std::isspace(static_cast<unsigned char>(ch))) {
      ++i;
    } else if (ch == '+') {
      out.push_back({Token::Plus, "", 0});
      ++i;
    } else if (ch == '-') {
      out.push_back({Token::Minus, "", 0});
      ++i;
    } else if (ch == '*') {
      out.push_back({Token::Star, "", 0});
      ++i;
    } else if (ch == '^') {
      out.push_back({Token::Caret, "", 0});
      ++i;
    } else if (std::isdigit(static_cast<unsigned char>(ch))) {
      std::size_t j = i;
      while (j < text.size() &&
             (std::isdigit(static_cast<unsigned char>(text[j])) ||
              text[j] == '/'))
        ++j;
      out.push_back({Token::Number, text.substr(i, j - i), 0});
      i = j;
    } else if (ch == 'x') {
      std::size_t j = i + 1;
      while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j])))
        ++j;
      if (j == i + 1)
        fail(ErrorCode::ParseError, "variable without index at '" +
                                        text.substr(i) + "'");
      out.push_back({Token::Variable, "",
                     std::stoi(text.substr(i + 1, j - i - 1))});
      i = j;
    } else {
      fail(ErrorCode::ParseError,
           std::string("unexpected character '") + ch + "'");
    }
  }
  out.push_back({Token::End, "", 0});
  return out;
}

struct RawTerm {
  Scalar coeff;
  std::map<int, int> exps;  // variable index -> exponent
  int degree = 0;
};

}  // namespace

HomogeneousForm parse_form(const std::string& text, const FieldSpec& field,
                           int expect_r) {
  std::vector<Token> toks = tokenize(text);
  std::size_t pos = 0;
  std::vector<RawTerm> parsed;
  int max_var = expect_r >= 0 ? expect_r : -1;

  auto peek = [&]() -> const Token& { return toks[pos]; };
  auto next = [&]() -> const Token& { return toks[pos++]; };

  bool first_term = true;
  while (peek().kind != Token::End) {
    // Sign prefix.
    bool negative = false;
    if (peek().kind == Token::Plus || peek().kind == Token::Minus) {
      negative = next().kind == Token::Minus;
    } else if (!first_term) {
      fail(ErrorCode::ParseError, "expected '+' or '-' between terms");
    }
    first_term = false;

    RawTerm term{Scalar::one(field), {}, 0};
    bool any_factor = false;
    for (;;) {
      const Token& t = peek();
      if (t.kind == Token::Number) {
        term.coeff *= Scalar::parse(next().text, field);
        any_factor = true;
      } else if (t.kind == Token::Variable) {
        int var = next().index;
        int e = 1;
        if (peek().kind == Token::Caret) {
          next();
          if (peek().kind != Token::Number)
            fail(ErrorCode::ParseError, "expected exponent after '^'");
          const std::string& lit = next().text;
          if (lit.find('/') != std::string::npos)
            fail(ErrorCode::ParseError, "fractional exponent");
          e = std::stoi(lit);
          if (e < 0) fail(ErrorCode::ParseError, "negative exponent");
        }
        term.exps[var] += e;
        term.degree += e;
        if (expect_r >= 0 && var > expect_r)
          fail(ErrorCode::ParseError,
               "variable x" + std::to_string(var) + " out of range");
        max_var = std::max(max_var, var);
        any_factor = true;
      } else {
        break;
      }
      if (peek().kind == Token::Star) {
        next();
        if (peek().kind != Token::Number && peek().kind != Token::Variable)
          fail(ErrorCode::ParseError, "dangling '*'");
      }
    }
    if (!any_factor) fail(ErrorCode::ParseError, "empty term");
    if (negative) term.coeff = -term.coeff;
    parsed.push_back(std::move(term));
  }
  if (parsed.empty()) fail(ErrorCode::ParseError, "empty input");

  int degree = parsed[0].degree;
  for (const RawTerm& t : parsed)
    if (t.degree != degree)
      fail(ErrorCode::NotHomogeneous,
           "terms of degree " + std::to_string(degree) + " and " +
               std::to_string(t.degree));
  if (degree < 1) fail(ErrorCode::NotHomogeneous, "degree must be >= 1");
  if (max_var < 0) fail(ErrorCode::ParseError, "no variables present");

  HomogeneousForm f(max_var, degree, field);
  for (const RawTerm& t : parsed) {
    ExponentVector e(max_var + 1, 0);
    for (const auto& [var, exp] : t.exps) e[var] = exp;
    f.set_coeff(e, f.coeff(e) + t.coeff);
  }
  if (f.is_zero()) fail(ErrorCode::ZeroForm, "all terms cancel");
  return f;
}

}  // namespace waring
