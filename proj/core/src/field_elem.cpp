#include "affgrass/field_elem.hpp"

#include "affgrass/error.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace affgrass {

FieldElem::FieldElem(EpsPoly num, EpsPoly den) {
  if (den.is_zero())
    throw std::domain_error("FieldElem: zero denominator");
  if (num.is_zero()) {
    den_ = EpsPoly(Rational(1));
    return;
  }
  const int shift = std::min(num.low_degree(), den.low_degree());
  num = num.shifted_down(shift);
  den = den.shifted_down(shift);
  // After removing common eps powers a monomial on either side is coprime
  // to the other side.
  if (!num.is_monomial() && !den.is_monomial()) {
    EpsPoly g = gcd(num, den);
    if (g.degree() > 0) {
      num = EpsPoly::divmod(num, g).first;
      den = EpsPoly::divmod(den, g).first;
    }
  }
  const Rational low = den.lowest();
  if (low != 1) {
    Rational inv = 1 / low;
    num *= inv;
    den *= inv;
  }
  num_ = std::move(num);
  den_ = std::move(den);
}

FieldElem FieldElem::from_canonical(EpsPoly num, EpsPoly den) {
  FieldElem e;
  e.num_ = std::move(num);
  e.den_ = std::move(den);
  return e;
}

FieldElem FieldElem::eps_power(int k, const Rational& c) {
  if (affgrass::is_zero(c))
    return {};
  if (k >= 0)
    return from_canonical(EpsPoly::monomial(c, k), EpsPoly(Rational(1)));
  return from_canonical(EpsPoly(c), EpsPoly::monomial(1, -k));
}

bool FieldElem::is_one() const {
  return num_.degree() == 0 && num_.leading() == 1 && den_.degree() == 0;
}

Valuation FieldElem::val() const {
  if (is_zero())
    return Valuation::infinity();
  return Valuation(num_.low_degree() - den_.low_degree());
}

Rational FieldElem::residue() const {
  Valuation v = val();
  if (v < Valuation(0))
    throw NegativeValuation("residue of element with negative valuation: " +
                            to_text());
  if (v > Valuation(0))
    return 0;
  return num_.coeff(0) / den_.coeff(0);
}

Rational FieldElem::laurent_coeff(int k) const {
  if (is_zero())
    return 0;
  const int v = static_cast<int>(val().value());
  if (k < v)
    return 0;
  EpsPoly n = num_.shifted_down(num_.low_degree());
  EpsPoly d = den_.shifted_down(den_.low_degree());
  return series_quotient(n, d, k - v + 1).back();
}

FieldElem FieldElem::truncate_below(int bound) const {
  if (is_zero())
    return {};
  const int v = static_cast<int>(val().value());
  if (v >= bound)
    return {};
  if (is_laurent()) {
    // Exact: drop the terms at or above the bound.
    std::vector<Rational> kept;
    const int off = den_.degree();
    for (const auto& [k, c] : num_.terms()) {
      if (k - off >= bound)
        break;
      if (static_cast<int>(kept.size()) <= k)
        kept.resize(k + 1, Rational(0));
      kept[k] = c;
    }
    return FieldElem(EpsPoly(std::move(kept)), den_);
  }
  EpsPoly n = num_.shifted_down(num_.low_degree());
  EpsPoly d = den_.shifted_down(den_.low_degree());
  std::vector<Rational> series = series_quotient(n, d, bound - v);
  EpsPoly body(std::move(series));
  if (v >= 0)
    return FieldElem(body.shifted_up(v), EpsPoly(Rational(1)));
  return FieldElem(body, EpsPoly::monomial(1, -v));
}

FieldElem FieldElem::inverse() const {
  if (is_zero())
    throw std::domain_error("FieldElem: inverse of zero");
  return FieldElem(den_, num_);
}

FieldElem FieldElem::operator-() const { return from_canonical(-num_, den_); }

FieldElem& FieldElem::operator+=(const FieldElem& o) {
  if (o.is_zero())
    return *this;
  if (is_zero())
    return *this = o;
  if (den_ == o.den_) {
    EpsPoly n = num_ + o.num_;
    if (den_.degree() == 0 || n.is_zero())
      return *this = n.is_zero() ? FieldElem() : from_canonical(std::move(n), den_);
    return *this = FieldElem(std::move(n), den_);
  }
  if (is_laurent() && o.is_laurent()) {
    const int p = den_.degree(), q = o.den_.degree();
    const int m = std::max(p, q);
    EpsPoly n = num_.shifted_up(m - p) + o.num_.shifted_up(m - q);
    return *this = FieldElem(std::move(n), EpsPoly::monomial(1, m));
  }
  return *this = FieldElem(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

FieldElem& FieldElem::operator-=(const FieldElem& o) { return *this += -o; }

FieldElem& FieldElem::operator*=(const FieldElem& o) {
  if (is_zero() || o.is_zero())
    return *this = FieldElem();
  if (o.den_.degree() == 0 && o.num_.degree() == 0) {
    num_ *= o.num_.leading();
    return *this;
  }
  if (den_.degree() == 0 && num_.degree() == 0) {
    Rational c = num_.leading();
    *this = o;
    num_ *= c;
    return *this;
  }
  return *this = FieldElem(num_ * o.num_, den_ * o.den_);
}

FieldElem& FieldElem::operator/=(const FieldElem& o) {
  return *this *= o.inverse();
}

namespace {

std::string poly_text(const EpsPoly& p, bool explicit_exponents) {
  if (p.is_zero())
    return "0";
  std::string out;
  for (const auto& [k, c] : p.terms()) {
    if (!out.empty())
      out += '+';
    out += to_string(c);
    if (k > 0 || explicit_exponents)
      out += "*eps^" + std::to_string(k);
  }
  return out;
}

class ElemParser {
public:
  explicit ElemParser(std::string_view text) : text_(text) {}

  FieldElem parse() {
    EpsPoly num = poly();
    EpsPoly den(Rational(1));
    skip_ws();
    if (peek() == '/') {
      ++pos_;
      den = poly();
      if (den.is_zero())
        fail("zero denominator");
    }
    skip_ws();
    if (pos_ != text_.size())
      fail("unexpected character '" + std::string(1, text_[pos_]) + "'");
    return FieldElem(std::move(num), std::move(den));
  }

private:
  [[noreturn]] void fail(const std::string& what) const {
    int line = 1, col = 1;
    for (std::size_t i = 0; i < pos_ && i < text_.size(); ++i) {
      if (text_[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw ParseError("field element: " + what, line, col);
  }

  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
  }

  std::string digits() {
    std::string out;
    while (std::isdigit(static_cast<unsigned char>(peek())))
      out += text_[pos_++];
    return out;
  }

  Rational rational() {
    skip_ws();
    std::string s;
    if (peek() == '-' || peek() == '+') {
      if (peek() == '-')
        s += '-';
      ++pos_;
      skip_ws();
    }
    std::string n = digits();
    if (n.empty())
      fail("expected a rational coefficient");
    s += n;
    std::size_t save = pos_;
    skip_ws();
    if (peek() == '/') {
      ++pos_;
      skip_ws();
      std::string d = digits();
      if (d.empty()) {
        // Not a fraction: the slash separates numerator and denominator.
        pos_ = save;
      } else {
        if (d.find_first_not_of('0') == std::string::npos)
          fail("zero denominator in rational");
        s += '/' + d;
      }
    } else {
      pos_ = save;
    }
    Rational q(s, 10);
    q.canonicalize();
    return q;
  }

  EpsPoly term() {
    Rational c = rational();
    skip_ws();
    int exponent = 0;
    if (peek() == '*') {
      ++pos_;
      skip_ws();
      if (text_.substr(pos_, 3) != "eps")
        fail("expected 'eps'");
      pos_ += 3;
      skip_ws();
      if (peek() != '^')
        fail("expected '^'");
      ++pos_;
      skip_ws();
      if (peek() == '-')
        fail("negative exponent (use a denominator)");
      if (peek() == '+')
        ++pos_;
      std::string e = digits();
      if (e.empty())
        fail("expected exponent");
      if (e.size() > 6)
        fail("exponent too large");
      exponent = std::stoi(e);
    }
    return EpsPoly::monomial(c, exponent);
  }

  EpsPoly poly() {
    EpsPoly p = term();
    for (;;) {
      skip_ws();
      if (peek() != '+')
        return p;
      ++pos_;
      p += term();
    }
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

} // namespace

std::string FieldElem::to_text() const {
  if (den_.degree() == 0)
    return poly_text(num_, false);
  return poly_text(num_, true) + "/" + poly_text(den_, false);
}

FieldElem parse_field_elem(std::string_view text) { return ElemParser(text).parse(); }

} // namespace affgrass
