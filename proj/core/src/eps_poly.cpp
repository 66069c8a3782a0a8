#include "affgrass/eps_poly.hpp"

#include <algorithm>
#include <cassert>

namespace affgrass {

EpsPoly::EpsPoly(const Rational& constant) {
  if (!affgrass::is_zero(constant))
    coeffs_.push_back(constant);
}

EpsPoly::EpsPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
  trim();
}

EpsPoly EpsPoly::monomial(const Rational& c, int exponent) {
  assert(exponent >= 0);
  EpsPoly p;
  if (!affgrass::is_zero(c)) {
    p.coeffs_.assign(exponent + 1, Rational(0));
    p.coeffs_[exponent] = c;
  }
  return p;
}

void EpsPoly::trim() {
  while (!coeffs_.empty() && affgrass::is_zero(coeffs_.back()))
    coeffs_.pop_back();
}

int EpsPoly::low_degree() const {
  for (std::size_t k = 0; k < coeffs_.size(); ++k)
    if (!affgrass::is_zero(coeffs_[k]))
      return static_cast<int>(k);
  return -1;
}

Rational EpsPoly::coeff(int exponent) const {
  if (exponent < 0 || exponent >= static_cast<int>(coeffs_.size()))
    return 0;
  return coeffs_[exponent];
}

std::vector<std::pair<int, Rational>> EpsPoly::terms() const {
  std::vector<std::pair<int, Rational>> out;
  for (std::size_t k = 0; k < coeffs_.size(); ++k)
    if (!affgrass::is_zero(coeffs_[k]))
      out.emplace_back(static_cast<int>(k), coeffs_[k]);
  return out;
}

EpsPoly EpsPoly::shifted_up(int k) const {
  if (is_zero() || k == 0)
    return *this;
  EpsPoly p;
  p.coeffs_.assign(k, Rational(0));
  p.coeffs_.insert(p.coeffs_.end(), coeffs_.begin(), coeffs_.end());
  return p;
}

EpsPoly EpsPoly::shifted_down(int k) const {
  if (is_zero() || k == 0)
    return *this;
  assert(low_degree() >= k);
  EpsPoly p;
  p.coeffs_.assign(coeffs_.begin() + k, coeffs_.end());
  return p;
}

EpsPoly EpsPoly::operator-() const {
  EpsPoly p = *this;
  for (auto& c : p.coeffs_)
    c = -c;
  return p;
}

EpsPoly& EpsPoly::operator+=(const EpsPoly& o) {
  if (o.coeffs_.size() > coeffs_.size())
    coeffs_.resize(o.coeffs_.size(), Rational(0));
  for (std::size_t k = 0; k < o.coeffs_.size(); ++k)
    coeffs_[k] += o.coeffs_[k];
  trim();
  return *this;
}

EpsPoly& EpsPoly::operator-=(const EpsPoly& o) {
  if (o.coeffs_.size() > coeffs_.size())
    coeffs_.resize(o.coeffs_.size(), Rational(0));
  for (std::size_t k = 0; k < o.coeffs_.size(); ++k)
    coeffs_[k] -= o.coeffs_[k];
  trim();
  return *this;
}

EpsPoly& EpsPoly::operator*=(const Rational& c) {
  if (affgrass::is_zero(c)) {
    coeffs_.clear();
    return *this;
  }
  for (auto& x : coeffs_)
    x *= c;
  return *this;
}

EpsPoly operator*(const EpsPoly& a, const EpsPoly& b) {
  if (a.is_zero() || b.is_zero())
    return {};
  std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (is_zero(a.coeffs_[i]))
      continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
      if (!is_zero(b.coeffs_[j]))
        out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return EpsPoly(std::move(out));
}

int compare(const EpsPoly& a, const EpsPoly& b) {
  if (a.coeffs_.size() != b.coeffs_.size())
    return a.coeffs_.size() < b.coeffs_.size() ? -1 : 1;
  for (std::size_t k = a.coeffs_.size(); k-- > 0;) {
    int c = cmp(a.coeffs_[k], b.coeffs_[k]);
    if (c != 0)
      return c < 0 ? -1 : 1;
  }
  return 0;
}

std::pair<EpsPoly, EpsPoly> EpsPoly::divmod(const EpsPoly& a, const EpsPoly& b) {
  assert(!b.is_zero());
  if (a.degree() < b.degree())
    return {EpsPoly(), a};
  std::vector<Rational> rem = a.coeffs_;
  std::vector<Rational> quot(a.coeffs_.size() - b.coeffs_.size() + 1, Rational(0));
  const int db = b.degree();
  const Rational inv_lead = 1 / b.leading();
  for (int k = a.degree(); k >= db; --k) {
    if (affgrass::is_zero(rem[k]))
      continue;
    Rational q = rem[k] * inv_lead;
    quot[k - db] = q;
    for (int j = 0; j <= db; ++j)
      rem[k - db + j] -= q * b.coeffs_[j];
  }
  return {EpsPoly(std::move(quot)), EpsPoly(std::move(rem))};
}

EpsPoly EpsPoly::monic() const {
  if (is_zero())
    return *this;
  return *this * Rational(1 / leading());
}

EpsPoly gcd(EpsPoly a, EpsPoly b) {
  while (!b.is_zero()) {
    EpsPoly r = EpsPoly::divmod(a, b).second;
    a = std::move(b);
    b = r.monic();
  }
  return a.monic();
}

std::vector<Rational> series_quotient(const EpsPoly& a, const EpsPoly& b,
                                      int order) {
  assert(!affgrass::is_zero(b.coeff(0)));
  std::vector<Rational> out(std::max(order, 0), Rational(0));
  const Rational inv0 = 1 / b.coeff(0);
  const int db = b.degree();
  for (int k = 0; k < order; ++k) {
    Rational acc = a.coeff(k);
    for (int j = 1; j <= std::min(k, db); ++j)
      acc -= b.coeffs()[j] * out[k - j];
    out[k] = acc * inv0;
  }
  return out;
}

} // namespace affgrass
