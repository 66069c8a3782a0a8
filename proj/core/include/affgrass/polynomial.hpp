#pragma once

#include "affgrass/field_elem.hpp"
#include "affgrass/rational.hpp"

#include <cassert>
#include <string>
#include <utility>
#include <vector>

namespace affgrass {

// Univariate polynomial in lambda over a field K (FieldElem or Rational).
// Coefficients are stored in ascending degree with a nonzero leading entry.
template <class K>
class Polynomial {
public:
  Polynomial() = default;
  explicit Polynomial(std::vector<K> coeffs) : c_(std::move(coeffs)) { trim(); }
  Polynomial(const K& constant) {
    if (!is_zero(constant))
      c_.push_back(constant);
  }

  // lambda - root
  static Polynomial linear(const K& root) { return Polynomial({K(-root), K(1)}); }
  static Polynomial lambda_power(int k) {
    std::vector<K> c(k + 1, K(0));
    c[k] = K(1);
    return Polynomial(std::move(c));
  }

  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const K& leading() const { return c_.back(); }
  const std::vector<K>& coeffs() const { return c_; }
  K coeff(int k) const {
    return k >= 0 && k < static_cast<int>(c_.size()) ? c_[k] : K(0);
  }

  Polynomial monic() const {
    if (is_zero())
      return *this;
    K inv = K(1) / leading();
    Polynomial p = *this;
    for (auto& x : p.c_)
      x = K(x * inv);
    return p;
  }

  K evaluate(const K& x) const {
    K acc(0);
    for (std::size_t k = c_.size(); k-- > 0;)
      acc = K(acc * x + c_[k]);
    return acc;
  }

  Polynomial& operator+=(const Polynomial& o) {
    if (o.c_.size() > c_.size())
      c_.resize(o.c_.size(), K(0));
    for (std::size_t k = 0; k < o.c_.size(); ++k)
      c_[k] += o.c_[k];
    trim();
    return *this;
  }
  Polynomial& operator-=(const Polynomial& o) {
    if (o.c_.size() > c_.size())
      c_.resize(o.c_.size(), K(0));
    for (std::size_t k = 0; k < o.c_.size(); ++k)
      c_[k] -= o.c_[k];
    trim();
    return *this;
  }
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero())
      return {};
    std::vector<K> out(a.c_.size() + b.c_.size() - 1, K(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      for (std::size_t j = 0; j < b.c_.size(); ++j)
        out[i + j] += K(a.c_[i] * b.c_[j]);
    return Polynomial(std::move(out));
  }
  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.c_ == b.c_;
  }

  static std::pair<Polynomial, Polynomial> divmod(const Polynomial& a,
                                                  const Polynomial& b) {
    assert(!b.is_zero());
    if (a.degree() < b.degree())
      return {Polynomial(), a};
    std::vector<K> rem = a.c_;
    std::vector<K> quot(a.c_.size() - b.c_.size() + 1, K(0));
    const int db = b.degree();
    const K inv = K(1) / b.leading();
    for (int k = a.degree(); k >= db; --k) {
      if (is_zero(rem[k]))
        continue;
      K q = K(rem[k] * inv);
      quot[k - db] = q;
      for (int j = 0; j <= db; ++j)
        rem[k - db + j] -= K(q * b.c_[j]);
    }
    return {Polynomial(std::move(quot)), Polynomial(std::move(rem))};
  }

private:
  static bool is_zero(const K& x) { return affgrass::is_zero(x); }
  void trim() {
    while (!c_.empty() && is_zero(c_.back()))
      c_.pop_back();
  }
  std::vector<K> c_;
};

using PolyF = Polynomial<FieldElem>;
using PolyQ = Polynomial<Rational>;

template <class K>
Polynomial<K> gcd(Polynomial<K> a, Polynomial<K> b) {
  while (!b.is_zero()) {
    auto r = Polynomial<K>::divmod(a, b).second;
    a = std::move(b);
    b = r.monic();
  }
  return a.monic();
}

// Human-readable form in the variable "lambda".
template <class K>
std::string to_text(const Polynomial<K>& p);

} // namespace affgrass
