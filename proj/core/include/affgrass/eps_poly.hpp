#pragma once

#include "affgrass/rational.hpp"

#include <utility>
#include <vector>

namespace affgrass {

// A polynomial in eps with rational coefficients. Stored densely by
// exponent; the top coefficient is nonzero and the zero polynomial has no
// coefficients at all.
class EpsPoly {
public:
  EpsPoly() = default;
  EpsPoly(const Rational& constant);
  EpsPoly(long constant) : EpsPoly(Rational(constant)) {}
  explicit EpsPoly(std::vector<Rational> coeffs);

  static EpsPoly monomial(const Rational& c, int exponent);

  bool is_zero() const { return coeffs_.empty(); }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  // Lowest exponent with nonzero coefficient; -1 for zero.
  int low_degree() const;
  bool is_monomial() const { return !is_zero() && low_degree() == degree(); }

  Rational coeff(int exponent) const;
  const Rational& leading() const { return coeffs_.back(); }
  const Rational& lowest() const { return coeffs_[low_degree()]; }
  const std::vector<Rational>& coeffs() const { return coeffs_; }

  // (exponent, coefficient) pairs with nonzero coefficient, ascending.
  std::vector<std::pair<int, Rational>> terms() const;

  EpsPoly shifted_up(int k) const;   // times eps^k
  EpsPoly shifted_down(int k) const; // divided by eps^k; low_degree() >= k

  EpsPoly operator-() const;
  EpsPoly& operator+=(const EpsPoly& o);
  EpsPoly& operator-=(const EpsPoly& o);
  EpsPoly& operator*=(const Rational& c);

  friend EpsPoly operator+(EpsPoly a, const EpsPoly& b) { return a += b; }
  friend EpsPoly operator-(EpsPoly a, const EpsPoly& b) { return a -= b; }
  friend EpsPoly operator*(const EpsPoly& a, const EpsPoly& b);
  friend EpsPoly operator*(EpsPoly a, const Rational& c) { return a *= c; }

  friend bool operator==(const EpsPoly& a, const EpsPoly& b) {
    return a.coeffs_ == b.coeffs_;
  }
  // Total order: by degree, then coefficients from the top.
  friend int compare(const EpsPoly& a, const EpsPoly& b);

  // Euclidean division over Q; divisor must be nonzero.
  static std::pair<EpsPoly, EpsPoly> divmod(const EpsPoly& a, const EpsPoly& b);

  EpsPoly monic() const;

private:
  void trim();
  std::vector<Rational> coeffs_;
};

// Monic gcd over Q[eps]; gcd(0, 0) = 0.
EpsPoly gcd(EpsPoly a, EpsPoly b);

// Power series a/b mod eps^order, assuming b(0) != 0.
std::vector<Rational> series_quotient(const EpsPoly& a, const EpsPoly& b,
                                      int order);

} // namespace affgrass
