#pragma once

#include "affgrass/eps_poly.hpp"
#include "affgrass/rational.hpp"
#include "affgrass/valuation.hpp"

#include <ostream>
#include <string>
#include <string_view>

namespace affgrass {

// An element of Q(eps), viewed inside the Laurent series field Q((eps)).
//
// Canonical form num/den: gcd(num, den) = 1 in Q[eps] and the lowest
// nonzero coefficient of den is 1. Two elements are equal iff their
// canonical forms are identical; zero is 0/1.
class FieldElem {
public:
  FieldElem() : den_(Rational(1)) {}
  FieldElem(const Rational& c) : num_(c), den_(Rational(1)) {}
  FieldElem(long c) : FieldElem(Rational(c)) {}
  FieldElem(const EpsPoly& p) : num_(p), den_(Rational(1)) {}
  // Throws std::domain_error if den is zero.
  FieldElem(EpsPoly num, EpsPoly den);

  // c * eps^k for any integer k.
  static FieldElem eps_power(int k, const Rational& c = 1);

  const EpsPoly& num() const { return num_; }
  const EpsPoly& den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const;
  // True when den is a power of eps, i.e. a Laurent polynomial.
  bool is_laurent() const { return den_.is_monomial(); }

  Valuation val() const;
  bool in_O() const { return val() >= Valuation(0); }
  bool is_unit() const { return !is_zero() && val() == Valuation(0); }
  // Constant term of the Laurent expansion; throws NegativeValuation when
  // val() < 0.
  Rational residue() const;

  // Coefficient of eps^k in the Laurent expansion.
  Rational laurent_coeff(int k) const;
  // The part of the Laurent expansion with exponents < bound, as a Laurent
  // polynomial.
  FieldElem truncate_below(int bound) const;

  FieldElem inverse() const; // throws std::domain_error on zero

  FieldElem operator-() const;
  FieldElem& operator+=(const FieldElem& o);
  FieldElem& operator-=(const FieldElem& o);
  FieldElem& operator*=(const FieldElem& o);
  FieldElem& operator/=(const FieldElem& o);

  friend FieldElem operator+(FieldElem a, const FieldElem& b) { return a += b; }
  friend FieldElem operator-(FieldElem a, const FieldElem& b) { return a -= b; }
  friend FieldElem operator*(FieldElem a, const FieldElem& b) { return a *= b; }
  friend FieldElem operator/(FieldElem a, const FieldElem& b) { return a /= b; }

  friend bool operator==(const FieldElem& a, const FieldElem& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend int compare(const FieldElem& a, const FieldElem& b) {
    int c = compare(a.den_, b.den_);
    return c != 0 ? c : compare(a.num_, b.num_);
  }

  // Canonical text form, see parse_field_elem.
  std::string to_text() const;
  friend std::ostream& operator<<(std::ostream& os, const FieldElem& a) {
    return os << a.to_text();
  }

private:
  static FieldElem from_canonical(EpsPoly num, EpsPoly den);
  EpsPoly num_;
  EpsPoly den_;
};

inline bool is_zero(const FieldElem& a) { return a.is_zero(); }

// Grammar:
//   elem := poly | poly "/" poly
//   poly := term ("+" term)*
//   term := rational ["*eps^" integer]
// with rationals written p or p/q (q > 0) and non-negative exponents.
// Whitespace is ignored. A slash directly after a term's rational is read
// as part of that rational, so the writer always gives numerator terms an
// explicit "*eps^k" when a denominator follows.
// Errors report the 1-based line and column within text.
FieldElem parse_field_elem(std::string_view text);

} // namespace affgrass
