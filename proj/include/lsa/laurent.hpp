#pragma once

// Exact arithmetic in Z[t^{1/2}, t^{-1/2}] and its fraction field.
//
// Exponents are stored doubled, so the key 2k stands for t^k and an odd key
// stands for a half-integer power. Internally every algorithm works in the
// variable s = t^{1/2}, where keys are ordinary integer exponents.

#include <map>
#include <ostream>
#include <string>
#include <string_view>

#include <Eigen/Core>
#include <boost/multiprecision/cpp_int.hpp>

#include "lsa/errors.hpp"

namespace lsa {

using BigInt = boost::multiprecision::cpp_int;

class HalfLaurent {
 public:
  /// doubled exponent -> nonzero coefficient
  using Terms = std::map<int, BigInt>;

  HalfLaurent() = default;
  HalfLaurent(int constant);  // NOLINT(google-explicit-constructor): Eigen builds Scalar(0)
  explicit HalfLaurent(const BigInt& constant);
  explicit HalfLaurent(Terms terms);

  /// coeff * t^{doubled_exponent / 2}
  static HalfLaurent monomial(const BigInt& coeff, int doubled_exponent);
  /// t^k for integer k
  static HalfLaurent t_pow(int k) { return monomial(1, 2 * k); }

  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_monomial() const noexcept { return terms_.size() == 1; }
  std::size_t term_count() const noexcept { return terms_.size(); }

  /// Coefficient of t^{doubled_exponent / 2}.
  BigInt coeff(int doubled_exponent) const;
  /// Smallest and largest doubled exponent; the polynomial must be nonzero.
  int min_exponent2() const;
  int max_exponent2() const;

  BigInt eval_at_one() const;
  /// True when every exponent is an integer power of t.
  bool has_integer_exponents() const;

  HalfLaurent& operator+=(const HalfLaurent& other);
  HalfLaurent& operator-=(const HalfLaurent& other);
  HalfLaurent& operator*=(const HalfLaurent& other);

  friend HalfLaurent operator+(HalfLaurent a, const HalfLaurent& b) { return a += b; }
  friend HalfLaurent operator-(HalfLaurent a, const HalfLaurent& b) { return a -= b; }
  friend HalfLaurent operator*(const HalfLaurent& a, const HalfLaurent& b);
  friend HalfLaurent operator-(HalfLaurent a);

  friend bool operator==(const HalfLaurent& a, const HalfLaurent& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const HalfLaurent& a, const HalfLaurent& b) { return !(a == b); }

 private:
  void add_term(int doubled_exponent, const BigInt& coeff);

  Terms terms_;
};

/// t^{1/2} -> t^{-1/2}.
HalfLaurent bar(const HalfLaurent& f);

/// Multiplies by t^{doubled_shift / 2}.
HalfLaurent shift(const HalfLaurent& f, int doubled_shift);

/// Returns q with f = q * g. Throws NonExactDivision when no such q exists
/// in the ring and ZeroDenominator when g is zero.
HalfLaurent exact_div(const HalfLaurent& f, const HalfLaurent& g);

/// Greatest common divisor over Q[s, 1/s], scaled to a primitive integer
/// polynomial of valuation zero with positive constant term. gcd(0, 0) = 0.
HalfLaurent gcd(const HalfLaurent& f, const HalfLaurent& g);

/// Gcd of the coefficients (nonnegative); zero for the zero polynomial.
BigInt content(const HalfLaurent& f);

/// Human-readable form in ascending exponent order, e.g. "-1 + t^2",
/// "t^(-1/2) + 2t^(1/2)". The variable name is a parameter so q-series print
/// naturally.
std::string to_string(const HalfLaurent& f, std::string_view var = "t");
std::ostream& operator<<(std::ostream& os, const HalfLaurent& f);

/// A quotient of half-Laurent polynomials. Arithmetic results are always in
/// canonical reduced form; see rational_reduce.
class RationalHL {
 public:
  RationalHL() : den_(1) {}
  RationalHL(HalfLaurent numerator);  // NOLINT(google-explicit-constructor)
  /// Stores the pair as given (not reduced). Throws ZeroDenominator.
  RationalHL(HalfLaurent numerator, HalfLaurent denominator);

  const HalfLaurent& numerator() const noexcept { return num_; }
  const HalfLaurent& denominator() const noexcept { return den_; }

  bool is_zero() const noexcept { return num_.is_zero(); }
  /// True when the value lies in Z[t^{1/2}, t^{-1/2}].
  bool is_polynomial() const;
  /// The polynomial value; throws NonExactDivision when !is_polynomial().
  HalfLaurent to_polynomial() const;

  friend RationalHL operator+(const RationalHL& a, const RationalHL& b);
  friend RationalHL operator-(const RationalHL& a, const RationalHL& b);
  friend RationalHL operator*(const RationalHL& a, const RationalHL& b);
  friend RationalHL operator/(const RationalHL& a, const RationalHL& b);
  RationalHL& operator+=(const RationalHL& o) { return *this = *this + o; }
  RationalHL& operator*=(const RationalHL& o) { return *this = *this * o; }

  /// Cross-multiplication test; valid for unreduced operands too.
  friend bool operator==(const RationalHL& a, const RationalHL& b);
  friend bool operator!=(const RationalHL& a, const RationalHL& b) { return !(a == b); }

 private:
  HalfLaurent num_;
  HalfLaurent den_;
};

/// Canonical form: gcd over Q divided out, denominator of valuation zero with
/// positive constant term, numerator and denominator with coprime integer
/// contents. Idempotent.
RationalHL rational_reduce(const RationalHL& r);

std::ostream& operator<<(std::ostream& os, const RationalHL& r);

template <typename Scalar>
using DenseMatrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

using PolyMatrix = DenseMatrix<HalfLaurent>;

/// Entrywise bar involution.
PolyMatrix bar(const PolyMatrix& m);

}  // namespace lsa

namespace Eigen {

template <>
struct NumTraits<lsa::HalfLaurent> : GenericNumTraits<lsa::HalfLaurent> {
  using Real = lsa::HalfLaurent;
  using NonInteger = lsa::HalfLaurent;
  using Literal = lsa::HalfLaurent;
  using Nested = lsa::HalfLaurent;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 1,
    AddCost = 20,
    MulCost = 100,
  };
  // Used by Eigen's stream output; exact values print in full.
  static constexpr int digits10() { return 0; }
};

}  // namespace Eigen
