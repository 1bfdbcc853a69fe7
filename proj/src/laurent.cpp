#include "lsa/laurent.hpp"

#include <sstream>
#include <utility>
#include <vector>

namespace lsa {

namespace {

using Coeffs = std::vector<BigInt>;

// Dense view in the variable s = t^{1/2}: f = s^valuation * (c[0] + c[1] s + ...),
// with c[0] and c.back() nonzero.
struct Dense {
  int valuation = 0;
  Coeffs c;
};

Dense to_dense(const HalfLaurent& f) {
  Dense d;
  if (f.is_zero()) return d;
  d.valuation = f.min_exponent2();
  d.c.assign(static_cast<std::size_t>(f.max_exponent2() - d.valuation + 1), BigInt(0));
  for (const auto& [e, v] : f.terms()) d.c[static_cast<std::size_t>(e - d.valuation)] = v;
  return d;
}

HalfLaurent from_dense(int valuation, const Coeffs& c) {
  HalfLaurent::Terms terms;
  for (std::size_t i = 0; i < c.size(); ++i)
    if (c[i] != 0) terms.emplace(valuation + static_cast<int>(i), c[i]);
  return HalfLaurent(std::move(terms));
}

void trim(Coeffs& c) {
  while (!c.empty() && c.back() == 0) c.pop_back();
}

BigInt coeff_content(const Coeffs& c) {
  BigInt g = 0;
  for (const auto& v : c) {
    if (v == 0) continue;
    g = boost::multiprecision::gcd(g, v);
    if (g == 1) break;
  }
  return g;
}

Coeffs primitive_part(Coeffs c) {
  trim(c);
  const BigInt g = coeff_content(c);
  if (g > 1)
    for (auto& v : c) v /= g;
  return c;
}

// Pseudo-remainder of a by b (b nonzero, both trimmed).
Coeffs pseudo_remainder(Coeffs a, const Coeffs& b) {
  const std::size_t n = b.size() - 1;
  const BigInt& lead_b = b.back();
  while (!a.empty() && a.size() - 1 >= n) {
    const BigInt lead_a = a.back();
    const std::size_t offset = a.size() - 1 - n;
    for (auto& v : a) v *= lead_b;
    for (std::size_t j = 0; j <= n; ++j) a[offset + j] -= lead_a * b[j];
    trim(a);
  }
  return a;
}

// Quotient of a by b in Z[s]; returns false when b does not divide a.
bool divide_exact(const Coeffs& a, const Coeffs& b, Coeffs& quotient) {
  quotient.clear();
  if (a.empty()) return true;
  if (a.size() < b.size()) return false;
  const std::size_t n = b.size() - 1;
  Coeffs r = a;
  quotient.assign(a.size() - n, BigInt(0));
  for (std::size_t i = quotient.size(); i-- > 0;) {
    const BigInt& top = r[i + n];
    if (top == 0) continue;
    BigInt q, rem;
    boost::multiprecision::divide_qr(top, b.back(), q, rem);
    if (rem != 0) return false;
    for (std::size_t j = 0; j <= n; ++j) r[i + j] -= q * b[j];
    quotient[i] = std::move(q);
  }
  for (const auto& v : r)
    if (v != 0) return false;
  return true;
}

}  // namespace

HalfLaurent::HalfLaurent(int constant) {
  if (constant != 0) terms_.emplace(0, BigInt(constant));
}

HalfLaurent::HalfLaurent(const BigInt& constant) {
  if (constant != 0) terms_.emplace(0, constant);
}

HalfLaurent::HalfLaurent(Terms terms) : terms_(std::move(terms)) {
  std::erase_if(terms_, [](const auto& kv) { return kv.second == 0; });
}

HalfLaurent HalfLaurent::monomial(const BigInt& coeff, int doubled_exponent) {
  HalfLaurent f;
  if (coeff != 0) f.terms_.emplace(doubled_exponent, coeff);
  return f;
}

BigInt HalfLaurent::coeff(int doubled_exponent) const {
  auto it = terms_.find(doubled_exponent);
  return it == terms_.end() ? BigInt(0) : it->second;
}

int HalfLaurent::min_exponent2() const {
  if (terms_.empty()) throw Error(ErrorKind::InconsistentInput, "valuation of the zero polynomial");
  return terms_.begin()->first;
}

int HalfLaurent::max_exponent2() const {
  if (terms_.empty()) throw Error(ErrorKind::InconsistentInput, "degree of the zero polynomial");
  return terms_.rbegin()->first;
}

BigInt HalfLaurent::eval_at_one() const {
  BigInt s = 0;
  for (const auto& [e, v] : terms_) s += v;
  return s;
}

bool HalfLaurent::has_integer_exponents() const {
  for (const auto& [e, v] : terms_)
    if (e % 2 != 0) return false;
  return true;
}

void HalfLaurent::add_term(int doubled_exponent, const BigInt& coeff) {
  auto [it, inserted] = terms_.try_emplace(doubled_exponent, coeff);
  if (inserted) return;
  it->second += coeff;
  if (it->second == 0) terms_.erase(it);
}

HalfLaurent& HalfLaurent::operator+=(const HalfLaurent& other) {
  for (const auto& [e, v] : other.terms_) add_term(e, v);
  return *this;
}

HalfLaurent& HalfLaurent::operator-=(const HalfLaurent& other) {
  for (const auto& [e, v] : other.terms_) add_term(e, -v);
  return *this;
}

HalfLaurent operator*(const HalfLaurent& a, const HalfLaurent& b) {
  HalfLaurent out;
  for (const auto& [ea, va] : a.terms_)
    for (const auto& [eb, vb] : b.terms_) out.add_term(ea + eb, va * vb);
  return out;
}

HalfLaurent& HalfLaurent::operator*=(const HalfLaurent& other) { return *this = *this * other; }

HalfLaurent operator-(HalfLaurent a) {
  for (auto& [e, v] : a.terms_) v = -v;
  return a;
}

HalfLaurent bar(const HalfLaurent& f) {
  HalfLaurent::Terms terms;
  for (const auto& [e, v] : f.terms()) terms.emplace(-e, v);
  return HalfLaurent(std::move(terms));
}

HalfLaurent shift(const HalfLaurent& f, int doubled_shift) {
  HalfLaurent::Terms terms;
  for (const auto& [e, v] : f.terms()) terms.emplace(e + doubled_shift, v);
  return HalfLaurent(std::move(terms));
}

HalfLaurent exact_div(const HalfLaurent& f, const HalfLaurent& g) {
  if (g.is_zero()) throw Error(ErrorKind::ZeroDenominator, "division by the zero polynomial");
  if (f.is_zero()) return {};
  const Dense df = to_dense(f);
  const Dense dg = to_dense(g);
  Coeffs q;
  if (!divide_exact(df.c, dg.c, q))
    throw Error(ErrorKind::NonExactDivision, "(" + to_string(f) + ") / (" + to_string(g) + ")");
  return from_dense(df.valuation - dg.valuation, q);
}

BigInt content(const HalfLaurent& f) {
  BigInt g = 0;
  for (const auto& [e, v] : f.terms()) g = boost::multiprecision::gcd(g, v);
  return g;
}

HalfLaurent gcd(const HalfLaurent& f, const HalfLaurent& g) {
  if (f.is_zero() && g.is_zero()) return {};
  Coeffs a = primitive_part(to_dense(f).c);
  Coeffs b = primitive_part(to_dense(g).c);
  if (a.empty()) std::swap(a, b);
  if (a.size() < b.size()) std::swap(a, b);
  while (!b.empty()) {
    Coeffs r = pseudo_remainder(a, b);
    a = std::move(b);
    b = primitive_part(std::move(r));
  }
  a = primitive_part(std::move(a));
  // a(0) != 0 because a divides polynomials with nonzero constant term.
  if (a.front() < 0)
    for (auto& v : a) v = -v;
  return from_dense(0, a);
}

std::string to_string(const HalfLaurent& f, std::string_view var) {
  if (f.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, v] : f.terms()) {
    BigInt mag = v < 0 ? BigInt(-v) : v;
    if (first) {
      if (v < 0) os << '-';
    } else {
      os << (v < 0 ? " - " : " + ");
    }
    first = false;
    if (e == 0) {
      os << mag;
      continue;
    }
    if (mag != 1) os << mag;
    os << var;
    if (e % 2 != 0)
      os << "^(" << e << "/2)";
    else if (e != 2)
      os << '^' << e / 2;
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const HalfLaurent& f) { return os << to_string(f); }

RationalHL::RationalHL(HalfLaurent numerator) : num_(std::move(numerator)), den_(1) {}

RationalHL::RationalHL(HalfLaurent numerator, HalfLaurent denominator)
    : num_(std::move(numerator)), den_(std::move(denominator)) {
  if (den_.is_zero()) throw Error(ErrorKind::ZeroDenominator, "rational function with zero denominator");
}

bool RationalHL::is_polynomial() const {
  const RationalHL r = rational_reduce(*this);
  return r.den_.is_monomial() && (r.den_.terms().begin()->second == 1);
}

HalfLaurent RationalHL::to_polynomial() const { return exact_div(num_, den_); }

RationalHL rational_reduce(const RationalHL& r) {
  if (r.denominator().is_zero()) throw Error(ErrorKind::ZeroDenominator, "rational function with zero denominator");
  if (r.is_zero()) return RationalHL();
  const HalfLaurent g = gcd(r.numerator(), r.denominator());
  HalfLaurent num = exact_div(r.numerator(), g);
  HalfLaurent den = exact_div(r.denominator(), g);
  const int v = den.min_exponent2();
  num = shift(num, -v);
  den = shift(den, -v);
  const BigInt c = boost::multiprecision::gcd(content(num), content(den));
  if (c > 1) {
    num = exact_div(num, HalfLaurent(c));
    den = exact_div(den, HalfLaurent(c));
  }
  if (den.coeff(0) < 0) {
    num = -num;
    den = -den;
  }
  return RationalHL(std::move(num), std::move(den));
}

RationalHL operator+(const RationalHL& a, const RationalHL& b) {
  if (a.den_ == b.den_) return rational_reduce(RationalHL(a.num_ + b.num_, a.den_));
  return rational_reduce(RationalHL(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_));
}

RationalHL operator-(const RationalHL& a, const RationalHL& b) {
  return a + RationalHL(-b.num_, b.den_);
}

RationalHL operator*(const RationalHL& a, const RationalHL& b) {
  return rational_reduce(RationalHL(a.num_ * b.num_, a.den_ * b.den_));
}

RationalHL operator/(const RationalHL& a, const RationalHL& b) {
  if (b.is_zero()) throw Error(ErrorKind::ZeroDenominator, "division by the zero rational function");
  return rational_reduce(RationalHL(a.num_ * b.den_, a.den_ * b.num_));
}

bool operator==(const RationalHL& a, const RationalHL& b) {
  return a.num_ * b.den_ == b.num_ * a.den_;
}

std::ostream& operator<<(std::ostream& os, const RationalHL& r) {
  return os << '(' << r.numerator() << ")/(" << r.denominator() << ')';
}

PolyMatrix bar(const PolyMatrix& m) {
  return m.unaryExpr([](const HalfLaurent& f) { return bar(f); });
}

}  // namespace lsa
