#ifndef CP2HARM_UNIPOLY_HPP
#define CP2HARM_UNIPOLY_HPP

#include <complex>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "cp2harm/rational.hpp"

namespace cp2harm {

/// Univariate polynomial in z over the Gaussian rationals, stored as an
/// ascending coefficient vector with a nonzero trailing entry.
///
/// The zero polynomial has an empty coefficient vector and degree() == -1,
/// the distinguished sentinel. All arithmetic is exact.
class UniPoly {
public:
  UniPoly() = default;
  explicit UniPoly(std::vector<GaussianRational> coeffs) : c_(std::move(coeffs)) {
    trim();
  }
  UniPoly(std::initializer_list<GaussianRational> coeffs)
      : c_(coeffs) {
    trim();
  }

  static UniPoly zero() { return UniPoly(); }
  static UniPoly constant(GaussianRational a) { return UniPoly({std::move(a)}); }
  static UniPoly one() { return constant(GaussianRational(1)); }
  /// a * z^n
  static UniPoly monomial(GaussianRational a, int n) {
    if (a.is_zero()) return zero();
    std::vector<GaussianRational> c(n + 1);
    c[n] = std::move(a);
    return UniPoly(std::move(c));
  }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }

  const GaussianRational& coeff(int n) const {
    static const GaussianRational kZero;
    if (n < 0 || n >= static_cast<int>(c_.size())) return kZero;
    return c_[n];
  }
  const std::vector<GaussianRational>& coeffs() const { return c_; }

  const GaussianRational& leading() const {
    if (c_.empty()) throw Error("leading coefficient of zero polynomial");
    return c_.back();
  }

  UniPoly operator-() const {
    std::vector<GaussianRational> r(c_.size());
    for (size_t i = 0; i < c_.size(); ++i) r[i] = -c_[i];
    return UniPoly(std::move(r));
  }

  UniPoly operator+(const UniPoly& o) const {
    std::vector<GaussianRational> r(std::max(c_.size(), o.c_.size()));
    for (size_t i = 0; i < r.size(); ++i) r[i] = coeff(i) + o.coeff(i);
    return UniPoly(std::move(r));
  }
  UniPoly operator-(const UniPoly& o) const { return *this + (-o); }

  UniPoly operator*(const UniPoly& o) const {
    if (is_zero() || o.is_zero()) return zero();
    std::vector<GaussianRational> r(c_.size() + o.c_.size() - 1);
    for (size_t i = 0; i < c_.size(); ++i)
      for (size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
    return UniPoly(std::move(r));
  }
  UniPoly operator*(const GaussianRational& a) const {
    if (a.is_zero()) return zero();
    std::vector<GaussianRational> r(c_.size());
    for (size_t i = 0; i < c_.size(); ++i) r[i] = c_[i] * a;
    return UniPoly(std::move(r));
  }

  bool operator==(const UniPoly& o) const { return c_ == o.c_; }
  bool operator!=(const UniPoly& o) const { return !(*this == o); }

  UniPoly derivative() const {
    if (c_.size() <= 1) return zero();
    std::vector<GaussianRational> r(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i) r[i - 1] = static_cast<long>(i) * c_[i];
    return UniPoly(std::move(r));
  }

  GaussianRational eval(const GaussianRational& z) const {
    GaussianRational acc;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * z + *it;
    return acc;
  }

  std::complex<double> eval(std::complex<double> z) const {
    std::complex<double> acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * z + it->to_complex();
    return acc;
  }

  /// z^n * p(1/z) with n >= degree; pads with zeros so the reversal degree
  /// can be fixed across a family of polynomials.
  UniPoly reverse(int n) const {
    if (n < degree()) throw Error("reversal degree below polynomial degree");
    std::vector<GaussianRational> r(n + 1);
    for (size_t i = 0; i < c_.size(); ++i) r[n - i] = c_[i];
    return UniPoly(std::move(r));
  }

  /// Polynomial with conjugated coefficients.
  UniPoly conj_coeffs() const {
    std::vector<GaussianRational> r(c_.size());
    for (size_t i = 0; i < c_.size(); ++i) r[i] = c_[i].conj();
    return UniPoly(std::move(r));
  }

  UniPoly monic() const {
    if (is_zero()) return zero();
    return *this * (GaussianRational(1) / leading());
  }

  /// Euclidean division: *this = q * d + r with deg r < deg d.
  std::pair<UniPoly, UniPoly> divmod(const UniPoly& d) const {
    if (d.is_zero()) throw Error("division by zero polynomial");
    UniPoly q = zero(), r = *this;
    while (!r.is_zero() && r.degree() >= d.degree()) {
      GaussianRational f = r.leading() / d.leading();
      int shift = r.degree() - d.degree();
      UniPoly t = monomial(f, shift);
      q = q + t;
      r = r - t * d;
    }
    return {q, r};
  }

  std::string str() const;

private:
  void trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  }

  std::vector<GaussianRational> c_;
};

inline UniPoly operator*(const GaussianRational& a, const UniPoly& p) { return p * a; }

/// Monic greatest common divisor. Errors if both inputs are zero.
UniPoly poly_gcd(const UniPoly& a, const UniPoly& b);

/// Extended Euclid: returns (g, s, t) with s*a + t*b = g, g monic.
struct ExtendedGcd {
  UniPoly g, s, t;
};
ExtendedGcd poly_extended_gcd(const UniPoly& a, const UniPoly& b);

/// Solves A*Q - B*P = R for coprime (P, Q), in the degree-reduced normal
/// form with deg A < deg P (A is the unique representative of its class
/// modulo P; B follows by exact division). Errors if gcd(P, Q) != 1.
struct BezoutSolution {
  UniPoly a, b;
};
BezoutSolution bezout_solve(const UniPoly& p, const UniPoly& q, const UniPoly& r);

}  // namespace cp2harm

#endif
