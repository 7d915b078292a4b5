#ifndef CP2HARM_BIPOLY_HPP
#define CP2HARM_BIPOLY_HPP

#include <complex>
#include <map>
#include <string>
#include <utility>

#include "cp2harm/unipoly.hpp"

namespace cp2harm {

/// Sparse polynomial in the two formally independent variables z and zbar
/// over the Gaussian rationals. The coefficient table never stores explicit
/// zeros. Conjugation is the involution that swaps the two degrees and
/// conjugates coefficients.
class BiPoly {
public:
  using Key = std::pair<int, int>;  // (degree in z, degree in zbar)
  using Table = std::map<Key, GaussianRational>;

  BiPoly() = default;

  static BiPoly zero() { return BiPoly(); }
  static BiPoly constant(const GaussianRational& a) {
    return monomial(a, 0, 0);
  }
  static BiPoly monomial(const GaussianRational& a, int dz, int dzb) {
    BiPoly p;
    if (!a.is_zero()) p.t_[{dz, dzb}] = a;
    return p;
  }
  /// Embeds p(z) as a z-only bivariate polynomial.
  static BiPoly from_z(const UniPoly& p) {
    BiPoly r;
    for (int n = 0; n <= p.degree(); ++n)
      if (!p.coeff(n).is_zero()) r.t_[{n, 0}] = p.coeff(n);
    return r;
  }
  /// Embeds p(zbar): coefficient n multiplies zbar^n (coefficients are taken
  /// as written, not conjugated).
  static BiPoly from_zbar(const UniPoly& p) {
    BiPoly r;
    for (int n = 0; n <= p.degree(); ++n)
      if (!p.coeff(n).is_zero()) r.t_[{0, n}] = p.coeff(n);
    return r;
  }

  const Table& terms() const { return t_; }
  bool is_zero() const { return t_.empty(); }

  int deg_z() const {
    int d = -1;
    for (const auto& [k, v] : t_) d = std::max(d, k.first);
    return d;
  }
  int deg_zbar() const {
    int d = -1;
    for (const auto& [k, v] : t_) d = std::max(d, k.second);
    return d;
  }

  GaussianRational coeff(int dz, int dzb) const {
    auto it = t_.find({dz, dzb});
    return it == t_.end() ? GaussianRational() : it->second;
  }

  BiPoly operator-() const {
    BiPoly r;
    for (const auto& [k, v] : t_) r.t_[k] = -v;
    return r;
  }
  BiPoly operator+(const BiPoly& o) const {
    BiPoly r = *this;
    for (const auto& [k, v] : o.t_) {
      auto [it, fresh] = r.t_.try_emplace(k, v);
      if (!fresh) {
        it->second += v;
        if (it->second.is_zero()) r.t_.erase(it);
      }
    }
    return r;
  }
  BiPoly operator-(const BiPoly& o) const { return *this + (-o); }
  BiPoly operator*(const BiPoly& o) const {
    BiPoly r;
    for (const auto& [ka, va] : t_)
      for (const auto& [kb, vb] : o.t_) {
        Key k{ka.first + kb.first, ka.second + kb.second};
        auto [it, fresh] = r.t_.try_emplace(k, va * vb);
        if (!fresh) {
          it->second += va * vb;
          if (it->second.is_zero()) r.t_.erase(it);
        }
      }
    return r;
  }
  BiPoly operator*(const GaussianRational& a) const {
    BiPoly r;
    if (a.is_zero()) return r;
    for (const auto& [k, v] : t_) r.t_[k] = v * a;
    return r;
  }

  bool operator==(const BiPoly& o) const { return t_ == o.t_; }
  bool operator!=(const BiPoly& o) const { return !(*this == o); }

  /// The conjugation involution: coefficients conjugated, degrees swapped.
  BiPoly conj_swap() const {
    BiPoly r;
    for (const auto& [k, v] : t_) r.t_[{k.second, k.first}] = v.conj();
    return r;
  }

  /// Formal partial derivative in z.
  BiPoly dz() const {
    BiPoly r;
    for (const auto& [k, v] : t_)
      if (k.first > 0) r.t_[{k.first - 1, k.second}] = static_cast<long>(k.first) * v;
    return r;
  }
  /// Formal partial derivative in zbar.
  BiPoly dzbar() const {
    BiPoly r;
    for (const auto& [k, v] : t_)
      if (k.second > 0) r.t_[{k.first, k.second - 1}] = static_cast<long>(k.second) * v;
    return r;
  }

  /// z^A zbar^B p(1/z, 1/zbar) with A >= deg_z, B >= deg_zbar.
  BiPoly reverse(int a, int b) const {
    if (a < deg_z() || b < deg_zbar()) throw Error("reversal degree below bidegree");
    BiPoly r;
    for (const auto& [k, v] : t_) r.t_[{a - k.first, b - k.second}] = v;
    return r;
  }

  std::complex<double> eval(std::complex<double> z, std::complex<double> zb) const;

  std::string str() const;

private:
  Table t_;
};

inline BiPoly operator*(const GaussianRational& a, const BiPoly& p) { return p * a; }

}  // namespace cp2harm

#endif
