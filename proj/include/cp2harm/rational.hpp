#ifndef CP2HARM_RATIONAL_HPP
#define CP2HARM_RATIONAL_HPP

#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace cp2harm {

/// Error type thrown on violated preconditions throughout the library.
class Error : public std::runtime_error {
public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Exact complex scalar with rational real and imaginary parts.
///
/// Both parts are kept canonical (positive denominator, lowest terms) by
/// GMP. Every arithmetic operation is exact; there is no rounding anywhere.
/// Values are immutable in spirit: all operators return fresh values, so
/// instances can be shared freely across threads.
class GaussianRational {
public:
  GaussianRational() : re_(0), im_(0) {}
  GaussianRational(long re) : re_(re), im_(0) {}
  GaussianRational(long re_num, long re_den, long im_num, long im_den)
      : re_(re_num, re_den), im_(im_num, im_den) {
    if (re_den == 0 || im_den == 0) throw Error("zero denominator");
    re_.canonicalize();
    im_.canonicalize();
  }
  GaussianRational(mpq_class re, mpq_class im)
      : re_(std::move(re)), im_(std::move(im)) {}

  static GaussianRational i() { return {mpq_class(0), mpq_class(1)}; }

  const mpq_class& re() const { return re_; }
  const mpq_class& im() const { return im_; }

  bool is_zero() const { return re_ == 0 && im_ == 0; }
  bool is_real() const { return im_ == 0; }

  GaussianRational conj() const { return {re_, -im_}; }

  /// |q|^2 = re^2 + im^2, an exact non-negative rational.
  mpq_class norm2() const { return re_ * re_ + im_ * im_; }

  GaussianRational operator-() const { return {-re_, -im_}; }

  GaussianRational operator+(const GaussianRational& o) const {
    return {re_ + o.re_, im_ + o.im_};
  }
  GaussianRational operator-(const GaussianRational& o) const {
    return {re_ - o.re_, im_ - o.im_};
  }
  GaussianRational operator*(const GaussianRational& o) const {
    return {re_ * o.re_ - im_ * o.im_, re_ * o.im_ + im_ * o.re_};
  }
  GaussianRational operator/(const GaussianRational& o) const {
    mpq_class n2 = o.norm2();
    if (n2 == 0) throw Error("division by zero");
    return {(re_ * o.re_ + im_ * o.im_) / n2, (im_ * o.re_ - re_ * o.im_) / n2};
  }

  GaussianRational& operator+=(const GaussianRational& o) { return *this = *this + o; }
  GaussianRational& operator-=(const GaussianRational& o) { return *this = *this - o; }
  GaussianRational& operator*=(const GaussianRational& o) { return *this = *this * o; }
  GaussianRational& operator/=(const GaussianRational& o) { return *this = *this / o; }

  bool operator==(const GaussianRational& o) const {
    return re_ == o.re_ && im_ == o.im_;
  }
  bool operator!=(const GaussianRational& o) const { return !(*this == o); }

  std::complex<double> to_complex() const {
    return {re_.get_d(), im_.get_d()};
  }

  std::string str() const {
    std::string s = re_.get_str();
    if (im_ != 0) s += (im_ > 0 ? "+" : "") + im_.get_str() + "i";
    return s;
  }

private:
  mpq_class re_, im_;
};

inline GaussianRational operator*(long a, const GaussianRational& q) {
  return GaussianRational(a) * q;
}

}  // namespace cp2harm

#endif
