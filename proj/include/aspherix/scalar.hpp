#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <concepts>
#include <ostream>
#include <string>
#include <utility>

namespace aspherix {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Exact complex number a + b*i with rational parts.
class GaussianRational {
 public:
  GaussianRational() = default;
  GaussianRational(Rational re, Rational im = 0) : re_(std::move(re)), im_(std::move(im)) {}
  GaussianRational(Integer const& re) : re_(re) {}
  GaussianRational(int re) : re_(re) {}

  [[nodiscard]] Rational const& real() const noexcept { return re_; }
  [[nodiscard]] Rational const& imag() const noexcept { return im_; }

  [[nodiscard]] bool is_zero() const { return re_ == 0 && im_ == 0; }
  [[nodiscard]] bool is_real() const { return im_ == 0; }
  [[nodiscard]] GaussianRational conj() const { return {re_, -im_}; }
  // |z|^2
  [[nodiscard]] Rational norm() const { return re_ * re_ + im_ * im_; }

  GaussianRational& operator+=(GaussianRational const& o) {
    re_ += o.re_;
    im_ += o.im_;
    return *this;
  }
  GaussianRational& operator-=(GaussianRational const& o) {
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
  }
  GaussianRational& operator*=(GaussianRational const& o) {
    Rational re = re_ * o.re_ - im_ * o.im_;
    Rational im = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(re);
    im_ = std::move(im);
    return *this;
  }

  friend GaussianRational operator+(GaussianRational a, GaussianRational const& b) { return a += b; }
  friend GaussianRational operator-(GaussianRational a, GaussianRational const& b) { return a -= b; }
  friend GaussianRational operator*(GaussianRational a, GaussianRational const& b) { return a *= b; }
  friend GaussianRational operator-(GaussianRational const& a) { return {-a.re_, -a.im_}; }
  friend bool operator==(GaussianRational const& a, GaussianRational const& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }

  friend std::ostream& operator<<(std::ostream& os, GaussianRational const& z) {
    os << z.re_;
    if (z.im_ != 0) os << (z.im_ < 0 ? "-" : "+") << abs(z.im_) << "i";
    return os;
  }

 private:
  Rational re_ = 0;
  Rational im_ = 0;
};

/// Per-scalar operations the group ring needs beyond field arithmetic.
template <class S>
struct scalar_traits;

template <>
struct scalar_traits<Integer> {
  static constexpr bool is_complex = false;
  static Integer conj(Integer const& x) { return x; }
  static bool is_zero(Integer const& x) { return x.is_zero(); }
};

template <>
struct scalar_traits<GaussianRational> {
  static constexpr bool is_complex = true;
  static GaussianRational conj(GaussianRational const& x) { return x.conj(); }
  static bool is_zero(GaussianRational const& x) { return x.is_zero(); }
};

template <class S>
concept Scalar = std::regular<S> && requires(S a, S b) {
  { a + b } -> std::convertible_to<S>;
  { a - b } -> std::convertible_to<S>;
  { a * b } -> std::convertible_to<S>;
  { -a } -> std::convertible_to<S>;
  { scalar_traits<S>::conj(a) } -> std::convertible_to<S>;
  { scalar_traits<S>::is_zero(a) } -> std::convertible_to<bool>;
  S(0);
  S(1);
};

template <Scalar S>
S conjugate(S const& x) {
  return scalar_traits<S>::conj(x);
}

template <Scalar S>
bool is_zero(S const& x) {
  return scalar_traits<S>::is_zero(x);
}

inline std::string to_string(Integer const& x) { return x.str(); }

}  // namespace aspherix
