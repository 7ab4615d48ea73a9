#pragma once

// Projective rays in C^3.
//
// The inner product is conjugate-linear in its FIRST argument:
//   inner(a, b) = sum_k conj(a_k) * b_k.
// Rays are stored unnormalized; normalization only happens inside overlap2.

#include "ksproof/scalar.hpp"

#include <array>
#include <cmath>
#include <optional>

namespace ksproof {

template <ComplexScalar S>
class Ray {
 public:
  using Scalar = S;
  using Real = real_t<S>;

  Ray(std::array<S, 3> components, std::optional<int> index = std::nullopt)
      : c_(std::move(components)), index_(index) {
    if (is_zero_vector()) throw DomainError("Ray: all components are zero");
  }

  const std::array<S, 3>& components() const { return c_; }
  const S& operator[](std::size_t k) const { return c_[k]; }
  std::optional<int> index() const { return index_; }

  /// <a|a>, always real and positive.
  Real norm2() const {
    Real n{};
    for (const S& z : c_) n += ScalarTraits<S>::norm2(z);
    return n;
  }

  friend bool operator==(const Ray&, const Ray&) = default;

 private:
  bool is_zero_vector() const {
    for (const S& z : c_) {
      if constexpr (ScalarTraits<S>::exact) {
        if (!z.is_zero()) return false;
      } else {
        if (z.re != 0.0 || z.im != 0.0) return false;
      }
    }
    return true;
  }

  std::array<S, 3> c_;
  std::optional<int> index_;
};

using ExactRay = Ray<ExactComplex>;
using ApproxRay = Ray<ApproxComplex>;

template <ComplexScalar S>
S inner(const Ray<S>& a, const Ray<S>& b) {
  S sum{};
  for (std::size_t k = 0; k < 3; ++k) sum += conj(a[k]) * b[k];
  return sum;
}

/// |<b|a>|^2 / (<a|a><b|b>): exact in Q(sqrt2) for exact rays.
template <ComplexScalar S>
real_t<S> overlap2(const Ray<S>& a, const Ray<S>& b) {
  return ScalarTraits<S>::norm2(inner(a, b)) / (a.norm2() * b.norm2());
}

inline bool is_orthogonal(const ExactRay& a, const ExactRay& b) { return inner(a, b).is_zero(); }

/// Normalized |<a|b>| < tol, i.e. overlap2 < tol^2.
inline bool is_orthogonal(const ApproxRay& a, const ApproxRay& b, double tol = kDefaultTolerance) {
  return overlap2(a, b) < tol * tol;
}

inline bool proportional(const ExactRay& a, const ExactRay& b) { return overlap2(a, b) == QRoot2{1}; }

inline bool proportional(const ApproxRay& a, const ApproxRay& b, double tol = kDefaultTolerance) {
  return std::abs(1.0 - overlap2(a, b)) < tol;
}

inline ApproxRay to_approx(const ExactRay& r) {
  return ApproxRay({to_approx(r[0]), to_approx(r[1]), to_approx(r[2])}, r.index());
}

/// Real 3x3 matrix acting on rays (and on M-vectors).
template <class T>
using Matrix3 = std::array<std::array<T, 3>, 3>;

template <ComplexScalar S, class T>
Ray<S> apply(const Matrix3<T>& m, const Ray<S>& r) {
  std::array<S, 3> out{};
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) out[i] += S(m[i][j]) * r[j];
  }
  return Ray<S>(std::move(out), r.index());
}

}  // namespace ksproof
