#pragma once

// Majorana representation of spin-1 states.
//
// A spin-1 ray is labeled by an unordered pair of directions (M-vectors).
// Conventions:
//   spinor of direction (theta, phi):   (cos theta/2, e^{i phi} sin theta/2), phi = 0 at -z
//   state of {u, v}:                    (a_u a_v, (a_u b_v + a_v b_u)/sqrt2, b_u b_v), normalized
//   Majorana polynomial of (c+, c0, c-): c+ z^2 - sqrt2 c0 z + c-
//   root z <-> direction with stereographic coordinate z projected from -z.

#include "ksproof/rays.hpp"
#include "ksproof/scalar.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <utility>

namespace ksproof {

class DegenerateStateError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A direction in R^3, stored unnormalized.
template <class T>
class MVector {
 public:
  MVector(T x, T y, T z) : MVector(std::array<T, 3>{std::move(x), std::move(y), std::move(z)}) {}
  explicit MVector(std::array<T, 3> v) : v_(std::move(v)) {
    norm2_ = dot(*this);
    if (norm2_ == T{}) throw DomainError("MVector: zero vector");
  }

  const std::array<T, 3>& components() const { return v_; }
  const T& operator[](std::size_t k) const { return v_[k]; }
  const T& norm2() const { return norm2_; }

  T dot(const MVector& o) const {
    T s{};
    for (std::size_t k = 0; k < 3; ++k) s += v_[k] * o.v_[k];
    return s;
  }

  friend bool operator==(const MVector& a, const MVector& b) { return a.v_ == b.v_; }

 private:
  std::array<T, 3> v_;
  T norm2_{};
};

using ExactMVector = MVector<QRoot2>;
using ApproxMVector = MVector<double>;

/// a.b / (|a||b|). Exact vectors need |a|^2 |b|^2 to be a square in Q(sqrt2),
/// which holds for every catalog vector (norms^2 in {1, 2}).
inline QRoot2 normalized_dot(const ExactMVector& a, const ExactMVector& b) {
  auto len = sqrt_exact(a.norm2() * b.norm2());
  if (!len) throw DomainError("normalized_dot: |a||b| is not in Q(sqrt2)");
  return a.dot(b) / *len;
}

inline double normalized_dot(const ApproxMVector& a, const ApproxMVector& b) {
  return a.dot(b) / std::sqrt(a.norm2() * b.norm2());
}

inline bool same_direction(const ExactMVector& a, const ExactMVector& b) {
  const auto& u = a.components();
  const auto& v = b.components();
  const bool parallel = u[1] * v[2] == u[2] * v[1] && u[2] * v[0] == u[0] * v[2] &&
                        u[0] * v[1] == u[1] * v[0];
  return parallel && a.dot(b).sign() > 0;
}

/// Euclidean distance between the unit vectors is below tol.
inline bool same_direction(const ApproxMVector& a, const ApproxMVector& b, double tol) {
  const double na = std::sqrt(a.norm2());
  const double nb = std::sqrt(b.norm2());
  double d2 = 0.0;
  for (std::size_t k = 0; k < 3; ++k) {
    const double d = a[k] / na - b[k] / nb;
    d2 += d * d;
  }
  return std::sqrt(d2) < tol;
}

inline ApproxMVector to_approx(const ExactMVector& v) {
  return ApproxMVector(v[0].to_double(), v[1].to_double(), v[2].to_double());
}

/// Unordered pair of M-vectors.
template <class T>
struct MPair {
  MVector<T> first;
  MVector<T> second;
};

using ExactMPair = MPair<QRoot2>;
using ApproxMPair = MPair<double>;

inline bool same_pair(const ExactMPair& p, const ExactMPair& q) {
  return (same_direction(p.first, q.first) && same_direction(p.second, q.second)) ||
         (same_direction(p.first, q.second) && same_direction(p.second, q.first));
}

/// Best-of-both-orderings match with per-vector tolerance.
inline bool same_pair(const ApproxMPair& p, const ApproxMPair& q, double tol) {
  return (same_direction(p.first, q.first, tol) && same_direction(p.second, q.second, tol)) ||
         (same_direction(p.first, q.second, tol) && same_direction(p.second, q.first, tol));
}

inline ApproxMPair to_approx(const ExactMPair& p) { return {to_approx(p.first), to_approx(p.second)}; }

/// Closed-form squared overlap of two spin-1 rays given by their M-vectors:
///
///   2[(1+a1.b1)(1+a2.b2) + (1+a1.b2)(1+a2.b1)] - (1-a1.a2)(1-b1.b2)
///   ---------------------------------------------------------------
///                   (3+a1.a2)(3+b1.b2)
///
/// with all dot products between unit vectors. The denominator is >= 4.
template <class T>
T overlap2_eq3(const MPair<T>& pa, const MPair<T>& pb) {
  const T one(1);
  const T a1b1 = normalized_dot(pa.first, pb.first);
  const T a2b2 = normalized_dot(pa.second, pb.second);
  const T a1b2 = normalized_dot(pa.first, pb.second);
  const T a2b1 = normalized_dot(pa.second, pb.first);
  const T a1a2 = normalized_dot(pa.first, pa.second);
  const T b1b2 = normalized_dot(pb.first, pb.second);
  const T numerator =
      T(2) * ((one + a1b1) * (one + a2b2) + (one + a1b2) * (one + a2b1)) - (one - a1a2) * (one - b1b2);
  const T denominator = (T(3) + a1a2) * (T(3) + b1b2);
  return numerator / denominator;
}

using Spinor = std::array<ApproxComplex, 2>;

/// Components in the spin-z basis (m = +1, 0, -1).
class SpinState {
 public:
  SpinState(ApproxComplex plus, ApproxComplex zero, ApproxComplex minus) : c_{plus, zero, minus} {
    if (norm2() == 0.0) throw DomainError("SpinState: zero vector");
  }
  explicit SpinState(const ApproxRay& r) : SpinState(r[0], r[1], r[2]) {}

  const ApproxComplex& plus() const { return c_[0]; }
  const ApproxComplex& zero() const { return c_[1]; }
  const ApproxComplex& minus() const { return c_[2]; }

  double norm2() const { return c_[0].norm2() + c_[1].norm2() + c_[2].norm2(); }
  ApproxRay as_ray() const { return ApproxRay(c_); }

  SpinState normalized() const {
    const double n = std::sqrt(norm2());
    return {c_[0] / n, c_[1] / n, c_[2] / n};
  }

 private:
  std::array<ApproxComplex, 3> c_;
};

inline double overlap2(const SpinState& a, const SpinState& b) { return overlap2(a.as_ray(), b.as_ray()); }

/// min over phases of |a^ - e^{i phi} b^| for the normalized states.
inline double projective_distance(const SpinState& a, const SpinState& b) {
  const SpinState u = a.normalized();
  const SpinState v = b.normalized();
  const std::complex<double> ip = inner(v.as_ray(), u.as_ray()).value();
  const std::complex<double> phase = std::abs(ip) > 0.0 ? ip / std::abs(ip) : 1.0;
  const std::array<ApproxComplex, 3> du{u.plus(), u.zero(), u.minus()};
  const std::array<ApproxComplex, 3> dv{v.plus(), v.zero(), v.minus()};
  double d2 = 0.0;
  for (std::size_t k = 0; k < 3; ++k) d2 += std::norm(du[k].value() - phase * dv[k].value());
  return std::sqrt(d2);
}

inline Spinor spinor_from_direction(const ApproxMVector& v) {
  const double len = std::sqrt(v.norm2());
  const double x = v[0] / len;
  const double y = v[1] / len;
  const double z = std::clamp(v[2] / len, -1.0, 1.0);
  const double cos_half = std::sqrt((1.0 + z) / 2.0);
  const double sin_half = std::sqrt((1.0 - z) / 2.0);
  const double rho = std::hypot(x, y);
  const std::complex<double> phase = rho > 0.0 ? std::complex<double>(x, y) / rho : 1.0;
  return {ApproxComplex(cos_half), ApproxComplex(phase * sin_half)};
}

/// Symmetrized two-spinor product, normalized.
inline SpinState state_from_mpair(const ApproxMPair& p) {
  const Spinor s = spinor_from_direction(p.first);
  const Spinor t = spinor_from_direction(p.second);
  const ApproxComplex plus = s[0] * t[0];
  const ApproxComplex zero = (s[0] * t[1] + t[0] * s[1]) / ApproxComplex(std::sqrt(2.0));
  const ApproxComplex minus = s[1] * t[1];
  const double n2 = plus.norm2() + zero.norm2() + minus.norm2();
  if (!(n2 > 0.0)) throw DegenerateStateError("state_from_mpair: symmetrized product vanishes");
  return SpinState(plus, zero, minus).normalized();
}

namespace detail {

/// Unit direction of the spinor (alpha, beta), i.e. of stereographic coordinate beta/alpha.
inline ApproxMVector direction_of(std::complex<double> alpha, std::complex<double> beta) {
  const double aa = std::norm(alpha);
  const double bb = std::norm(beta);
  const std::complex<double> w = std::conj(alpha) * beta;
  const double n = aa + bb;
  return ApproxMVector(2.0 * w.real() / n, 2.0 * w.imag() / n, (aa - bb) / n);
}

/// Root of larger magnitude among -(b +- sqrt(disc))/2.
inline std::complex<double> stable_half_root(std::complex<double> b, std::complex<double> disc) {
  const std::complex<double> d = std::sqrt(disc);
  const std::complex<double> plus = b + d;
  const std::complex<double> minus = b - d;
  return -(std::abs(plus) >= std::abs(minus) ? plus : minus) / 2.0;
}

}  // namespace detail

/// Roots of the Majorana polynomial, mapped to unit directions.
///
/// Roots are computed homogeneously as spinors (alpha, beta) of
///   c+ beta^2 - sqrt2 c0 alpha beta + c- alpha^2 = 0,
/// so a vanishing c+ puts a root at -z without special casing. The larger
/// root of whichever of the polynomial or its reversal has the dominant
/// leading coefficient comes from the quadratic formula; the other comes
/// from the product of roots.
inline ApproxMPair mpair_from_state(const SpinState& s) {
  using C = std::complex<double>;
  const C lead = s.plus().value();
  const C mid = -std::sqrt(2.0) * s.zero().value();
  const C tail = s.minus().value();
  const C disc = mid * mid - 4.0 * lead * tail;
  std::pair<C, C> r1;
  std::pair<C, C> r2;
  if (std::abs(lead) >= std::abs(tail)) {
    // Roots in z = beta/alpha.
    const C q = detail::stable_half_root(mid, disc);
    if (q == 0.0) {
      r1 = r2 = {1.0, 0.0};
    } else {
      r1 = {lead, q};
      r2 = {q, tail};
    }
  } else {
    // Roots in w = alpha/beta of tail w^2 + mid w + lead.
    const C q = detail::stable_half_root(mid, disc);
    if (q == 0.0) {
      r1 = r2 = {0.0, 1.0};
    } else {
      r1 = {q, tail};
      r2 = {lead, q};
    }
  }
  return {detail::direction_of(r1.first, r1.second), detail::direction_of(r2.first, r2.second)};
}

}  // namespace ksproof
