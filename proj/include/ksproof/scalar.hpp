#pragma once

// Exact arithmetic in Q(sqrt2, i) and a tolerance-based floating complex.
//
// Every entry of the Peres catalog and of the parametric family at the
// Peres/Penrose specializations lies in Q(sqrt2, i), so all orthogonality
// and overlap questions about them can be decided without rounding.

#include <boost/multiprecision/cpp_int.hpp>

#include <array>
#include <cmath>
#include <compare>
#include <complex>
#include <optional>
#include <stdexcept>
#include <string>

namespace ksproof {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline constexpr double kDefaultTolerance = 1e-9;

class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

namespace detail {

inline int sign_of(const Rational& r) { return r.sign(); }

inline std::optional<Integer> exact_isqrt(const Integer& n) {
  if (n < 0) return std::nullopt;
  Integer root = boost::multiprecision::sqrt(n);
  if (root * root != n) return std::nullopt;
  return root;
}

inline Integer lcm(const Integer& a, const Integer& b) {
  return a / boost::multiprecision::gcd(a, b) * b;
}

}  // namespace detail

/// Square root of a nonnegative rational, when it is itself rational.
inline std::optional<Rational> sqrt_rational(const Rational& r) {
  if (r < 0) return std::nullopt;
  auto num = detail::exact_isqrt(boost::multiprecision::numerator(r));
  auto den = detail::exact_isqrt(boost::multiprecision::denominator(r));
  if (!num || !den) return std::nullopt;
  return Rational(*num, *den);
}

/// p + q*sqrt2 with p, q rational. The representation is unique because
/// sqrt2 is irrational.
class QRoot2 {
 public:
  QRoot2() = default;
  QRoot2(long long p) : p_(p) {}  // NOLINT(google-explicit-constructor)
  QRoot2(Rational p, Rational q = Rational(0)) : p_(std::move(p)), q_(std::move(q)) {}  // NOLINT

  static QRoot2 sqrt2() { return {Rational(0), Rational(1)}; }

  const Rational& rational_part() const { return p_; }
  const Rational& sqrt2_part() const { return q_; }

  bool is_zero() const { return p_ == 0 && q_ == 0; }

  /// Galois conjugate p - q*sqrt2.
  QRoot2 galois_conjugate() const { return {p_, -q_}; }

  /// Field norm p^2 - 2 q^2; zero only for zero.
  Rational field_norm() const { return p_ * p_ - 2 * q_ * q_; }

  int sign() const {
    const int sp = detail::sign_of(p_);
    const int sq = detail::sign_of(q_);
    if (sq == 0) return sp;
    if (sp == 0 || sp == sq) return sq;
    // Opposite signs: the larger of |p| and |q|*sqrt2 wins.
    return p_ * p_ > 2 * q_ * q_ ? sp : sq;
  }

  QRoot2 inverse() const {
    if (is_zero()) throw DomainError("QRoot2: division by zero");
    const Rational n = field_norm();
    return {p_ / n, -q_ / n};
  }

  double to_double() const {
    const double a = static_cast<double>(p_);
    const double b = static_cast<double>(q_) * std::sqrt(2.0);
    if ((a > 0) == (b > 0) || a == 0 || b == 0) return a + b;
    // Opposite signs cancel; divide the exact norm by the conjugate instead.
    return static_cast<double>(Rational(p_ * p_ - 2 * q_ * q_)) / (a - b);
  }

  /// Canonical form: "a", "b*sqrt2", "a+b*sqrt2", each optionally over a
  /// common positive denominator, e.g. "(2-1*sqrt2)/4".
  std::string to_string() const;

  QRoot2 operator-() const { return {-p_, -q_}; }
  QRoot2& operator+=(const QRoot2& o) {
    p_ += o.p_;
    q_ += o.q_;
    return *this;
  }
  QRoot2& operator-=(const QRoot2& o) {
    p_ -= o.p_;
    q_ -= o.q_;
    return *this;
  }
  QRoot2& operator*=(const QRoot2& o) {
    Rational p = p_ * o.p_ + 2 * q_ * o.q_;
    Rational q = p_ * o.q_ + q_ * o.p_;
    p_ = std::move(p);
    q_ = std::move(q);
    return *this;
  }
  QRoot2& operator/=(const QRoot2& o) { return *this *= o.inverse(); }

  friend QRoot2 operator+(QRoot2 a, const QRoot2& b) { return a += b; }
  friend QRoot2 operator-(QRoot2 a, const QRoot2& b) { return a -= b; }
  friend QRoot2 operator*(QRoot2 a, const QRoot2& b) { return a *= b; }
  friend QRoot2 operator/(QRoot2 a, const QRoot2& b) { return a /= b; }

  friend bool operator==(const QRoot2& a, const QRoot2& b) { return a.p_ == b.p_ && a.q_ == b.q_; }
  friend std::strong_ordering operator<=>(const QRoot2& a, const QRoot2& b) {
    return (a - b).sign() <=> 0;
  }

 private:
  Rational p_{0};
  Rational q_{0};
};

inline std::string QRoot2::to_string() const {
  using boost::multiprecision::denominator;
  using boost::multiprecision::numerator;
  if (is_zero()) return "0";
  const Integer den = detail::lcm(denominator(p_), denominator(q_));
  const Integer a = numerator(p_) * (den / denominator(p_));
  const Integer b = numerator(q_) * (den / denominator(q_));
  std::string body;
  int terms = 0;
  if (a != 0) {
    body += a.str();
    ++terms;
  }
  if (b != 0) {
    if (terms > 0 && b > 0) body += "+";
    body += b.str() + "*sqrt2";
    ++terms;
  }
  if (den == 1) return body;
  if (terms > 1) body = "(" + body + ")";
  return body + "/" + den.str();
}

/// Nonnegative square root inside Q(sqrt2), if one exists.
inline std::optional<QRoot2> sqrt_exact(const QRoot2& x) {
  if (x.sign() < 0) return std::nullopt;
  if (x.is_zero()) return QRoot2{};
  const Rational& p = x.rational_part();
  const Rational& q = x.sqrt2_part();
  // (u + v sqrt2)^2 = u^2 + 2v^2 + 2uv sqrt2, so u^2 = (p +- sqrt(p^2 - 2q^2)) / 2.
  auto s = sqrt_rational(x.field_norm());
  if (!s) return std::nullopt;
  const std::array<Rational, 2> candidates{(p + *s) / 2, (p - *s) / 2};
  for (const Rational& u2 : candidates) {
    auto u = sqrt_rational(u2);
    if (!u) continue;
    QRoot2 y;
    if (*u != 0) {
      y = QRoot2(*u, q / (2 * *u));
    } else {
      if (q != 0) continue;
      auto v = sqrt_rational(p / 2);
      if (!v) continue;
      y = QRoot2(Rational(0), *v);
    }
    if (y.sign() < 0) y = -y;
    if (y * y == x) return y;
  }
  return std::nullopt;
}

/// Display string for sqrt(x), x >= 0: exact form when the root lies in
/// Q(sqrt2), "c*sqrtm/d" for rational x, otherwise "sqrt(<x>)".
inline std::string sqrt_string(const QRoot2& x) {
  if (auto y = sqrt_exact(x)) return y->to_string();
  if (x.sqrt2_part() == 0 && x.sign() > 0) {
    using boost::multiprecision::denominator;
    using boost::multiprecision::numerator;
    const Rational& r = x.rational_part();
    // sqrt(n/d) = sqrt(n*d)/d = outer*sqrt(inner)/d
    Integer rest = numerator(r) * denominator(r);
    Integer outer = 1;
    for (Integer f = 2; f * f <= rest; ++f) {
      while (rest % (f * f) == 0) {
        rest /= f * f;
        outer *= f;
      }
    }
    const Rational coeff(outer, denominator(r));
    std::string out;
    if (numerator(coeff) != 1) out += numerator(coeff).str() + "*";
    out += "sqrt" + rest.str();
    if (denominator(coeff) != 1) out += "/" + denominator(coeff).str();
    return out;
  }
  return "sqrt(" + x.to_string() + ")";
}

/// re + im*i with re, im in Q(sqrt2).
class ExactComplex {
 public:
  ExactComplex() = default;
  ExactComplex(long long re) : re_(re) {}  // NOLINT(google-explicit-constructor)
  ExactComplex(QRoot2 re, QRoot2 im = QRoot2{}) : re_(std::move(re)), im_(std::move(im)) {}  // NOLINT

  static ExactComplex i() { return {QRoot2{}, QRoot2{1}}; }
  static ExactComplex sqrt2() { return {QRoot2::sqrt2()}; }

  const QRoot2& real() const { return re_; }
  const QRoot2& imag() const { return im_; }

  bool is_zero() const { return re_.is_zero() && im_.is_zero(); }

  /// |z|^2, exact.
  QRoot2 norm2() const { return re_ * re_ + im_ * im_; }

  ExactComplex inverse() const {
    if (is_zero()) throw DomainError("ExactComplex: division by zero");
    const QRoot2 n = norm2();
    return {re_ / n, -im_ / n};
  }

  std::string to_string() const {
    if (im_.is_zero()) return re_.to_string();
    const std::string im = im_ == QRoot2{1} ? "i" : "(" + im_.to_string() + ")*i";
    if (re_.is_zero()) return im;
    return re_.to_string() + "+" + im;
  }

  ExactComplex operator-() const { return {-re_, -im_}; }
  ExactComplex& operator+=(const ExactComplex& o) {
    re_ += o.re_;
    im_ += o.im_;
    return *this;
  }
  ExactComplex& operator-=(const ExactComplex& o) {
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
  }
  ExactComplex& operator*=(const ExactComplex& o) {
    QRoot2 re = re_ * o.re_ - im_ * o.im_;
    QRoot2 im = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(re);
    im_ = std::move(im);
    return *this;
  }
  ExactComplex& operator/=(const ExactComplex& o) { return *this *= o.inverse(); }

  friend ExactComplex operator+(ExactComplex a, const ExactComplex& b) { return a += b; }
  friend ExactComplex operator-(ExactComplex a, const ExactComplex& b) { return a -= b; }
  friend ExactComplex operator*(ExactComplex a, const ExactComplex& b) { return a *= b; }
  friend ExactComplex operator/(ExactComplex a, const ExactComplex& b) { return a /= b; }
  friend bool operator==(const ExactComplex&, const ExactComplex&) = default;

 private:
  QRoot2 re_;
  QRoot2 im_;
};

inline ExactComplex conj(const ExactComplex& z) { return {z.real(), -z.imag()}; }

/// Double-precision complex scalar; zero tests take an explicit tolerance.
struct ApproxComplex {
  double re = 0.0;
  double im = 0.0;

  constexpr ApproxComplex() = default;
  constexpr ApproxComplex(double r, double i = 0.0) : re(r), im(i) {}  // NOLINT
  ApproxComplex(std::complex<double> z) : re(z.real()), im(z.imag()) {}  // NOLINT

  std::complex<double> value() const { return {re, im}; }
  double abs() const { return std::hypot(re, im); }
  double norm2() const { return re * re + im * im; }
  bool is_zero(double tol = kDefaultTolerance) const { return abs() < tol; }

  static ApproxComplex polar(double magnitude, double phase) { return std::polar(magnitude, phase); }

  ApproxComplex operator-() const { return {-re, -im}; }
  ApproxComplex& operator+=(const ApproxComplex& o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  ApproxComplex& operator-=(const ApproxComplex& o) {
    re -= o.re;
    im -= o.im;
    return *this;
  }
  ApproxComplex& operator*=(const ApproxComplex& o) { return *this = value() * o.value(); }
  ApproxComplex& operator/=(const ApproxComplex& o) { return *this = value() / o.value(); }

  friend ApproxComplex operator+(ApproxComplex a, const ApproxComplex& b) { return a += b; }
  friend ApproxComplex operator-(ApproxComplex a, const ApproxComplex& b) { return a -= b; }
  friend ApproxComplex operator*(ApproxComplex a, const ApproxComplex& b) { return a *= b; }
  friend ApproxComplex operator/(ApproxComplex a, const ApproxComplex& b) { return a /= b; }
  friend bool operator==(const ApproxComplex&, const ApproxComplex&) = default;
};

inline ApproxComplex conj(const ApproxComplex& z) { return {z.re, -z.im}; }

inline double to_approx(const QRoot2& x) { return x.to_double(); }
inline ApproxComplex to_approx(const ExactComplex& z) {
  return {z.real().to_double(), z.imag().to_double()};
}

/// Scalar-type plumbing shared by the generic ray and M-vector code.
template <class S>
struct ScalarTraits;

template <>
struct ScalarTraits<ExactComplex> {
  using Real = QRoot2;
  static constexpr bool exact = true;
  static Real norm2(const ExactComplex& z) { return z.norm2(); }
  static Real real(const ExactComplex& z) { return z.real(); }
};

template <>
struct ScalarTraits<ApproxComplex> {
  using Real = double;
  static constexpr bool exact = false;
  static Real norm2(const ApproxComplex& z) { return z.norm2(); }
  static Real real(const ApproxComplex& z) { return z.re; }
};

template <class S>
concept ComplexScalar = requires { typename ScalarTraits<S>::Real; };

template <ComplexScalar S>
using real_t = typename ScalarTraits<S>::Real;

}  // namespace ksproof
