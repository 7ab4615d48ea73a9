#pragma once

// The three 33-ray catalogs: Peres (real rays on the cube), Penrose
// (M-vector pairs), and the three-parameter family that contains both.

#include "ksproof/majorana.hpp"
#include "ksproof/rays.hpp"
#include "ksproof/scalar.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace ksproof {

inline constexpr int kRayCount = 33;

enum class RayClass { FaceAxes, EdgeAxes, DoubledEdges, FaceOppositeEdges };

/// Rays 1-3, 4-9, 10-21, 22-33.
inline RayClass class_of(int index) {
  if (index < 1 || index > kRayCount) {
    throw std::out_of_range("class_of: ray index " + std::to_string(index) + " outside 1..33");
  }
  if (index <= 3) return RayClass::FaceAxes;
  if (index <= 9) return RayClass::EdgeAxes;
  if (index <= 21) return RayClass::DoubledEdges;
  return RayClass::FaceOppositeEdges;
}

inline std::string_view to_string(RayClass c) {
  switch (c) {
    case RayClass::FaceAxes: return "FaceAxes";
    case RayClass::EdgeAxes: return "EdgeAxes";
    case RayClass::DoubledEdges: return "DoubledEdges";
    case RayClass::FaceOppositeEdges: return "FaceOppositeEdges";
  }
  return "?";
}

namespace detail {

// Compact cube notation: three signed digits, "-" for a bar, "2" for sqrt2.
inline std::array<QRoot2, 3> parse_cube_digits(std::string_view s) {
  std::array<QRoot2, 3> out{};
  std::size_t k = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    bool negative = false;
    if (s[i] == '-') {
      negative = true;
      ++i;
    }
    if (i >= s.size() || k >= 3) throw std::invalid_argument("bad cube digits: " + std::string(s));
    QRoot2 v;
    switch (s[i]) {
      case '0': v = QRoot2(0); break;
      case '1': v = QRoot2(1); break;
      case '2': v = QRoot2::sqrt2(); break;
      default: throw std::invalid_argument("bad cube digits: " + std::string(s));
    }
    out[k++] = negative ? -v : v;
  }
  if (k != 3) throw std::invalid_argument("bad cube digits: " + std::string(s));
  return out;
}

inline constexpr std::array<std::string_view, kRayCount> kPeresDigits = {
    "100",  "010",   "001",   "011",  "01-1",  "101",  "10-1",  "1-10",  "110",  "2-11",  "211",
    "2-1-1", "21-1", "-121",  "121",  "-12-1", "12-1", "112",   "-112",  "1-12", "-1-12", "102",
    "-120", "120",   "-102",  "012",  "2-10",  "210",  "0-12",  "021",   "201",  "20-1",  "02-1",
};

inline constexpr std::array<std::array<std::string_view, 2>, kRayCount> kPenroseDigits = {{
    {"100", "-100"},   {"010", "0-10"},   {"001", "00-1"},     {"011", "0-1-1"},    {"01-1", "0-11"},
    {"101", "-10-1"},  {"10-1", "-101"},  {"110", "-1-10"},    {"1-10", "-110"},    {"011", "011"},
    {"01-1", "01-1"},  {"0-11", "0-11"},  {"0-1-1", "0-1-1"},  {"101", "101"},      {"10-1", "10-1"},
    {"-101", "-101"},  {"-10-1", "-10-1"}, {"110", "110"},     {"1-10", "1-10"},    {"-110", "-110"},
    {"-1-10", "-1-10"}, {"011", "01-1"},  {"011", "0-11"},     {"0-1-1", "01-1"},   {"0-1-1", "0-11"},
    {"101", "10-1"},   {"101", "-101"},   {"-10-1", "10-1"},   {"-10-1", "-101"},   {"110", "1-10"},
    {"110", "-110"},   {"-1-10", "1-10"}, {"-1-10", "-110"},
}};

}  // namespace detail

/// Peres rays, components in {0, +-1, +-sqrt2}, unnormalized.
inline std::vector<ExactRay> peres_rays() {
  std::vector<ExactRay> rays;
  rays.reserve(kRayCount);
  for (int i = 0; i < kRayCount; ++i) {
    const auto d = detail::parse_cube_digits(detail::kPeresDigits[i]);
    rays.emplace_back(std::array<ExactComplex, 3>{d[0], d[1], d[2]}, i + 1);
  }
  return rays;
}

/// Penrose rays as M-vector pairs with integer components.
inline std::vector<ExactMPair> penrose_mpairs() {
  std::vector<ExactMPair> pairs;
  pairs.reserve(kRayCount);
  for (const auto& [u, v] : detail::kPenroseDigits) {
    pairs.push_back({ExactMVector(detail::parse_cube_digits(u)), ExactMVector(detail::parse_cube_digits(v))});
  }
  return pairs;
}

/// Phases of a = e^{i alpha}, b = e^{i beta}, c = sqrt2 e^{i gamma}.
struct FamilyParams {
  double alpha = 0.0;
  double beta = 0.0;
  double gamma = 0.0;
};

/// a, b, c and the derived k = -a conj(b) c / conj(c).
template <ComplexScalar S>
struct FamilyCoefficients {
  S a;
  S b;
  S c;
  S k;

  FamilyCoefficients(S a_, S b_, S c_) : a(std::move(a_)), b(std::move(b_)), c(std::move(c_)) {
    k = -a * conj(b) * c / conj(c);
  }
};

inline FamilyCoefficients<ApproxComplex> family_coefficients(const FamilyParams& p) {
  return {ApproxComplex::polar(1.0, p.alpha), ApproxComplex::polar(1.0, p.beta),
          ApproxComplex::polar(std::sqrt(2.0), p.gamma)};
}

namespace detail {

// e^{i theta} for theta a multiple of pi/2 (within 1e-12), else nothing.
inline std::optional<ExactComplex> exact_unit_phase(double theta) {
  const double quarters = theta / (std::numbers::pi / 2.0);
  const double nearest = std::round(quarters);
  if (std::abs(quarters - nearest) > 1e-12) return std::nullopt;
  switch (((static_cast<long long>(nearest) % 4) + 4) % 4) {
    case 0: return ExactComplex(1);
    case 1: return ExactComplex::i();
    case 2: return ExactComplex(-1);
    default: return -ExactComplex::i();
  }
}

}  // namespace detail

/// Exact coefficients when every phase is a multiple of pi/2.
inline std::optional<FamilyCoefficients<ExactComplex>> exact_family_coefficients(const FamilyParams& p) {
  auto a = detail::exact_unit_phase(p.alpha);
  auto b = detail::exact_unit_phase(p.beta);
  auto g = detail::exact_unit_phase(p.gamma);
  if (!a || !b || !g) return std::nullopt;
  return FamilyCoefficients<ExactComplex>(*a, *b, ExactComplex::sqrt2() * *g);
}

/// a = 1, b = 1, c = sqrt2.
inline FamilyCoefficients<ExactComplex> peres_point() {
  return {ExactComplex(1), ExactComplex(1), ExactComplex::sqrt2()};
}

/// a = -i, b = -1, c = -sqrt2.
inline FamilyCoefficients<ExactComplex> penrose_point() {
  return {-ExactComplex::i(), ExactComplex(-1), -ExactComplex::sqrt2()};
}

/// The 33 parametric rays, entry by entry.
template <ComplexScalar S>
std::vector<Ray<S>> family_rays(const FamilyCoefficients<S>& f) {
  const S& a = f.a;
  const S& b = f.b;
  const S& c = f.c;
  const S& k = f.k;
  const S as = conj(a);
  const S bs = conj(b);
  const S cs = conj(c);
  const S ks = conj(k);
  const S zero{};
  const S one(1);
  const S m1(-1);
  const std::array<std::array<S, 3>, kRayCount> rows = {{
      {one, zero, zero},        // 1
      {zero, one, zero},        // 2
      {zero, zero, one},        // 3
      {zero, one, a},           // 4
      {zero, as, m1},           // 5
      {one, zero, b},           // 6
      {bs, zero, m1},           // 7
      {one, k, zero},           // 8
      {ks, m1, zero},           // 9
      {as * cs, -as, one},      // 10
      {cs, one, a},             // 11
      {-cs, one, a},            // 12
      {as * cs, as, m1},        // 13
      {-bs, bs * c, one},       // 14
      {one, c, b},              // 15
      {one, -c, b},             // 16
      {bs, bs * c, m1},         // 17
      {-ks, one, b * cs},       // 18
      {one, k, -a * c},         // 19
      {one, k, a * c},          // 20
      {ks, m1, b * cs},         // 21
      {one, zero, a * c},       // 22
      {one, -c, zero},          // 23
      {one, c, zero},           // 24
      {one, zero, -a * c},      // 25
      {zero, one, b * cs},      // 26
      {-cs, one, zero},         // 27
      {cs, one, zero},          // 28
      {zero, one, -b * cs},     // 29
      {zero, bs * c, one},      // 30
      {as * cs, zero, one},     // 31
      {-as * cs, zero, one},    // 32
      {zero, -bs * c, one},     // 33
  }};
  std::vector<Ray<S>> rays;
  rays.reserve(kRayCount);
  for (int i = 0; i < kRayCount; ++i) rays.emplace_back(rows[i], i + 1);
  return rays;
}

inline std::vector<ApproxRay> family_rays(const FamilyParams& p) { return family_rays(family_coefficients(p)); }

/// The rotation taking the family frame to the Penrose frame, scaled by
/// 1/sqrt2 so that it is orthogonal:
///   (1/sqrt2) [[1, 1, 0], [0, 0, sqrt2], [-1, 1, 0]]
inline Matrix3<QRoot2> penrose_recovery_rotation() {
  const QRoot2 h = QRoot2(Rational(0), Rational(1, 2));  // 1/sqrt2
  return {{{h, h, QRoot2(0)}, {QRoot2(0), QRoot2(0), QRoot2(1)}, {-h, h, QRoot2(0)}}};
}

/// Family rays at the Penrose point, rotated into the Penrose frame. Each
/// result is read as spin-1 components (c+, c0, c-).
inline std::vector<ExactRay> penrose_from_family() {
  const auto rotation = penrose_recovery_rotation();
  std::vector<ExactRay> out;
  out.reserve(kRayCount);
  for (const ExactRay& r : family_rays(penrose_point())) out.push_back(apply(rotation, r));
  return out;
}

/// Majorana extraction of every penrose_from_family ray.
inline std::vector<ApproxMPair> recovered_penrose_mpairs() {
  std::vector<ApproxMPair> out;
  out.reserve(kRayCount);
  for (const ExactRay& r : penrose_from_family()) out.push_back(mpair_from_state(SpinState(to_approx(r))));
  return out;
}

}  // namespace ksproof
