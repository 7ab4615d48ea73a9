#pragma once

// Seeded random inputs for property checks: uniform directions, M-pairs,
// spin states and family phases.

#include "ksproof/catalog.hpp"
#include "ksproof/majorana.hpp"

#include <array>
#include <numbers>
#include <random>

namespace ksproof {

template <class Rng>
ApproxMVector random_direction(Rng& rng) {
  std::normal_distribution<double> n(0.0, 1.0);
  while (true) {
    const double x = n(rng), y = n(rng), z = n(rng);
    const double len = std::sqrt(x * x + y * y + z * z);
    if (len > 1e-6) return ApproxMVector(x / len, y / len, z / len);
  }
}

template <class Rng>
ApproxMPair random_mpair(Rng& rng) {
  ApproxMVector u = random_direction(rng);
  ApproxMVector v = random_direction(rng);
  return {u, v};
}

template <class Rng>
SpinState random_state(Rng& rng) {
  std::normal_distribution<double> n(0.0, 1.0);
  while (true) {
    std::array<double, 6> d{};
    for (double& x : d) x = n(rng);
    const ApproxComplex a(d[0], d[1]), b(d[2], d[3]), c(d[4], d[5]);
    if (a.norm2() + b.norm2() + c.norm2() > 1e-6) return SpinState(a, b, c);
  }
}

template <class Rng>
FamilyParams random_family_params(Rng& rng) {
  std::uniform_real_distribution<double> phase(0.0, 2.0 * std::numbers::pi);
  FamilyParams p;
  p.alpha = phase(rng);
  p.beta = phase(rng);
  p.gamma = phase(rng);
  return p;
}

}  // namespace ksproof
