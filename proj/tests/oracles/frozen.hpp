#pragma once

// Values produced by the oracles in oracles.hpp and frozen here.

namespace oracle::frozen {

inline constexpr double kAlpha = 0.0072973525693;

struct CoulombLevel {
  int n, l;
  double energy;  // hbar = c = m0 = 1
};

// shooting_energy(n, l, kAlpha) with 60000 RK4 steps in long double.
inline constexpr CoulombLevel kShooting[] = {
    {0, 0, 0.999973372550224720221},
    {1, 0, 0.999993343292656753838},
    {0, 1, 0.999993343528991695472},
};

}  // namespace oracle::frozen
