#pragma once

#include <cmath>
#include <cstdio>
#include <random>
#include <string>
#include <utility>

#include "rps/pes.hpp"
#include "rps/rps_core.hpp"

namespace rps::test {

/// Uniform draw in (0, 1] from the top 53 bits, bit-stable across platforms.
inline double unit_uniform(std::mt19937_64& rng) {
  return static_cast<double>((rng() >> 11) + 1) * 0x1.0p-53;
}

/// Uniform point on the simplex over all non-empty events of the frame.
inline PermutationMassFunction random_pmf(const FrameOfDiscernment& frame,
                                          std::mt19937_64& rng) {
  PermutationMassFunction::MassMap masses;
  double total = 0.0;
  for (const auto& event : enumerate_events(frame, false)) {
    const double draw = -std::log(unit_uniform(rng));
    masses.emplace(event, draw);
    total += draw;
  }
  for (auto& [event, mass] : masses) mass /= total;
  return PermutationMassFunction(frame, std::move(masses));
}

/// Value rendered exactly as the CLI renders it at the default precision.
inline std::string fixed4(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.4f", v);
  return buf;
}

/// The printed maximum-entropy distribution for three elements: masses
/// 1/117, 4/117, 15/117 by cardinality over all fifteen tuples.
inline PermutationMassFunction three_element_max_pmf() {
  const FrameOfDiscernment frame({"R", "B", "G"});
  const double by_card[] = {0.0, 1.0 / 117.0, 4.0 / 117.0, 15.0 / 117.0};
  PermutationMassFunction::MassMap masses;
  for (const auto& event : enumerate_events(frame, false)) {
    masses.emplace(event, by_card[event.cardinality()]);
  }
  return PermutationMassFunction(frame, std::move(masses));
}

}  // namespace rps::test
