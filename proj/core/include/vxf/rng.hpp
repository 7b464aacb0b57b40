#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

namespace vxf {

using Rng = std::mt19937_64;

template <class T>
std::vector<T> randn_vec(Rng& rng, int64_t n, T stddev = T(1)) {
  std::normal_distribution<double> d(0.0, 1.0);
  std::vector<T> out(static_cast<size_t>(n));
  for (auto& v : out) v = static_cast<T>(d(rng)) * stddev;
  return out;
}

// Normal(0, std) with samples outside 2 std redrawn. Standard ViT-style init.
template <class T>
std::vector<T> trunc_normal_vec(Rng& rng, int64_t n, T stddev) {
  std::normal_distribution<double> d(0.0, 1.0);
  std::vector<T> out(static_cast<size_t>(n));
  for (auto& v : out) {
    double z = d(rng);
    while (std::abs(z) > 2.0) z = d(rng);
    v = static_cast<T>(z) * stddev;
  }
  return out;
}

template <class T>
std::vector<T> uniform_vec(Rng& rng, int64_t n, T lo, T hi) {
  std::uniform_real_distribution<double> d(static_cast<double>(lo),
                                           static_cast<double>(hi));
  std::vector<T> out(static_cast<size_t>(n));
  for (auto& v : out) v = static_cast<T>(d(rng));
  return out;
}

inline int64_t uniform_int(Rng& rng, int64_t lo, int64_t hi) {  // inclusive
  std::uniform_int_distribution<int64_t> d(lo, hi);
  return d(rng);
}

inline double uniform_real(Rng& rng, double lo, double hi) {
  std::uniform_real_distribution<double> d(lo, hi);
  return d(rng);
}

}  // namespace vxf
