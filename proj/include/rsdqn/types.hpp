#pragma once

#include <Eigen/Dense>

#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>

namespace rsdqn {

using Mat = Eigen::MatrixXd;
using Vec = Eigen::VectorXd;
using Rng = std::mt19937_64;

// Thrown when a configuration file or option set is invalid. Everything else
// uses the standard exception types (invalid_argument, out_of_range,
// logic_error).
class ConfigError : public std::runtime_error {
 public:
  explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

// splitmix64 finalizer; derives independent substream seeds from a base seed.
inline std::uint64_t split_seed(std::uint64_t base, std::uint64_t stream) {
  std::uint64_t z = base + 0x9e3779b97f4a7c15ULL * (stream + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

inline double uniform_real(Rng& rng, double lo, double hi) {
  std::uniform_real_distribution<double> dist(lo, hi);
  return dist(rng);
}

// Uniform draw from {0, ..., n-1}.
inline int uniform_int(Rng& rng, int n) {
  std::uniform_int_distribution<int> dist(0, n - 1);
  return dist(rng);
}

// Box-Muller without a cached spare, so the engine consumption per call is
// fixed and reproducible.
inline void fill_standard_normal(Rng& rng, double* out, Eigen::Index n) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (Eigen::Index i = 0; i < n; i += 2) {
    double u1 = 0.0;
    do {
      u1 = unit(rng);
    } while (u1 <= 0.0);
    const double u2 = unit(rng);
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double a = 2.0 * M_PI * u2;
    out[i] = r * std::cos(a);
    if (i + 1 < n) out[i + 1] = r * std::sin(a);
  }
}

inline double standard_normal(Rng& rng) {
  double x = 0.0;
  fill_standard_normal(rng, &x, 1);
  return x;
}

inline void fill_standard_normal(Rng& rng, Mat& m) {
  fill_standard_normal(rng, m.data(), m.size());
}

// Ties break toward the lowest index.
inline int argmax_index(const Vec& v) {
  if (v.size() == 0) throw std::invalid_argument("argmax of empty vector");
  int best = 0;
  for (int i = 1; i < v.size(); ++i) {
    if (v[i] > v[best]) best = i;
  }
  return best;
}

Vec softmax(const Vec& logits);

// -log softmax(logits)[target]
double cross_entropy(const Vec& logits, int target);

// Mean of squared differences over all elements. The loss definitions treat
// ||.||^2 with a 1/n factor; the scalar is absorbed into the learning rates.
double mse(const Vec& a, const Vec& b);

}  // namespace rsdqn
