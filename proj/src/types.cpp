#include "rsdqn/types.hpp"

#include <cmath>

namespace rsdqn {

Vec softmax(const Vec& logits) {
  if (logits.size() == 0) throw std::invalid_argument("softmax of empty vector");
  const double m = logits.maxCoeff();
  Vec e = (logits.array() - m).exp();
  return e / e.sum();
}

double cross_entropy(const Vec& logits, int target) {
  if (target < 0 || target >= logits.size())
    throw std::out_of_range("cross_entropy: target index out of range");
  const double m = logits.maxCoeff();
  const double lse = std::log((logits.array() - m).exp().sum()) + m;
  return lse - logits[target];
}

double mse(const Vec& a, const Vec& b) {
  if (a.size() != b.size())
    throw std::invalid_argument("mse: size mismatch");
  return (a - b).squaredNorm() / static_cast<double>(a.size());
}

}  // namespace rsdqn
