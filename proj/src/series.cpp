#include "multifan/series.hpp"

namespace multifan {

std::vector<Rat> bernoulli_plus(int order) {
  std::vector<Rat> b(order + 1);
  b[0] = 1;
  for (int m = 1; m <= order; ++m) {
    Rat acc = 0;
    for (int j = 0; j < m; ++j) acc += Rat(binomial(m + 1, j)) * b[j];
    b[m] = -acc / Rat(m + 1);
  }
  if (order >= 1) b[1] = Rat(1, 2);
  return b;
}

std::vector<Rat> todd_coefficients(int order) {
  auto b = bernoulli_plus(order);
  for (int k = 0; k <= order; ++k) b[k] /= Rat(factorial(k));
  return b;
}

} // namespace multifan
