#include "sl2chain/sampling.hpp"

namespace sl2chain {

Rational random_rational(std::mt19937_64& rng, int bound, int max_den) {
  std::uniform_int_distribution<long> num(-bound, bound);
  std::uniform_int_distribution<long> den(1, max_den);
  return make_rational(num(rng), den(rng));
}

Rational random_nonzero_rational(std::mt19937_64& rng, int bound, int max_den) {
  Rational r;
  do {
    r = random_rational(rng, bound, max_den);
  } while (r == 0);
  return r;
}

HomPoly random_hompoly(int degree, std::mt19937_64& rng) {
  std::vector<Rational> c;
  c.reserve(static_cast<std::size_t>(degree) + 1);
  for (int a = 0; a <= degree; ++a) c.push_back(random_rational(rng));
  return HomPoly(degree, std::move(c));
}

}  // namespace sl2chain
