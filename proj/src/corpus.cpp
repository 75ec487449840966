#include "jacobi/corpus.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace jacobi {

Complex random_in_disk(std::mt19937_64& rng, double radius) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const double r = radius * std::sqrt(unit(rng));
  const double angle = 2.0 * std::numbers::pi * unit(rng);
  return std::polar(r, angle);
}

JacobiOperator random_operator(std::mt19937_64& rng, const CorpusOptions& options) {
  std::uniform_int_distribution<int> support(1, options.max_support);
  std::uniform_real_distribution<double> log_strength(std::log(0.02), 0.0);
  std::bernoulli_distribution has_diagonal(0.6), has_offdiagonal(0.4);

  const int M = support(rng);
  const double strength = std::exp(log_strength(rng));
  auto offdiagonal = [&] {
    Complex v;
    do v = 1.0 + strength * random_in_disk(rng, options.max_deviation);
    while (std::abs(v) < options.min_offdiagonal);
    return v;
  };

  std::vector<Entry> a, b, c;
  for (int m = 1; m <= M; ++m) {
    if (m == M || has_diagonal(rng)) b.push_back({m, strength * random_in_disk(rng, options.max_deviation)});
    if (m < M && has_offdiagonal(rng)) {
      a.push_back({m, offdiagonal()});
      c.push_back({m, offdiagonal()});
    }
  }
  return JacobiOperator(std::move(a), std::move(b), std::move(c));
}

std::vector<JacobiOperator> random_corpus(std::uint64_t seed, int size,
                                          const CorpusOptions& options) {
  std::mt19937_64 rng(seed);
  std::vector<JacobiOperator> out;
  out.reserve(static_cast<std::size_t>(std::max(size, 0)));
  for (int i = 0; i < size; ++i) out.push_back(random_operator(rng, options));
  return out;
}

JacobiOperator rescale_perturbation(const JacobiOperator& op, double factor) {
  if (!(factor > 0.0)) throw std::invalid_argument("rescale_perturbation: factor must be > 0");
  std::vector<Entry> a, b, c;
  for (const Entry& e : op.b_entries()) b.push_back({e.index, factor * e.value});
  for (int m = 1; m <= op.last_stored_index(); ++m) {
    const Complex am = op.a(m);
    const Complex product = 1.0 - factor * (1.0 - am * op.c(m));
    if (product == Complex(0.0))
      throw std::invalid_argument("rescale_perturbation: factor makes a_m c_m vanish");
    a.push_back({m, am});
    c.push_back({m, product / am});
  }
  return JacobiOperator(std::move(a), std::move(b), std::move(c));
}

}  // namespace jacobi
