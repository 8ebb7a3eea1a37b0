#include "coxjsj/random.hpp"

#include <random>
#include <string>

#include "coxjsj/error.hpp"

namespace coxjsj {

namespace {

// std::uniform_real_distribution is implementation-defined; this is not.
double unit(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

}  // namespace

CoxeterSystem random_system(std::size_t rank, double edge_probability, const LabelWeights& weights,
                            std::uint64_t seed) {
  if (rank == 0 || rank > kMaxRank) throw Error("rank must be between 1 and " + std::to_string(kMaxRank));
  if (!(edge_probability >= 0.0 && edge_probability <= 1.0)) throw Error("edge probability must lie in [0, 1]");
  const double table[] = {weights.m2, weights.m3, weights.m4, weights.m5, weights.inf};
  double total = 0;
  for (double w : table) {
    if (w < 0) throw Error("label weights must be nonnegative");
    total += w;
  }
  if (total <= 0) throw Error("label weights must not all be zero");

  const std::size_t width = std::to_string(rank - 1).size();
  std::vector<std::string> names;
  for (std::size_t i = 0; i < rank; ++i) {
    std::string digits = std::to_string(i);
    names.push_back("s" + std::string(width - digits.size(), '0') + digits);
  }

  std::mt19937_64 rng(seed);
  std::vector<OrderSpec> orders;
  for (std::size_t i = 0; i < rank; ++i)
    for (std::size_t j = i + 1; j < rank; ++j) {
      if (unit(rng) >= edge_probability) continue;
      double pick = unit(rng) * total;
      std::size_t k = 0;
      while (k + 1 < std::size(table) && pick >= table[k]) pick -= table[k++];
      if (k == 4) continue;
      orders.push_back({names[i], names[j], OrderLabel(static_cast<std::uint32_t>(k + 2))});
    }
  return new_system(std::move(names), orders);
}

std::vector<CoxeterSystem> random_corpus(std::size_t count, std::size_t max_rank, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<CoxeterSystem> out;
  for (std::size_t i = 0; i < count; ++i) {
    std::size_t rank = 1 + static_cast<std::size_t>(unit(rng) * static_cast<double>(max_rank));
    double p = 0.2 + 0.6 * unit(rng);
    out.push_back(random_system(rank, p, LabelWeights{}, rng()));
  }
  return out;
}

}  // namespace coxjsj
