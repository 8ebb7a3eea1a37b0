#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "coxjsj/coxeter_system.hpp"

namespace coxjsj {

/// Relative weights of the labels drawn for a pair that got an edge.
struct LabelWeights {
  double m2 = 3.0;
  double m3 = 3.0;
  double m4 = 1.0;
  double m5 = 1.0;
  double inf = 0.0;
};

inline constexpr std::uint64_t kDefaultSeed = 20240611;

/// Generators s0, s1, ... (zero-padded so names sort numerically). Each pair
/// gets an edge with probability `edge_probability`, labelled from `weights`.
/// The output depends only on the arguments, on every platform.
CoxeterSystem random_system(std::size_t rank, double edge_probability, const LabelWeights& weights,
                            std::uint64_t seed);

/// `count` systems with rank uniform in [1, max_rank] and edge probability
/// uniform in [0.2, 0.8], default weights.
std::vector<CoxeterSystem> random_corpus(std::size_t count, std::size_t max_rank, std::uint64_t seed);

}  // namespace coxjsj
