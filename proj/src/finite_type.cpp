#include "coxjsj/finite_type.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

#include "coxjsj/diagram.hpp"

namespace coxjsj {

std::string FiniteTypeLabel::to_string() const {
  switch (family) {
    case Family::A: return "A" + std::to_string(rank);
    case Family::B: return "B" + std::to_string(rank);
    case Family::D: return "D" + std::to_string(rank);
    case Family::E: return "E" + std::to_string(rank);
    case Family::F: return "F" + std::to_string(rank);
    case Family::H: return "H" + std::to_string(rank);
    case Family::I2: return "I2(" + std::to_string(m) + ")";
  }
  return "?";
}

bool is_classified(const FiniteTypeLabel& t) {
  switch (t.family) {
    case Family::A: return t.rank >= 1;
    case Family::B: return t.rank >= 2;
    case Family::D: return t.rank >= 4;
    case Family::E: return t.rank >= 6 && t.rank <= 8;
    case Family::F: return t.rank == 4;
    case Family::H: return t.rank == 3 || t.rank == 4;
    case Family::I2: return t.rank == 2 && t.m >= 5;
  }
  return false;
}

namespace {

std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > std::numeric_limits<std::uint64_t>::max() / a) return std::numeric_limits<std::uint64_t>::max();
  return a * b;
}

std::uint64_t factorial(unsigned n) {
  std::uint64_t out = 1;
  for (unsigned k = 2; k <= n; ++k) out = saturating_mul(out, k);
  return out;
}

struct Template {
  FiniteTypeLabel label;
  LabelMatrix matrix;
  std::vector<std::size_t> w0;
};

Template make_template(FiniteTypeLabel label) {
  const std::size_t n = label.rank;
  Template t{label, {n, std::vector<std::uint32_t>(n * n, 2)}, {}};
  for (std::size_t i = 0; i < n; ++i) t.matrix.entries[i * n + i] = 1;
  auto link = [&](std::size_t i, std::size_t j, std::uint32_t m) {
    t.matrix.entries[i * n + j] = m;
    t.matrix.entries[j * n + i] = m;
  };
  t.w0.resize(n);
  std::iota(t.w0.begin(), t.w0.end(), std::size_t{0});

  switch (label.family) {
    case Family::A:
      for (std::size_t i = 0; i + 1 < n; ++i) link(i, i + 1, 3);
      for (std::size_t i = 0; i < n; ++i) t.w0[i] = n - 1 - i;
      break;
    case Family::B:
      link(0, 1, 4);
      for (std::size_t i = 1; i + 1 < n; ++i) link(i, i + 1, 3);
      break;
    case Family::D:
      // chain 0..n-2, fork end n-1 attached to n-3
      for (std::size_t i = 0; i + 2 < n; ++i) link(i, i + 1, 3);
      link(n - 3, n - 1, 3);
      if (n % 2 == 1) std::swap(t.w0[n - 2], t.w0[n - 1]);
      break;
    case Family::E:
      // chain 0..n-2, branch n-1 attached to 2
      for (std::size_t i = 0; i + 2 < n; ++i) link(i, i + 1, 3);
      link(2, n - 1, 3);
      if (n == 6) {
        std::swap(t.w0[0], t.w0[4]);
        std::swap(t.w0[1], t.w0[3]);
      }
      break;
    case Family::F:
      link(0, 1, 3);
      link(1, 2, 4);
      link(2, 3, 3);
      break;
    case Family::H:
      link(0, 1, 5);
      for (std::size_t i = 1; i + 1 < n; ++i) link(i, i + 1, 3);
      break;
    case Family::I2:
      link(0, 1, label.m);
      if (label.m % 2 == 1) std::swap(t.w0[0], t.w0[1]);
      break;
  }
  return t;
}

std::vector<FiniteTypeLabel> candidates(const LabelMatrix& factor) {
  const unsigned n = static_cast<unsigned>(factor.size);
  if (n == 1) return {{Family::A, 1, 0}};
  if (n == 2) {
    std::uint32_t m = factor.at(0, 1);
    if (m == 0) return {};
    if (m == 3) return {{Family::A, 2, 0}};
    if (m == 4) return {{Family::B, 2, 0}};
    return {{Family::I2, 2, m}};
  }
  std::vector<FiniteTypeLabel> out{{Family::A, n, 0}, {Family::B, n, 0}};
  if (n >= 4) out.push_back({Family::D, n, 0});
  if (n >= 6 && n <= 8) out.push_back({Family::E, n, 0});
  if (n == 4) out.push_back({Family::F, 4, 0});
  if (n == 3 || n == 4) out.push_back({Family::H, n, 0});
  return out;
}

// Irreducible finite diagrams are trees with n-1 Coxeter edges, all finite.
bool plausible(const LabelMatrix& factor) {
  std::size_t edges = 0;
  for (std::size_t i = 0; i < factor.size; ++i)
    for (std::size_t j = i + 1; j < factor.size; ++j) {
      std::uint32_t m = factor.at(i, j);
      if (m == 0) return false;
      if (m != 2) ++edges;
    }
  return factor.size <= 2 || edges + 1 == factor.size;
}

}  // namespace

std::uint64_t group_order(const FiniteTypeLabel& t) {
  switch (t.family) {
    case Family::A: return factorial(t.rank + 1);
    case Family::B: return saturating_mul(std::uint64_t{1} << std::min(t.rank, 63u), factorial(t.rank));
    case Family::D: return saturating_mul(std::uint64_t{1} << std::min(t.rank - 1, 63u), factorial(t.rank));
    case Family::E: return t.rank == 6 ? 51840 : t.rank == 7 ? 2903040 : 696729600;
    case Family::F: return 1152;
    case Family::H: return t.rank == 3 ? 120 : 14400;
    case Family::I2: return 2 * std::uint64_t{t.m};
  }
  return 0;
}

std::uint64_t reflection_count(const FiniteTypeLabel& t) {
  const std::uint64_t n = t.rank;
  switch (t.family) {
    case Family::A: return n * (n + 1) / 2;
    case Family::B: return n * n;
    case Family::D: return n * (n - 1);
    case Family::E: return n == 6 ? 36 : n == 7 ? 63 : 120;
    case Family::F: return 24;
    case Family::H: return n == 3 ? 15 : 60;
    case Family::I2: return t.m;
  }
  return 0;
}

std::optional<std::vector<FactorMatch>> match_finite_type(const CoxeterSystem& sys, GeneratorSubset subset) {
  std::vector<FactorMatch> out;
  for (GeneratorSubset factor : coxeter_diagram_components(sys, subset)) {
    LabelMatrix matrix = label_matrix(sys, factor);
    if (!plausible(matrix)) return std::nullopt;
    auto local = factor.indices();
    bool matched = false;
    for (const FiniteTypeLabel& label : candidates(matrix)) {
      Template t = make_template(label);
      auto iso = matrix_isomorphism(t.matrix, matrix);
      if (!iso) continue;
      FactorMatch match{label, factor, {}, t.w0};
      for (std::size_t k = 0; k < iso->size(); ++k) match.generator_of.push_back(local[(*iso)[k]]);
      out.push_back(std::move(match));
      matched = true;
      break;
    }
    if (!matched) return std::nullopt;
  }
  return out;
}

std::optional<std::vector<FiniteTypeLabel>> finite_type(const CoxeterSystem& sys, GeneratorSubset subset) {
  auto matches = match_finite_type(sys, subset);
  if (!matches) return std::nullopt;
  std::vector<FiniteTypeLabel> out;
  for (const auto& m : *matches) out.push_back(m.label);
  return out;
}

std::optional<std::uint64_t> finite_group_order(const CoxeterSystem& sys, GeneratorSubset subset) {
  auto types = finite_type(sys, subset);
  if (!types) return std::nullopt;
  std::uint64_t order = 1;
  for (const auto& t : *types) order = saturating_mul(order, group_order(t));
  return order;
}

}  // namespace coxjsj
