#include "coxjsj/diagram.hpp"

#include <algorithm>
#include <numeric>

namespace coxjsj {

LabelMatrix label_matrix(const CoxeterSystem& sys, GeneratorSubset subset) {
  sys.require_subset(subset);
  auto idx = subset.indices();
  LabelMatrix out;
  out.size = idx.size();
  out.entries.resize(out.size * out.size);
  for (std::size_t i = 0; i < out.size; ++i)
    for (std::size_t j = 0; j < out.size; ++j) {
      OrderLabel m = sys.order(idx[i], idx[j]);
      out.entries[i * out.size + j] = m.is_finite() ? m.value() : 0;
    }
  return out;
}

namespace {

// Colour refinement with labelled edges; colour ids are assigned by sorted
// signature, so they do not depend on the input vertex order.
std::vector<std::uint32_t> refine_colours(const LabelMatrix& m) {
  const std::size_t n = m.size;
  std::vector<std::vector<std::uint64_t>> sig(n);
  for (std::size_t v = 0; v < n; ++v) {
    for (std::size_t u = 0; u < n; ++u)
      if (u != v) sig[v].push_back(m.at(v, u));
    std::sort(sig[v].begin(), sig[v].end());
  }
  auto assign = [&](std::vector<std::uint32_t>& colours) {
    auto sorted = sig;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    for (std::size_t v = 0; v < n; ++v)
      colours[v] = static_cast<std::uint32_t>(std::lower_bound(sorted.begin(), sorted.end(), sig[v]) - sorted.begin());
    return sorted.size();
  };
  std::vector<std::uint32_t> colours(n);
  std::size_t classes = assign(colours);
  while (true) {
    for (std::size_t v = 0; v < n; ++v) {
      sig[v].assign(1, colours[v]);
      for (std::size_t u = 0; u < n; ++u)
        if (u != v) sig[v].push_back((std::uint64_t{m.at(v, u)} << 32) | colours[u]);
      std::sort(sig[v].begin() + 1, sig[v].end());
    }
    std::size_t next = assign(colours);
    if (next == classes) break;
    classes = next;
  }
  return colours;
}

class CanonicalSearch {
 public:
  explicit CanonicalSearch(const LabelMatrix& m) : m_(m), n_(m.size) {
    colours_ = refine_colours(m);
    slot_colour_ = colours_;
    std::sort(slot_colour_.begin(), slot_colour_.end());
    // Interchangeable vertices: identical rows apart from each other.
    twin_.resize(n_);
    std::iota(twin_.begin(), twin_.end(), std::size_t{0});
    for (std::size_t v = 0; v < n_; ++v)
      for (std::size_t u = 0; u < v; ++u) {
        if (twin_[u] != u) continue;
        bool same = true;
        for (std::size_t x = 0; x < n_ && same; ++x)
          if (x != u && x != v && m.at(u, x) != m.at(v, x)) same = false;
        if (same) {
          twin_[v] = u;
          break;
        }
      }
    placed_.assign(n_, false);
    order_.resize(n_);
    code_.resize(n_ * (n_ - (n_ > 0 ? 1 : 0)) / 2);
  }

  CanonicalLabeling run() {
    if (n_ == 0) return {{0}, {}};
    search(0, false);
    CanonicalLabeling out;
    out.code.reserve(best_code_.size() + 1);
    out.code.push_back(static_cast<std::uint32_t>(n_));
    out.code.insert(out.code.end(), best_code_.begin(), best_code_.end());
    out.order = best_order_;
    return out;
  }

 private:
  // `better`: the prefix placed so far is already strictly below the best code.
  void search(std::size_t k, bool better) {
    if (k == n_) {
      if (!have_best_ || better) {
        best_code_ = code_;
        best_order_ = order_;
        have_best_ = true;
      }
      return;
    }
    const std::size_t offset = k * (k - 1) / 2;
    for (std::size_t v = 0; v < n_; ++v) {
      if (placed_[v] || colours_[v] != slot_colour_[k]) continue;
      if (has_unplaced_smaller_twin(v)) continue;
      for (std::size_t j = 0; j < k; ++j) code_[offset + j] = m_.at(order_[j], v);
      bool next_better = better;
      if (have_best_ && !better) {
        int cmp = 0;
        for (std::size_t j = 0; j < k && cmp == 0; ++j) {
          if (code_[offset + j] < best_code_[offset + j]) cmp = -1;
          else if (code_[offset + j] > best_code_[offset + j]) cmp = 1;
        }
        if (cmp > 0) continue;
        next_better = cmp < 0;
      }
      placed_[v] = true;
      order_[k] = v;
      search(k + 1, next_better);
      placed_[v] = false;
      // Once a better prefix has been recorded at a deeper level the flag
      // for this level must be recomputed against the new best.
      if (next_better) better = false;
    }
  }

  bool has_unplaced_smaller_twin(std::size_t v) const {
    std::size_t root = twin_[v];
    if (root == v) return false;
    for (std::size_t u = root; u < v; ++u)
      if (twin_[u] == root && !placed_[u]) return true;
    return false;
  }

  const LabelMatrix& m_;
  std::size_t n_;
  std::vector<std::uint32_t> colours_;
  std::vector<std::uint32_t> slot_colour_;
  std::vector<std::size_t> twin_;
  std::vector<bool> placed_;
  std::vector<std::size_t> order_;
  std::vector<std::uint32_t> code_;
  std::vector<std::uint32_t> best_code_;
  std::vector<std::size_t> best_order_;
  bool have_best_ = false;
};

}  // namespace

CanonicalLabeling canonical_labeling(const LabelMatrix& matrix) { return CanonicalSearch(matrix).run(); }

DiagramKey canonical_form(const CoxeterSystem& sys) { return canonical_form(sys, sys.all()); }

DiagramKey canonical_form(const CoxeterSystem& sys, GeneratorSubset subset) {
  return canonical_labeling(label_matrix(sys, subset)).code;
}

std::optional<std::vector<std::size_t>> matrix_isomorphism(const LabelMatrix& a, const LabelMatrix& b) {
  if (a.size != b.size) return std::nullopt;
  auto ca = canonical_labeling(a);
  auto cb = canonical_labeling(b);
  if (ca.code != cb.code) return std::nullopt;
  std::vector<std::size_t> map(a.size);
  for (std::size_t k = 0; k < a.size; ++k) map[ca.order[k]] = cb.order[k];
  return map;
}

std::optional<std::map<std::string, std::string>> diagram_isomorphic(const CoxeterSystem& first,
                                                                     const CoxeterSystem& second) {
  auto map = matrix_isomorphism(label_matrix(first, first.all()), label_matrix(second, second.all()));
  if (!map) return std::nullopt;
  std::map<std::string, std::string> out;
  for (std::size_t i = 0; i < map->size(); ++i) out.emplace(first.name(i), second.name((*map)[i]));
  return out;
}

}  // namespace coxjsj
