#include "coxjsj/oracle.hpp"

#include <algorithm>
#include <deque>
#include <string>

#include "coxjsj/error.hpp"

namespace coxjsj::oracle {

namespace {

void require_rank(const CoxeterSystem& sys, std::size_t bound) {
  if (sys.rank() > bound)
    throw BoundExceeded("rank " + std::to_string(sys.rank()) + " exceeds the brute-force bound " +
                        std::to_string(bound));
}

// Number of connected components of the diagram induced on each mask.
std::vector<std::uint8_t> component_counts(const CoxeterSystem& sys) {
  const std::size_t n = sys.rank();
  std::vector<std::uint8_t> count(std::size_t{1} << n, 0);
  std::vector<std::uint64_t> nbr(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j && sys.order(i, j).is_finite()) nbr[i] |= std::uint64_t{1} << j;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
    std::uint64_t rest = mask;
    std::uint8_t c = 0;
    while (rest) {
      std::uint64_t comp = rest & (~rest + 1);
      std::uint64_t grown = comp;
      do {
        comp = grown;
        for (std::uint64_t b = comp; b; b &= b - 1) grown |= nbr[static_cast<std::size_t>(std::countr_zero(b))] & mask;
      } while (grown != comp);
      rest &= ~comp;
      ++c;
    }
    count[mask] = c;
  }
  return count;
}

std::vector<bool> clique_table(const CoxeterSystem& sys) {
  const std::size_t n = sys.rank();
  std::vector<bool> clique(std::size_t{1} << n, true);
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
    std::size_t low = static_cast<std::size_t>(std::countr_zero(mask));
    std::uint64_t rest = mask & (mask - 1);
    bool ok = clique[rest];
    for (std::uint64_t b = rest; b && ok; b &= b - 1)
      if (!sys.order(low, static_cast<std::size_t>(std::countr_zero(b))).is_finite()) ok = false;
    clique[mask] = ok;
  }
  return clique;
}

bool same_component(const CoxeterSystem& sys, std::uint64_t allowed, std::size_t a, std::size_t b) {
  std::uint64_t seen = std::uint64_t{1} << a;
  std::deque<std::size_t> queue{a};
  while (!queue.empty()) {
    std::size_t v = queue.front();
    queue.pop_front();
    if (v == b) return true;
    for (std::size_t u = 0; u < sys.rank(); ++u) {
      std::uint64_t bit = std::uint64_t{1} << u;
      if ((allowed & bit) && !(seen & bit) && u != v && sys.order(v, u).is_finite()) {
        seen |= bit;
        queue.push_back(u);
      }
    }
  }
  return false;
}

std::vector<GeneratorSubset> sorted(std::vector<GeneratorSubset> family) {
  sort_unique(family);
  return family;
}

}  // namespace

std::vector<GeneratorSubset> brute_vertex_sets(const CoxeterSystem& sys, std::size_t rank_bound) {
  require_rank(sys, rank_bound);
  const std::size_t n = sys.rank();
  auto comps = component_counts(sys);
  auto clique = clique_table(sys);
  std::vector<std::uint64_t> unseparated;
  for (std::uint64_t r = 1; r < (std::uint64_t{1} << n); ++r) {
    bool separated = false;
    // every submask C of r, including the empty set
    for (std::uint64_t c = r;; c = (c - 1) & r) {
      if (clique[c] && comps[r & ~c] >= 2) {
        separated = true;
        break;
      }
      if (c == 0) break;
    }
    if (!separated) unseparated.push_back(r);
  }
  std::sort(unseparated.begin(), unseparated.end(),
            [](std::uint64_t x, std::uint64_t y) { return std::popcount(x) > std::popcount(y); });
  std::vector<GeneratorSubset> maximal;
  for (std::uint64_t r : unseparated) {
    bool covered = std::any_of(maximal.begin(), maximal.end(),
                               [&](GeneratorSubset m) { return (r & ~m.bits()) == 0; });
    if (!covered) maximal.emplace_back(r);
  }
  return sorted(std::move(maximal));
}

std::vector<GeneratorSubset> brute_minimal_ab_separators(const CoxeterSystem& sys, std::size_t a, std::size_t b,
                                                         std::size_t rank_bound) {
  require_rank(sys, rank_bound);
  if (a >= sys.rank() || b >= sys.rank() || a == b) throw Error("need two distinct generators");
  const std::uint64_t all = sys.all().bits();
  const std::uint64_t pair = (std::uint64_t{1} << a) | (std::uint64_t{1} << b);
  const std::uint64_t pool = all & ~pair;
  auto separates = [&](std::uint64_t s) { return !same_component(sys, all & ~s, a, b); };
  std::vector<GeneratorSubset> out;
  for (std::uint64_t s = pool;; s = (s - 1) & pool) {
    if (separates(s)) {
      bool minimal = true;
      if (s != 0)
        for (std::uint64_t t = (s - 1) & s;; t = (t - 1) & s) {
          if (separates(t)) {
            minimal = false;
            break;
          }
          if (t == 0) break;
        }
      if (minimal) out.emplace_back(s);
    }
    if (s == 0) break;
  }
  return sorted(std::move(out));
}

std::vector<GeneratorSubset> brute_relative_minimal_separators(const CoxeterSystem& sys, std::size_t rank_bound) {
  require_rank(sys, rank_bound);
  std::vector<GeneratorSubset> out;
  for (std::size_t a = 0; a < sys.rank(); ++a)
    for (std::size_t b = a + 1; b < sys.rank(); ++b) {
      auto seps = brute_minimal_ab_separators(sys, a, b, rank_bound);
      out.insert(out.end(), seps.begin(), seps.end());
    }
  return sorted(std::move(out));
}

std::vector<GeneratorSubset> brute_complete_relative_minimal_separators(const CoxeterSystem& sys,
                                                                        std::size_t rank_bound) {
  auto all = brute_relative_minimal_separators(sys, rank_bound);
  auto clique = clique_table(sys);
  std::erase_if(all, [&](GeneratorSubset s) { return !clique[s.bits()]; });
  return all;
}

std::vector<GeneratorSubset> brute_minimal_separators(const CoxeterSystem& sys, std::size_t rank_bound) {
  require_rank(sys, rank_bound);
  const std::uint64_t all = sys.all().bits();
  auto comps = component_counts(sys);
  auto separates = [&](std::uint64_t s) { return comps[all & ~s] >= 2; };
  std::vector<GeneratorSubset> out;
  for (std::uint64_t s = 0; s <= all; ++s) {
    if (!separates(s)) continue;
    bool minimal = true;
    if (s != 0)
      for (std::uint64_t t = (s - 1) & s;; t = (t - 1) & s) {
        if (separates(t)) {
          minimal = false;
          break;
        }
        if (t == 0) break;
      }
    if (minimal) out.emplace_back(s);
  }
  return sorted(std::move(out));
}

bool brute_is_chordal(const CoxeterSystem& sys, std::size_t rank_bound) {
  require_rank(sys, rank_bound);
  const std::size_t n = sys.rank();
  auto comps = component_counts(sys);
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
    if (std::popcount(mask) < 4 || comps[mask] != 1) continue;
    bool cycle = true;
    for (std::uint64_t b = mask; b && cycle; b &= b - 1) {
      std::size_t v = static_cast<std::size_t>(std::countr_zero(b));
      int degree = 0;
      for (std::uint64_t c = mask; c; c &= c - 1) {
        std::size_t u = static_cast<std::size_t>(std::countr_zero(c));
        if (u != v && sys.order(v, u).is_finite()) ++degree;
      }
      cycle = degree == 2;
    }
    if (cycle) return false;
  }
  return true;
}

namespace {

class CosetTable {
 public:
  CosetTable(std::size_t generators, std::size_t cap) : k_(generators), cap_(cap) { add_row(); }

  std::size_t rows() const { return parent_.size(); }
  bool live(std::size_t c) const { return parent_[c] == c; }
  long at(std::size_t c, std::size_t x) const { return table_[c * k_ + x]; }

  void run(const std::vector<std::vector<std::size_t>>& relators) {
    for (std::size_t c = 0; c < rows(); ++c) {
      for (const auto& r : relators) {
        if (!live(c)) break;
        scan_and_fill(c, r);
      }
      for (std::size_t x = 0; x < k_ && live(c); ++x)
        if (at(c, x) < 0) define(c, x);
    }
  }

 private:
  void set(std::size_t c, std::size_t x, long v) { table_[c * k_ + x] = v; }

  std::size_t add_row() {
    if (rows() >= cap_) throw BoundExceeded("coset table exceeded " + std::to_string(cap_) + " rows");
    std::size_t c = rows();
    parent_.push_back(c);
    table_.resize(table_.size() + k_, -1);
    return c;
  }

  void define(std::size_t c, std::size_t x) {
    std::size_t d = add_row();
    set(c, x, static_cast<long>(d));
    set(d, x, static_cast<long>(c));
  }

  // Generators are involutions, so each column is its own inverse column.
  void scan_and_fill(std::size_t c, const std::vector<std::size_t>& w) {
    std::size_t f = c, b = c;
    long i = 0, j = static_cast<long>(w.size()) - 1;
    while (true) {
      while (i <= j && at(f, w[i]) >= 0) f = static_cast<std::size_t>(at(f, w[i++]));
      if (i > j) {
        if (f != b) coincidence(f, b);
        return;
      }
      while (j >= i && at(b, w[j]) >= 0) b = static_cast<std::size_t>(at(b, w[j--]));
      if (j < i) {
        coincidence(f, b);
        return;
      }
      if (i == j) {
        set(f, w[i], static_cast<long>(b));
        set(b, w[i], static_cast<long>(f));
        return;
      }
      define(f, w[i]);
    }
  }

  std::size_t rep(std::size_t c) {
    std::size_t r = c;
    while (parent_[r] != r) r = parent_[r];
    while (parent_[c] != r) {
      std::size_t next = parent_[c];
      parent_[c] = r;
      c = next;
    }
    return r;
  }

  void merge(std::size_t k, std::size_t l, std::vector<std::size_t>& queue) {
    k = rep(k);
    l = rep(l);
    if (k == l) return;
    if (k > l) std::swap(k, l);
    parent_[l] = k;
    queue.push_back(l);
  }

  void coincidence(std::size_t a, std::size_t b) {
    std::vector<std::size_t> queue;
    merge(a, b, queue);
    for (std::size_t q = 0; q < queue.size(); ++q) {
      std::size_t e = queue[q];
      for (std::size_t x = 0; x < k_; ++x) {
        if (at(e, x) < 0) continue;
        std::size_t f = static_cast<std::size_t>(at(e, x));
        set(f, x, -1);
        std::size_t e1 = rep(e);
        std::size_t f1 = rep(f);
        if (at(e1, x) >= 0) {
          merge(f1, static_cast<std::size_t>(at(e1, x)), queue);
        } else if (at(f1, x) >= 0) {
          merge(e1, static_cast<std::size_t>(at(f1, x)), queue);
        } else {
          set(e1, x, static_cast<long>(f1));
          set(f1, x, static_cast<long>(e1));
        }
      }
    }
  }

  std::size_t k_;
  std::size_t cap_;
  std::vector<std::size_t> parent_;
  std::vector<long> table_;
};

}  // namespace

FiniteGroupTable coset_enumerate(const CoxeterSystem& sys, GeneratorSubset subset, std::size_t order_bound) {
  sys.require_subset(subset);
  if (order_bound == 0) throw Error("order bound must be positive");
  FiniteGroupTable out;
  out.ambient_rank = sys.rank();
  out.generators = subset.indices();
  const std::size_t k = out.generators.size();

  std::vector<std::vector<std::size_t>> relators;
  for (std::size_t i = 0; i < k; ++i) relators.push_back({i, i});
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i + 1; j < k; ++j) {
      OrderLabel m = sys.order(out.generators[i], out.generators[j]);
      if (!m.is_finite()) continue;
      std::vector<std::size_t> r;
      for (std::uint32_t t = 0; t < m.value(); ++t) {
        r.push_back(i);
        r.push_back(j);
      }
      relators.push_back(std::move(r));
    }

  CosetTable table(std::max<std::size_t>(k, 1), 64 * order_bound + 4096);
  if (k > 0) table.run(relators);

  std::vector<long> renumber(table.rows(), -1);
  std::size_t order = 0;
  for (std::size_t c = 0; c < table.rows(); ++c)
    if (table.live(c)) renumber[c] = static_cast<long>(order++);
  if (k == 0) order = 1;
  if (order > order_bound)
    throw BoundExceeded("group order " + std::to_string(order) + " exceeds the bound " + std::to_string(order_bound));

  out.order = order;
  out.action.assign(k, std::vector<std::uint32_t>(order));
  for (std::size_t c = 0; c < table.rows(); ++c) {
    if (!table.live(c)) continue;
    for (std::size_t x = 0; x < k; ++x)
      out.action[x][static_cast<std::size_t>(renumber[c])] =
          static_cast<std::uint32_t>(renumber[static_cast<std::size_t>(table.at(c, x))]);
  }

  out.length.assign(order, 0);
  out.word.assign(order, {});
  std::vector<bool> seen(order, false);
  std::deque<std::uint32_t> queue{0};
  seen[0] = true;
  while (!queue.empty()) {
    std::uint32_t v = queue.front();
    queue.pop_front();
    for (std::uint32_t x = 0; x < k; ++x) {
      std::uint32_t u = out.action[x][v];
      if (seen[u]) continue;
      seen[u] = true;
      out.length[u] = out.length[v] + 1;
      out.word[u] = out.word[v];
      out.word[u].push_back(x);
      queue.push_back(u);
    }
  }
  return out;
}

std::uint32_t multiply(const FiniteGroupTable& table, std::uint32_t element, const std::vector<std::uint32_t>& word) {
  for (std::uint32_t x : word) element = table.action.at(x).at(element);
  return element;
}

std::uint32_t longest_element(const FiniteGroupTable& table) {
  auto it = std::max_element(table.length.begin(), table.length.end());
  if (std::count(table.length.begin(), table.length.end(), *it) != 1)
    throw Error("maximal-length element is not unique");
  return static_cast<std::uint32_t>(it - table.length.begin());
}

namespace {

std::uint32_t conjugate(const FiniteGroupTable& table, std::uint32_t g, std::uint32_t generator) {
  std::vector<std::uint32_t> word = table.word[g];
  word.push_back(generator);
  word.insert(word.end(), table.word[g].rbegin(), table.word[g].rend());
  return multiply(table, 0, word);
}

std::optional<std::size_t> generator_position(const FiniteGroupTable& table, std::uint32_t element) {
  for (std::size_t k = 0; k < table.generators.size(); ++k)
    if (table.action[k][0] == element) return k;
  return std::nullopt;
}

}  // namespace

std::vector<std::size_t> oracle_w0_sigma(const FiniteGroupTable& table) {
  std::uint32_t w0 = longest_element(table);
  std::vector<std::size_t> sigma(table.ambient_rank);
  for (std::size_t i = 0; i < sigma.size(); ++i) sigma[i] = i;
  for (std::size_t k = 0; k < table.generators.size(); ++k) {
    auto image = generator_position(table, conjugate(table, w0, static_cast<std::uint32_t>(k)));
    if (!image) throw Error("conjugate of a generator by the longest element is not a generator");
    sigma[table.generators[k]] = table.generators[*image];
  }
  return sigma;
}

std::optional<std::uint32_t> realizing_element(const FiniteGroupTable& table, const std::vector<std::size_t>& sigma) {
  std::vector<std::uint32_t> target(table.generators.size());
  for (std::size_t k = 0; k < table.generators.size(); ++k) {
    auto it = std::find(table.generators.begin(), table.generators.end(), sigma.at(table.generators[k]));
    if (it == table.generators.end()) return std::nullopt;
    target[k] = table.action[static_cast<std::size_t>(it - table.generators.begin())][0];
  }
  for (std::uint32_t g = 0; g < table.order; ++g) {
    bool ok = true;
    for (std::size_t k = 0; k < table.generators.size() && ok; ++k)
      ok = conjugate(table, g, static_cast<std::uint32_t>(k)) == target[k];
    if (ok) return g;
  }
  return std::nullopt;
}

}  // namespace coxjsj::oracle
