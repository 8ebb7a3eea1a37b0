#include "coxjsj/coxeter_system.hpp"

#include <algorithm>
#include <map>
#include <utility>

#include "coxjsj/error.hpp"

namespace coxjsj {

void sort_unique(std::vector<GeneratorSubset>& family) {
  std::sort(family.begin(), family.end(), LexLess{});
  family.erase(std::unique(family.begin(), family.end()), family.end());
}

std::string OrderLabel::to_string() const { return is_finite() ? std::to_string(m_) : "inf"; }

std::string to_string(const CoxeterSystem& sys, GeneratorSubset subset) {
  std::string out = "{";
  for (std::size_t i : subset) {
    if (out.size() > 1) out += ',';
    out += sys.name(i);
  }
  return out + "}";
}

bool valid_generator_name(std::string_view name) {
  std::size_t core = name.find_last_not_of('\'');
  if (core == std::string_view::npos) return false;
  for (std::size_t i = 0; i <= core; ++i) {
    char c = name[i];
    bool ok = (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') || c == '_';
    if (!ok) return false;
  }
  return true;
}

std::optional<std::size_t> CoxeterSystem::find(std::string_view name) const {
  auto it = std::lower_bound(names_.begin(), names_.end(), name);
  if (it == names_.end() || *it != name) return std::nullopt;
  return static_cast<std::size_t>(it - names_.begin());
}

std::size_t CoxeterSystem::index_of(std::string_view name) const {
  if (auto i = find(name)) return *i;
  throw Error("unknown generator '" + std::string(name) + "'");
}

OrderLabel CoxeterSystem::order(std::size_t i, std::size_t j) const {
  if (i >= rank() || j >= rank()) throw Error("generator index out of range");
  std::uint32_t m = orders_[i * rank() + j];
  return m == 0 ? OrderLabel::infinity() : OrderLabel(m);
}

GeneratorSubset CoxeterSystem::subset(const std::vector<std::string>& names) const {
  GeneratorSubset out;
  for (const auto& n : names) out.insert(index_of(n));
  return out;
}

std::vector<std::string> CoxeterSystem::names_of(GeneratorSubset subset) const {
  require_subset(subset);
  std::vector<std::string> out;
  for (std::size_t i : subset) out.push_back(names_[i]);
  return out;
}

void CoxeterSystem::require_subset(GeneratorSubset subset) const {
  if (!subset.subset_of(all())) throw Error("subset is not contained in the generating set");
}

std::vector<CoxeterSystem::Edge> CoxeterSystem::edges() const {
  std::vector<Edge> out;
  for (std::size_t i = 0; i < rank(); ++i)
    for (std::size_t j = i + 1; j < rank(); ++j)
      if (std::uint32_t m = orders_[i * rank() + j]; m != 0) out.push_back({i, j, m});
  return out;
}

CoxeterSystem new_system(std::vector<std::string> generators, const std::vector<OrderSpec>& orders) {
  if (generators.size() > kMaxRank)
    throw Error("rank " + std::to_string(generators.size()) + " exceeds the supported maximum of " +
                std::to_string(kMaxRank));
  for (const auto& g : generators)
    if (!valid_generator_name(g)) throw Error("invalid generator name '" + g + "'");
  std::sort(generators.begin(), generators.end());
  if (auto dup = std::adjacent_find(generators.begin(), generators.end()); dup != generators.end())
    throw Error("duplicate generator '" + *dup + "'");

  CoxeterSystem sys;
  sys.names_ = std::move(generators);
  const std::size_t n = sys.rank();
  sys.orders_.assign(n * n, 0);
  for (std::size_t i = 0; i < n; ++i) sys.orders_[i * n + i] = 1;

  std::map<std::pair<std::size_t, std::size_t>, bool> seen;
  for (const auto& spec : orders) {
    std::size_t i = sys.index_of(spec.first);
    std::size_t j = sys.index_of(spec.second);
    if (i == j) throw Error("self-pair '" + spec.first + "'");
    if (spec.order.is_finite() && spec.order.value() < 2)
      throw Error("order label for " + spec.first + "," + spec.second + " must be >= 2 or inf");
    auto key = std::minmax(i, j);
    if (!seen.emplace(key, true).second)
      throw Error("duplicate pair " + spec.first + "," + spec.second);
    std::uint32_t m = spec.order.is_finite() ? spec.order.value() : 0;
    sys.orders_[i * n + j] = m;
    sys.orders_[j * n + i] = m;
  }

  sys.neighbors_.assign(n, GeneratorSubset{});
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j && sys.orders_[i * n + j] != 0) sys.neighbors_[i].insert(j);
  return sys;
}

bool is_complete(const CoxeterSystem& sys, GeneratorSubset subset) {
  sys.require_subset(subset);
  for (std::size_t i : subset)
    if (!(subset.without(i)).subset_of(sys.neighbors(i))) return false;
  return true;
}

CoxeterSystem induced_subsystem(const CoxeterSystem& sys, GeneratorSubset subset) {
  sys.require_subset(subset);
  std::vector<OrderSpec> orders;
  for (const auto& e : sys.edges())
    if (subset.contains(e.first) && subset.contains(e.second))
      orders.push_back({sys.name(e.first), sys.name(e.second), OrderLabel(e.order)});
  return new_system(sys.names_of(subset), orders);
}

namespace {

template <class Adjacent>
std::vector<GeneratorSubset> components_by(const CoxeterSystem& sys, GeneratorSubset subset, Adjacent adjacent) {
  sys.require_subset(subset);
  std::vector<GeneratorSubset> out;
  GeneratorSubset rest = subset;
  while (!rest.empty()) {
    GeneratorSubset comp = GeneratorSubset::single(rest.least());
    GeneratorSubset frontier = comp;
    while (!frontier.empty()) {
      GeneratorSubset next;
      for (std::size_t v : frontier) next |= adjacent(v);
      next = (next & subset) - comp;
      comp |= next;
      frontier = next;
    }
    out.push_back(comp);
    rest -= comp;
  }
  return out;
}

}  // namespace

std::vector<GeneratorSubset> diagram_components(const CoxeterSystem& sys, GeneratorSubset subset) {
  return components_by(sys, subset, [&](std::size_t v) { return sys.neighbors(v); });
}

std::vector<GeneratorSubset> coxeter_diagram_components(const CoxeterSystem& sys, GeneratorSubset subset) {
  return components_by(sys, subset, [&](std::size_t v) {
    GeneratorSubset out;
    for (std::size_t u = 0; u < sys.rank(); ++u)
      if (u != v && sys.order(v, u) != OrderLabel(2)) out.insert(u);
    return out;
  });
}

}  // namespace coxjsj
