#include "cutsetkit/poset.hpp"

#include <algorithm>
#include <numeric>

#include "cutsetkit/limits.hpp"

namespace cutsetkit {

namespace {

// Iterative DFS cycle search over raw relation edges. Returns a witness
// cycle (without the repeated closing vertex) or empty when acyclic.
std::vector<int> find_cycle(int n, const std::vector<std::vector<int>>& adj) {
  std::vector<int> state(n, 0);  // 0 unseen, 1 on stack, 2 done
  std::vector<int> parent(n, -1);
  for (int root = 0; root < n; ++root) {
    if (state[root] != 0) continue;
    std::vector<std::pair<int, std::size_t>> stack{{root, 0}};
    state[root] = 1;
    while (!stack.empty()) {
      auto& [v, next] = stack.back();
      if (next < adj[v].size()) {
        int w = adj[v][next++];
        if (state[w] == 0) {
          state[w] = 1;
          parent[w] = v;
          stack.emplace_back(w, 0);
        } else if (state[w] == 1) {
          std::vector<int> cycle{v};
          for (int u = v; u != w; u = parent[u]) cycle.push_back(parent[u]);
          std::reverse(cycle.begin(), cycle.end());
          return cycle;
        }
      } else {
        state[v] = 2;
        stack.pop_back();
      }
    }
  }
  return {};
}

}  // namespace

Poset::Poset(int n, const std::vector<std::pair<int, int>>& relations,
             std::vector<std::string> names)
    : n_(n), names_(std::move(names)) {
  if (n < 0) throw InvalidParamError("element count must be nonnegative");
  if (static_cast<std::size_t>(n) > global_limits().max_elements)
    throw LimitError("poset exceeds the element guard (" +
                     std::to_string(global_limits().max_elements) + ")");
  if (!names_.empty() && names_.size() != static_cast<std::size_t>(n))
    throw InvalidParamError("names must be empty or have one entry per element");

  std::vector<std::vector<int>> adj(n);
  for (auto [x, y] : relations) {
    if (x < 0 || x >= n || y < 0 || y >= n)
      throw InvalidParamError("relation pair (" + std::to_string(x) + ", " + std::to_string(y) +
                              ") out of range for " + std::to_string(n) + " elements");
    if (x == y) throw SelfLoopError(x);
    adj[x].push_back(y);
  }

  if (auto cycle = find_cycle(n, adj); !cycle.empty()) throw CycleError(std::move(cycle));

  up_.assign(n, Bitset(n));
  down_.assign(n, Bitset(n));

  // Reverse topological order by DFS finish time, then one pass of
  // up[x] |= {y} | up[y] over the raw edges closes the relation.
  std::vector<int> order;
  order.reserve(n);
  {
    std::vector<int> state(n, 0);
    for (int root = 0; root < n; ++root) {
      if (state[root] != 0) continue;
      std::vector<std::pair<int, std::size_t>> stack{{root, 0}};
      state[root] = 1;
      while (!stack.empty()) {
        auto& [v, next] = stack.back();
        if (next < adj[v].size()) {
          int w = adj[v][next++];
          if (state[w] == 0) {
            state[w] = 1;
            stack.emplace_back(w, 0);
          }
        } else {
          order.push_back(v);
          stack.pop_back();
        }
      }
    }
  }
  for (int v : order) {
    for (int w : adj[v]) {
      up_[v].set(w);
      up_[v] |= up_[w];
    }
  }
  for (int v = 0; v < n; ++v)
    for (auto w = up_[v].find_first(); w != Bitset::npos; w = up_[v].find_next(w))
      down_[w].set(v);

  // Transitive reduction: x is covered by y iff nothing sits strictly between.
  up_covers_.assign(n, {});
  down_covers_.assign(n, {});
  Bitset between(n);
  for (int x = 0; x < n; ++x) {
    for (auto y = up_[x].find_first(); y != Bitset::npos; y = up_[x].find_next(y)) {
      between = up_[x];
      between &= down_[y];
      if (between.none()) {
        covers_.emplace_back(x, static_cast<int>(y));
        up_covers_[x].push_back(static_cast<int>(y));
        down_covers_[y].push_back(x);
      }
    }
  }
  std::sort(covers_.begin(), covers_.end());
  for (auto& v : up_covers_) std::sort(v.begin(), v.end());
  for (auto& v : down_covers_) std::sort(v.begin(), v.end());

  // Heights by longest chain from below; |down| orders topologically.
  height_.assign(n, 0);
  std::vector<int> topo(n);
  std::iota(topo.begin(), topo.end(), 0);
  std::sort(topo.begin(), topo.end(), [&](int a, int b) {
    auto ca = down_[a].count(), cb = down_[b].count();
    return ca != cb ? ca < cb : a < b;
  });
  for (int v : topo)
    for (int w : down_covers_[v]) height_[v] = std::max(height_[v], height_[w] + 1);
}

std::string Poset::display(int x) const {
  return names_.empty() ? std::to_string(x) : names_[x];
}

std::optional<int> Poset::cover_index(int x, int y) const {
  auto it = std::lower_bound(covers_.begin(), covers_.end(), std::pair<int, int>{x, y});
  if (it == covers_.end() || *it != std::pair<int, int>{x, y}) return std::nullopt;
  return static_cast<int>(it - covers_.begin());
}

std::vector<int> Poset::minimals() const {
  std::vector<int> out;
  for (int v = 0; v < n_; ++v)
    if (down_[v].none()) out.push_back(v);
  return out;
}

std::vector<int> Poset::maximals() const {
  std::vector<int> out;
  for (int v = 0; v < n_; ++v)
    if (up_[v].none()) out.push_back(v);
  return out;
}

bool Poset::has_bottom() const { return bottom() >= 0; }
bool Poset::has_top() const { return top() >= 0; }

int Poset::bottom() const {
  if (n_ == 0) return -1;
  auto mins = minimals();
  return mins.size() == 1 ? mins.front() : -1;
}

int Poset::top() const {
  if (n_ == 0) return -1;
  auto maxs = maximals();
  return maxs.size() == 1 ? maxs.front() : -1;
}

int Poset::height() const {
  int h = -1;
  for (int v = 0; v < n_; ++v) h = std::max(h, height_[v]);
  return h;
}

Poset build_poset(int n, const std::vector<std::pair<int, int>>& relations,
                  std::vector<std::string> names) {
  return Poset(n, relations, std::move(names));
}

bool is_antichain(const Poset& p, const std::vector<int>& elems) {
  for (std::size_t i = 0; i < elems.size(); ++i)
    for (std::size_t j = i + 1; j < elems.size(); ++j)
      if (elems[i] != elems[j] && p.comparable(elems[i], elems[j])) return false;
  return true;
}

std::vector<MaximalChain> maximal_chains(const Poset& p) {
  std::vector<MaximalChain> out;
  const std::size_t guard = global_limits().max_chains;
  MaximalChain chain;
  auto dfs = [&](auto&& self, int v) -> void {
    chain.push_back(v);
    if (p.up_covers(v).empty()) {
      if (out.size() >= guard)
        throw LimitError("maximal chain enumeration exceeds the chain guard");
      out.push_back(chain);
    } else {
      for (int w : p.up_covers(v)) self(self, w);
    }
    chain.pop_back();
  };
  for (int m : p.minimals()) dfs(dfs, m);
  return out;
}

std::pair<Poset, std::vector<int>> induced_subposet(const Poset& p, std::vector<int> elems) {
  std::sort(elems.begin(), elems.end());
  elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
  for (int v : elems)
    if (v < 0 || v >= p.size()) throw InvalidParamError("subposet element out of range");
  std::vector<std::pair<int, int>> rel;
  for (std::size_t i = 0; i < elems.size(); ++i)
    for (std::size_t j = 0; j < elems.size(); ++j)
      if (i != j && p.less(elems[i], elems[j]))
        rel.emplace_back(static_cast<int>(i), static_cast<int>(j));
  std::vector<std::string> names;
  if (!p.names().empty())
    for (int v : elems) names.push_back(p.names()[v]);
  return {Poset(static_cast<int>(elems.size()), rel, std::move(names)), std::move(elems)};
}

Interval interval(const Poset& p, int x, int y) {
  if (x < 0 || x >= p.size() || y < 0 || y >= p.size())
    throw InvalidParamError("interval endpoint out of range");
  if (!p.leq(x, y)) throw NotComparableError(x, y);
  std::vector<int> elems{x};
  if (x != y) {
    elems.push_back(y);
    Bitset mid = p.up_set(x);
    mid &= p.down_set(y);
    for (auto v = mid.find_first(); v != Bitset::npos; v = mid.find_next(v))
      elems.push_back(static_cast<int>(v));
  }
  auto [sub, embedding] = induced_subposet(p, std::move(elems));
  return Interval{x, y, std::move(sub), std::move(embedding)};
}

GradingResult compute_grading(const Poset& p) {
  // A maximal chain descending from v; every step is a cover, so when all
  // covers have unit height jump its rank image is {0..height(v)}.
  auto chain_through_max = [&](int v) {
    MaximalChain c{v};
    while (!p.down_covers(c.back()).empty()) c.push_back(p.down_covers(c.back()).front());
    std::reverse(c.begin(), c.end());
    return c;
  };

  for (auto [x, y] : p.covers()) {
    if (p.height(y) != p.height(x) + 1) {
      GradingWitness w;
      w.jump_cover = std::pair{x, y};
      return GradingResult{std::nullopt, std::move(w)};
    }
  }
  int h = p.height();
  for (int v = 0; v < p.size(); ++v) {
    if (p.up_set(v).none() && p.height(v) != h) {
      // Two maximal chains with rank images {0..height(v)} vs {0..h}.
      int deep = 0;
      for (int u = 0; u < p.size(); ++u)
        if (p.height(u) == h) deep = u;
      GradingWitness w;
      w.mismatched_chains = std::pair{chain_through_max(v), chain_through_max(deep)};
      return GradingResult{std::nullopt, std::move(w)};
    }
  }
  Grading g;
  g.rank.resize(p.size());
  for (int v = 0; v < p.size(); ++v) g.rank[v] = p.height(v);
  for (int r = 0; r <= h; ++r) g.labels.push_back(r);
  return GradingResult{std::move(g), std::nullopt};
}

std::vector<std::vector<int>> level_sets(const Poset& p, const Grading& g) {
  if (g.rank.size() != static_cast<std::size_t>(p.size()))
    throw InvalidParamError("grading does not match the poset");
  std::vector<std::vector<int>> out(g.labels.size());
  for (int v = 0; v < p.size(); ++v) {
    auto it = std::lower_bound(g.labels.begin(), g.labels.end(), g.rank[v]);
    if (it == g.labels.end() || *it != g.rank[v])
      throw InvalidParamError("element rank outside the label set");
    out[it - g.labels.begin()].push_back(v);
  }
  return out;
}

Poset bound_augment(const Poset& p) {
  bool add_bottom = !p.has_bottom();
  bool add_top = !p.has_top();
  if (p.size() > 0 && !add_bottom && !add_top) return p;

  int n = p.size() + (add_bottom ? 1 : 0) + (add_top ? 1 : 0);
  int bot = add_bottom ? p.size() : p.bottom();
  int top = add_top ? p.size() + (add_bottom ? 1 : 0) : p.top();
  std::vector<std::pair<int, int>> rel(p.covers());
  if (add_bottom)
    for (int m : p.minimals()) rel.emplace_back(bot, m);
  if (add_top)
    for (int m : p.maximals()) rel.emplace_back(m, top);
  if (p.size() == 0) rel.emplace_back(bot, top);
  std::vector<std::string> names = p.names();
  if (!names.empty() || p.size() == 0) {
    if (names.empty()) names.resize(p.size());
    if (add_bottom) names.push_back("bot");
    if (add_top) names.push_back("top");
  }
  return Poset(n, rel, std::move(names));
}

}  // namespace cutsetkit
