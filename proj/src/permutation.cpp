/*
Copyright 2026 The Blaschke Toolkit Authors. All Rights Reserved.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS-IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
*/

#include "blaschke/permutation.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <numeric>
#include <set>
#include <unordered_set>

#include "blaschke/error.hpp"

namespace blaschke {
namespace {

std::string key_of(const std::vector<int>& images) {
  return std::string(images.begin(), images.end());
}

class UnionFind {
 public:
  explicit UnionFind(int n) : parent_(static_cast<std::size_t>(n)) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }
  int find(int x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent_[std::max(a, b)] = std::min(a, b);
    return true;
  }

 private:
  std::vector<int> parent_;
};

// Finest partition respected by g in which all of seed share a block.
BlockSystem generate_system(const PermutationGroup& g, const std::vector<int>& seed) {
  const int n = g.degree();
  UnionFind uf(n);
  std::deque<std::pair<int, int>> queue;
  for (std::size_t i = 1; i < seed.size(); ++i) {
    if (uf.unite(seed[0], seed[i])) queue.emplace_back(seed[0], seed[i]);
  }
  while (!queue.empty()) {
    const auto [a, b] = queue.front();
    queue.pop_front();
    for (const Permutation& s : g.generators()) {
      if (uf.unite(s(a), s(b))) queue.emplace_back(s(a), s(b));
    }
  }
  std::vector<std::vector<int>> blocks;
  std::vector<int> slot(static_cast<std::size_t>(n), -1);
  for (int x = 0; x < n; ++x) {
    const int r = uf.find(x);
    if (slot[r] < 0) {
      slot[r] = static_cast<int>(blocks.size());
      blocks.emplace_back();
    }
    blocks[slot[r]].push_back(x);
  }
  std::sort(blocks.begin(), blocks.end());
  return BlockSystem{blocks};
}

}  // namespace

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (int x : images_) {
    if (x < 0 || x >= static_cast<int>(images_.size()) || seen[x]) {
      throw Error(ErrorCode::kNonBijective, "images do not form a bijection");
    }
    seen[x] = true;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> images(static_cast<std::size_t>(n));
  std::iota(images.begin(), images.end(), 0);
  return Permutation(std::move(images));
}

Permutation Permutation::operator*(const Permutation& h) const {
  if (h.size() != size()) throw Error(ErrorCode::kInvalidInput, "permutation sizes differ");
  std::vector<int> out(images_.size());
  for (std::size_t x = 0; x < out.size(); ++x) out[x] = images_[h.images_[x]];
  return Permutation(std::move(out));
}

Permutation Permutation::inverse() const {
  std::vector<int> out(images_.size());
  for (std::size_t x = 0; x < out.size(); ++x) out[images_[x]] = static_cast<int>(x);
  return Permutation(std::move(out));
}

bool Permutation::is_identity() const {
  for (std::size_t x = 0; x < images_.size(); ++x) {
    if (images_[x] != static_cast<int>(x)) return false;
  }
  return true;
}

long Permutation::order() const {
  long result = 1;
  for (int len : cycle_type()) result = std::lcm(result, static_cast<long>(len));
  return result;
}

std::vector<int> Permutation::cycle_type() const {
  std::vector<int> lengths;
  std::vector<bool> seen(images_.size(), false);
  for (std::size_t s = 0; s < images_.size(); ++s) {
    if (seen[s]) continue;
    int len = 0;
    for (std::size_t x = s; !seen[x]; x = static_cast<std::size_t>(images_[x])) {
      seen[x] = true;
      ++len;
    }
    if (len > 1) lengths.push_back(len);
  }
  std::sort(lengths.rbegin(), lengths.rend());
  return lengths;
}

std::string Permutation::cycle_string() const {
  std::string out;
  const bool wide = images_.size() > 9;
  std::vector<bool> seen(images_.size(), false);
  for (std::size_t s = 0; s < images_.size(); ++s) {
    if (seen[s] || images_[s] == static_cast<int>(s)) continue;
    out += '(';
    bool first = true;
    for (std::size_t x = s; !seen[x]; x = static_cast<std::size_t>(images_[x])) {
      seen[x] = true;
      if (!first && wide) out += ',';
      out += std::to_string(x + 1);
      first = false;
    }
    out += ')';
  }
  return out.empty() ? "()" : out;
}

Permutation parse_cycles(const std::string& text, int n) {
  std::vector<int> images(static_cast<std::size_t>(n));
  std::iota(images.begin(), images.end(), 0);
  std::size_t i = 0;
  while (i < text.size()) {
    if (text[i] != '(') {
      ++i;
      continue;
    }
    const std::size_t close = text.find(')', i);
    if (close == std::string::npos) throw Error(ErrorCode::kInvalidInput, "unbalanced cycle");
    const std::string body = text.substr(i + 1, close - i - 1);
    std::vector<int> cycle;
    if (body.find(',') != std::string::npos) {
      std::size_t start = 0;
      while (start <= body.size()) {
        const std::size_t comma = std::min(body.find(',', start), body.size());
        cycle.push_back(std::stoi(body.substr(start, comma - start)) - 1);
        start = comma + 1;
      }
    } else {
      for (char c : body) {
        if (c >= '1' && c <= '9') cycle.push_back(c - '1');
      }
    }
    for (int x : cycle) {
      if (x < 0 || x >= n) throw Error(ErrorCode::kInvalidInput, "cycle point out of range");
    }
    for (std::size_t k = 0; k < cycle.size(); ++k) {
      images[cycle[k]] = cycle[(k + 1) % cycle.size()];
    }
    i = close + 1;
  }
  return Permutation(std::move(images));
}

PermutationGroup::PermutationGroup(std::vector<Permutation> generators)
    : degree_(generators.empty() ? 0 : generators.front().size()),
      generators_(std::move(generators)) {
  if (generators_.empty()) throw Error(ErrorCode::kInvalidInput, "group needs a generator");
  for (const auto& g : generators_) {
    if (g.size() != degree_) throw Error(ErrorCode::kInvalidInput, "generator sizes differ");
  }
}

const std::vector<Permutation>& PermutationGroup::elements() const {
  if (elements_) return *elements_;
  std::vector<Permutation> out{Permutation::identity(degree_)};
  std::unordered_set<std::string> seen{key_of(out[0].images())};
  complete_ = true;
  for (std::size_t head = 0; head < out.size(); ++head) {
    for (const Permutation& s : generators_) {
      Permutation next = s * out[head];
      if (seen.insert(key_of(next.images())).second) {
        if (out.size() >= kClosureCap) {
          complete_ = false;
          out.clear();
          elements_ = std::move(out);
          return *elements_;
        }
        out.push_back(std::move(next));
      }
    }
  }
  std::sort(out.begin(), out.end());
  elements_ = std::move(out);
  return *elements_;
}

bool PermutationGroup::closure_complete() const {
  elements();
  return complete_;
}

std::uint64_t PermutationGroup::order() const {
  return closure_complete() ? elements().size() : 0;
}

bool PermutationGroup::is_abelian() const {
  for (std::size_t i = 0; i < generators_.size(); ++i) {
    for (std::size_t j = i + 1; j < generators_.size(); ++j) {
      if (!(generators_[i] * generators_[j] == generators_[j] * generators_[i])) return false;
    }
  }
  return true;
}

bool PermutationGroup::is_transitive() const {
  std::vector<bool> seen(static_cast<std::size_t>(degree_), false);
  std::deque<int> queue{0};
  seen[0] = true;
  int count = 1;
  while (!queue.empty()) {
    const int x = queue.front();
    queue.pop_front();
    for (const auto& s : generators_) {
      if (!seen[s(x)]) {
        seen[s(x)] = true;
        ++count;
        queue.push_back(s(x));
      }
    }
  }
  return count == degree_;
}

bool PermutationGroup::is_two_group() const {
  if (!closure_complete()) return false;
  for (const auto& e : elements()) {
    const long o = e.order();
    if ((o & (o - 1)) != 0) return false;
  }
  return true;
}

bool BlockSystem::refines(const BlockSystem& coarser) const {
  for (const auto& block : blocks) {
    bool contained = false;
    for (const auto& big : coarser.blocks) {
      if (std::includes(big.begin(), big.end(), block.begin(), block.end())) {
        contained = true;
        break;
      }
    }
    if (!contained) return false;
  }
  return true;
}

bool respects(const PermutationGroup& g, const BlockSystem& system) {
  std::vector<int> owner(static_cast<std::size_t>(g.degree()), -1);
  for (std::size_t b = 0; b < system.blocks.size(); ++b) {
    for (int x : system.blocks[b]) owner[x] = static_cast<int>(b);
  }
  for (const auto& s : g.generators()) {
    for (const auto& block : system.blocks) {
      const int target = owner[s(block[0])];
      for (int x : block) {
        if (owner[s(x)] != target) return false;
      }
    }
  }
  return true;
}

std::vector<BlockSystem> block_systems(const PermutationGroup& g) {
  std::vector<BlockSystem> found;
  const int n = g.degree();
  if (!g.is_transitive()) return found;
  std::set<std::vector<std::vector<int>>> keys;
  auto add = [&](BlockSystem s) {
    if (s.blocks.size() <= 1 || static_cast<int>(s.blocks.size()) == n) return false;
    if (!keys.insert(s.blocks).second) return false;
    found.push_back(std::move(s));
    return true;
  };
  for (int j = 1; j < n; ++j) add(generate_system(g, {0, j}));
  // Joins of systems found so far.
  for (bool grew = true; grew;) {
    grew = false;
    const std::size_t count = found.size();
    for (std::size_t i = 0; i < count; ++i) {
      for (std::size_t j = i + 1; j < count; ++j) {
        std::vector<int> seed = found[i].blocks[0];
        seed.insert(seed.end(), found[j].blocks[0].begin(), found[j].blocks[0].end());
        if (add(generate_system(g, seed))) grew = true;
      }
    }
  }
  std::sort(found.begin(), found.end(), [](const BlockSystem& a, const BlockSystem& b) {
    if (a.block_size() != b.block_size()) return a.block_size() < b.block_size();
    return a.blocks < b.blocks;
  });
  return found;
}

bool simultaneously_conjugate(std::span<const Permutation> generators,
                              std::span<const Permutation> pattern) {
  if (generators.size() != pattern.size() || generators.empty()) return false;
  const int n = generators[0].size();
  for (const auto& p : pattern) {
    if (p.size() != n) return false;
  }
  std::vector<std::size_t> assign(pattern.size());
  std::iota(assign.begin(), assign.end(), 0);
  do {
    for (int x = 0; x < n; ++x) {
      std::vector<int> pi(static_cast<std::size_t>(n), -1);
      pi[0] = x;
      std::deque<int> queue{0};
      bool ok = true;
      while (!queue.empty() && ok) {
        const int y = queue.front();
        queue.pop_front();
        for (std::size_t i = 0; i < generators.size() && ok; ++i) {
          const int gy = generators[i](y);
          const int want = pattern[assign[i]](pi[y]);
          if (pi[gy] < 0) {
            pi[gy] = want;
            queue.push_back(gy);
          } else if (pi[gy] != want) {
            ok = false;
          }
        }
      }
      if (!ok || std::count(pi.begin(), pi.end(), -1) > 0) continue;
      std::vector<bool> used(static_cast<std::size_t>(n), false);
      for (int v : pi) {
        if (used[v]) ok = false;
        used[v] = true;
      }
      if (ok) return true;
    }
  } while (std::next_permutation(assign.begin(), assign.end()));
  return false;
}

std::vector<Permutation> binary_tree_pattern(int k) {
  const int n = 1 << k;
  std::vector<Permutation> out;
  for (int j = 0; j < k; ++j) {
    std::vector<int> images(static_cast<std::size_t>(n));
    for (int x = 0; x < n; ++x) images[x] = x < (2 << j) ? (x ^ (1 << j)) : x;
    out.emplace_back(std::move(images));
  }
  return out;
}

WreathAudit wreath_audit(const PermutationGroup& g, int levels) {
  WreathAudit out;
  out.levels = levels;
  if (levels < 1 || levels > 5 || g.degree() != (1 << levels)) return out;
  out.expected_order = std::uint64_t{1} << ((1 << levels) - 1);
  out.order = g.order();
  out.order_matches = out.order == out.expected_order;
  out.two_group = g.is_two_group();
  const std::vector<BlockSystem> systems = block_systems(g);
  // Depth-first search for a refining chain with sizes 2, 4, ..., 2^{k-1}.
  std::function<bool(int, const BlockSystem*)> extend = [&](int level,
                                                            const BlockSystem* prev) {
    if (level == levels) return true;
    for (const auto& s : systems) {
      if (s.block_size() != (1 << level)) continue;
      if (prev && !prev->refines(s)) continue;
      out.nested_sizes.push_back(s.block_size());
      if (extend(level + 1, &s)) return true;
      out.nested_sizes.pop_back();
    }
    return false;
  };
  out.nested_blocks = extend(1, nullptr);
  if (static_cast<int>(g.generators().size()) == levels) {
    out.pattern_conjugate =
        simultaneously_conjugate(g.generators(), binary_tree_pattern(levels));
  }
  out.passed = out.order_matches && out.two_group && out.nested_blocks;
  return out;
}

}  // namespace blaschke
