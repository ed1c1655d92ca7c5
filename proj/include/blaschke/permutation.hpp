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


#ifndef BLASCHKE_PERMUTATION_HPP_
#define BLASCHKE_PERMUTATION_HPP_

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace blaschke {

class Permutation {
 public:
  // Throws Error(kNonBijective) unless images is a bijection of 0..n-1.
  explicit Permutation(std::vector<int> images);
  static Permutation identity(int n);

  int size() const { return static_cast<int>(images_.size()); }
  int operator()(int x) const { return images_[static_cast<std::size_t>(x)]; }
  const std::vector<int>& images() const { return images_; }

  // (g * h)(x) = g(h(x))
  Permutation operator*(const Permutation& h) const;
  Permutation inverse() const;
  bool is_identity() const;
  long order() const;
  std::vector<int> cycle_type() const;  // descending, fixed points omitted
  // One-based cycle notation, "()" for the identity.
  std::string cycle_string() const;

  bool operator==(const Permutation& o) const { return images_ == o.images_; }
  bool operator<(const Permutation& o) const { return images_ < o.images_; }

 private:
  std::vector<int> images_;
};

// Parses one-based cycle notation such as "(13)(24)" on n points. Points
// above 9 are separated by commas: "(1,10)".
Permutation parse_cycles(const std::string& text, int n);

class PermutationGroup {
 public:
  static constexpr std::size_t kClosureCap = 1000000;

  // Throws Error(kInvalidInput) for an empty generator list or mixed sizes.
  explicit PermutationGroup(std::vector<Permutation> generators);

  int degree() const { return degree_; }
  const std::vector<Permutation>& generators() const { return generators_; }

  // Elements by breadth-first closure; empty if the cap is exceeded.
  const std::vector<Permutation>& elements() const;
  bool closure_complete() const;
  // Group order, or 0 when the closure exceeded the cap.
  std::uint64_t order() const;

  bool is_abelian() const;
  bool is_transitive() const;
  // Every element order is a power of two (requires the closure).
  bool is_two_group() const;

 private:
  int degree_;
  std::vector<Permutation> generators_;
  mutable std::optional<std::vector<Permutation>> elements_;
  mutable bool complete_ = false;
};

struct BlockSystem {
  std::vector<std::vector<int>> blocks;  // sorted; block 0 contains point 0
  int block_size() const { return blocks.empty() ? 0 : static_cast<int>(blocks[0].size()); }
  bool refines(const BlockSystem& coarser) const;
};

bool respects(const PermutationGroup& g, const BlockSystem& system);

// All nontrivial block systems of a transitive group, ordered by block size
// then lexicographically. Empty for intransitive groups.
std::vector<BlockSystem> block_systems(const PermutationGroup& g);

// Whether some relabeling pi maps every generators[i] to pattern[i]
// (pi g pi^{-1} = h), trying every assignment of generators to pattern
// entries.
bool simultaneously_conjugate(std::span<const Permutation> generators,
                              std::span<const Permutation> pattern);

// (12), (13)(24), (15)(26)(37)(48), ... on 2^k points.
std::vector<Permutation> binary_tree_pattern(int k);

struct WreathAudit {
  int levels = 0;
  std::uint64_t order = 0;
  std::uint64_t expected_order = 0;
  bool order_matches = false;
  bool two_group = false;
  bool nested_blocks = false;
  std::vector<int> nested_sizes;
  bool pattern_conjugate = false;
  bool passed = false;  // order, 2-group and nesting
};

WreathAudit wreath_audit(const PermutationGroup& g, int levels);

}  // namespace blaschke

#endif  // BLASCHKE_PERMUTATION_HPP_
