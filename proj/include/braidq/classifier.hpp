// Copyright 2026 The braidq Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <span>
#include <stdexcept>
#include <vector>

#include "braidq/braid.hpp"
#include "braidq/partition.hpp"

namespace braidq {

/// True iff some a_p < b_j < a_q < b_k or b_j < a_p < b_k < a_q with a's from `c1`
/// and b's from `c2`.
///
/// Labelling the sorted union by owner, this holds exactly when the label sequence has
/// at least four runs: ABAB... Two runs (AB) is disjoint spans and three runs (ABA) is
/// nesting with no outer element inside the inner span; both are separable.
inline bool interleaves(std::span<const std::size_t> c1, std::span<const std::size_t> c2) {
    if (c1.empty() || c2.empty()) {
        throw std::invalid_argument("interleaves needs nonempty cycles");
    }
    std::vector<std::pair<std::size_t, int>> merged;
    merged.reserve(c1.size() + c2.size());
    for (auto s : c1) {
        merged.emplace_back(s, 0);
    }
    for (auto s : c2) {
        merged.emplace_back(s, 1);
    }
    std::sort(merged.begin(), merged.end());
    std::size_t runs = 1;
    for (std::size_t k = 1; k < merged.size(); ++k) {
        if (merged[k].first == merged[k - 1].first) {
            throw std::invalid_argument("interleaves needs disjoint cycles; site " + std::to_string(merged[k].first) +
                                        " appears twice");
        }
        runs += merged[k].second != merged[k - 1].second;
    }
    return runs >= 4;
}

/// Blocks are unions of cycles connected through the interleaving relation.
/// Fixed points stay singletons; each nontrivial cycle lies inside one block.
inline EntanglementPartition predict_partition(const CycleDecomposition &d) {
    const std::size_t k = d.cycles.size();
    std::vector<std::size_t> parent(k);
    std::iota(parent.begin(), parent.end(), std::size_t{0});
    auto find = [&](std::size_t x) {
        while (parent[x] != x) {
            x = parent[x] = parent[parent[x]];
        }
        return x;
    };
    for (std::size_t a = 0; a < k; ++a) {
        if (d.cycles[a].size() < 2) {
            continue;
        }
        for (std::size_t b = a + 1; b < k; ++b) {
            if (d.cycles[b].size() >= 2 && find(a) != find(b) && interleaves(d.cycles[a], d.cycles[b])) {
                parent[find(a)] = find(b);
            }
        }
    }
    std::vector<std::vector<std::size_t>> by_root(k);
    for (std::size_t c = 0; c < k; ++c) {
        auto &block = by_root[find(c)];
        block.insert(block.end(), d.cycles[c].begin(), d.cycles[c].end());
    }
    std::erase_if(by_root, [](const auto &b) { return b.empty(); });
    return EntanglementPartition(d.n, std::move(by_root));
}

/// The partition depends on the word only through its strand permutation.
inline EntanglementPartition classify_word(const BraidWord &word) { return predict_partition(cycles(permutation_of(word))); }

}  // namespace braidq
