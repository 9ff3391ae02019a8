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
#include <ostream>
#include <string>
#include <vector>

namespace braidq {

/// A set partition of qubit sites {1..n} into blocks.
///
/// Always held in canonical form (sites ascending within a block, blocks sorted by
/// their minimum) so that equality is structural.
class EntanglementPartition {
   public:
    EntanglementPartition() = default;

    /// Throws std::invalid_argument unless `blocks` is an exact partition of {1..n}.
    EntanglementPartition(std::size_t n, std::vector<std::vector<std::size_t>> blocks) : n_(n), blocks_(std::move(blocks)) {
        std::vector<bool> seen(n + 1, false);
        std::size_t count = 0;
        for (auto &b : blocks_) {
            if (b.empty()) {
                throw std::invalid_argument("partition blocks must be nonempty");
            }
            std::sort(b.begin(), b.end());
            for (auto s : b) {
                if (s == 0 || s > n || seen[s]) {
                    throw std::invalid_argument("partition blocks must be disjoint subsets of 1.." + std::to_string(n));
                }
                seen[s] = true;
                ++count;
            }
        }
        if (count != n) {
            throw std::invalid_argument("partition blocks do not cover 1.." + std::to_string(n));
        }
        std::sort(blocks_.begin(), blocks_.end(), [](const auto &l, const auto &r) { return l.front() < r.front(); });
    }

    static EntanglementPartition singletons(std::size_t n) {
        std::vector<std::vector<std::size_t>> blocks;
        for (std::size_t s = 1; s <= n; ++s) {
            blocks.push_back({s});
        }
        return EntanglementPartition(n, std::move(blocks));
    }

    std::size_t num_sites() const { return n_; }
    const std::vector<std::vector<std::size_t>> &blocks() const { return blocks_; }

    /// Index into blocks() of the block holding `site`.
    std::size_t block_of(std::size_t site) const {
        for (std::size_t k = 0; k < blocks_.size(); ++k) {
            if (std::binary_search(blocks_[k].begin(), blocks_[k].end(), site)) {
                return k;
            }
        }
        throw std::out_of_range("site " + std::to_string(site) + " not in partition");
    }

    bool operator==(const EntanglementPartition &) const = default;

   private:
    std::size_t n_ = 0;
    std::vector<std::vector<std::size_t>> blocks_;
};

/// "{1,5}|{2,3}|{4}".
inline std::string render(const EntanglementPartition &p) {
    std::string out;
    for (std::size_t k = 0; k < p.blocks().size(); ++k) {
        if (k) {
            out.push_back('|');
        }
        out.push_back('{');
        const auto &b = p.blocks()[k];
        for (std::size_t i = 0; i < b.size(); ++i) {
            if (i) {
                out.push_back(',');
            }
            out += std::to_string(b[i]);
        }
        out.push_back('}');
    }
    return out;
}

inline std::ostream &operator<<(std::ostream &out, const EntanglementPartition &p) { return out << render(p); }

}  // namespace braidq
