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
#include <cctype>
#include <cstddef>
#include <istream>
#include <numeric>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "braidq/error.hpp"

namespace braidq {

/// One letter tau_i^{+-1} of a braid word. `generator` is 1-based.
struct BraidLetter {
    std::size_t generator = 1;
    int exponent = 1;

    BraidLetter inverse() const { return {generator, -exponent}; }
    bool operator==(const BraidLetter &) const = default;
};

/// A word over the generators tau_1 .. tau_{N-1} of the braid group on N strands.
///
/// The leftmost letter acts on the state first, so the operator represented by
/// `[l_1, l_2, ..., l_k]` is `tau(l_k) ... tau(l_2) tau(l_1)`.
class BraidWord {
   public:
    explicit BraidWord(std::size_t num_strands) : n_(num_strands) {
        if (num_strands == 0) {
            throw DimensionError("a braid word needs at least one strand");
        }
    }

    BraidWord(std::size_t num_strands, std::vector<BraidLetter> letters) : BraidWord(num_strands) {
        for (const auto &l : letters) {
            push_back(l);
        }
    }

    std::size_t num_strands() const { return n_; }
    const std::vector<BraidLetter> &letters() const { return letters_; }
    std::size_t size() const { return letters_.size(); }
    bool empty() const { return letters_.empty(); }

    void push_back(BraidLetter letter) {
        if (letter.generator == 0 || letter.generator >= n_) {
            throw RangeError("generator s" + std::to_string(letter.generator) + " needs 1 <= i < " +
                             std::to_string(n_) + " strands");
        }
        if (letter.exponent != 1 && letter.exponent != -1) {
            throw RangeError("braid letter exponent must be +1 or -1");
        }
        letters_.push_back(letter);
    }

    /// Concatenation: `*this` acts first, then `other`.
    BraidWord operator*(const BraidWord &other) const {
        if (other.n_ != n_) {
            throw DimensionError("cannot concatenate braid words on different strand counts");
        }
        BraidWord result = *this;
        result.letters_.insert(result.letters_.end(), other.letters_.begin(), other.letters_.end());
        return result;
    }

    /// Reversed and inverted word; `w * w.inverse()` is the trivial braid.
    BraidWord inverse() const {
        BraidWord result(n_);
        result.letters_.reserve(letters_.size());
        for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) {
            result.letters_.push_back(it->inverse());
        }
        return result;
    }

    bool operator==(const BraidWord &) const = default;

   private:
    std::size_t n_;
    std::vector<BraidLetter> letters_;
};

/// Space-separated letters, e.g. "s1 s2^-1 s1". The empty word renders as "".
inline std::string render(const BraidWord &word) {
    std::string out;
    for (const auto &l : word.letters()) {
        if (!out.empty()) {
            out.push_back(' ');
        }
        out += "s" + std::to_string(l.generator);
        if (l.exponent < 0) {
            out += "^-1";
        }
    }
    return out;
}

inline std::ostream &operator<<(std::ostream &out, const BraidWord &w) { return out << render(w); }

/// Parses `word := (letter ws*)*`, `letter := ("s"|"S") integer ("^-1" | "'")?`.
///
/// "s<i>" is tau_i. "s<i>^-1", "s<i>'" and "S<i>" are tau_i^{-1}.
/// Throws ParseError (with character offset) on bad syntax and RangeError when i >= N.
inline BraidWord parse_word(std::string_view text, std::size_t num_strands) {
    BraidWord word(num_strands);
    std::size_t pos = 0;
    auto skip_ws = [&] {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) {
            ++pos;
        }
    };
    skip_ws();
    while (pos < text.size()) {
        const std::size_t start = pos;
        const char head = text[pos];
        if (head != 's' && head != 'S') {
            throw ParseError(std::string("expected 's' or 'S', found '") + head + "'", pos);
        }
        ++pos;
        if (pos >= text.size() || text[pos] < '1' || text[pos] > '9') {
            throw ParseError("expected generator index after '" + std::string(1, head) + "'", pos);
        }
        std::size_t index = 0;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
            if (index > (std::size_t{1} << 40)) {
                throw ParseError("generator index too large", start);
            }
            index = index * 10 + static_cast<std::size_t>(text[pos] - '0');
            ++pos;
        }
        int exponent = head == 'S' ? -1 : 1;
        bool inverse_suffix = false;
        if (text.substr(pos, 3) == "^-1") {
            inverse_suffix = true;
            pos += 3;
        } else if (pos < text.size() && text[pos] == '\'') {
            inverse_suffix = true;
            pos += 1;
        } else if (pos < text.size() && text[pos] == '^') {
            throw ParseError("only the exponent ^-1 is supported", pos);
        }
        if (inverse_suffix) {
            if (exponent < 0) {
                throw ParseError("'S' already denotes an inverse; drop the suffix", start);
            }
            exponent = -1;
        }
        if (index >= num_strands) {
            throw RangeError("generator s" + std::to_string(index) + " at position " + std::to_string(start) +
                             " needs index < " + std::to_string(num_strands));
        }
        word.push_back({index, exponent});
        skip_ws();
    }
    return word;
}

/// One non-blank, non-comment line of a batch file.
struct BatchLine {
    std::size_t line_number = 0;  // 1-based
    std::string text;
};

/// Splits a batch file: one word per line, '#' starts a comment, blank lines are skipped.
inline std::vector<BatchLine> read_batch(std::istream &in) {
    std::vector<BatchLine> out;
    std::string line;
    std::size_t line_number = 0;
    while (std::getline(in, line)) {
        ++line_number;
        if (auto hash = line.find('#'); hash != std::string::npos) {
            line.erase(hash);
        }
        const auto first = line.find_first_not_of(" \t\r\n\f\v");
        if (first == std::string::npos) {
            continue;
        }
        const auto last = line.find_last_not_of(" \t\r\n\f\v");
        out.push_back({line_number, line.substr(first, last - first + 1)});
    }
    return out;
}

/// A permutation of strands {1..n}: `image(k)` is the position where strand k ends.
class Permutation {
   public:
    explicit Permutation(std::size_t n) : image_(n) {
        if (n == 0) {
            throw DimensionError("a permutation needs at least one element");
        }
        std::iota(image_.begin(), image_.end(), std::size_t{1});
    }

    /// Validates that `image` (1-based values) is a bijection on {1..n}.
    static Permutation from_image(std::vector<std::size_t> image) {
        if (image.empty()) {
            throw DimensionError("a permutation needs at least one element");
        }
        std::vector<bool> seen(image.size() + 1, false);
        for (auto v : image) {
            if (v == 0 || v > image.size() || seen[v]) {
                throw std::invalid_argument("image is not a bijection on 1.." + std::to_string(image.size()));
            }
            seen[v] = true;
        }
        Permutation p(image.size());
        p.image_ = std::move(image);
        return p;
    }

    /// Builds from disjoint cycles, e.g. {{1, 3}, {2, 4}} on n = 4. Omitted sites are fixed.
    static Permutation from_cycles(std::size_t n, const std::vector<std::vector<std::size_t>> &cycles) {
        Permutation p(n);
        std::vector<bool> used(n + 1, false);
        for (const auto &c : cycles) {
            for (std::size_t k = 0; k < c.size(); ++k) {
                if (c[k] == 0 || c[k] > n || used[c[k]]) {
                    throw std::invalid_argument("cycles are not disjoint subsets of 1.." + std::to_string(n));
                }
                used[c[k]] = true;
                p.image_[c[k] - 1] = c[(k + 1) % c.size()];
            }
        }
        return p;
    }

    std::size_t size() const { return image_.size(); }
    std::size_t operator()(std::size_t k) const { return image_.at(k - 1); }
    const std::vector<std::size_t> &image() const { return image_; }

    bool is_identity() const {
        for (std::size_t k = 0; k < image_.size(); ++k) {
            if (image_[k] != k + 1) {
                return false;
            }
        }
        return true;
    }

    Permutation inverse() const {
        Permutation result(size());
        for (std::size_t k = 0; k < image_.size(); ++k) {
            result.image_[image_[k] - 1] = k + 1;
        }
        return result;
    }

    bool operator==(const Permutation &) const = default;

   private:
    std::vector<std::size_t> image_;
};

/// `first` then `second`: k -> second(first(k)). Matches word concatenation order.
inline Permutation compose(const Permutation &first, const Permutation &second) {
    if (first.size() != second.size()) {
        throw DimensionError("cannot compose permutations of different sizes");
    }
    std::vector<std::size_t> image(first.size());
    for (std::size_t k = 1; k <= first.size(); ++k) {
        image[k - 1] = second(first(k));
    }
    return Permutation::from_image(std::move(image));
}

/// Strand permutation of a word: each letter swaps the strands at positions i and i+1,
/// regardless of its exponent.
inline Permutation permutation_of(const BraidWord &word) {
    const std::size_t n = word.num_strands();
    std::vector<std::size_t> strand_at(n);  // strand_at[pos - 1] = strand occupying pos
    std::iota(strand_at.begin(), strand_at.end(), std::size_t{1});
    for (const auto &l : word.letters()) {
        std::swap(strand_at[l.generator - 1], strand_at[l.generator]);
    }
    std::vector<std::size_t> image(n);
    for (std::size_t pos = 1; pos <= n; ++pos) {
        image[strand_at[pos - 1] - 1] = pos;
    }
    return Permutation::from_image(std::move(image));
}

/// A positive word realizing `p`, built by bubbling each target strand into place.
/// Uses at most n(n-1)/2 letters.
inline BraidWord word_for_permutation(const Permutation &p) {
    const std::size_t n = p.size();
    std::vector<std::size_t> target(n);  // strand that must end at each position
    for (std::size_t k = 1; k <= n; ++k) {
        target[p(k) - 1] = k;
    }
    std::vector<std::size_t> current(n);
    std::iota(current.begin(), current.end(), std::size_t{1});
    BraidWord word(n);
    for (std::size_t pos = 0; pos < n; ++pos) {
        std::size_t j = pos;
        while (current[j] != target[pos]) {
            ++j;
        }
        for (; j > pos; --j) {
            std::swap(current[j - 1], current[j]);
            word.push_back({j, 1});  // swaps 0-based positions j-1, j: generator j
        }
    }
    return word;
}

/// Disjoint cycles covering {1..n}. Canonical form: each cycle starts at its minimum,
/// cycles sorted by minimum, fixed points kept as singletons.
struct CycleDecomposition {
    std::size_t n = 0;
    std::vector<std::vector<std::size_t>> cycles;

    bool operator==(const CycleDecomposition &) const = default;
};

inline CycleDecomposition cycles(const Permutation &p) {
    CycleDecomposition d{p.size(), {}};
    std::vector<bool> seen(p.size() + 1, false);
    // Scanning in increasing order yields min-first cycles sorted by minimum.
    for (std::size_t start = 1; start <= p.size(); ++start) {
        if (seen[start]) {
            continue;
        }
        std::vector<std::size_t> cycle;
        for (std::size_t k = start; !seen[k]; k = p(k)) {
            seen[k] = true;
            cycle.push_back(k);
        }
        d.cycles.push_back(std::move(cycle));
    }
    return d;
}

/// "(1 2)(3)" style rendering, singletons included.
inline std::string render(const CycleDecomposition &d) {
    std::string out;
    for (const auto &c : d.cycles) {
        out.push_back('(');
        for (std::size_t k = 0; k < c.size(); ++k) {
            if (k) {
                out.push_back(' ');
            }
            out += std::to_string(c[k]);
        }
        out.push_back(')');
    }
    return out;
}

}  // namespace braidq
