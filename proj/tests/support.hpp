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

// Random generators shared by the unit and acceptance suites.

#pragma once

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <random>
#include <vector>

#include "braidq/braid.hpp"
#include "braidq/pauli.hpp"

namespace braidq::test_support {

inline BraidWord random_word(std::mt19937_64 &rng, std::size_t n, std::size_t length) {
    BraidWord w(n);
    if (n < 2) {
        return w;
    }
    std::uniform_int_distribution<std::size_t> gen(1, n - 1);
    std::bernoulli_distribution inverse(0.5);
    for (std::size_t k = 0; k < length; ++k) {
        w.push_back({gen(rng), inverse(rng) ? -1 : 1});
    }
    return w;
}

inline Permutation random_permutation(std::mt19937_64 &rng, std::size_t n) {
    std::vector<std::size_t> image(n);
    std::iota(image.begin(), image.end(), std::size_t{1});
    std::shuffle(image.begin(), image.end(), rng);
    return Permutation::from_image(std::move(image));
}

inline PauliString random_pauli(std::mt19937_64 &rng, std::size_t n) {
    PauliString p(n);
    std::uniform_int_distribution<unsigned> letter(0, 3), phase(0, 3);
    for (std::size_t q = 1; q <= n; ++q) {
        p.set_letter(q, static_cast<Pauli>(letter(rng)));
    }
    p.set_phase(Phase(phase(rng)));
    return p;
}

/// Applies one randomly chosen group-preserving rewrite, if any applies:
/// far commutation s_i s_j -> s_j s_i (|i-j| >= 2), the braid relation
/// s_i s_{i+1} s_i <-> s_{i+1} s_i s_{i+1} (all exponents equal), or inserting s_i^e s_i^-e.
inline BraidWord rewrite_once(std::mt19937_64 &rng, const BraidWord &word) {
    const auto &l = word.letters();
    const std::size_t n = word.num_strands();
    struct Site {
        int kind;
        std::size_t at;
    };
    std::vector<Site> options;
    for (std::size_t k = 0; k + 1 < l.size(); ++k) {
        const auto i = l[k].generator, j = l[k + 1].generator;
        if ((i > j ? i - j : j - i) >= 2) {
            options.push_back({0, k});
        }
    }
    for (std::size_t k = 0; k + 2 < l.size(); ++k) {
        const bool same_exp = l[k].exponent == l[k + 1].exponent && l[k + 1].exponent == l[k + 2].exponent;
        const auto i = l[k].generator, j = l[k + 1].generator;
        if (same_exp && l[k + 2].generator == i && (j == i + 1 || i == j + 1)) {
            options.push_back({1, k});
        }
    }
    std::vector<BraidLetter> out = l;
    std::uniform_int_distribution<std::size_t> coin(0, 3);
    if (options.empty() || coin(rng) == 0) {
        if (n < 2) {
            return word;
        }
        std::uniform_int_distribution<std::size_t> pos(0, l.size()), gen(1, n - 1);
        std::bernoulli_distribution inverse(0.5);
        const BraidLetter x{gen(rng), inverse(rng) ? -1 : 1};
        const auto at = static_cast<std::ptrdiff_t>(pos(rng));
        out.insert(out.begin() + at, {x, x.inverse()});
        return BraidWord(n, std::move(out));
    }
    const Site s = options[std::uniform_int_distribution<std::size_t>(0, options.size() - 1)(rng)];
    if (s.kind == 0) {
        std::swap(out[s.at], out[s.at + 1]);
    } else {
        const auto i = out[s.at].generator, j = out[s.at + 1].generator;
        out[s.at].generator = j;
        out[s.at + 1].generator = i;
        out[s.at + 2].generator = j;
    }
    return BraidWord(n, std::move(out));
}

inline BraidWord rewrite(std::mt19937_64 &rng, BraidWord word, std::size_t steps) {
    for (std::size_t k = 0; k < steps; ++k) {
        word = rewrite_once(rng, word);
    }
    return word;
}

/// Flips each exponent with probability 1/2; the strand permutation is unchanged.
inline BraidWord scramble_exponents(std::mt19937_64 &rng, const BraidWord &word) {
    std::bernoulli_distribution flip(0.5);
    std::vector<BraidLetter> out = word.letters();
    for (auto &l : out) {
        if (flip(rng)) {
            l.exponent = -l.exponent;
        }
    }
    return BraidWord(word.num_strands(), std::move(out));
}

/// A word for `p` built independently of word_for_permutation(p): a random prefix,
/// then a correcting suffix, with exponents scrambled.
inline BraidWord independent_word_for(std::mt19937_64 &rng, const Permutation &p, std::size_t prefix_length) {
    const BraidWord prefix = random_word(rng, p.size(), prefix_length);
    const Permutation rest = compose(permutation_of(prefix).inverse(), p);
    return scramble_exponents(rng, prefix * word_for_permutation(rest));
}

}  // namespace braidq::test_support
