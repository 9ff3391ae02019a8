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
#include <string>
#include <vector>

#include "braidq/braid.hpp"
#include "braidq/error.hpp"
#include "braidq/pauli.hpp"

namespace braidq {

/// N signed Pauli generators whose joint +1 eigenspace is the tracked state.
class StabilizerSet {
   public:
    StabilizerSet(std::size_t num_qubits, std::vector<PauliString> generators)
        : n_(num_qubits), generators_(std::move(generators)) {
        if (generators_.size() != n_) {
            throw DimensionError("a stabilizer set on " + std::to_string(n_) + " qubits needs exactly " +
                                 std::to_string(n_) + " generators");
        }
        for (const auto &g : generators_) {
            if (g.num_qubits() != n_) {
                throw DimensionError("stabilizer generator acts on the wrong number of qubits");
            }
        }
    }

    static StabilizerSet from_strings(const std::vector<std::string> &texts) {
        if (texts.empty()) {
            throw DimensionError("a stabilizer set needs at least one generator");
        }
        std::vector<PauliString> gens;
        gens.reserve(texts.size());
        for (const auto &t : texts) {
            gens.push_back(PauliString::from_str(t));
        }
        const std::size_t n = gens.front().num_qubits();
        return StabilizerSet(n, std::move(gens));
    }

    std::size_t num_qubits() const { return n_; }
    const std::vector<PauliString> &generators() const { return generators_; }
    const PauliString &operator[](std::size_t k) const { return generators_[k]; }

    /// In-place conjugation g -> t g t^dag by t = tau_i^{exponent}.
    ///
    /// tau_i = (1 + M)/sqrt(2) with M = gamma_{2i-1} gamma_{2i+1} = -i Y_i X_{i+1}. Generators
    /// commuting with M are fixed; anticommuting ones map to M g (tau_i) or -M g (tau_i^{-1}).
    /// M touches only qubits i and i+1, so each generator update is O(1).
    void apply(std::size_t generator, int exponent) {
        if (generator == 0 || generator >= n_) {
            throw RangeError("generator s" + std::to_string(generator) + " needs 1 <= i < " + std::to_string(n_));
        }
        if (exponent != 1 && exponent != -1) {
            throw RangeError("braid letter exponent must be +1 or -1");
        }
        const std::size_t a = generator - 1;  // 0-based qubit carrying Y
        const std::size_t b = generator;      // 0-based qubit carrying X
        // M has phase -i; tau^{-1} contributes an extra -1.
        const unsigned base_log_i = exponent > 0 ? 3u : 1u;
        for (auto &g : generators_) {
            const bool gxa = g.x_bit(a), gza = g.z_bit(a), gzb = g.z_bit(b), gxb = g.x_bit(b);
            if (!(gxa ^ gza ^ gzb)) {
                continue;
            }
            // Local product (Y (x) X) * (g_a (x) g_b); see multiply() for the per-qubit phase rule.
            unsigned log_i = base_log_i + g.phase().log_i();
            // Qubit a: M letter Y = (1, 1).
            {
                const bool x = !gxa, z = !gza;
                log_i += 1u + unsigned(gxa && gza) + 2u * unsigned(gxa) + 3u * unsigned(x && z);
                g.set_bits(a, x, z);
            }
            // Qubit b: M letter X = (1, 0).
            {
                const bool x = !gxb, z = gzb;
                log_i += unsigned(gxb && gzb) + 3u * unsigned(x && z);
                g.set_bits(b, x, z);
            }
            g.set_phase(Phase(log_i));
        }
    }

    void apply(const BraidWord &word) {
        if (word.num_strands() != n_) {
            throw DimensionError("braid word on " + std::to_string(word.num_strands()) +
                                 " strands applied to a stabilizer set on " + std::to_string(n_) + " qubits");
        }
        for (const auto &l : word.letters()) {
            apply(l.generator, l.exponent);
        }
    }

    bool operator==(const StabilizerSet &) const = default;

   private:
    std::size_t n_;
    std::vector<PauliString> generators_;
};

/// One "+ZII"-style line per generator, each newline-terminated.
inline std::string render(const StabilizerSet &s) {
    std::string out;
    for (const auto &g : s.generators()) {
        out += g.str();
        out.push_back('\n');
    }
    return out;
}

/// {+Z_1, ..., +Z_N}: fixes |0...0> with eigenvalue +1. Generator j equals i gamma_{2j} gamma_{2j-1}.
inline StabilizerSet initial_stabilizers(std::size_t num_qubits) {
    if (num_qubits == 0) {
        throw DimensionError("initial_stabilizers needs N >= 1");
    }
    std::vector<PauliString> gens;
    gens.reserve(num_qubits);
    for (std::size_t j = 1; j <= num_qubits; ++j) {
        gens.push_back(PauliString::single(num_qubits, j, Pauli::Z));
    }
    return StabilizerSet(num_qubits, std::move(gens));
}

inline StabilizerSet conjugate_by_generator(StabilizerSet s, std::size_t generator, int exponent) {
    s.apply(generator, exponent);
    return s;
}

/// Folds the word left to right: the leftmost letter conjugates first.
inline StabilizerSet conjugate_by_word(StabilizerSet s, const BraidWord &word) {
    s.apply(word);
    return s;
}

/// `p` written as `phase * gamma_{m_1} gamma_{m_2} ... gamma_{m_k}` with m_1 < ... < m_k.
struct MajoranaMonomial {
    Phase phase;
    std::vector<std::size_t> indices;
};

/// Inverts the Jordan-Wigner map. Every Pauli string is, up to phase, exactly one
/// Majorana monomial: site j carries X^{b_{2j-1}} Y^{b_{2j}} times Z^(parity of later indices).
inline MajoranaMonomial to_majorana_monomial(const PauliString &p) {
    const std::size_t n = p.num_qubits();
    std::vector<std::size_t> indices;
    bool later_parity = false;
    for (std::size_t q = n; q-- > 0;) {
        const bool x = p.x_bit(q);
        const bool z = p.z_bit(q) ^ later_parity;
        const std::size_t odd = 2 * q + 1, even = 2 * q + 2;
        // Reduced letter: X -> odd only, Y -> even only, Z ~ XY -> both, I -> none.
        if (x && !z) {
            indices.push_back(odd);
        } else if (x && z) {
            indices.push_back(even);
        } else if (!x && z) {
            indices.push_back(even);
            indices.push_back(odd);
        }
        // One new index iff the reduced letter is X or Y.
        later_parity ^= x;
    }
    std::sort(indices.begin(), indices.end());
    PauliString product(n);
    for (auto m : indices) {
        product = multiply(product, majorana(m, n));
    }
    if (product.xs().size() != p.xs().size() || !std::equal(product.xs().begin(), product.xs().end(), p.xs().begin()) ||
        !std::equal(product.zs().begin(), product.zs().end(), p.zs().begin())) {
        throw std::logic_error("Majorana decomposition failed to reproduce the Pauli letters");
    }
    return {p.phase() * product.phase().conj(), std::move(indices)};
}

/// For each even label 2j, the odd label it is paired with, and the sign in
/// `generator = sign * i gamma_{2j} gamma_{odd}`.
struct MajoranaPairing {
    struct Entry {
        std::size_t even = 0;
        std::size_t odd = 0;
        int sign = 1;
        bool operator==(const Entry &) const = default;
    };
    std::vector<Entry> pairs;  // sorted by `even`

    bool operator==(const MajoranaPairing &) const = default;
};

/// Recovers the bilinear form of every generator. Throws MalformedError when a generator is
/// not +-i gamma_even gamma_odd, or when the even labels do not cover 2, 4, ..., 2N exactly once.
inline MajoranaPairing majorana_pairing(const StabilizerSet &s) {
    const std::size_t n = s.num_qubits();
    MajoranaPairing out;
    out.pairs.reserve(n);
    for (const auto &g : s.generators()) {
        const auto mono = to_majorana_monomial(g);
        if (mono.indices.size() != 2 || (mono.indices[0] % 2) == (mono.indices[1] % 2)) {
            throw MalformedError("generator " + g.str() + " is not a bilinear of one even and one odd Majorana");
        }
        const std::size_t even = mono.indices[0] % 2 == 0 ? mono.indices[0] : mono.indices[1];
        const std::size_t odd = mono.indices[0] % 2 == 1 ? mono.indices[0] : mono.indices[1];
        const Phase ratio = g.phase() * majorana_bilinear(even, odd, n).phase().conj();
        if (!ratio.is_real()) {
            throw MalformedError("generator " + g.str() + " is not Hermitian");
        }
        out.pairs.push_back({even, odd, ratio == Phase::one() ? 1 : -1});
    }
    std::sort(out.pairs.begin(), out.pairs.end(), [](const auto &l, const auto &r) { return l.even < r.even; });
    std::vector<bool> odd_seen(2 * n + 1, false);
    for (std::size_t j = 0; j < n; ++j) {
        if (out.pairs[j].even != 2 * (j + 1) || odd_seen[out.pairs[j].odd]) {
            throw MalformedError("Majorana pairing does not cover each even and odd label exactly once");
        }
        odd_seen[out.pairs[j].odd] = true;
    }
    return out;
}

/// Site permutation j -> k read off from the pairing (2j, 2k-1).
inline Permutation site_permutation(const MajoranaPairing &pairing) {
    std::vector<std::size_t> image(pairing.pairs.size());
    for (const auto &e : pairing.pairs) {
        image[e.even / 2 - 1] = (e.odd + 1) / 2;
    }
    return Permutation::from_image(std::move(image));
}

/// Rank over GF(2) of the N x 2N symplectic bit matrix of the generators.
inline std::size_t symplectic_rank(const StabilizerSet &s) {
    const std::size_t n = s.num_qubits();
    const std::size_t words = (n + 63) / 64;
    std::vector<std::vector<std::uint64_t>> rows;
    rows.reserve(n);
    for (const auto &g : s.generators()) {
        std::vector<std::uint64_t> row(g.xs().begin(), g.xs().end());
        row.insert(row.end(), g.zs().begin(), g.zs().end());
        rows.push_back(std::move(row));
    }
    std::size_t rank = 0;
    for (std::size_t col = 0; col < 2 * words * 64 && rank < rows.size(); ++col) {
        const std::size_t w = col / 64;
        const std::uint64_t bit = std::uint64_t{1} << (col % 64);
        std::size_t pivot = rank;
        while (pivot < rows.size() && !(rows[pivot][w] & bit)) {
            ++pivot;
        }
        if (pivot == rows.size()) {
            continue;
        }
        std::swap(rows[rank], rows[pivot]);
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (r != rank && (rows[r][w] & bit)) {
                for (std::size_t k = 0; k < rows[r].size(); ++k) {
                    rows[r][k] ^= rows[rank][k];
                }
            }
        }
        ++rank;
    }
    return rank;
}

/// Hermitian, pairwise commuting, and independent: the stabilized space is one-dimensional.
inline bool is_valid_stabilizer_group(const StabilizerSet &s) {
    const auto &g = s.generators();
    for (std::size_t a = 0; a < g.size(); ++a) {
        if (!g[a].is_hermitian()) {
            return false;
        }
        for (std::size_t b = a + 1; b < g.size(); ++b) {
            if (!commutes(g[a], g[b])) {
                return false;
            }
        }
    }
    return symplectic_rank(s) == s.num_qubits();
}

}  // namespace braidq
