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

// Brute-force state-vector reference. Nothing here consults the stabilizer tableau or
// the cycle structure of the braid; it exists to check both.
//
// Basis ordering: qubit 1 is the most significant bit of the amplitude index.

#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "braidq/braid.hpp"
#include "braidq/error.hpp"
#include "braidq/partition.hpp"
#include "braidq/pauli.hpp"
#include "braidq/stabilizer.hpp"

namespace braidq::dense {

using complex = std::complex<double>;

inline constexpr std::size_t kDefaultStateLimit = 14;
inline constexpr std::size_t kDefaultOperatorLimit = 5;
inline constexpr double kStabilizedTolerance = 1e-10;
inline constexpr double kSeparablePurity = 1.0 - 1e-10;

/// Row-major square complex matrix.
struct Matrix {
    std::size_t dim = 0;
    std::vector<complex> data;

    explicit Matrix(std::size_t d = 0) : dim(d), data(d * d) {}

    static Matrix identity(std::size_t d) {
        Matrix m(d);
        for (std::size_t k = 0; k < d; ++k) {
            m(k, k) = 1.0;
        }
        return m;
    }

    complex &operator()(std::size_t r, std::size_t c) { return data[r * dim + c]; }
    const complex &operator()(std::size_t r, std::size_t c) const { return data[r * dim + c]; }

    Matrix operator*(const Matrix &o) const {
        Matrix out(dim);
        for (std::size_t r = 0; r < dim; ++r) {
            for (std::size_t k = 0; k < dim; ++k) {
                const complex v = (*this)(r, k);
                if (v == complex{}) {
                    continue;
                }
                for (std::size_t c = 0; c < dim; ++c) {
                    out(r, c) += v * o(k, c);
                }
            }
        }
        return out;
    }

    Matrix operator+(const Matrix &o) const {
        Matrix out = *this;
        for (std::size_t k = 0; k < data.size(); ++k) {
            out.data[k] += o.data[k];
        }
        return out;
    }

    Matrix operator*(complex s) const {
        Matrix out = *this;
        for (auto &v : out.data) {
            v *= s;
        }
        return out;
    }

    Matrix adjoint() const {
        Matrix out(dim);
        for (std::size_t r = 0; r < dim; ++r) {
            for (std::size_t c = 0; c < dim; ++c) {
                out(c, r) = std::conj((*this)(r, c));
            }
        }
        return out;
    }

    double max_abs_diff(const Matrix &o) const {
        double m = 0;
        for (std::size_t k = 0; k < data.size(); ++k) {
            m = std::max(m, std::abs(data[k] - o.data[k]));
        }
        return m;
    }
};

inline Matrix kron(const Matrix &a, const Matrix &b) {
    Matrix out(a.dim * b.dim);
    for (std::size_t ar = 0; ar < a.dim; ++ar) {
        for (std::size_t ac = 0; ac < a.dim; ++ac) {
            for (std::size_t br = 0; br < b.dim; ++br) {
                for (std::size_t bc = 0; bc < b.dim; ++bc) {
                    out(ar * b.dim + br, ac * b.dim + bc) = a(ar, ac) * b(br, bc);
                }
            }
        }
    }
    return out;
}

/// 2x2 matrix of a single Pauli letter.
inline Matrix pauli_matrix(Pauli p) {
    Matrix m(2);
    switch (p) {
        case Pauli::I: m = Matrix::identity(2); break;
        case Pauli::X: m(0, 1) = 1; m(1, 0) = 1; break;
        case Pauli::Y: m(0, 1) = complex(0, -1); m(1, 0) = complex(0, 1); break;
        case Pauli::Z: m(0, 0) = 1; m(1, 1) = -1; break;
    }
    return m;
}

/// Full 2^N x 2^N matrix of a Pauli string, built by Kronecker products.
inline Matrix operator_matrix(const PauliString &p, std::size_t limit = kDefaultOperatorLimit) {
    if (p.num_qubits() > limit) {
        throw ResourceError("dense operator on " + std::to_string(p.num_qubits()) + " qubits exceeds limit " +
                            std::to_string(limit));
    }
    Matrix m = pauli_matrix(p.letter(1));
    for (std::size_t q = 2; q <= p.num_qubits(); ++q) {
        m = kron(m, pauli_matrix(q <= p.num_qubits() ? p.letter(q) : Pauli::I));
    }
    return m * p.phase().value();
}

/// The 4x4 braid gate (I (x) I - i s Y (x) X)/sqrt(2) for exponent s, first qubit = high bit.
inline Matrix braid_gate(int exponent) {
    const Matrix yx = kron(pauli_matrix(Pauli::Y), pauli_matrix(Pauli::X));
    return (Matrix::identity(4) + yx * complex(0, -static_cast<double>(exponent))) * (1.0 / std::sqrt(2.0));
}

/// tau_i^{exponent} embedded in N qubits: I^{i-1} (x) gate (x) I^{N-i-1}.
inline Matrix generator_matrix(std::size_t generator, int exponent, std::size_t num_qubits,
                               std::size_t limit = kDefaultOperatorLimit) {
    if (num_qubits > limit) {
        throw ResourceError("dense operator on " + std::to_string(num_qubits) + " qubits exceeds limit " +
                            std::to_string(limit));
    }
    if (generator == 0 || generator >= num_qubits) {
        throw RangeError("generator s" + std::to_string(generator) + " out of range");
    }
    Matrix left = Matrix::identity(std::size_t{1} << (generator - 1));
    Matrix right = Matrix::identity(std::size_t{1} << (num_qubits - generator - 1));
    return kron(kron(left, braid_gate(exponent)), right);
}

/// Operator of a whole word: tau(l_k) ... tau(l_1).
inline Matrix word_matrix(const BraidWord &word, std::size_t limit = kDefaultOperatorLimit) {
    Matrix m = Matrix::identity(std::size_t{1} << word.num_strands());
    for (const auto &l : word.letters()) {
        m = generator_matrix(l.generator, l.exponent, word.num_strands(), limit) * m;
    }
    return m;
}

/// A pure state on N qubits.
struct StateVector {
    std::size_t num_qubits = 0;
    std::vector<complex> amplitudes;

    static StateVector zero(std::size_t n) {
        StateVector s{n, std::vector<complex>(std::size_t{1} << n)};
        s.amplitudes[0] = 1.0;
        return s;
    }

    double norm() const {
        double sum = 0;
        for (const auto &a : amplitudes) {
            sum += std::norm(a);
        }
        return std::sqrt(sum);
    }

    /// Amplitude of the basis state whose bit for qubit q (1-based) is bits[q-1].
    complex amplitude(std::string_view bits) const {
        std::size_t index = 0;
        for (char c : bits) {
            index = (index << 1) | static_cast<std::size_t>(c == '1');
        }
        return amplitudes.at(index);
    }

    /// "index bitstring re im" per line, for debugging.
    std::string dump() const {
        std::string out;
        char buf[128];
        for (std::size_t k = 0; k < amplitudes.size(); ++k) {
            std::string bits(num_qubits, '0');
            for (std::size_t q = 0; q < num_qubits; ++q) {
                bits[q] = (k >> (num_qubits - 1 - q)) & 1u ? '1' : '0';
            }
            std::snprintf(buf, sizeof buf, " %.17g %.17g\n", amplitudes[k].real(), amplitudes[k].imag());
            out += std::to_string(k) + " " + bits + buf;
        }
        return out;
    }
};

/// Applies a 4x4 gate to adjacent qubits (q, q+1), 1-based, q the high bit of the pair.
inline void apply_two_qubit_gate(StateVector &state, const Matrix &gate, std::size_t q) {
    const std::size_t n = state.num_qubits;
    const std::size_t low_shift = n - q - 1;  // bit position of qubit q+1
    const std::size_t pair_mask = std::size_t{3} << low_shift;
    for (std::size_t base = 0; base < state.amplitudes.size(); ++base) {
        if (base & pair_mask) {
            continue;
        }
        std::array<complex, 4> in;
        for (std::size_t k = 0; k < 4; ++k) {
            in[k] = state.amplitudes[base | (k << low_shift)];
        }
        for (std::size_t r = 0; r < 4; ++r) {
            complex acc = 0;
            for (std::size_t c = 0; c < 4; ++c) {
                acc += gate(r, c) * in[c];
            }
            state.amplitudes[base | (r << low_shift)] = acc;
        }
    }
}

/// B |0...0> for the word's braid operator B, one 4x4 gate per letter in word order.
inline StateVector apply_word(const BraidWord &word, std::size_t num_qubits, std::size_t limit = kDefaultStateLimit) {
    if (num_qubits > limit) {
        throw ResourceError("state vector on " + std::to_string(num_qubits) + " qubits exceeds oracle limit " +
                            std::to_string(limit));
    }
    if (word.num_strands() != num_qubits) {
        throw DimensionError("braid word strand count differs from qubit count");
    }
    const Matrix forward = braid_gate(1), backward = braid_gate(-1);
    StateVector state = StateVector::zero(num_qubits);
    for (const auto &l : word.letters()) {
        apply_two_qubit_gate(state, l.exponent > 0 ? forward : backward, l.generator);
    }
    return state;
}

/// P|psi> directly on amplitudes: P|k> = phase * i^{#Y} * (-1)^{|k & zmask|} |k ^ xmask>.
inline StateVector apply_pauli(const PauliString &p, const StateVector &state) {
    const std::size_t n = state.num_qubits;
    if (p.num_qubits() != n) {
        throw DimensionError("Pauli string and state differ in qubit count");
    }
    std::size_t xmask = 0, zmask = 0;
    unsigned ys = 0;
    for (std::size_t q = 1; q <= n; ++q) {
        const std::size_t bit = std::size_t{1} << (n - q);
        const Pauli l = p.letter(q);
        if (l == Pauli::X || l == Pauli::Y) {
            xmask |= bit;
        }
        if (l == Pauli::Z || l == Pauli::Y) {
            zmask |= bit;
        }
        ys += l == Pauli::Y;
    }
    const complex factor = (p.phase() * Phase(ys)).value();
    StateVector out{n, std::vector<complex>(state.amplitudes.size())};
    for (std::size_t k = 0; k < state.amplitudes.size(); ++k) {
        const double sign = (std::popcount(k & zmask) & 1) ? -1.0 : 1.0;
        out.amplitudes[k ^ xmask] = factor * sign * state.amplitudes[k];
    }
    return out;
}

/// max over generators g of max_k |(g psi - psi)_k|.
inline double stabilizer_residual(const StateVector &state, const StabilizerSet &s) {
    if (s.num_qubits() != state.num_qubits) {
        throw DimensionError("stabilizer set and state differ in qubit count");
    }
    double worst = 0;
    for (const auto &g : s.generators()) {
        const StateVector image = apply_pauli(g, state);
        for (std::size_t k = 0; k < image.amplitudes.size(); ++k) {
            worst = std::max(worst, std::abs(image.amplitudes[k] - state.amplitudes[k]));
        }
    }
    return worst;
}

/// g|psi> = |psi> within 1e-10 for every generator.
inline bool check_stabilized(const StateVector &state, const StabilizerSet &s) {
    return stabilizer_residual(state, s) < kStabilizedTolerance;
}

/// Tr(rho_A^2) for the reduced state on the 1-based sites in `subset`.
///
/// Reshapes psi into a 2^|A| x 2^|rest| matrix M and returns ||M M^dag||_F^2.
inline double bipartition_purity(const StateVector &state, std::span<const std::size_t> subset) {
    const std::size_t n = state.num_qubits;
    std::vector<bool> in_a(n + 1, false);
    for (auto s : subset) {
        if (s == 0 || s > n || in_a[s]) {
            throw RangeError("purity subset must hold distinct sites in 1.." + std::to_string(n));
        }
        in_a[s] = true;
    }
    if (subset.empty() || subset.size() == n) {
        throw std::invalid_argument("purity needs a nonempty proper subset of the sites");
    }
    const std::size_t na = subset.size(), nb = n - na;
    // Map each amplitude index to (row, col) by gathering bits.
    std::vector<std::size_t> a_bits, b_bits;  // bit positions, most significant first
    for (std::size_t q = 1; q <= n; ++q) {
        (in_a[q] ? a_bits : b_bits).push_back(n - q);
    }
    const std::size_t rows = std::size_t{1} << na, cols = std::size_t{1} << nb;
    std::vector<complex> m(rows * cols);
    for (std::size_t k = 0; k < state.amplitudes.size(); ++k) {
        std::size_t r = 0, c = 0;
        for (auto b : a_bits) {
            r = (r << 1) | ((k >> b) & 1u);
        }
        for (auto b : b_bits) {
            c = (c << 1) | ((k >> b) & 1u);
        }
        m[r * cols + c] = state.amplitudes[k];
    }
    double purity = 0;
    for (std::size_t r1 = 0; r1 < rows; ++r1) {
        for (std::size_t r2 = r1; r2 < rows; ++r2) {
            complex rho = 0;
            const complex *a = &m[r1 * cols];
            const complex *b = &m[r2 * cols];
            for (std::size_t c = 0; c < cols; ++c) {
                rho += a[c] * std::conj(b[c]);
            }
            purity += (r1 == r2 ? 1.0 : 2.0) * std::norm(rho);
        }
    }
    return purity;
}

inline double bipartition_purity(const StateVector &state, std::initializer_list<std::size_t> subset) {
    return bipartition_purity(state, std::span<const std::size_t>(subset.begin(), subset.size()));
}

/// Finest partition such that the state is a tensor product across blocks.
///
/// Starting from one block holding every site, each block is split at the first
/// bipartition whose purity reaches 1 - 1e-10, and splitting repeats until no block
/// splits. Candidate bipartitions are enumerated in subset order, or shuffled when a
/// nonzero `shuffle_seed` is given (the result must not depend on it).
inline EntanglementPartition finest_product_partition(const StateVector &state, std::size_t limit = kDefaultStateLimit,
                                                      std::uint64_t shuffle_seed = 0) {
    const std::size_t n = state.num_qubits;
    if (n > limit) {
        throw ResourceError("state vector on " + std::to_string(n) + " qubits exceeds oracle limit " +
                            std::to_string(limit));
    }
    std::mt19937_64 rng(shuffle_seed);
    std::vector<std::size_t> all(n);
    std::iota(all.begin(), all.end(), std::size_t{1});
    std::vector<std::vector<std::size_t>> pending{all}, done;
    while (!pending.empty()) {
        std::vector<std::size_t> block = std::move(pending.back());
        pending.pop_back();
        if (block.size() == 1) {
            done.push_back(std::move(block));
            continue;
        }
        const std::size_t m = block.size();
        // Masks over block positions; keep the last position out of the subset so each
        // bipartition is visited once, and use the smaller side for the purity call.
        std::vector<std::uint64_t> masks;
        for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << (m - 1)); ++mask) {
            masks.push_back(mask);
        }
        if (shuffle_seed != 0) {
            std::shuffle(masks.begin(), masks.end(), rng);
        } else {
            std::stable_sort(masks.begin(), masks.end(),
                             [](auto l, auto r) { return std::popcount(l) < std::popcount(r); });
        }
        bool split = false;
        for (auto mask : masks) {
            std::vector<std::size_t> side, other;
            for (std::size_t k = 0; k < m; ++k) {
                ((mask >> k) & 1u ? side : other).push_back(block[k]);
            }
            if (side.size() > other.size()) {
                std::swap(side, other);
            }
            // When `block` is a tensor factor of the state, purity on the full state
            // decides whether `side` factors out of `block`.
            if (bipartition_purity(state, side) >= kSeparablePurity) {
                pending.push_back(std::move(side));
                pending.push_back(std::move(other));
                split = true;
                break;
            }
        }
        if (!split) {
            done.push_back(std::move(block));
        }
    }
    return EntanglementPartition(n, std::move(done));
}

}  // namespace braidq::dense
