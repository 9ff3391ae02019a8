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

#include <bit>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "braidq/error.hpp"

namespace braidq {

/// A power of i: one of {+1, +i, -1, -i}, stored as the exponent mod 4.
class Phase {
   public:
    constexpr Phase() = default;
    constexpr explicit Phase(unsigned log_i) : log_i_(static_cast<std::uint8_t>(log_i & 3u)) {}

    static constexpr Phase one() { return Phase(0); }
    static constexpr Phase i() { return Phase(1); }
    static constexpr Phase minus_one() { return Phase(2); }
    static constexpr Phase minus_i() { return Phase(3); }

    constexpr unsigned log_i() const { return log_i_; }
    constexpr bool is_real() const { return (log_i_ & 1u) == 0; }
    constexpr Phase conj() const { return Phase(4u - log_i_); }

    std::complex<double> value() const {
        constexpr std::complex<double> table[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
        return table[log_i_];
    }

    constexpr Phase operator*(Phase other) const { return Phase(log_i_ + other.log_i_); }
    constexpr Phase &operator*=(Phase other) { return *this = *this * other; }
    constexpr Phase operator-() const { return Phase(log_i_ + 2u); }
    constexpr bool operator==(const Phase &) const = default;

    /// One of "+", "+i", "-", "-i".
    std::string_view str() const {
        constexpr std::string_view names[4] = {"+", "+i", "-", "-i"};
        return names[log_i_];
    }

   private:
    std::uint8_t log_i_ = 0;
};

/// Single-qubit Pauli letter. Bit 0 is the X component, bit 1 the Z component.
enum class Pauli : std::uint8_t { I = 0, X = 1, Z = 2, Y = 3 };

inline char to_char(Pauli p) { return "IXZY"[static_cast<unsigned>(p)]; }

/// A signed N-qubit Pauli operator `phase * P_1 (x) P_2 (x) ... (x) P_N`.
///
/// Letters are packed in the symplectic (x, z) encoding, 64 qubits per word.
/// Qubit sites are 1-based at the public interface.
class PauliString {
   public:
    using word_t = std::uint64_t;
    static constexpr std::size_t kWordBits = 64;

    /// Identity on `num_qubits` qubits.
    explicit PauliString(std::size_t num_qubits) : n_(num_qubits), xs_(num_words(num_qubits)), zs_(num_words(num_qubits)) {
        if (num_qubits == 0) {
            throw DimensionError("PauliString needs at least one qubit");
        }
    }

    /// Parses an optional phase prefix ("+", "-", "+i", "-i") followed by one of IXYZ per qubit.
    static PauliString from_str(std::string_view text) {
        std::size_t pos = 0;
        Phase phase = Phase::one();
        if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
            if (text[pos] == '-') {
                phase = Phase::minus_one();
            }
            ++pos;
            if (pos < text.size() && text[pos] == 'i') {
                phase *= Phase::i();
                ++pos;
            }
        }
        if (pos == text.size()) {
            throw ParseError("Pauli string has no letters", pos);
        }
        PauliString result(text.size() - pos);
        result.phase_ = phase;
        for (std::size_t q = 0; pos < text.size(); ++pos, ++q) {
            switch (text[pos]) {
                case 'I': break;
                case 'X': result.set(q, Pauli::X); break;
                case 'Y': result.set(q, Pauli::Y); break;
                case 'Z': result.set(q, Pauli::Z); break;
                default: throw ParseError(std::string("unexpected character '") + text[pos] + "' in Pauli string", pos);
            }
        }
        return result;
    }

    /// `letter` on 1-based `site`, identity elsewhere.
    static PauliString single(std::size_t num_qubits, std::size_t site, Pauli letter) {
        PauliString result(num_qubits);
        result.set_letter(site, letter);
        return result;
    }

    std::size_t num_qubits() const { return n_; }
    Phase phase() const { return phase_; }
    void set_phase(Phase phase) { phase_ = phase; }

    Pauli letter(std::size_t site) const {
        check_site(site);
        return get(site - 1);
    }
    void set_letter(std::size_t site, Pauli letter) {
        check_site(site);
        set(site - 1, letter);
    }

    /// Number of non-identity letters.
    std::size_t weight() const {
        std::size_t w = 0;
        for (std::size_t k = 0; k < xs_.size(); ++k) {
            w += static_cast<std::size_t>(std::popcount(xs_[k] | zs_[k]));
        }
        return w;
    }

    bool is_identity_up_to_phase() const { return weight() == 0; }

    /// Conjugate transpose: each letter is Hermitian, so only the phase conjugates.
    PauliString adjoint() const {
        PauliString result = *this;
        result.phase_ = phase_.conj();
        return result;
    }

    bool is_hermitian() const { return phase_.is_real(); }

    PauliString operator-() const {
        PauliString result = *this;
        result.phase_ = -phase_;
        return result;
    }

    std::string str() const {
        std::string out(phase_.str());
        out.reserve(out.size() + n_);
        for (std::size_t q = 0; q < n_; ++q) {
            out.push_back(to_char(get(q)));
        }
        return out;
    }

    bool operator==(const PauliString &) const = default;

    std::span<const word_t> xs() const { return xs_; }
    std::span<const word_t> zs() const { return zs_; }

    // 0-based bit access, used by the tableau engine's local updates.
    bool x_bit(std::size_t q) const { return (xs_[q / kWordBits] >> (q % kWordBits)) & 1u; }
    bool z_bit(std::size_t q) const { return (zs_[q / kWordBits] >> (q % kWordBits)) & 1u; }
    void set_bits(std::size_t q, bool x, bool z) {
        const word_t mask = word_t{1} << (q % kWordBits);
        word_t &xw = xs_[q / kWordBits];
        word_t &zw = zs_[q / kWordBits];
        xw = x ? (xw | mask) : (xw & ~mask);
        zw = z ? (zw | mask) : (zw & ~mask);
    }

    friend PauliString multiply(const PauliString &p, const PauliString &q);
    friend bool commutes(const PauliString &p, const PauliString &q);

   private:
    static std::size_t num_words(std::size_t n) { return (n + kWordBits - 1) / kWordBits; }

    void check_site(std::size_t site) const {
        if (site == 0 || site > n_) {
            throw RangeError("qubit site " + std::to_string(site) + " outside 1.." + std::to_string(n_));
        }
    }

    Pauli get(std::size_t q) const { return static_cast<Pauli>(unsigned(x_bit(q)) | (unsigned(z_bit(q)) << 1)); }
    void set(std::size_t q, Pauli p) {
        const auto bits = static_cast<unsigned>(p);
        set_bits(q, bits & 1u, bits & 2u);
    }

    std::size_t n_;
    Phase phase_{};
    std::vector<word_t> xs_;
    std::vector<word_t> zs_;
};

inline std::ostream &operator<<(std::ostream &out, const PauliString &p) { return out << p.str(); }

namespace detail {

inline void require_same_size(const PauliString &p, const PauliString &q) {
    if (p.num_qubits() != q.num_qubits()) {
        throw DimensionError("Pauli strings act on " + std::to_string(p.num_qubits()) + " and " +
                             std::to_string(q.num_qubits()) + " qubits");
    }
}

}  // namespace detail

/// Exact operator product p*q.
///
/// Per qubit, a letter with bits (x, z) equals i^{xz} X^x Z^z. Moving Z^{z1} past X^{x2}
/// costs (-1)^{z1 x2}, and re-expressing X^x Z^z as a letter costs i^{-xz}.
inline PauliString multiply(const PauliString &p, const PauliString &q) {
    detail::require_same_size(p, q);
    PauliString result(p.num_qubits());
    unsigned log_i = p.phase_.log_i() + q.phase_.log_i();
    for (std::size_t k = 0; k < p.xs_.size(); ++k) {
        const auto x1 = p.xs_[k], z1 = p.zs_[k], x2 = q.xs_[k], z2 = q.zs_[k];
        const auto x = x1 ^ x2, z = z1 ^ z2;
        log_i += static_cast<unsigned>(std::popcount(x1 & z1) + std::popcount(x2 & z2) + 2 * std::popcount(z1 & x2));
        log_i += 3u * static_cast<unsigned>(std::popcount(x & z));
        result.xs_[k] = x;
        result.zs_[k] = z;
    }
    result.phase_ = Phase(log_i);
    return result;
}

inline PauliString operator*(const PauliString &p, const PauliString &q) { return multiply(p, q); }

/// True iff pq = qp. Counts qubits where the letters anticommute; phases are irrelevant.
inline bool commutes(const PauliString &p, const PauliString &q) {
    detail::require_same_size(p, q);
    unsigned anti = 0;
    for (std::size_t k = 0; k < p.xs_.size(); ++k) {
        anti += static_cast<unsigned>(std::popcount((p.xs_[k] & q.zs_[k]) ^ (p.zs_[k] & q.xs_[k])));
    }
    return (anti & 1u) == 0;
}

/// Letters of `p` at the given 1-based sites, in the given order, with phase +1.
inline PauliString restrict(const PauliString &p, std::span<const std::size_t> sites) {
    if (sites.empty()) {
        throw RangeError("restrict needs at least one site");
    }
    PauliString result(sites.size());
    for (std::size_t k = 0; k < sites.size(); ++k) {
        result.set_letter(k + 1, p.letter(sites[k]));
    }
    return result;
}

inline PauliString restrict(const PauliString &p, std::initializer_list<std::size_t> sites) {
    return restrict(p, std::span<const std::size_t>(sites.begin(), sites.size()));
}

/// Jordan-Wigner Majorana operator gamma_m on `num_qubits` qubits, 1 <= m <= 2N:
/// gamma_{2j-1} = Z_1 ... Z_{j-1} X_j and gamma_{2j} = Z_1 ... Z_{j-1} Y_j.
inline PauliString majorana(std::size_t m, std::size_t num_qubits) {
    if (m == 0 || m > 2 * num_qubits) {
        throw RangeError("Majorana index " + std::to_string(m) + " outside 1.." + std::to_string(2 * num_qubits));
    }
    PauliString result(num_qubits);
    const std::size_t site = (m + 1) / 2;
    for (std::size_t k = 1; k < site; ++k) {
        result.set_letter(k, Pauli::Z);
    }
    result.set_letter(site, m % 2 == 1 ? Pauli::X : Pauli::Y);
    return result;
}

/// i * gamma_a * gamma_b, fully reduced. Always Hermitian for a != b.
inline PauliString majorana_bilinear(std::size_t a, std::size_t b, std::size_t num_qubits) {
    if (a == b) {
        throw std::invalid_argument("majorana_bilinear needs distinct indices; gamma_a^2 is the identity");
    }
    PauliString result = multiply(majorana(a, num_qubits), majorana(b, num_qubits));
    result.set_phase(result.phase() * Phase::i());
    return result;
}

}  // namespace braidq
