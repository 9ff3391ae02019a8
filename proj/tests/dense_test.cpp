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

#include "braidq/dense.hpp"

#include <cmath>
#include <random>

#include "gtest/gtest.h"
#include "support.hpp"

using namespace braidq;
using dense::complex;

namespace {

/// exp(A) by Taylor series; fine for the small-norm 4x4 generators used here.
dense::Matrix expm(const dense::Matrix &a) {
    dense::Matrix sum = dense::Matrix::identity(a.dim), term = sum;
    for (int k = 1; k < 40; ++k) {
        term = term * a * complex(1.0 / k);
        sum = sum + term;
    }
    return sum;
}

double max_norm_drift(const BraidWord &w) {
    dense::StateVector s = dense::StateVector::zero(w.num_strands());
    const auto forward = dense::braid_gate(1), backward = dense::braid_gate(-1);
    double drift = 0;
    for (const auto &l : w.letters()) {
        dense::apply_two_qubit_gate(s, l.exponent > 0 ? forward : backward, l.generator);
        drift = std::max(drift, std::abs(s.norm() - 1.0));
    }
    return drift;
}

}  // namespace

TEST(dense, bell_state_from_one_generator) {
    const auto s = dense::apply_word(parse_word("s1", 2), 2);
    const double h = 1 / std::sqrt(2.0);
    EXPECT_NEAR(std::abs(s.amplitude("00") - h), 0, 1e-12);
    EXPECT_NEAR(std::abs(s.amplitude("01")), 0, 1e-12);
    EXPECT_NEAR(std::abs(s.amplitude("10")), 0, 1e-12);
    EXPECT_NEAR(std::abs(s.amplitude("11") - h), 0, 1e-12);
}

TEST(dense, bell_state_embedded) {
    // tau_2 on N = 4 entangles sites 2 and 3 only.
    const auto s = dense::apply_word(parse_word("s2", 4), 4);
    const double h = 1 / std::sqrt(2.0);
    EXPECT_NEAR(std::abs(s.amplitude("0000") - h), 0, 1e-12);
    EXPECT_NEAR(std::abs(s.amplitude("0110") - h), 0, 1e-12);
}

TEST(dense, empty_word_and_unitarity) {
    const auto zero = dense::apply_word(BraidWord(4), 4);
    EXPECT_EQ(zero.amplitudes, dense::StateVector::zero(4).amplitudes);
    const auto back = dense::apply_word(parse_word("s1 s1^-1", 3), 3);
    EXPECT_NEAR(std::abs(back.amplitude("000") - 1.0), 0, 1e-12);
    for (std::size_t k = 1; k < back.amplitudes.size(); ++k) {
        EXPECT_NEAR(std::abs(back.amplitudes[k]), 0, 1e-12);
    }
}

TEST(dense, resource_limit) {
    EXPECT_THROW(dense::apply_word(BraidWord(15), 15), ResourceError);
    EXPECT_NO_THROW(dense::apply_word(BraidWord(15), 15, 15));
    EXPECT_THROW(dense::generator_matrix(1, 1, 6), ResourceError);
    EXPECT_THROW(dense::apply_word(BraidWord(3), 4), DimensionError);
}

TEST(dense, norm_preserved_after_every_gate) {
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 50; ++trial) {
        const std::size_t n = 2 + trial % 9;
        EXPECT_LT(max_norm_drift(test_support::random_word(rng, n, 60)), 1e-12);
    }
}

TEST(dense, gate_is_unitary_and_equals_exponential) {
    const auto yx = dense::kron(dense::pauli_matrix(Pauli::Y), dense::pauli_matrix(Pauli::X));
    for (int e : {1, -1}) {
        const auto gate = dense::braid_gate(e);
        EXPECT_LT((gate * gate.adjoint()).max_abs_diff(dense::Matrix::identity(4)), 1e-12);
        const auto exponential = expm(yx * complex(0, -e * M_PI / 4));
        EXPECT_LT(gate.max_abs_diff(exponential), 1e-12);
    }
    // Embedded form equals (I - i Y_i X_{i+1}) / sqrt(2) built from the Pauli string.
    for (std::size_t n = 2; n <= 5; ++n) {
        for (std::size_t i = 1; i < n; ++i) {
            PauliString yx_i(n);
            yx_i.set_letter(i, Pauli::Y);
            yx_i.set_letter(i + 1, Pauli::X);
            const auto expected =
                (dense::Matrix::identity(std::size_t{1} << n) + dense::operator_matrix(yx_i) * complex(0, -1)) *
                complex(1 / std::sqrt(2.0));
            const auto t = dense::generator_matrix(i, 1, n);
            EXPECT_LT(t.max_abs_diff(expected), 1e-12);
            EXPECT_LT((t * t.adjoint()).max_abs_diff(dense::Matrix::identity(std::size_t{1} << n)), 1e-12);
        }
    }
}

TEST(dense, matrix_braid_relations) {
    for (int e : {1, -1}) {
        const auto a = dense::word_matrix(BraidWord(3, {{1, e}, {2, e}, {1, e}}));
        const auto b = dense::word_matrix(BraidWord(3, {{2, e}, {1, e}, {2, e}}));
        EXPECT_LT(a.max_abs_diff(b), 1e-12);
        const auto c = dense::word_matrix(BraidWord(4, {{1, e}, {3, e}}));
        const auto d = dense::word_matrix(BraidWord(4, {{3, e}, {1, e}}));
        EXPECT_LT(c.max_abs_diff(d), 1e-12);
    }
}

TEST(dense, check_stabilized_examples) {
    for (std::size_t n = 1; n <= 6; ++n) {
        EXPECT_TRUE(dense::check_stabilized(dense::StateVector::zero(n), initial_stabilizers(n)));
    }
    EXPECT_FALSE(dense::check_stabilized(dense::StateVector::zero(2), StabilizerSet::from_strings({"-ZI", "IZ"})));
    EXPECT_THROW(dense::check_stabilized(dense::StateVector::zero(2), initial_stabilizers(3)), DimensionError);
}

TEST(dense, tableau_stabilizes_dense_state) {
    std::mt19937_64 rng(37);
    for (int trial = 0; trial < 400; ++trial) {
        const std::size_t n = 2 + trial % 4;
        const auto w = test_support::random_word(rng, n, trial % 41);
        const auto state = dense::apply_word(w, n);
        const auto s = conjugate_by_word(initial_stabilizers(n), w);
        EXPECT_LT(dense::stabilizer_residual(state, s), 1e-10) << render(w);
    }
}

TEST(dense, apply_pauli_matches_matrix) {
    std::mt19937_64 rng(41);
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t n = 1 + trial % 4;
        const auto p = test_support::random_pauli(rng, n);
        const auto state = dense::apply_word(test_support::random_word(rng, n, 10), n);
        const auto m = dense::operator_matrix(p);
        const auto image = dense::apply_pauli(p, state);
        for (std::size_t r = 0; r < m.dim; ++r) {
            complex acc = 0;
            for (std::size_t c = 0; c < m.dim; ++c) {
                acc += m(r, c) * state.amplitudes[c];
            }
            EXPECT_LT(std::abs(acc - image.amplitudes[r]), 1e-12);
        }
    }
}

TEST(dense, purity_examples) {
    const auto bell = dense::apply_word(parse_word("s1", 2), 2);
    EXPECT_NEAR(dense::bipartition_purity(bell, {1}), 0.5, 1e-12);
    EXPECT_NEAR(dense::bipartition_purity(dense::StateVector::zero(2), {1}), 1.0, 1e-12);
    EXPECT_THROW(dense::bipartition_purity(bell, {}), std::invalid_argument);
    EXPECT_THROW(dense::bipartition_purity(bell, {1, 2}), std::invalid_argument);
    EXPECT_THROW(dense::bipartition_purity(bell, {3}), RangeError);
}

TEST(dense, purity_of_interleaved_transpositions) {
    // (1 3)(2 4): the two transpositions interleave, so {1,3} does not factor out.
    const auto w = word_for_permutation(Permutation::from_cycles(4, {{1, 3}, {2, 4}}));
    const auto state = dense::apply_word(w, 4);
    const double purity = dense::bipartition_purity(state, {1, 3});
    // Frozen from an independent numpy evaluation of Tr(rho_{13}^2) for the word s2 s1 s3 s2.
    EXPECT_EQ(render(w), "s2 s1 s3 s2");
    EXPECT_NEAR(purity, 0.5, 1e-10);
    EXPECT_NEAR(dense::bipartition_purity(state, {2, 4}), purity, 1e-10);
}

TEST(dense, purity_symmetric_under_complement) {
    std::mt19937_64 rng(43);
    for (int trial = 0; trial < 60; ++trial) {
        const std::size_t n = 2 + trial % 7;
        const auto state = dense::apply_word(test_support::random_word(rng, n, 20), n);
        std::vector<std::size_t> a, b;
        for (std::size_t q = 1; q <= n; ++q) {
            ((rng() & 1u) ? a : b).push_back(q);
        }
        if (a.empty() || b.empty()) {
            continue;
        }
        EXPECT_NEAR(dense::bipartition_purity(state, a), dense::bipartition_purity(state, b), 1e-10);
    }
}

TEST(dense, finest_product_partition_examples) {
    EXPECT_EQ(render(dense::finest_product_partition(dense::StateVector::zero(3))), "{1}|{2}|{3}");
    EXPECT_EQ(render(dense::finest_product_partition(dense::apply_word(parse_word("s1", 3), 3))), "{1,2}|{3}");
    const auto three_cycle = word_for_permutation(Permutation::from_cycles(5, {{2, 4, 5}}));
    EXPECT_EQ(render(dense::finest_product_partition(dense::apply_word(three_cycle, 5))), "{1}|{2,4,5}|{3}");
    EXPECT_EQ(render(dense::finest_product_partition(dense::apply_word(parse_word("s1 s1", 2), 2))), "{1}|{2}");
    EXPECT_THROW(dense::finest_product_partition(dense::StateVector::zero(3), 2), ResourceError);
}

TEST(dense, finest_partition_independent_of_split_order) {
    std::mt19937_64 rng(47);
    for (int trial = 0; trial < 40; ++trial) {
        const std::size_t n = 2 + trial % 7;
        const auto state = dense::apply_word(test_support::random_word(rng, n, trial % 8), n);
        const auto reference = dense::finest_product_partition(state);
        for (std::uint64_t seed = 1; seed <= 3; ++seed) {
            EXPECT_EQ(dense::finest_product_partition(state, dense::kDefaultStateLimit, seed + 100 * trial), reference);
        }
    }
}

TEST(dense, dump_format) {
    const auto s = dense::apply_word(parse_word("s1", 2), 2);
    const std::string d = s.dump();
    EXPECT_EQ(d.substr(0, 7), "0 00 0.");
    EXPECT_NE(d.find("\n3 11 "), std::string::npos);
}
