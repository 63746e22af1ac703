#pragma once

#include "matrix.hpp"

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace ptq {

// Fourth root of unity i^k with k in 0..3, i.e. one of {1, i, -1, -i}.
class Phase {
public:
    constexpr Phase() : k_(0) {}

    static constexpr Phase one() { return Phase(0); }
    static constexpr Phase i() { return Phase(1); }
    static constexpr Phase minus_one() { return Phase(2); }
    static constexpr Phase minus_i() { return Phase(3); }

    int exponent() const { return k_; }

    Phase operator*(Phase o) const { return Phase((k_ + o.k_) & 3); }
    Phase operator-() const { return Phase((k_ + 2) & 3); }
    Phase conj() const { return Phase((4 - k_) & 3); }

    ExactComplex value() const;

    friend bool operator==(Phase a, Phase b) { return a.k_ == b.k_; }
    friend bool operator!=(Phase a, Phase b) { return a.k_ != b.k_; }

private:
    explicit constexpr Phase(int k) : k_(k) {}
    int k_;
};

// Dirac representation: the four generators, the chirality element, the
// metric signature and the Pauli blocks. The chirality sign convention is
// gamma5 = -i g0 g1 g2 g3, which fixes the phases of everything downstream.
struct GammaRep {
    std::array<ExactMatrix, 4> gamma;   // g0..g3, 4x4
    ExactMatrix gamma5;                 // 4x4
    std::array<int, 4> metric;          // (+1, -1, -1, -1)
    std::array<ExactMatrix, 3> pauli;   // sigma_x, sigma_y, sigma_z, 2x2

    GammaRep();
};

GammaRep build_dirac_rep();

// Shared immutable instance; safe for concurrent readers.
const GammaRep& dirac_rep();

// g^a g^b + g^b g^a for a, b in 0..3. Caller compares with 2 g^{ab} I.
ExactMatrix anticommutator(int a, int b);

// One of the 16 products of distinct generators, taken in ascending index
// order. mask bit a set <=> g^a is a factor; mask 0 is the identity.
struct CliffordBasisElement {
    std::uint8_t mask;
    ExactMatrix matrix;

    std::string label() const;  // "I", "g0", "g0*g2", ...
};

constexpr std::uint8_t kFullMask = 0x0f;

// All 16 elements ordered by (factor count, mask value).
const std::vector<CliffordBasisElement>& basis_table();

const ExactMatrix& basis_matrix(std::uint8_t mask);

struct CanonicalMonomial {
    Phase phase;
    std::uint8_t mask;
};

// Normal form of a product of generators. Word symbols are 0..3 for the
// generators and 5 for the chirality element, which gets expanded as
// (-i) g0 g1 g2 g3 before sorting. Sorting flips the sign once per swap of
// distinct generators and contracts equal neighbours with g^{aa}:
// (g0)^2 = I, (gk)^2 = -I. The result satisfies
//   phase * basis_matrix(mask) == exact product of the word.
CanonicalMonomial canonical_product(const std::vector<int>& word);

// Exact rank of a list of flattened 4x4 exact matrices (verification aid
// for linear independence of the basis table).
int exact_rank(const std::vector<ExactMatrix>& mats);

}  // namespace ptq
