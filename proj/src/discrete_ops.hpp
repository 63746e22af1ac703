#pragma once

#include "clifford.hpp"
#include "gamma_expr.hpp"
#include "matrix.hpp"
#include "polynomial.hpp"

#include <array>
#include <span>
#include <string>
#include <vector>

namespace ptq {

// A discrete symmetry transformation acting on 4-component functions of
// (x0, x, c) as
//
//   (O f)(x0, x, c) = M . K^antilinear [ f(s_t x0, s_x x, s_c c) ]
//
// where M is the combined effective matrix, K conjugates function values
// componentwise, and (s_t, s_x, s_c) are the argument signs.
struct DiscreteOp {
    std::string name;
    ExactMatrix matrix{4};
    bool antilinear = false;
    std::array<int, 3> arg_signs{+1, +1, +1};
};

DiscreteOp make_identity_op();

// Combined constants. Where the defining form is U gamma0 Psi*, the stored
// matrix is the product with gamma0 already absorbed:
//   P: M = i g0                      (linear,     signs (+,-,+))
//   T: M = U_T g0 = -i g1 g3         (antilinear, signs (-,+,+)),  U_T = -i g0 g1 g3
//   C: M = U_C g0 = g2               (antilinear, signs (+,+,+)),  U_C = -g0 g2
//   Q: M = lambda g5                 (linear,     signs (+,+,-)),  default lambda = i
DiscreteOp make_P();
DiscreteOp make_T();
DiscreteOp make_C();
DiscreteOp make_Q(Phase lambda = Phase::i());

// (O1 compose O2) f = O1 (O2 f). Antilinearity xors, argument signs multiply
// componentwise, and M = M1 * conj(M2) when O1 is antilinear, else M1 * M2.
DiscreteOp compose(const DiscreteOp& o1, const DiscreteOp& o2);

// Composite from a name over the alphabet {P, T, C, Q}, e.g. "PTQ" is
// P after T after Q.
DiscreteOp op_by_name(const std::string& name, Phase lambda = Phase::i());

PolySpinor apply(const DiscreteOp& op, const PolySpinor& f);

struct TableRow {
    std::string name;
    DiscreteOp op;
    CanonicalForm canonical;     // canonical form of op.matrix
    std::string expected;        // transcribed combined constant
    std::array<int, 3> expected_signs{};
    bool expected_antilinear = false;
    bool match = false;
};

// The seven composite rows P, T, PT, Q, PQ, TQ, PTQ, computed by composing
// the primitive operators and compared against the transcribed constants.
std::vector<TableRow> transformation_table();

using SamplePoint = std::array<Rational, 5>;  // (x0, x1, x2, x3, c)

// max over samples and components of the L-inf modulus of (O1 O2 - O2 O1) f.
// Exact; zero iff the commutator annihilates f at every sample.
Rational commutator_deviation(const DiscreteOp& o1, const DiscreteOp& o2, const PolySpinor& f,
                              std::span<const SamplePoint> samples);

enum class IntertwinerMode { plain, transpose, conjugate };

// Find all U = phase * basis element with U op(g^a) U^-1 = eps_a g^a for
// a = 0..3, where op is identity, transpose or entrywise conjugation.
struct IntertwinerConstraint {
    std::array<int, 4> target_signs{};  // eps_a, each +-1
    IntertwinerMode mode = IntertwinerMode::plain;
};

struct IntertwinerSolution {
    Phase phase;
    std::uint8_t mask;

    std::string str() const;  // canonical expression string
};

// Brute force over all 64 candidates (16 elements x 4 phases); exact matrix
// comparisons. An empty result is a valid outcome.
std::vector<IntertwinerSolution> solve_intertwiner(const IntertwinerConstraint& c);

// c^2 t^2 - |x|^2 evaluated at c and at -c; the two values are always equal.
std::pair<Rational, Rational> lightcone_check(const Rational& t, const std::array<Rational, 3>& x,
                                              const Rational& c);

}  // namespace ptq
