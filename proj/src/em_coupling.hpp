#pragma once

#include "plane_waves.hpp"

#include <functional>
#include <span>
#include <string>

namespace ptq {

// Constant real 4-potential (A0, A).
struct Potential4 {
    double A0 = 0;
    Vec3 A{};
};

using PotentialFn = std::function<Potential4(double x0, const Vec3& x)>;

// The parameter tuple of one minimally coupled Dirac equation
//   (gamma^a p_a - mc) Psi = (e/c) gamma^a A_a Psi,
// with gamma^a A_a = g0 A0 - g.A and real constant A. Function-valued
// potentials are accepted only when evaluating residuals.
struct DiracInstance {
    double m = 1;
    double c = 1;
    double e = 0;
    double hbar = 1;
    Potential4 A;

    void validate() const;
};

// max over samples of ||(gamma^a i hbar d_a - mc) Psi - (e/c) gamma^a A_a Psi||
// divided by the largest |Psi| seen.
double coupled_residual(const DiracInstance& inst, const SpinorField& psi,
                        std::span<const SampleXT> samples);
double coupled_residual(const DiracInstance& inst, const PotentialFn& potential,
                        const SpinorField& psi, std::span<const SampleXT> samples);

// Exact plane-wave solution for constant A: free-type amplitude at the
// kinetic momentum pi, phase at the canonical momentum p_a = pi_a + (e/c)A_a.
struct EMPlaneWaveSolution {
    DiracInstance instance;
    Vec3 pi{};       // kinetic 3-momentum
    double pi0 = 0;  // sqrt(|pi|^2 + (mc)^2)
    Vec3 p{};        // canonical 3-momentum
    double p0 = 0;   // canonical p0
    Bispinor u;

    CVec4 eval(double x0, const Vec3& x) const;
    SpinorField field() const;
};

EMPlaneWaveSolution build_solution(const DiracInstance& inst, const Vec3& pi_spatial,
                                   const TwoSpinor& w);

// Induced action of a discrete transformation on the equation parameters.
// Component signs act on (c, e, A0, A); arg signs on the potential's
// (x0, x) arguments (irrelevant for constant potentials).
struct InstanceMap {
    std::string name;
    int c_sign = +1;
    int e_sign = +1;
    int a0_sign = +1;
    int aspatial_sign = +1;
    std::array<int, 2> arg_signs{+1, +1};  // (s_t, s_x)

    friend bool operator==(const InstanceMap& a, const InstanceMap& b) {
        return a.c_sign == b.c_sign && a.e_sign == b.e_sign && a.a0_sign == b.a0_sign &&
               a.aspatial_sign == b.aspatial_sign && a.arg_signs == b.arg_signs;
    }
};

// Pointwise-transport maps for names over {P, T, C, Q}:
//   P -> (m, c, e, (A0, -A) with x flipped)
//   T -> (m, c, e, (A0, -A) with x0 flipped)
//   C -> (m, c, -e, A)
//   Q -> (m, -c, -e, A)
// and composites by composition.
InstanceMap instance_map(const std::string& op_name);

InstanceMap compose(const InstanceMap& m1, const InstanceMap& m2);

DiracInstance apply_map(const InstanceMap& map, const DiracInstance& inst);

// Applies the named operator to the solution and evaluates the residual of
// the mapped instance on the image. Expected at roundoff for every name.
double transport_check(const DiracInstance& inst, const std::string& op_name,
                       const EMPlaneWaveSolution& sol, std::span<const SampleXT> samples);

// The coupling enters only through the products e*A_a: the residual operator
// of (m, c, -e, A) coincides with that of (m, c, e, (-A0, -A)) coefficient by
// coefficient.
bool potential_rule_equivalence(const DiracInstance& inst);

// Coefficient-level equality of two residual operators (no sampling).
bool same_residual_operator(const DiracInstance& a, const DiracInstance& b);

// 2|E| = 2|c| pi0: the separation between the E and -E labels across the
// sheet identification.
double energy_gap(const DiracInstance& inst, const EMPlaneWaveSolution& sol);

}  // namespace ptq
