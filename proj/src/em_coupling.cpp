#include "em_coupling.hpp"

#include <cmath>
#include <stdexcept>

namespace ptq {

void DiracInstance::validate() const {
    if (m <= 0) throw std::invalid_argument("mass must be positive");
    if (c == 0) throw std::invalid_argument("light speed must be nonzero");
    if (hbar <= 0) throw std::invalid_argument("hbar must be positive");
    if (!std::isfinite(A.A0) || !std::isfinite(A.A[0]) || !std::isfinite(A.A[1]) ||
        !std::isfinite(A.A[2]) || !std::isfinite(e))
        throw std::invalid_argument("potential and charge must be finite real values");
}

namespace {

double vmax4(const CVec4& v) {
    double worst = 0;
    for (const CFloat& z : v) worst = std::max(worst, std::abs(z));
    return worst;
}

}  // namespace

double coupled_residual(const DiracInstance& inst, const PotentialFn& potential,
                        const SpinorField& psi, std::span<const SampleXT> samples) {
    inst.validate();
    const auto& g = float_gammas();
    const double mc = inst.m * inst.c;
    const double ec = inst.e / inst.c;

    double worst = 0;
    double scale = 0;
    for (const SampleXT& s : samples) {
        Jet jet = psi(s.x0, s.x);
        Potential4 a = potential(s.x0, s.x);

        // (i hbar)(g0 dt + gk dxk) - mc v - (e/c)(g0 A0 - g.A) v
        CVec4 r = matvec(g[0], jet.dt);
        for (int k = 0; k < 3; ++k) {
            CVec4 gk = matvec(g[k + 1], jet.dx[k]);
            for (int j = 0; j < 4; ++j) r[j] += gk[j];
        }
        CVec4 coup = matvec(g[0], jet.v);
        for (auto& z : coup) z *= a.A0;
        for (int k = 0; k < 3; ++k) {
            CVec4 gk = matvec(g[k + 1], jet.v);
            for (int j = 0; j < 4; ++j) coup[j] -= a.A[k] * gk[j];
        }
        for (int j = 0; j < 4; ++j)
            r[j] = CFloat(0, inst.hbar) * r[j] - mc * jet.v[j] - ec * coup[j];

        worst = std::max(worst, vmax4(r));
        scale = std::max(scale, vmax4(jet.v));
    }
    return scale > 0 ? worst / scale : worst;
}

double coupled_residual(const DiracInstance& inst, const SpinorField& psi,
                        std::span<const SampleXT> samples) {
    Potential4 a = inst.A;
    return coupled_residual(
        inst, [a](double, const Vec3&) { return a; }, psi, samples);
}

CVec4 EMPlaneWaveSolution::eval(double x0, const Vec3& x) const {
    double n = 1.0 / std::sqrt(2.0 * pi0);
    double theta = (p0 * x0 - dot3(p, x)) / instance.hbar;
    CFloat phase = std::polar(1.0, -theta);
    CVec4 out;
    for (int k = 0; k < 4; ++k) out[k] = n * u[k] * phase;
    return out;
}

SpinorField EMPlaneWaveSolution::field() const {
    EMPlaneWaveSolution sol = *this;
    return [sol](double x0, const Vec3& x) {
        Jet jet;
        jet.v = sol.eval(x0, x);
        CFloat f0 = CFloat(0, -sol.p0 / sol.instance.hbar);
        for (int j = 0; j < 4; ++j) jet.dt[j] = f0 * jet.v[j];
        for (int k = 0; k < 3; ++k) {
            CFloat fk = CFloat(0, sol.p[k] / sol.instance.hbar);
            for (int j = 0; j < 4; ++j) jet.dx[k][j] = fk * jet.v[j];
        }
        return jet;
    };
}

EMPlaneWaveSolution build_solution(const DiracInstance& inst, const Vec3& pi_spatial,
                                   const TwoSpinor& w) {
    inst.validate();
    EMPlaneWaveSolution sol;
    sol.instance = inst;
    sol.pi = pi_spatial;
    double mc = inst.m * inst.c;
    sol.pi0 = std::sqrt(dot3(pi_spatial, pi_spatial) + mc * mc);
    sol.u = spinor_pos_product(pi_spatial, w, mc);

    // p_a = pi_a + (e/c) A_a, i.e. p0 = pi0 + (e/c)A0 and p = pi + (e/c)A.
    double ec = inst.e / inst.c;
    sol.p0 = sol.pi0 + ec * inst.A.A0;
    for (int k = 0; k < 3; ++k) sol.p[k] = pi_spatial[k] + ec * inst.A.A[k];
    return sol;
}

namespace {

InstanceMap primitive_map(char letter) {
    switch (letter) {
        case 'P': return {"P", +1, +1, +1, -1, {+1, -1}};
        case 'T': return {"T", +1, +1, +1, -1, {-1, +1}};
        case 'C': return {"C", +1, -1, +1, +1, {+1, +1}};
        case 'Q': return {"Q", -1, -1, +1, +1, {+1, +1}};
        default:
            throw std::invalid_argument(std::string("unknown operator letter '") + letter + "'");
    }
}

}  // namespace

InstanceMap compose(const InstanceMap& m1, const InstanceMap& m2) {
    InstanceMap out;
    out.name = m1.name + m2.name;
    out.c_sign = m1.c_sign * m2.c_sign;
    out.e_sign = m1.e_sign * m2.e_sign;
    out.a0_sign = m1.a0_sign * m2.a0_sign;
    out.aspatial_sign = m1.aspatial_sign * m2.aspatial_sign;
    out.arg_signs = {m1.arg_signs[0] * m2.arg_signs[0], m1.arg_signs[1] * m2.arg_signs[1]};
    return out;
}

InstanceMap instance_map(const std::string& op_name) {
    if (op_name.empty()) throw std::invalid_argument("empty operator name");
    InstanceMap out = primitive_map(op_name[0]);
    for (std::size_t k = 1; k < op_name.size(); ++k)
        out = compose(out, primitive_map(op_name[k]));
    out.name = op_name;
    return out;
}

DiracInstance apply_map(const InstanceMap& map, const DiracInstance& inst) {
    DiracInstance out = inst;
    out.c = map.c_sign * inst.c;
    out.e = map.e_sign * inst.e;
    out.A.A0 = map.a0_sign * inst.A.A0;
    for (int k = 0; k < 3; ++k) out.A.A[k] = map.aspatial_sign * inst.A.A[k];
    return out;
}

double transport_check(const DiracInstance& inst, const std::string& op_name,
                       const EMPlaneWaveSolution& sol, std::span<const SampleXT> samples) {
    DiscreteOp op = op_by_name(op_name);
    DiracInstance mapped = apply_map(instance_map(op_name), inst);
    SpinorField image = op_image(op, sol.field());
    return coupled_residual(mapped, image, samples);
}

bool same_residual_operator(const DiracInstance& a, const DiracInstance& b) {
    if (a.hbar != b.hbar) return false;
    if (a.m * a.c != b.m * b.c) return false;
    if (a.e / a.c * a.A.A0 != b.e / b.c * b.A.A0) return false;
    for (int k = 0; k < 3; ++k)
        if (a.e / a.c * a.A.A[k] != b.e / b.c * b.A.A[k]) return false;
    return true;
}

bool potential_rule_equivalence(const DiracInstance& inst) {
    DiracInstance charge_flipped = inst;
    charge_flipped.e = -inst.e;

    DiracInstance potential_flipped = inst;
    potential_flipped.A.A0 = -inst.A.A0;
    for (int k = 0; k < 3; ++k) potential_flipped.A.A[k] = -inst.A.A[k];

    return same_residual_operator(charge_flipped, potential_flipped);
}

double energy_gap(const DiracInstance& inst, const EMPlaneWaveSolution& sol) {
    return 2.0 * std::abs(inst.c) * sol.pi0;
}

}  // namespace ptq
