#include "discrete_ops.hpp"

#include <algorithm>
#include <stdexcept>

namespace ptq {

DiscreteOp make_identity_op() {
    return {"", ExactMatrix::identity(4), false, {+1, +1, +1}};
}

DiscreteOp make_P() {
    const GammaRep& rep = dirac_rep();
    return {"P", ExactComplex::i() * rep.gamma[0], false, {+1, -1, +1}};
}

DiscreteOp make_T() {
    const GammaRep& rep = dirac_rep();
    // U_T = -i g0 g1 g3; combined M_T = U_T g0 = -i g1 g3.
    ExactMatrix u_t = (-ExactComplex::i()) * (rep.gamma[0] * rep.gamma[1] * rep.gamma[3]);
    return {"T", u_t * rep.gamma[0], true, {-1, +1, +1}};
}

DiscreteOp make_C() {
    const GammaRep& rep = dirac_rep();
    // U_C = -g0 g2; combined M_C = U_C g0 = g2.
    ExactMatrix u_c = -(rep.gamma[0] * rep.gamma[2]);
    return {"C", u_c * rep.gamma[0], true, {+1, +1, +1}};
}

DiscreteOp make_Q(Phase lambda) {
    return {"Q", lambda.value() * dirac_rep().gamma5, false, {+1, +1, -1}};
}

DiscreteOp compose(const DiscreteOp& o1, const DiscreteOp& o2) {
    DiscreteOp out;
    out.name = o1.name + o2.name;
    out.matrix = o1.antilinear ? o1.matrix * o2.matrix.conjugate() : o1.matrix * o2.matrix;
    out.antilinear = o1.antilinear != o2.antilinear;
    for (int k = 0; k < 3; ++k) out.arg_signs[k] = o1.arg_signs[k] * o2.arg_signs[k];
    return out;
}

DiscreteOp op_by_name(const std::string& name, Phase lambda) {
    if (name.empty()) throw std::invalid_argument("empty operator name");
    DiscreteOp out = make_identity_op();
    bool first = true;
    for (char ch : name) {
        DiscreteOp prim;
        switch (ch) {
            case 'P': prim = make_P(); break;
            case 'T': prim = make_T(); break;
            case 'C': prim = make_C(); break;
            case 'Q': prim = make_Q(lambda); break;
            default: throw std::invalid_argument(std::string("unknown operator letter '") + ch + "'");
        }
        out = first ? prim : compose(out, prim);
        first = false;
    }
    return out;
}

PolySpinor apply(const DiscreteOp& op, const PolySpinor& f) {
    PolySpinor g;
    for (int k = 0; k < 4; ++k) {
        Polynomial p = f.comp[k].flip_args(op.arg_signs[0], op.arg_signs[1], op.arg_signs[2]);
        g.comp[k] = op.antilinear ? p.conj_coeffs() : p;
    }
    return mat_apply(op.matrix, g);
}

std::vector<TableRow> transformation_table() {
    const GammaRep& rep = dirac_rep();
    const ExactComplex i = ExactComplex::i();

    DiscreteOp P = make_P();
    DiscreteOp T = make_T();
    DiscreteOp Q = make_Q();

    struct Expected {
        const char* name;
        DiscreteOp computed;
        ExactMatrix matrix;
        bool antilinear;
        std::array<int, 3> signs;
        const char* display;
    };

    // Transcribed combined constants, built by direct matrix products so the
    // comparison is independent of compose().
    std::vector<Expected> expected;
    expected.push_back({"P", P, i * rep.gamma[0], false, {+1, -1, +1}, "i*g0"});
    expected.push_back({"T", T, (-i) * (rep.gamma[1] * rep.gamma[3]), true, {-1, +1, +1}, "-i*g1*g3"});
    expected.push_back(
        {"PT", compose(P, T), rep.gamma[0] * rep.gamma[1] * rep.gamma[3], true, {-1, -1, +1}, "g0*g1*g3"});
    expected.push_back({"Q", Q, i * rep.gamma5, false, {+1, +1, -1}, "i*g5"});
    expected.push_back({"PQ", compose(P, Q), i * (rep.gamma[1] * rep.gamma[2] * rep.gamma[3]), false,
                        {+1, -1, -1}, "i*g1*g2*g3"});
    expected.push_back(
        {"TQ", compose(T, Q), i * (rep.gamma[0] * rep.gamma[2]), true, {-1, +1, -1}, "i*g0*g2"});
    expected.push_back(
        {"PTQ", compose(P, compose(T, Q)), -rep.gamma[2], true, {-1, -1, -1}, "-g2"});

    std::vector<TableRow> rows;
    rows.reserve(expected.size());
    for (Expected& e : expected) {
        TableRow row;
        row.name = e.name;
        row.op = e.computed;
        row.canonical = canonical_form_of(e.computed.matrix);
        row.expected = e.display;
        row.expected_signs = e.signs;
        row.expected_antilinear = e.antilinear;
        row.match = e.computed.matrix == e.matrix && e.computed.antilinear == e.antilinear &&
                    e.computed.arg_signs == e.signs;
        rows.push_back(std::move(row));
    }
    return rows;
}

Rational commutator_deviation(const DiscreteOp& o1, const DiscreteOp& o2, const PolySpinor& f,
                              std::span<const SamplePoint> samples) {
    PolySpinor diff = apply(o1, apply(o2, f)) - apply(o2, apply(o1, f));
    Rational worst(0);
    for (const SamplePoint& pt : samples) {
        for (int k = 0; k < 4; ++k) {
            Rational d = diff.comp[k].eval(pt).linf();
            if (cmp(d, worst) > 0) worst = d;
        }
    }
    return worst;
}

std::string IntertwinerSolution::str() const {
    return CanonicalForm{phase.value(), mask}.str();
}

std::vector<IntertwinerSolution> solve_intertwiner(const IntertwinerConstraint& c) {
    const GammaRep& rep = dirac_rep();
    for (int s : c.target_signs)
        if (s != 1 && s != -1) throw std::invalid_argument("target signs must be +-1");

    std::array<ExactMatrix, 4> lhs_gamma{ExactMatrix(4), ExactMatrix(4), ExactMatrix(4),
                                         ExactMatrix(4)};
    for (int a = 0; a < 4; ++a) {
        switch (c.mode) {
            case IntertwinerMode::plain: lhs_gamma[a] = rep.gamma[a]; break;
            case IntertwinerMode::transpose: lhs_gamma[a] = rep.gamma[a].transpose(); break;
            case IntertwinerMode::conjugate: lhs_gamma[a] = rep.gamma[a].conjugate(); break;
        }
    }

    const std::array<Phase, 4> phases{Phase::one(), Phase::minus_one(), Phase::i(),
                                      Phase::minus_i()};

    std::vector<IntertwinerSolution> found;
    for (const CliffordBasisElement& e : basis_table()) {
        for (Phase phase : phases) {
            ExactMatrix u = phase.value() * e.matrix;
            ExactMatrix u_inv = inverse(u);
            bool ok = true;
            for (int a = 0; a < 4 && ok; ++a) {
                ExactMatrix want = ExactComplex(c.target_signs[a]) * rep.gamma[a];
                ok = (u * lhs_gamma[a] * u_inv) == want;
            }
            if (ok) found.push_back({phase, e.mask});
        }
    }

    // Order each element's family as lambda in {1, -1, i, -i} of the rendered
    // coefficient, matching the usual way the families are listed.
    auto lambda_key = [](const IntertwinerSolution& s) {
        ExactComplex coeff = s.phase.value();
        if (s.mask == kFullMask) coeff = coeff * ExactComplex::i();
        if (coeff == ExactComplex(1)) return 0;
        if (coeff == ExactComplex(-1)) return 1;
        if (coeff == ExactComplex::i()) return 2;
        return 3;
    };
    std::stable_sort(found.begin(), found.end(),
                     [&](const IntertwinerSolution& a, const IntertwinerSolution& b) {
                         if (a.mask != b.mask) return a.mask < b.mask;
                         return lambda_key(a) < lambda_key(b);
                     });
    return found;
}

std::pair<Rational, Rational> lightcone_check(const Rational& t, const std::array<Rational, 3>& x,
                                              const Rational& c) {
    auto value = [&](const Rational& speed) {
        Rational r = speed * speed * t * t;
        for (const Rational& xi : x) r -= xi * xi;
        return r;
    };
    return {value(c), value(Rational(-c))};
}

}  // namespace ptq
