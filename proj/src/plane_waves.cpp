#include "plane_waves.hpp"

#include <cmath>
#include <stdexcept>

namespace ptq {

double dot3(const Vec3& a, const Vec3& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }

double norm3(const Vec3& a) { return std::sqrt(dot3(a, a)); }

Vec3 unit_direction(const Vec3& p) {
    double len = norm3(p);
    if (len == 0.0) return {0.0, 0.0, 1.0};
    return {p[0] / len, p[1] / len, p[2] / len};
}

namespace {

constexpr double kUnitTol = 1e-12;

bool finite(const CFloat& z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

}  // namespace

TwoSpinor::TwoSpinor(CFloat a, CFloat b) : w_{a, b} {
    if (!finite(a) || !finite(b)) throw std::invalid_argument("two-spinor must be finite");
    double n = std::norm(a) + std::norm(b);
    if (std::abs(n - 1.0) > kUnitTol)
        throw std::invalid_argument("two-spinor must be unit-normalized");
}

TwoSpinor TwoSpinor::normalized(CFloat a, CFloat b) {
    double n = std::sqrt(std::norm(a) + std::norm(b));
    if (n == 0.0 || !std::isfinite(n)) throw std::invalid_argument("cannot normalize zero spinor");
    return TwoSpinor(a / n, b / n);
}

CVec2 n_sigma_apply(const Vec3& n, const CVec2& w) {
    // n.sigma = [[n_z, n_x - i n_y], [n_x + i n_y, -n_z]]
    CFloat off_upper(n[0], -n[1]);
    CFloat off_lower(n[0], n[1]);
    return {n[2] * w[0] + off_upper * w[1], off_lower * w[0] - n[2] * w[1]};
}

TwoSpinor companion_spinor(const TwoSpinor& w) {
    // -sigma_y w* = (i conj(w1), -i conj(w0))
    CFloat a = CFloat(0, 1) * std::conj(w[1]);
    CFloat b = CFloat(0, -1) * std::conj(w[0]);
    return TwoSpinor::normalized(a, b);
}

TwoSpinor conjugation_image_spinor(const TwoSpinor& w) {
    // sigma_y w* = (-i conj(w1), i conj(w0))
    CFloat a = CFloat(0, -1) * std::conj(w[1]);
    CFloat b = CFloat(0, 1) * std::conj(w[0]);
    return TwoSpinor::normalized(a, b);
}

double shell_p0(const Vec3& p, double m, double c) {
    if (m <= 0) throw std::invalid_argument("mass must be positive");
    if (c == 0) throw std::invalid_argument("light speed must be nonzero");
    return std::sqrt(dot3(p, p) + m * c * m * c);
}

namespace {

Bispinor assemble_pos(const Vec3& p, double p0, const TwoSpinor& w, double mc) {
    double a = std::sqrt(std::max(0.0, p0 + mc));
    double b = std::sqrt(std::max(0.0, p0 - mc));
    Vec3 n = unit_direction(p);
    CVec2 ns = n_sigma_apply(n, {w[0], w[1]});
    Bispinor u;
    u[0] = a * w[0];
    u[1] = a * w[1];
    u[2] = b * ns[0];
    u[3] = b * ns[1];
    return u;
}

Bispinor assemble_neg(const Vec3& p, double p0, const TwoSpinor& wp, double mc) {
    double a = std::sqrt(std::max(0.0, p0 + mc));
    double b = std::sqrt(std::max(0.0, p0 - mc));
    Vec3 n = unit_direction(p);
    CVec2 ns = n_sigma_apply(n, {wp[0], wp[1]});
    Bispinor u;
    u[0] = b * ns[0];
    u[1] = b * ns[1];
    u[2] = a * wp[0];
    u[3] = a * wp[1];
    return u;
}

void require_on_shell(const Vec3& p, double p0, double mc) {
    double want = dot3(p, p) + mc * mc;
    if (p0 <= 0 || std::abs(p0 * p0 - want) > 1e-9 * std::max(1.0, want))
        throw std::invalid_argument("momentum is off the mass shell");
}

}  // namespace

Bispinor spinor_pos_product(const Vec3& p, const TwoSpinor& w, double mc) {
    return assemble_pos(p, std::sqrt(dot3(p, p) + mc * mc), w, mc);
}

Bispinor spinor_neg_product(const Vec3& p, const TwoSpinor& wp, double mc) {
    return assemble_neg(p, std::sqrt(dot3(p, p) + mc * mc), wp, mc);
}

Bispinor spinor_pos(const Vec3& p, const TwoSpinor& w, double m, double c) {
    if (m <= 0 || c == 0) throw std::invalid_argument("need m > 0 and c != 0");
    return spinor_pos_product(p, w, m * c);
}

Bispinor spinor_neg(const Vec3& p, const TwoSpinor& wp, double m, double c) {
    if (m <= 0 || c == 0) throw std::invalid_argument("need m > 0 and c != 0");
    return spinor_neg_product(p, wp, m * c);
}

Bispinor spinor_pos_at(const Vec3& p, double p0, const TwoSpinor& w, double mc) {
    require_on_shell(p, p0, mc);
    return assemble_pos(p, p0, w, mc);
}

Bispinor spinor_neg_at(const Vec3& p, double p0, const TwoSpinor& wp, double mc) {
    require_on_shell(p, p0, mc);
    return assemble_neg(p, p0, wp, mc);
}

double ubar_u(const Bispinor& u) {
    double acc = 0;
    acc += std::norm(u[0]) + std::norm(u[1]);
    acc -= std::norm(u[2]) + std::norm(u[3]);
    return acc;
}

const std::array<FloatMatrix, 4>& float_gammas() {
    static const std::array<FloatMatrix, 4> g = [] {
        const GammaRep& rep = dirac_rep();
        return std::array<FloatMatrix, 4>{to_float(rep.gamma[0]), to_float(rep.gamma[1]),
                                          to_float(rep.gamma[2]), to_float(rep.gamma[3])};
    }();
    return g;
}

CVec4 matvec(const FloatMatrix& m, const CVec4& v) {
    CVec4 out{};
    for (int r = 0; r < 4; ++r) {
        CFloat acc = 0;
        for (int c = 0; c < 4; ++c) acc += m.at(r, c) * v[c];
        out[r] = acc;
    }
    return out;
}

namespace {

double vmax(const CVec4& v) {
    double worst = 0;
    for (const CFloat& z : v) worst = std::max(worst, std::abs(z));
    return worst;
}

}  // namespace

double momentum_residual(const Bispinor& u, const Vec3& p, double p0, double mc, int mass_sign) {
    const auto& g = float_gammas();
    CVec4 r = matvec(g[0], u.u);
    for (auto& z : r) z *= p0;
    for (int k = 0; k < 3; ++k) {
        CVec4 gk = matvec(g[k + 1], u.u);
        for (int j = 0; j < 4; ++j) r[j] -= p[k] * gk[j];
    }
    for (int j = 0; j < 4; ++j) r[j] -= mass_sign * mc * u[j];
    double scale = vmax(u.u);
    return scale > 0 ? vmax(r) / scale : vmax(r);
}

PlaneWaveState PlaneWaveState::make(FrequencyKind kind, const Vec3& p, const TwoSpinor& w,
                                    double m, double c, double hbar) {
    if (m <= 0) throw std::invalid_argument("mass must be positive");
    if (c == 0) throw std::invalid_argument("light speed must be nonzero");
    if (hbar <= 0) throw std::invalid_argument("hbar must be positive");
    for (double pk : p)
        if (!std::isfinite(pk)) throw std::invalid_argument("momentum must be finite");
    return PlaneWaveState(kind, p, w, m, c, hbar, m * c);
}

double PlaneWaveState::p0() const { return std::sqrt(dot3(p_, p_) + mc_ * mc_); }

PlaneWaveState PlaneWaveState::sheet_identified() const {
    PlaneWaveState out = *this;
    out.c_ = -c_;  // E = c p0 flips with it; mc_ and p0 stay put
    return out;
}

Bispinor PlaneWaveState::amplitude() const {
    return kind_ == FrequencyKind::positive ? spinor_pos_product(p_, w_, mc_)
                                            : spinor_neg_product(p_, w_, mc_);
}

CVec4 PlaneWaveState::eval(double x0, const Vec3& x) const {
    Bispinor u = amplitude();
    double n = 1.0 / std::sqrt(2.0 * p0());
    double theta = (p0() * x0 - dot3(p_, x)) / hbar_;
    CFloat phase = kind_ == FrequencyKind::positive ? std::polar(1.0, -theta)
                                                    : std::polar(1.0, theta);
    CVec4 out;
    for (int k = 0; k < 4; ++k) out[k] = n * u[k] * phase;
    return out;
}

PlaneWaveState charge_conjugate(const PlaneWaveState& neg) {
    if (neg.kind() != FrequencyKind::negative)
        throw std::invalid_argument("charge_conjugate expects a negative-frequency state");
    TwoSpinor w = conjugation_image_spinor(neg.w());
    // Keep the sheet product of the input rather than recomputing m*c, so
    // sheet-identified states conjugate consistently.
    return PlaneWaveState(FrequencyKind::positive, neg.p(), w, neg.m(), neg.c(), neg.hbar(),
                          neg.mc());
}

SpinorField field_of(const PlaneWaveState& s) {
    double p0 = s.p0();
    Vec3 p = s.p();
    double hbar = s.hbar();
    double freq_sign = s.kind() == FrequencyKind::positive ? -1.0 : 1.0;
    PlaneWaveState state = s;
    return [state, p0, p, hbar, freq_sign](double x0, const Vec3& x) {
        Jet jet;
        jet.v = state.eval(x0, x);
        // d/dx0 multiplies by (freq i p0 / hbar), d/dxk by (-freq i p_k / hbar)
        CFloat f0 = CFloat(0, freq_sign * p0 / hbar);
        for (int j = 0; j < 4; ++j) jet.dt[j] = f0 * jet.v[j];
        for (int k = 0; k < 3; ++k) {
            CFloat fk = CFloat(0, -freq_sign * p[k] / hbar);
            for (int j = 0; j < 4; ++j) jet.dx[k][j] = fk * jet.v[j];
        }
        return jet;
    };
}

SpinorField op_image(const DiscreteOp& op, SpinorField f) {
    FloatMatrix m = to_float(op.matrix);
    bool anti = op.antilinear;
    double st = op.arg_signs[0];
    double sx = op.arg_signs[1];
    return [m, anti, st, sx, f = std::move(f)](double x0, const Vec3& x) {
        Jet in = f(st * x0, Vec3{sx * x[0], sx * x[1], sx * x[2]});
        if (anti) {
            for (auto& z : in.v) z = std::conj(z);
            for (auto& z : in.dt) z = std::conj(z);
            for (auto& slot : in.dx)
                for (auto& z : slot) z = std::conj(z);
        }
        Jet out;
        out.v = matvec(m, in.v);
        out.dt = matvec(m, in.dt);
        for (auto& z : out.dt) z *= st;
        for (int k = 0; k < 3; ++k) {
            out.dx[k] = matvec(m, in.dx[k]);
            for (auto& z : out.dx[k]) z *= sx;
        }
        return out;
    };
}

double free_residual(const SpinorField& f, double mass_product, double hbar,
                     std::span<const SampleXT> samples) {
    const auto& g = float_gammas();
    double worst = 0;
    double scale = 0;
    for (const SampleXT& s : samples) {
        Jet jet = f(s.x0, s.x);
        CVec4 r = matvec(g[0], jet.dt);
        for (int k = 0; k < 3; ++k) {
            CVec4 gk = matvec(g[k + 1], jet.dx[k]);
            for (int j = 0; j < 4; ++j) r[j] += gk[j];
        }
        for (int j = 0; j < 4; ++j) r[j] = CFloat(0, hbar) * r[j] - mass_product * jet.v[j];
        worst = std::max(worst, vmax(r));
        scale = std::max(scale, vmax(jet.v));
    }
    return scale > 0 ? worst / scale : worst;
}

double field_deviation(const SpinorField& a, const SpinorField& b,
                       std::span<const SampleXT> samples) {
    double worst = 0;
    double scale = 0;
    for (const SampleXT& s : samples) {
        Jet ja = a(s.x0, s.x);
        Jet jb = b(s.x0, s.x);
        for (int j = 0; j < 4; ++j) worst = std::max(worst, std::abs(ja.v[j] - jb.v[j]));
        scale = std::max({scale, vmax(ja.v), vmax(jb.v)});
    }
    return scale > 0 ? worst / scale : worst;
}

PtqVsCResult ptq_vs_c_check(const PlaneWaveState& pos, std::span<const SampleXT> samples,
                            double tol) {
    if (pos.kind() != FrequencyKind::positive)
        throw std::invalid_argument("ptq_vs_c_check expects a positive-frequency state");

    PtqVsCResult res;

    // Companion negative state, spin dictionary w' = -sigma_y w*.
    TwoSpinor wprime = companion_spinor(pos.w());
    PlaneWaveState neg = PlaneWaveState::make(FrequencyKind::negative, pos.p(), wprime, pos.m(),
                                              pos.c(), pos.hbar());

    SpinorField pos_field = field_of(pos);

    // C of the companion reproduces the input state pointwise.
    SpinorField c_img = op_image(make_C(), field_of(neg));
    res.conj_image_dev = field_deviation(c_img, pos_field, samples);

    // PTQ image against the transformation-table formula -g2 Psi*(-x0,-x),
    // assembled directly from eval rather than through op_image.
    DiscreteOp ptq = op_by_name("PTQ");
    SpinorField g = op_image(ptq, pos_field);
    const FloatMatrix g2 = to_float(dirac_rep().gamma[2]);
    PlaneWaveState pos_copy = pos;
    SpinorField direct = [pos_copy, g2](double x0, const Vec3& x) {
        CVec4 v = pos_copy.eval(-x0, Vec3{-x[0], -x[1], -x[2]});
        for (auto& z : v) z = std::conj(z);
        v = matvec(g2, v);
        Jet jet;
        for (int j = 0; j < 4; ++j) jet.v[j] = -v[j];
        return jet;
    };
    res.table_formula_dev = field_deviation(g, direct, samples);

    // Identified-sheet reference: positive kind, momentum p, literal product
    // m(-c), spin (n sigma) w'. Scan relabeling phases for the best fit.
    Vec3 n = unit_direction(pos.p());
    CVec2 wr_raw = n_sigma_apply(n, {wprime[0], wprime[1]});
    TwoSpinor wr = TwoSpinor::normalized(wr_raw[0], wr_raw[1]);
    PlaneWaveState ref = PlaneWaveState::make(FrequencyKind::positive, pos.p(), wr, pos.m(),
                                              -pos.c(), pos.hbar());
    SpinorField ref_field = field_of(ref);

    const std::array<Phase, 4> phases{Phase::one(), Phase::minus_one(), Phase::i(),
                                      Phase::minus_i()};
    double best = -1;
    Phase best_phase = Phase::one();
    for (Phase phase : phases) {
        CFloat fz = phase.value().to_cfloat();
        SpinorField scaled = [ref_field, fz](double x0, const Vec3& x) {
            Jet jet = ref_field(x0, x);
            for (auto& z : jet.v) z *= fz;
            return jet;
        };
        double dev = field_deviation(g, scaled, samples);
        if (best < 0 || dev < best) {
            best = dev;
            best_phase = phase;
        }
    }
    res.best_fit_dev = best;
    res.fitted_phase = best_phase;
    res.paper_phase_attained = best_phase == Phase::minus_one() && best <= tol;
    res.deviation = std::max({res.conj_image_dev, res.table_formula_dev, res.best_fit_dev});
    return res;
}

}  // namespace ptq
