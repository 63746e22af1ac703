#include "checks.hpp"

#include "clifford.hpp"
#include "discrete_ops.hpp"
#include "em_coupling.hpp"
#include "gamma_expr.hpp"
#include "matrix.hpp"
#include "plane_waves.hpp"
#include "polynomial.hpp"
#include "rng.hpp"
#include "version.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <set>
#include <stdexcept>

namespace ptq {

int Report::pass_count() const {
    int n = 0;
    for (const CheckRecord& c : checks) n += c.pass ? 1 : 0;
    return n;
}

int Report::fail_count() const { return static_cast<int>(checks.size()) - pass_count(); }

nlohmann::ordered_json Report::to_json() const {
    nlohmann::ordered_json j;
    j["suite"] = suite;
    j["seed"] = seed;
    j["version"] = version;
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const CheckRecord& c : checks) {
        nlohmann::ordered_json jc;
        jc["id"] = c.id;
        jc["paper_ref"] = c.paper_ref;
        jc["status"] = c.pass ? "pass" : "fail";
        if (c.deviation_exact_zero)
            jc["deviation"] = "exact-zero";
        else
            jc["deviation"] = c.deviation;
        if (c.tolerance_exact)
            jc["tolerance"] = "exact";
        else
            jc["tolerance"] = c.tolerance;
        jc["runtime_ms"] = c.runtime_ms;
        arr.push_back(std::move(jc));
    }
    j["checks"] = std::move(arr);
    j["summary"] = nlohmann::ordered_json{{"pass", pass_count()}, {"fail", fail_count()}};
    return j;
}

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names{"all",           "algebra", "table",
                                                "intertwiners",  "planewave", "em"};
    return names;
}

namespace {

class Recorder {
public:
    Recorder(Report& report, double tolerance) : report_(report), tolerance_(tolerance) {}

    // Exact check: passes iff the exact deviation is zero.
    void exact(const std::string& id, const std::string& ref,
               const std::function<Rational()>& fn) {
        auto t0 = std::chrono::steady_clock::now();
        Rational dev = fn();
        push_exact(id, ref, dev, t0);
    }

    // Exact boolean fact: reported as exact-zero or deviation 1.
    void exact_flag(const std::string& id, const std::string& ref,
                    const std::function<bool()>& fn) {
        auto t0 = std::chrono::steady_clock::now();
        bool ok = fn();
        push_exact(id, ref, ok ? Rational(0) : Rational(1), t0);
    }

    // Float check against the suite tolerance.
    void approx(const std::string& id, const std::string& ref,
                const std::function<double()>& fn) {
        auto t0 = std::chrono::steady_clock::now();
        double dev = fn();
        CheckRecord c;
        c.id = id;
        c.paper_ref = ref;
        c.deviation = dev;
        c.tolerance = tolerance_;
        c.pass = dev <= tolerance_;
        c.runtime_ms = elapsed_ms(t0);
        report_.checks.push_back(std::move(c));
    }

    double tolerance() const { return tolerance_; }

private:
    static std::int64_t elapsed_ms(std::chrono::steady_clock::time_point t0) {
        auto dt = std::chrono::steady_clock::now() - t0;
        return std::chrono::duration_cast<std::chrono::milliseconds>(dt).count();
    }

    void push_exact(const std::string& id, const std::string& ref, const Rational& dev,
                    std::chrono::steady_clock::time_point t0) {
        CheckRecord c;
        c.id = id;
        c.paper_ref = ref;
        c.tolerance_exact = true;
        if (sgn(dev) == 0) {
            c.deviation_exact_zero = true;
            c.pass = true;
        } else {
            c.deviation = dev.get_d();
            c.pass = false;
        }
        c.runtime_ms = elapsed_ms(t0);
        report_.checks.push_back(std::move(c));
    }

    Report& report_;
    double tolerance_;
};

Rational max_r(const Rational& a, const Rational& b) { return cmp(a, b) >= 0 ? a : b; }

// ---------------------------------------------------------------------------
// shared random generators

PolySpinor random_poly_spinor(Rng& rng) {
    PolySpinor f;
    for (int comp = 0; comp < 4; ++comp) {
        long terms = rng.int_in(1, 3);
        for (long t = 0; t < terms; ++t) {
            Polynomial::Key key;
            for (int v = 0; v < 5; ++v) key[v] = static_cast<unsigned char>(rng.int_in(0, 2));
            f.comp[comp].add_term(key, ExactComplex(rng.dyadic(3), rng.dyadic(3)));
        }
    }
    return f;
}

std::vector<SamplePoint> random_sample_points(Rng& rng, int n) {
    std::vector<SamplePoint> pts;
    pts.reserve(n);
    for (int k = 0; k < n; ++k)
        pts.push_back({rng.dyadic(4), rng.dyadic(4), rng.dyadic(4), rng.dyadic(4),
                       rng.nonzero_dyadic(4)});
    return pts;
}

std::vector<SampleXT> random_field_samples(Rng& rng, int n) {
    std::vector<SampleXT> pts;
    pts.reserve(n);
    for (int k = 0; k < n; ++k) {
        SampleXT s;
        s.x0 = rng.dyadic_double(2);
        for (int j = 0; j < 3; ++j) s.x[j] = rng.dyadic_double(2);
        pts.push_back(s);
    }
    return pts;
}

TwoSpinor random_spinor(Rng& rng) {
    while (true) {
        CFloat a(rng.dyadic_double(3), rng.dyadic_double(3));
        CFloat b(rng.dyadic_double(3), rng.dyadic_double(3));
        if (std::norm(a) + std::norm(b) > 0.01) return TwoSpinor::normalized(a, b);
    }
}

// components in [-17, 17]: |p| stays below 10 |mc| for |mc| = 3
Vec3 random_momentum(Rng& rng) {
    return {rng.dyadic_double(17), rng.dyadic_double(17), rng.dyadic_double(17)};
}

// ---------------------------------------------------------------------------
// algebra

void suite_algebra(Recorder& rec, Rng& rng) {
    const GammaRep& rep = dirac_rep();
    const ExactMatrix id4 = ExactMatrix::identity(4);
    const ExactMatrix zero4{4};
    const ExactComplex i = ExactComplex::i();

    rec.exact("algebra.anticommutation", "anticommutation of the generators with the metric",
              [&] {
                  Rational worst(0);
                  for (int a = 0; a < 4; ++a)
                      for (int b = 0; b < 4; ++b) {
                          ExactMatrix want =
                              a == b ? ExactComplex(2 * rep.metric[a]) * id4 : zero4;
                          worst = max_r(worst, exact_max_dev(anticommutator(a, b), want));
                      }
                  return worst;
              });

    rec.exact("algebra.gamma5-anticommutation", "chirality element anticommutes with generators",
              [&] {
                  Rational worst(0);
                  for (int a = 0; a < 4; ++a)
                      worst = max_r(worst, exact_max_dev(
                                               rep.gamma[a] * rep.gamma5 + rep.gamma5 * rep.gamma[a],
                                               zero4));
                  return worst;
              });

    rec.exact("algebra.hermiticity", "adjoint symmetry of the generators", [&] {
        Rational worst = exact_max_dev(rep.gamma[0].adjoint(), rep.gamma[0]);
        for (int k = 1; k < 4; ++k)
            worst = max_r(worst, exact_max_dev(rep.gamma[k].adjoint(), -rep.gamma[k]));
        worst = max_r(worst, exact_max_dev(rep.gamma5.adjoint(), rep.gamma5));
        return worst;
    });

    rec.exact("algebra.squares", "squares of the generators", [&] {
        Rational worst = exact_max_dev(rep.gamma[0] * rep.gamma[0], id4);
        for (int k = 1; k < 4; ++k)
            worst = max_r(worst, exact_max_dev(rep.gamma[k] * rep.gamma[k], -id4));
        worst = max_r(worst, exact_max_dev(rep.gamma5 * rep.gamma5, id4));
        return worst;
    });

    rec.exact("algebra.conjugation", "entrywise conjugation signs", [&] {
        Rational worst(0);
        for (int a : {0, 1, 3})
            worst = max_r(worst, exact_max_dev(rep.gamma[a].conjugate(), rep.gamma[a]));
        worst = max_r(worst, exact_max_dev(rep.gamma[2].conjugate(), -rep.gamma[2]));
        worst = max_r(worst, exact_max_dev(rep.gamma5.conjugate(), rep.gamma5));
        return worst;
    });

    rec.exact("algebra.transposition", "transposition signs", [&] {
        Rational worst(0);
        for (int a : {0, 2})
            worst = max_r(worst, exact_max_dev(rep.gamma[a].transpose(), rep.gamma[a]));
        for (int a : {1, 3})
            worst = max_r(worst, exact_max_dev(rep.gamma[a].transpose(), -rep.gamma[a]));
        return worst;
    });

    rec.exact("algebra.gamma5-product-form",
              "chirality element equals -i times the ordered generator product", [&] {
                  ExactMatrix prod =
                      rep.gamma[0] * rep.gamma[1] * rep.gamma[2] * rep.gamma[3];
                  return exact_max_dev((-i) * prod, rep.gamma5);
              });

    rec.exact("algebra.gamma5-block-form", "chirality element block form", [&] {
        ExactMatrix want(4);
        want.at(0, 2) = ExactComplex(-1);
        want.at(1, 3) = ExactComplex(-1);
        want.at(2, 0) = ExactComplex(-1);
        want.at(3, 1) = ExactComplex(-1);
        return exact_max_dev(rep.gamma5, want);
    });

    rec.exact_flag("algebra.basis-count", "sixteen products of distinct generators",
                   [&] { return basis_table().size() == 16; });

    rec.exact_flag("algebra.basis-rank", "basis spans the full matrix space", [&] {
        std::vector<ExactMatrix> mats;
        for (const CliffordBasisElement& e : basis_table()) mats.push_back(e.matrix);
        return exact_rank(mats) == 16;
    });

    rec.exact("algebra.basis-traces", "non-identity basis elements are traceless", [&] {
        Rational worst(0);
        for (const CliffordBasisElement& e : basis_table()) {
            if (e.mask == 0) continue;
            ExactComplex tr(0);
            for (int k = 0; k < 4; ++k) tr += e.matrix.at(k, k);
            worst = max_r(worst, tr.linf());
        }
        return worst;
    });

    rec.exact("algebra.canonical-product-exhaustive",
              "normal form agrees with direct multiplication for all short words", [&] {
                  const std::array<int, 5> alphabet{0, 1, 2, 3, 5};
                  Rational worst(0);
                  auto check_word = [&](const std::vector<int>& word) {
                      CanonicalMonomial cm = canonical_product(word);
                      ExactMatrix direct = ExactMatrix::identity(4);
                      for (int sym : word)
                          direct = direct * (sym == 5 ? rep.gamma5 : rep.gamma[sym]);
                      worst = max_r(worst, exact_max_dev(cm.phase.value() * basis_matrix(cm.mask),
                                                         direct));
                  };
                  check_word({});
                  for (int a : alphabet) {
                      check_word({a});
                      for (int b : alphabet) {
                          check_word({a, b});
                          for (int c : alphabet) check_word({a, b, c});
                      }
                  }
                  return worst;
              });

    rec.exact_flag("algebra.parser-roundtrip",
                   "format then parse reproduces structure and exact value", [&] {
                       const std::vector<std::string> corpus{
                           "I",
                           "i",
                           "0",
                           "7",
                           "-3",
                           "g0",
                           "g5",
                           "i*g0",
                           "-i*g1*g3",
                           "-1*g0*g2",
                           "g0*g1*g3",
                           "i*g1*g2*g3",
                           "star(g2)",
                           "transpose(g1)",
                           "dagger(g1)",
                           "dagger(star(transpose(g2)))",
                           "-(g0*g2)",
                           "2*(g0*g1)*g2",
                           "star(i*g0*g2)*g5",
                           "-i*g0*g1*g2*g3",
                       };
                       for (const std::string& text : corpus) {
                           ExprPtr e = parse(text);
                           ExprPtr again = parse(format(*e));
                           if (!structurally_equal(*e, *again)) return false;
                           if (!(eval_exact(*e) == eval_exact(*again))) return false;
                       }
                       return true;
                   });

    rec.exact("algebra.canonicalize-exhaustive",
              "canonical form matches evaluation for all short monomials", [&] {
                  const std::array<const char*, 5> gens{"g0", "g1", "g2", "g3", "g5"};
                  Rational worst(0);
                  auto check_text = [&](const std::string& text) {
                      ExprPtr e = parse(text);
                      CanonicalForm cf = canonicalize(*e);
                      worst = max_r(worst, exact_max_dev(cf.coeff * basis_matrix(cf.mask),
                                                         eval_exact(*e)));
                  };
                  for (const char* a : gens) {
                      check_text(a);
                      for (const char* b : gens) {
                          check_text(std::string(a) + "*" + b);
                          for (const char* c : gens)
                              check_text(std::string(a) + "*" + b + "*" + c);
                      }
                  }
                  return worst;
              });

    rec.exact_flag("algebra.compose-associativity", "operator composition is associative", [&] {
        const std::array<DiscreteOp, 4> prims{make_P(), make_T(), make_C(), make_Q()};
        for (const DiscreteOp& a : prims)
            for (const DiscreteOp& b : prims)
                for (const DiscreteOp& c : prims) {
                    DiscreteOp left = compose(compose(a, b), c);
                    DiscreteOp right = compose(a, compose(b, c));
                    if (!(left.matrix == right.matrix) || left.antilinear != right.antilinear ||
                        left.arg_signs != right.arg_signs)
                        return false;
                }
        return true;
    });

    rec.exact_flag("algebra.apply-compose",
                   "composite application equals sequential application", [&] {
                       const std::array<DiscreteOp, 4> prims{make_P(), make_T(), make_C(),
                                                             make_Q()};
                       for (int rep_count = 0; rep_count < 5; ++rep_count) {
                           PolySpinor f = random_poly_spinor(rng);
                           for (const DiscreteOp& a : prims)
                               for (const DiscreteOp& b : prims) {
                                   if (!(apply(compose(a, b), f) == apply(a, apply(b, f))))
                                       return false;
                               }
                       }
                       return true;
                   });

    rec.exact_flag("algebra.parity-squared", "applying parity twice negates the function", [&] {
        DiscreteOp P = make_P();
        for (int k = 0; k < 5; ++k) {
            PolySpinor f = random_poly_spinor(rng);
            PolySpinor expect;
            for (int c = 0; c < 4; ++c) expect.comp[c] = f.comp[c].scaled(ExactComplex(-1));
            if (!(apply(P, apply(P, f)) == expect)) return false;
        }
        return true;
    });

    rec.exact_flag("algebra.conjugation-squared",
                   "applying charge conjugation twice restores the function", [&] {
                       DiscreteOp C = make_C();
                       for (int k = 0; k < 5; ++k) {
                           PolySpinor f = random_poly_spinor(rng);
                           if (!(apply(C, apply(C, f)) == f)) return false;
                       }
                       return true;
                   });

    rec.exact("algebra.commutator-c-ptq",
              "charge conjugation commutes with the PTQ composition", [&] {
                  DiscreteOp C = make_C();
                  DiscreteOp PTQ = op_by_name("PTQ");
                  std::vector<SamplePoint> pts = random_sample_points(rng, 6);
                  Rational worst(0);
                  for (int k = 0; k < 100; ++k) {
                      PolySpinor f = random_poly_spinor(rng);
                      worst = max_r(worst, commutator_deviation(C, PTQ, f, pts));
                  }
                  return worst;
              });

    rec.exact("algebra.commutator-self", "every operator commutes with itself", [&] {
        std::vector<SamplePoint> pts = random_sample_points(rng, 4);
        Rational worst(0);
        for (const DiscreteOp& o : {make_P(), make_T(), make_C(), make_Q()}) {
            PolySpinor f = random_poly_spinor(rng);
            worst = max_r(worst, commutator_deviation(o, o, f, pts));
        }
        return worst;
    });

    rec.exact("algebra.lightcone", "light-cone form is even in the speed sign", [&] {
        Rational worst(0);
        for (int k = 0; k < 100; ++k) {
            Rational t = rng.dyadic(5);
            std::array<Rational, 3> x{rng.dyadic(5), rng.dyadic(5), rng.dyadic(5)};
            Rational c = rng.nonzero_dyadic(5);
            auto [plus, minus] = lightcone_check(t, x, c);
            worst = max_r(worst, abs_rational(plus - minus));
        }
        return worst;
    });
}

// ---------------------------------------------------------------------------
// table

void suite_table(Recorder& rec) {
    for (const TableRow& row : transformation_table()) {
        rec.exact_flag("table." + row.name,
                       "transformation table row " + row.name + " -> " + row.expected,
                       [&] { return row.match; });
    }
}

// ---------------------------------------------------------------------------
// intertwiners

void suite_intertwiners(Recorder& rec) {
    auto family_ok = [](const std::vector<IntertwinerSolution>& sols, std::uint8_t mask,
                        Phase must_contain) {
        if (sols.size() != 4) return false;
        bool has = false;
        for (const IntertwinerSolution& s : sols) {
            if (s.mask != mask) return false;
            if (s.phase == must_contain) has = true;
        }
        return has;
    };

    rec.exact_flag("intertwiners.q-family",
                   "all-minus plain constraint solved exactly by the chirality family", [&] {
                       auto sols = solve_intertwiner({{-1, -1, -1, -1}, IntertwinerMode::plain});
                       // i g5 = phase +1 on the ordered product g0 g1 g2 g3
                       return family_ok(sols, kFullMask, Phase::one());
                   });

    rec.exact_flag("intertwiners.p-family", "parity constraint solved exactly by the g0 family",
                   [&] {
                       auto sols = solve_intertwiner({{+1, -1, -1, -1}, IntertwinerMode::plain});
                       return family_ok(sols, 0x1, Phase::i());
                   });

    rec.exact_flag("intertwiners.t-family",
                   "transpose-mode constraint solved exactly by the g0 g1 g3 family", [&] {
                       auto sols =
                           solve_intertwiner({{+1, -1, -1, -1}, IntertwinerMode::transpose});
                       return family_ok(sols, 0x1 | 0x2 | 0x8, Phase::minus_i());
                   });

    rec.exact_flag("intertwiners.c-family",
                   "conjugate-mode all-minus constraint solved exactly by the g2 family", [&] {
                       auto sols =
                           solve_intertwiner({{-1, -1, -1, -1}, IntertwinerMode::conjugate});
                       return family_ok(sols, 0x4, Phase::one());
                   });

    rec.exact_flag("intertwiners.identity-family",
                   "all-plus plain constraint solved exactly by the identity family", [&] {
                       auto sols = solve_intertwiner({{+1, +1, +1, +1}, IntertwinerMode::plain});
                       return family_ok(sols, 0x0, Phase::one());
                   });

    rec.exact_flag("intertwiners.plain-completeness",
                   "each plain sign pattern is solved by exactly one basis family", [&] {
                       std::set<std::uint8_t> masks_seen;
                       int total = 0;
                       for (int bits = 0; bits < 16; ++bits) {
                           IntertwinerConstraint c;
                           c.mode = IntertwinerMode::plain;
                           for (int a = 0; a < 4; ++a)
                               c.target_signs[a] = (bits >> a) & 1 ? -1 : +1;
                           auto sols = solve_intertwiner(c);
                           if (sols.size() != 4) return false;
                           for (const IntertwinerSolution& s : sols)
                               if (s.mask != sols.front().mask) return false;
                           masks_seen.insert(sols.front().mask);
                           total += static_cast<int>(sols.size());
                       }
                       return total == 64 && masks_seen.size() == 16;
                   });
}

// ---------------------------------------------------------------------------
// planewave

void suite_planewave(Recorder& rec, Rng& rng, double tol) {
    const double m = 1.0, hbar = 1.0;
    const std::array<double, 2> speeds{3.0, -3.0};

    struct Draw {
        Vec3 p;
        TwoSpinor w;
    };
    std::vector<Draw> draws;
    draws.push_back({{0, 0, 0}, TwoSpinor(1, 0)});  // rest momentum always included
    for (int k = 1; k < 100; ++k) draws.push_back({random_momentum(rng), random_spinor(rng)});

    std::vector<SampleXT> pts = random_field_samples(rng, 10);

    auto for_states = [&](auto&& fn) {
        double worst = 0;
        for (double c : speeds)
            for (const Draw& d : draws) worst = std::max(worst, fn(d.p, d.w, m, c));
        return worst;
    };

    rec.approx("planewave.mass-shell", "mass shell constraint on both speed sheets", [&] {
        return for_states([&](const Vec3& p, const TwoSpinor&, double m_, double c_) {
            double mc = m_ * c_;
            double p0 = shell_p0(p, m_, c_);
            return std::abs(p0 * p0 - dot3(p, p) - mc * mc) / (p0 * p0);
        });
    });

    rec.approx("planewave.normalization-pos", "positive branch normalization +2mc", [&] {
        return for_states([&](const Vec3& p, const TwoSpinor& w, double m_, double c_) {
            double mc = m_ * c_;
            Bispinor u = spinor_pos(p, w, m_, c_);
            return std::abs(ubar_u(u) - 2 * mc) / std::abs(2 * mc);
        });
    });

    rec.approx("planewave.normalization-neg", "negative branch normalization -2mc", [&] {
        return for_states([&](const Vec3& p, const TwoSpinor& w, double m_, double c_) {
            double mc = m_ * c_;
            Bispinor u = spinor_neg(p, w, m_, c_);
            return std::abs(ubar_u(u) + 2 * mc) / std::abs(2 * mc);
        });
    });

    rec.approx("planewave.momentum-residual-pos", "positive branch momentum-space residual", [&] {
        return for_states([&](const Vec3& p, const TwoSpinor& w, double m_, double c_) {
            double mc = m_ * c_;
            return momentum_residual(spinor_pos(p, w, m_, c_), p, shell_p0(p, m_, c_), mc, +1);
        });
    });

    rec.approx("planewave.momentum-residual-neg", "negative branch momentum-space residual", [&] {
        return for_states([&](const Vec3& p, const TwoSpinor& w, double m_, double c_) {
            double mc = m_ * c_;
            return momentum_residual(spinor_neg(p, w, m_, c_), p, shell_p0(p, m_, c_), mc, -1);
        });
    });

    rec.approx("planewave.free-residual", "free equation residual of evaluated waves", [&] {
        return for_states([&](const Vec3& p, const TwoSpinor& w, double m_, double c_) {
            auto pos = PlaneWaveState::make(FrequencyKind::positive, p, w, m_, c_, hbar);
            auto neg = PlaneWaveState::make(FrequencyKind::negative, p, w, m_, c_, hbar);
            return std::max(free_residual(field_of(pos), pos.mc(), hbar, pts),
                            free_residual(field_of(neg), neg.mc(), hbar, pts));
        });
    });

    rec.approx("planewave.conjugation-pointwise",
               "conjugation image of the companion equals the particle state", [&] {
                   return for_states([&](const Vec3& p, const TwoSpinor& w, double m_, double c_) {
                       auto pos = PlaneWaveState::make(FrequencyKind::positive, p, w, m_, c_, hbar);
                       auto neg = PlaneWaveState::make(FrequencyKind::negative, p,
                                                       companion_spinor(w), m_, c_, hbar);
                       SpinorField img = op_image(make_C(), field_of(neg));
                       double dev_state = field_deviation(img, field_of(pos), pts);
                       // and the conjugation dictionary rebuilds the same state
                       double dev_dict =
                           field_deviation(field_of(charge_conjugate(neg)), field_of(pos), pts);
                       return std::max(dev_state, dev_dict);
                   });
               });

    rec.approx("planewave.conjugation-involution", "conjugation applied twice is the identity",
               [&] {
                   DiscreteOp C = make_C();
                   return for_states([&](const Vec3& p, const TwoSpinor& w, double m_, double c_) {
                       auto pos = PlaneWaveState::make(FrequencyKind::positive, p, w, m_, c_, hbar);
                       SpinorField twice = op_image(C, op_image(C, field_of(pos)));
                       return field_deviation(twice, field_of(pos), pts);
                   });
               });

    rec.approx("planewave.sheet-identification",
               "flipping (E, c) together changes no evaluated value", [&] {
                   return for_states([&](const Vec3& p, const TwoSpinor& w, double m_, double c_) {
                       auto pos = PlaneWaveState::make(FrequencyKind::positive, p, w, m_, c_, hbar);
                       auto flipped = pos.sheet_identified();
                       double worst = std::abs(pos.p0() - flipped.p0());
                       worst = std::max(worst, std::abs(pos.energy() + flipped.energy()));
                       worst = std::max(
                           worst, field_deviation(field_of(pos), field_of(flipped), pts));
                       auto twice = flipped.sheet_identified();
                       worst = std::max(worst, std::abs(twice.c() - pos.c()));
                       return worst;
                   });
               });

    rec.approx("planewave.c-vs-ptq-pointwise",
               "charge conjugation against PTQ on states, identified sheet", [&] {
                   return for_states([&](const Vec3& p, const TwoSpinor& w, double m_, double c_) {
                       auto pos = PlaneWaveState::make(FrequencyKind::positive, p, w, m_, c_, hbar);
                       return ptq_vs_c_check(pos, pts, tol).deviation;
                   });
               });

    rec.exact_flag("planewave.c-vs-ptq-paper-phase",
                   "relabeling phase -1 attained for every sampled state", [&] {
                       for (double c : speeds)
                           for (const Draw& d : draws) {
                               auto pos = PlaneWaveState::make(FrequencyKind::positive, d.p, d.w,
                                                               m, c, hbar);
                               if (!ptq_vs_c_check(pos, pts, tol).paper_phase_attained)
                                   return false;
                           }
                       return true;
                   });

    rec.approx("planewave.ptq-image-flipped-equation",
               "PTQ image solves the speed-flipped free equation", [&] {
                   DiscreteOp PTQ = op_by_name("PTQ");
                   return for_states([&](const Vec3& p, const TwoSpinor& w, double m_, double c_) {
                       auto pos = PlaneWaveState::make(FrequencyKind::positive, p, w, m_, c_, hbar);
                       SpinorField img = op_image(PTQ, field_of(pos));
                       return free_residual(img, -pos.mc(), hbar, pts);
                   });
               });
}

// ---------------------------------------------------------------------------
// em

void suite_em(Recorder& rec, Rng& rng, double tol) {
    const double m = 1.0, c = 3.0, hbar = 1.0;

    struct Case {
        DiracInstance inst;
        EMPlaneWaveSolution sol;
    };
    std::vector<Case> cases;
    for (int k = 0; k < 20; ++k) {
        DiracInstance inst;
        inst.m = m;
        inst.c = c;
        inst.hbar = hbar;
        inst.e = rng.nonzero_dyadic(2).get_d();
        inst.A.A0 = rng.dyadic_double(2);
        for (int j = 0; j < 3; ++j) inst.A.A[j] = rng.dyadic_double(2);
        Vec3 pi = {rng.dyadic_double(8), rng.dyadic_double(8), rng.dyadic_double(8)};
        cases.push_back({inst, build_solution(inst, pi, random_spinor(rng))});
    }

    std::vector<SampleXT> pts = random_field_samples(rng, 8);

    rec.approx("em.solution-residual", "constructed plane waves solve the coupled equation", [&] {
        double worst = 0;
        for (const Case& cs : cases)
            worst = std::max(worst, coupled_residual(cs.inst, cs.sol.field(), pts));
        return worst;
    });

    rec.approx("em.free-limit", "zero charge reduces to the free residual", [&] {
        DiracInstance inst;
        inst.m = m;
        inst.c = c;
        inst.hbar = hbar;
        inst.e = 0.0;
        Vec3 pi = {1.0, -0.5, 2.0};
        EMPlaneWaveSolution sol = build_solution(inst, pi, TwoSpinor(1, 0));
        double coupled = coupled_residual(inst, sol.field(), pts);
        double free = free_residual(sol.field(), m * c, hbar, pts);
        return std::max({coupled, free, std::abs(coupled - free)});
    });

    for (const std::string& name : {"P", "T", "C", "Q", "PT", "PQ", "TQ", "PTQ"}) {
        rec.approx("em.transport-" + name,
                   "operator " + name + " maps solutions to solutions of the mapped instance",
                   [&, name] {
                       double worst = 0;
                       for (const Case& cs : cases)
                           worst = std::max(worst, transport_check(cs.inst, name, cs.sol, pts));
                       return worst;
                   });
    }

    rec.exact_flag("em.map-composition", "instance maps compose exactly", [&] {
        InstanceMap ptq = compose(instance_map("P"), compose(instance_map("T"), instance_map("Q")));
        if (!(ptq == instance_map("PTQ"))) return false;
        const std::array<const char*, 4> prims{"P", "T", "C", "Q"};
        for (const char* a : prims)
            for (const char* b : prims)
                for (const char* cc : prims) {
                    InstanceMap left =
                        compose(compose(instance_map(a), instance_map(b)), instance_map(cc));
                    InstanceMap right =
                        compose(instance_map(a), compose(instance_map(b), instance_map(cc)));
                    if (!(left == right)) return false;
                }
        return true;
    });

    rec.exact_flag("em.charge-coupling-bilinearity",
                   "coupling depends only on the product of charge and potential", [&] {
                       for (const Case& cs : cases) {
                           if (!potential_rule_equivalence(cs.inst)) return false;
                           DiracInstance doubled_e = cs.inst;
                           doubled_e.e *= 2.0;
                           DiracInstance doubled_a = cs.inst;
                           doubled_a.A.A0 *= 2.0;
                           for (int j = 0; j < 3; ++j) doubled_a.A.A[j] *= 2.0;
                           if (!same_residual_operator(doubled_e, doubled_a)) return false;
                       }
                       return true;
                   });

    rec.approx("em.energy-gap", "gap between the energy labels across the sheets", [&] {
        DiracInstance inst;
        inst.m = m;
        inst.c = c;
        inst.hbar = hbar;
        EMPlaneWaveSolution rest = build_solution(inst, {0, 0, 0}, TwoSpinor(1, 0));
        double worst = std::abs(energy_gap(inst, rest) - 2 * m * c * c) / (2 * m * c * c);
        DiracInstance flipped = inst;
        flipped.c = -c;
        EMPlaneWaveSolution rest_flipped = build_solution(flipped, {0, 0, 0}, TwoSpinor(1, 0));
        worst = std::max(worst, std::abs(energy_gap(inst, rest) - energy_gap(flipped, rest_flipped)) /
                                    (2 * m * c * c));
        DiracInstance heavier = inst;
        heavier.m = 2 * m;
        EMPlaneWaveSolution rest_heavy = build_solution(heavier, {0, 0, 0}, TwoSpinor(1, 0));
        worst = std::max(worst, std::abs(energy_gap(heavier, rest_heavy) -
                                         2 * energy_gap(inst, rest)) /
                                    (4 * m * c * c));
        return worst;
    });

    rec.approx("em.mass-sensitivity", "residual detects a shifted mass in the operator", [&] {
        const Case& cs = cases.front();
        DiracInstance off = cs.inst;
        off.m += 0.1;
        double res = coupled_residual(off, cs.sol.field(), pts);
        // exact solutions miss the shifted operator by exactly 0.1|c|
        return std::abs(res - 0.1 * std::abs(cs.inst.c)) / (0.1 * std::abs(cs.inst.c));
    });
}

}  // namespace

Report run_suite(const std::string& suite, std::uint64_t seed, double tolerance) {
    bool known = false;
    for (const std::string& name : suite_names()) known = known || name == suite;
    if (!known) throw std::invalid_argument("unknown suite '" + suite + "'");

    Report report;
    report.suite = suite;
    report.seed = seed;
    report.version = kVersion;
    Recorder rec(report, tolerance);

    if (suite == "all" || suite == "algebra") {
        Rng rng(seed ^ 0xa15ebfa9ull);
        suite_algebra(rec, rng);
    }
    if (suite == "all" || suite == "table") suite_table(rec);
    if (suite == "all" || suite == "intertwiners") suite_intertwiners(rec);
    if (suite == "all" || suite == "planewave") {
        Rng rng(seed ^ 0x57a7e5ull);
        suite_planewave(rec, rng, tolerance);
    }
    if (suite == "all" || suite == "em") {
        Rng rng(seed ^ 0xe10c0deull);
        suite_em(rec, rng, tolerance);
    }
    return report;
}

}  // namespace ptq
