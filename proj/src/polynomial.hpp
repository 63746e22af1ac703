#pragma once

#include "exact.hpp"
#include "matrix.hpp"

#include <array>
#include <map>

namespace ptq {

// Polynomial in the five real arguments (x0, x1, x2, x3, c) with Gaussian
// rational coefficients. Exactly evaluable at rational points.
class Polynomial {
public:
    using Key = std::array<unsigned char, 5>;  // exponents

    Polynomial() = default;

    static Polynomial constant(ExactComplex v) {
        Polynomial p;
        p.add_term(Key{0, 0, 0, 0, 0}, std::move(v));
        return p;
    }

    void add_term(const Key& key, ExactComplex coeff) {
        if (coeff.is_zero()) return;
        auto [it, inserted] = terms_.try_emplace(key, coeff);
        if (!inserted) {
            it->second += coeff;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    Polynomial operator+(const Polynomial& o) const {
        Polynomial out = *this;
        for (const auto& [k, v] : o.terms_) out.add_term(k, v);
        return out;
    }

    Polynomial operator-(const Polynomial& o) const {
        Polynomial out = *this;
        for (const auto& [k, v] : o.terms_) out.add_term(k, -v);
        return out;
    }

    Polynomial scaled(const ExactComplex& s) const {
        Polynomial out;
        for (const auto& [k, v] : terms_) out.add_term(k, s * v);
        return out;
    }

    Polynomial conj_coeffs() const {
        Polynomial out;
        for (const auto& [k, v] : terms_) out.add_term(k, v.conj());
        return out;
    }

    // Substitution (x0, x, c) -> (s_t x0, s_x x, s_c c); signs are +-1.
    Polynomial flip_args(int s_t, int s_x, int s_c) const {
        Polynomial out;
        for (const auto& [k, v] : terms_) {
            int parity = 0;
            if (s_t < 0) parity += k[0];
            if (s_x < 0) parity += k[1] + k[2] + k[3];
            if (s_c < 0) parity += k[4];
            out.add_term(k, (parity % 2) ? -v : v);
        }
        return out;
    }

    ExactComplex eval(const std::array<Rational, 5>& x) const {
        ExactComplex acc(0);
        for (const auto& [k, v] : terms_) {
            ExactComplex term = v;
            for (int a = 0; a < 5; ++a)
                for (int e = 0; e < k[a]; ++e) term *= ExactComplex(x[a]);
            acc += term;
        }
        return acc;
    }

    bool is_zero() const { return terms_.empty(); }

    const std::map<Key, ExactComplex>& terms() const { return terms_; }

    friend bool operator==(const Polynomial& a, const Polynomial& b) {
        return a.terms_ == b.terms_;
    }

private:
    std::map<Key, ExactComplex> terms_;
};

// Four-component polynomial spinor function of (x0, x, c): the exact test
// functions the operator identities are checked against.
struct PolySpinor {
    std::array<Polynomial, 4> comp;

    PolySpinor operator-(const PolySpinor& o) const {
        PolySpinor out;
        for (int k = 0; k < 4; ++k) out.comp[k] = comp[k] - o.comp[k];
        return out;
    }

    bool is_zero() const {
        for (const Polynomial& p : comp)
            if (!p.is_zero()) return false;
        return true;
    }

    friend bool operator==(const PolySpinor& a, const PolySpinor& b) { return a.comp == b.comp; }
};

inline PolySpinor mat_apply(const ExactMatrix& m, const PolySpinor& f) {
    PolySpinor out;
    for (int r = 0; r < 4; ++r) {
        Polynomial acc;
        for (int c = 0; c < 4; ++c) acc = acc + f.comp[c].scaled(m.at(r, c));
        out.comp[r] = acc;
    }
    return out;
}

}  // namespace ptq
