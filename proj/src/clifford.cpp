#include "clifford.hpp"

#include <bit>
#include <stdexcept>

namespace ptq {

ExactComplex Phase::value() const {
    switch (k_) {
        case 0: return ExactComplex(1);
        case 1: return ExactComplex::i();
        case 2: return ExactComplex(-1);
        default: return -ExactComplex::i();
    }
}

namespace {

ExactMatrix pauli_x() {
    ExactMatrix m(2);
    m.at(0, 1) = ExactComplex(1);
    m.at(1, 0) = ExactComplex(1);
    return m;
}

ExactMatrix pauli_y() {
    ExactMatrix m(2);
    m.at(0, 1) = -ExactComplex::i();
    m.at(1, 0) = ExactComplex::i();
    return m;
}

ExactMatrix pauli_z() {
    ExactMatrix m(2);
    m.at(0, 0) = ExactComplex(1);
    m.at(1, 1) = ExactComplex(-1);
    return m;
}

// [[ul, ur], [ll, lr]] from 2x2 blocks; a null block means zero.
ExactMatrix from_blocks(const ExactMatrix* ul, const ExactMatrix* ur, const ExactMatrix* ll,
                        const ExactMatrix* lr) {
    ExactMatrix m(4);
    auto put = [&](const ExactMatrix* b, int r0, int c0) {
        if (!b) return;
        for (int r = 0; r < 2; ++r)
            for (int c = 0; c < 2; ++c) m.at(r0 + r, c0 + c) = b->at(r, c);
    };
    put(ul, 0, 0);
    put(ur, 0, 2);
    put(ll, 2, 0);
    put(lr, 2, 2);
    return m;
}

}  // namespace

GammaRep::GammaRep()
    : gamma{ExactMatrix(4), ExactMatrix(4), ExactMatrix(4), ExactMatrix(4)},
      gamma5(4),
      metric{+1, -1, -1, -1},
      pauli{pauli_x(), pauli_y(), pauli_z()} {}

GammaRep build_dirac_rep() {
    GammaRep rep;

    ExactMatrix i2 = ExactMatrix::identity(2);
    ExactMatrix neg_i2 = -i2;

    // g0 = diag(I, -I); gk off-diagonal with Pauli blocks (sigma_k, -sigma_k).
    rep.gamma[0] = from_blocks(&i2, nullptr, nullptr, &neg_i2);
    for (int k = 0; k < 3; ++k) {
        ExactMatrix neg_sigma = -rep.pauli[k];
        rep.gamma[k + 1] = from_blocks(nullptr, &rep.pauli[k], &neg_sigma, nullptr);
    }

    // gamma5 block form: off-diagonal (-I, -I). Equality with
    // -i g0 g1 g2 g3 is enforced by the verification suite.
    rep.gamma5 = from_blocks(nullptr, &neg_i2, &neg_i2, nullptr);

    return rep;
}

const GammaRep& dirac_rep() {
    static const GammaRep rep = build_dirac_rep();
    return rep;
}

ExactMatrix anticommutator(int a, int b) {
    if (a < 0 || a > 3 || b < 0 || b > 3) throw std::invalid_argument("generator index out of range");
    const GammaRep& rep = dirac_rep();
    return rep.gamma[a] * rep.gamma[b] + rep.gamma[b] * rep.gamma[a];
}

std::string CliffordBasisElement::label() const {
    if (mask == 0) return "I";
    std::string out;
    for (int a = 0; a < 4; ++a) {
        if (!(mask & (1u << a))) continue;
        if (!out.empty()) out += "*";
        out += "g";
        out += static_cast<char>('0' + a);
    }
    return out;
}

namespace {

std::vector<CliffordBasisElement> build_basis_table() {
    const GammaRep& rep = dirac_rep();
    std::vector<CliffordBasisElement> table;
    table.reserve(16);
    for (int count = 0; count <= 4; ++count) {
        for (int mask = 0; mask < 16; ++mask) {
            if (std::popcount(static_cast<unsigned>(mask)) != count) continue;
            ExactMatrix m = ExactMatrix::identity(4);
            for (int a = 0; a < 4; ++a)
                if (mask & (1 << a)) m = m * rep.gamma[a];
            table.push_back({static_cast<std::uint8_t>(mask), std::move(m)});
        }
    }
    return table;
}

}  // namespace

const std::vector<CliffordBasisElement>& basis_table() {
    static const std::vector<CliffordBasisElement> table = build_basis_table();
    return table;
}

const ExactMatrix& basis_matrix(std::uint8_t mask) {
    for (const CliffordBasisElement& e : basis_table())
        if (e.mask == mask) return e.matrix;
    throw std::invalid_argument("basis mask out of range");
}

CanonicalMonomial canonical_product(const std::vector<int>& word) {
    Phase phase = Phase::one();

    std::vector<int> expanded;
    expanded.reserve(word.size() * 4);
    for (int sym : word) {
        if (sym >= 0 && sym <= 3) {
            expanded.push_back(sym);
        } else if (sym == 5) {
            phase = phase * Phase::minus_i();
            for (int a = 0; a < 4; ++a) expanded.push_back(a);
        } else {
            throw std::invalid_argument("invalid generator symbol in word");
        }
    }

    const std::array<int, 4>& metric = dirac_rep().metric;

    // Sorted insertion: each swap past a distinct generator contributes -1,
    // a collision with an equal generator contracts via g^{aa}.
    std::vector<int> sorted;
    sorted.reserve(4);
    for (int g : expanded) {
        int pos = static_cast<int>(sorted.size());
        bool contracted = false;
        while (pos > 0) {
            if (sorted[pos - 1] == g) {
                if (metric[g] < 0) phase = -phase;
                sorted.erase(sorted.begin() + (pos - 1));
                contracted = true;
                break;
            }
            if (sorted[pos - 1] < g) break;
            phase = -phase;
            --pos;
        }
        if (!contracted) sorted.insert(sorted.begin() + pos, g);
    }

    std::uint8_t mask = 0;
    for (int g : sorted) mask |= static_cast<std::uint8_t>(1u << g);
    return {phase, mask};
}

int exact_rank(const std::vector<ExactMatrix>& mats) {
    // Flatten each matrix to a row of 16 entries, then eliminate.
    std::vector<std::vector<ExactComplex>> rows;
    rows.reserve(mats.size());
    for (const ExactMatrix& m : mats) {
        if (m.dim() != 4) throw std::invalid_argument("exact_rank expects 4x4 matrices");
        std::vector<ExactComplex> row;
        row.reserve(16);
        for (int r = 0; r < 4; ++r)
            for (int c = 0; c < 4; ++c) row.push_back(m.at(r, c));
        rows.push_back(std::move(row));
    }

    int rank = 0;
    for (int col = 0; col < 16 && rank < static_cast<int>(rows.size()); ++col) {
        int pivot = -1;
        for (int r = rank; r < static_cast<int>(rows.size()); ++r) {
            if (!rows[r][col].is_zero()) {
                pivot = r;
                break;
            }
        }
        if (pivot < 0) continue;
        std::swap(rows[rank], rows[pivot]);
        ExactComplex d = rows[rank][col];
        for (int c = col; c < 16; ++c) rows[rank][c] = rows[rank][c] / d;
        for (int r = 0; r < static_cast<int>(rows.size()); ++r) {
            if (r == rank || rows[r][col].is_zero()) continue;
            ExactComplex f = rows[r][col];
            for (int c = col; c < 16; ++c) rows[r][c] -= f * rows[rank][c];
        }
        ++rank;
    }
    return rank;
}

}  // namespace ptq
