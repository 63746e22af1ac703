#include "doctest.h"

#include "clifford.hpp"

#include <stdexcept>
#include <vector>

using namespace ptq;

namespace {

ExactMatrix word_product(const std::vector<int>& word) {
    const GammaRep& rep = dirac_rep();
    ExactMatrix m = ExactMatrix::identity(4);
    for (int sym : word) m = m * (sym == 5 ? rep.gamma5 : rep.gamma[sym]);
    return m;
}

}  // namespace

TEST_CASE("block forms of the representation") {
    const GammaRep& rep = dirac_rep();

    ExactMatrix g0(4);
    g0.at(0, 0) = ExactComplex(1);
    g0.at(1, 1) = ExactComplex(1);
    g0.at(2, 2) = ExactComplex(-1);
    g0.at(3, 3) = ExactComplex(-1);
    CHECK(rep.gamma[0] == g0);

    ExactMatrix g5(4);
    g5.at(0, 2) = ExactComplex(-1);
    g5.at(1, 3) = ExactComplex(-1);
    g5.at(2, 0) = ExactComplex(-1);
    g5.at(3, 1) = ExactComplex(-1);
    CHECK(rep.gamma5 == g5);

    ExactMatrix sz(2);
    sz.at(0, 0) = ExactComplex(1);
    sz.at(1, 1) = ExactComplex(-1);
    CHECK(rep.pauli[2] == sz);

    CHECK(rep.metric == std::array<int, 4>{+1, -1, -1, -1});
}

TEST_CASE("identity suite of the representation") {
    const GammaRep& rep = dirac_rep();
    const ExactMatrix id4 = ExactMatrix::identity(4);
    const ExactMatrix zero4{4};

    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b) {
            ExactMatrix want = a == b ? ExactComplex(2 * rep.metric[a]) * id4 : zero4;
            CHECK(anticommutator(a, b) == want);
        }

    for (int a = 0; a < 4; ++a)
        CHECK(rep.gamma[a] * rep.gamma5 + rep.gamma5 * rep.gamma[a] == zero4);

    CHECK(rep.gamma[0].adjoint() == rep.gamma[0]);
    for (int k = 1; k < 4; ++k) CHECK(rep.gamma[k].adjoint() == -rep.gamma[k]);

    CHECK(rep.gamma[0] * rep.gamma[0] == id4);
    for (int k = 1; k < 4; ++k) CHECK(rep.gamma[k] * rep.gamma[k] == -id4);

    for (int a : {0, 1, 3}) CHECK(rep.gamma[a].conjugate() == rep.gamma[a]);
    CHECK(rep.gamma[2].conjugate() == -rep.gamma[2]);

    for (int a : {0, 2}) CHECK(rep.gamma[a].transpose() == rep.gamma[a]);
    for (int a : {1, 3}) CHECK(rep.gamma[a].transpose() == -rep.gamma[a]);

    ExactMatrix prod = rep.gamma[0] * rep.gamma[1] * rep.gamma[2] * rep.gamma[3];
    CHECK(-ExactComplex::i() * prod == rep.gamma5);
    CHECK(rep.gamma5.adjoint() == rep.gamma5);
    CHECK(rep.gamma5.conjugate() == rep.gamma5);
    CHECK(rep.gamma5 * rep.gamma5 == id4);
}

TEST_CASE("anticommutator rejects bad indices") {
    CHECK_THROWS_AS(anticommutator(4, 0), std::invalid_argument);
    CHECK_THROWS_AS(anticommutator(0, -1), std::invalid_argument);
}

TEST_CASE("canonical product frozen cases") {
    // g2 g0 g2 = g0: one swap (-1) and one contraction (g2)^2 = -1
    CanonicalMonomial cm = canonical_product({2, 0, 2});
    CHECK(cm.phase == Phase::one());
    CHECK(cm.mask == 0x1);
    CHECK(cm.phase.value() * basis_matrix(cm.mask) == word_product({2, 0, 2}));

    cm = canonical_product({});
    CHECK(cm.phase == Phase::one());
    CHECK(cm.mask == 0);

    // the ordered product g0 g1 g2 g3 is the full basis element itself,
    // and equals i times the chirality element
    cm = canonical_product({0, 1, 2, 3});
    CHECK(cm.phase == Phase::one());
    CHECK(cm.mask == kFullMask);
    CHECK(basis_matrix(kFullMask) == ExactComplex::i() * dirac_rep().gamma5);

    CHECK_THROWS_AS(canonical_product({4}), std::invalid_argument);
}

TEST_CASE("canonical product agrees with direct multiplication up to length 3") {
    const std::vector<int> alphabet{0, 1, 2, 3, 5};
    std::vector<std::vector<int>> words{{}};
    for (int a : alphabet) {
        words.push_back({a});
        for (int b : alphabet) {
            words.push_back({a, b});
            for (int c : alphabet) words.push_back({a, b, c});
        }
    }
    CHECK(words.size() == 1 + 5 + 25 + 125);
    for (const auto& word : words) {
        CanonicalMonomial cm = canonical_product(word);
        CHECK(cm.phase.value() * basis_matrix(cm.mask) == word_product(word));
    }
}

TEST_CASE("basis table") {
    const auto& table = basis_table();
    CHECK(table.size() == 16);
    CHECK(table.front().mask == 0);
    CHECK(table.front().matrix == ExactMatrix::identity(4));
    CHECK(table.front().label() == "I");

    const GammaRep& rep = dirac_rep();
    std::uint8_t t_mask = 0x1 | 0x2 | 0x8;  // {0, 1, 3}
    CHECK(basis_matrix(t_mask) == rep.gamma[0] * rep.gamma[1] * rep.gamma[3]);

    std::vector<ExactMatrix> mats;
    for (const CliffordBasisElement& e : table) mats.push_back(e.matrix);
    CHECK(exact_rank(mats) == 16);

    for (const CliffordBasisElement& e : table) {
        if (e.mask == 0) continue;
        ExactComplex tr(0);
        for (int k = 0; k < 4; ++k) tr += e.matrix.at(k, k);
        CHECK(tr.is_zero());
    }
}

TEST_CASE("phase arithmetic") {
    CHECK(Phase::i() * Phase::i() == Phase::minus_one());
    CHECK(Phase::i() * Phase::minus_i() == Phase::one());
    CHECK((-Phase::one()) == Phase::minus_one());
    CHECK(Phase::i().conj() == Phase::minus_i());
    CHECK(Phase::minus_one().value() == ExactComplex(-1));
}
