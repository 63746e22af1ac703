#include "doctest.h"

#include "clifford.hpp"
#include "exact.hpp"
#include "matrix.hpp"
#include "test_util.hpp"

#include <stdexcept>

using namespace ptq;

TEST_CASE("rationals reduce to canonical form") {
    CHECK(make_rational(2, 4) == make_rational(1, 2));
    CHECK(make_rational(-3, -6) == make_rational(1, 2));
    CHECK(make_rational(3, -6) == make_rational(-1, 2));
    CHECK_THROWS_AS(make_rational(1, 0), std::domain_error);
}

TEST_CASE("exact complex arithmetic") {
    ExactComplex a(make_rational(1), make_rational(2));   // 1 + 2i
    ExactComplex b(make_rational(3), make_rational(-1));  // 3 - i
    CHECK(a * b == ExactComplex(make_rational(5), make_rational(5)));
    CHECK((a * b) / b == a);
    CHECK(a + b - b == a);
    CHECK(a.conj() == ExactComplex(make_rational(1), make_rational(-2)));
    CHECK_THROWS_AS(a / ExactComplex(0), std::domain_error);

    CHECK(ExactComplex::i() * ExactComplex::i() == ExactComplex(-1));
    CHECK(a.linf() == make_rational(2));
    CHECK(ExactComplex(0).is_zero());
}

TEST_CASE("exact complex rendering") {
    CHECK(ExactComplex(0).str() == "0");
    CHECK(ExactComplex(1).str() == "1");
    CHECK(ExactComplex(make_rational(-1, 2)).str() == "-1/2");
    CHECK(ExactComplex::i().str() == "i");
    CHECK((-ExactComplex::i()).str() == "-i");
    CHECK(ExactComplex(make_rational(0), make_rational(3, 4)).str() == "3/4i");
    CHECK(ExactComplex(make_rational(1, 2), make_rational(3, 4)).str() == "1/2+3/4i");
    CHECK(ExactComplex(make_rational(1, 2), make_rational(-1)).str() == "1/2-i");
}

TEST_CASE("matrix product basics") {
    const GammaRep& rep = dirac_rep();
    const ExactMatrix id4 = ExactMatrix::identity(4);

    CHECK(rep.gamma[0] * rep.gamma[0] == id4);

    Rng rng(7);
    ExactMatrix m = testutil::random_exact_matrix(rng, 4);
    CHECK(id4 * m == m);
    CHECK(m * id4 == m);

    // sigma_x sigma_y = i sigma_z, multiplied out by hand from the entries
    ExactMatrix want(2);
    want.at(0, 0) = ExactComplex::i();
    want.at(1, 1) = -ExactComplex::i();
    CHECK(rep.pauli[0] * rep.pauli[1] == want);

    CHECK_THROWS_AS(rep.pauli[0] * rep.gamma[0], std::invalid_argument);
    CHECK_THROWS_AS(ExactMatrix(3), std::invalid_argument);
}

TEST_CASE("matrix product is associative") {
    Rng rng(11);
    for (int k = 0; k < 10; ++k) {
        ExactMatrix a = testutil::random_exact_matrix(rng, 4);
        ExactMatrix b = testutil::random_exact_matrix(rng, 4);
        ExactMatrix c = testutil::random_exact_matrix(rng, 4);
        CHECK((a * b) * c == a * (b * c));
    }
}

TEST_CASE("star family") {
    const GammaRep& rep = dirac_rep();
    CHECK(rep.gamma[2].star_family(StarKind::conjugate) == -rep.gamma[2]);
    CHECK(ExactMatrix::identity(4).star_family(StarKind::transpose) == ExactMatrix::identity(4));
    CHECK(rep.gamma[1].star_family(StarKind::adjoint) == -rep.gamma[1]);

    Rng rng(3);
    for (int k = 0; k < 5; ++k) {
        ExactMatrix m = testutil::random_exact_matrix(rng, 4);
        CHECK(m.adjoint() == m.conjugate().transpose());
    }
}

TEST_CASE("exact inverse") {
    const GammaRep& rep = dirac_rep();
    const ExactMatrix id4 = ExactMatrix::identity(4);

    CHECK(inverse(rep.gamma5) == rep.gamma5);
    CHECK(inverse(id4) == id4);

    // (i g0)^-1 = -i g0 since (i g0)(-i g0) = (g0)^2 = I
    ExactMatrix ig0 = ExactComplex::i() * rep.gamma[0];
    CHECK(inverse(ig0) == -ExactComplex::i() * rep.gamma[0]);
    CHECK(ig0 * inverse(ig0) == id4);

    CHECK_THROWS_AS(inverse(ExactMatrix(4)), std::domain_error);

    Rng rng(23);
    int checked = 0;
    while (checked < 8) {
        ExactMatrix m = testutil::random_exact_matrix(rng, 4);
        try {
            ExactMatrix mi = inverse(m);
            CHECK(m * mi == id4);
            CHECK(mi * m == id4);
            ++checked;
        } catch (const std::domain_error&) {
            // singular draw; try another
        }
    }
}

TEST_CASE("float conversion and comparison") {
    const GammaRep& rep = dirac_rep();
    FloatMatrix f = to_float(rep.gamma[0]);
    CHECK(max_abs_diff(f, f) == 0.0);

    FloatMatrix id = to_float(ExactMatrix::identity(4));
    FloatMatrix id2 = to_float(ExactComplex(2) * ExactMatrix::identity(4));
    CHECK(max_abs_diff(id, id2) == 1.0);

    // Gaussian-integer entries convert losslessly
    FloatMatrix manual(4);
    for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c) manual.at(r, c) = rep.gamma5.at(r, c).to_cfloat();
    CHECK(max_abs_diff(to_float(rep.gamma5), manual) == 0.0);

    CHECK_THROWS_AS(max_abs_diff(FloatMatrix(2), FloatMatrix(4)), std::invalid_argument);
}
