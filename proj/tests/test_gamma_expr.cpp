#include "doctest.h"

#include "gamma_expr.hpp"
#include "rng.hpp"

#include <stdexcept>
#include <string>
#include <vector>

using namespace ptq;

TEST_CASE("parse produces the expected structure") {
    ExprPtr e = parse("i*g0");
    REQUIRE(e->kind == GammaExpr::Kind::Product);
    REQUIRE(e->args.size() == 2);
    CHECK(e->args[0]->kind == GammaExpr::Kind::ImaginaryUnit);
    CHECK(e->args[1]->kind == GammaExpr::Kind::Generator);
    CHECK(e->args[1]->generator == 0);

    CHECK(parse("I")->kind == GammaExpr::Kind::Identity);
    CHECK(structurally_equal(*parse("  i * g0  "), *parse("i*g0")));
    CHECK(structurally_equal(*parse("-(g0*g2)"), *parse("- ( g0 * g2 )")));
}

TEST_CASE("parse errors carry kind and byte offset") {
    auto offset_of = [](const std::string& text) {
        try {
            parse(text);
        } catch (const ParseError& e) {
            return static_cast<long>(e.offset);
        }
        return -1L;
    };

    CHECK_THROWS_AS(parse("g4"), ParseError);
    CHECK(offset_of("g4") == 0);
    try {
        parse("g4");
    } catch (const ParseError& e) {
        CHECK(e.kind == ParseError::Kind::lexical);
    }

    CHECK(offset_of("g0*(") == 4);
    try {
        parse("g0*(");
    } catch (const ParseError& e) {
        CHECK(e.kind == ParseError::Kind::syntax);
    }

    CHECK(offset_of("g0*") == 3);     // dangling operator
    CHECK(offset_of(")") == 0);
    CHECK(offset_of("star g0") == 5);  // missing '('
    CHECK(offset_of("2 3") == 2);      // trailing token
    CHECK(offset_of("g0 @") == 3);     // unknown character
    CHECK(offset_of("") == 0);
}

TEST_CASE("evaluation of frozen expressions") {
    const GammaRep& rep = dirac_rep();
    const ExactMatrix id4 = ExactMatrix::identity(4);

    CHECK(eval_exact(*parse("g5*g5")) == id4);
    // -g0 g2 is the conjugation intertwiner U_C
    CHECK(eval_exact(*parse("-1*g0*g2")) == -(rep.gamma[0] * rep.gamma[2]));
    CHECK(eval_exact(*parse("star(g2)")) == -rep.gamma[2]);
    CHECK(eval_exact(*parse("transpose(g1)")) == -rep.gamma[1]);
    CHECK(eval_exact(*parse("dagger(g1)")) == -rep.gamma[1]);
    CHECK(eval_exact(*parse("i*g0")) == ExactComplex::i() * rep.gamma[0]);
    CHECK(eval_exact(*parse("2*I")) == ExactComplex(2) * id4);
    CHECK(eval_exact(*parse("-i")) == -ExactComplex::i() * id4);
}

TEST_CASE("canonicalize frozen expressions") {
    CanonicalForm c = canonicalize(*parse("g0*g2*g0"));
    CHECK(c.coeff == ExactComplex(-1));
    CHECK(c.mask == 0x4);
    CHECK(c.str() == "-g2");
    // cross-check against the direct multiplication oracle
    CHECK(c.coeff * basis_matrix(c.mask) == eval_exact(*parse("g0*g2*g0")));

    c = canonicalize(*parse("I"));
    CHECK(c.coeff == ExactComplex(1));
    CHECK(c.mask == 0);
    CHECK(c.str() == "I");

    // -i g0 g1 g2 g3 is the chirality element itself
    c = canonicalize(*parse("-i*g0*g1*g2*g3"));
    CHECK(c.str() == "g5");
    CHECK(c.coeff * basis_matrix(c.mask) == dirac_rep().gamma5);

    c = canonicalize(*parse("0*g1"));
    CHECK(c.str() == "0");

    c = canonicalize(*parse("2*g0"));
    CHECK(c.str() == "2*g0");

    c = canonicalize(*parse("-2*i*g0*g2"));
    CHECK(c.str() == "-2*i*g0*g2");

    CHECK(canonicalize(*parse("dagger(g1)")).str() == "-g1");
    CHECK(canonicalize(*parse("star(i*g5)")).str() == "-i*g5");
}

TEST_CASE("canonicalize agrees with evaluation on all short monomials") {
    const std::vector<std::string> gens{"g0", "g1", "g2", "g3", "g5"};
    std::vector<std::string> texts;
    for (const auto& a : gens) {
        texts.push_back(a);
        for (const auto& b : gens) {
            texts.push_back(a + "*" + b);
            for (const auto& c : gens) texts.push_back(a + "*" + b + "*" + c);
        }
    }
    for (const std::string& text : texts) {
        ExprPtr e = parse(text);
        CanonicalForm c = canonicalize(*e);
        CHECK(c.coeff * basis_matrix(c.mask) == eval_exact(*e));
    }
}

TEST_CASE("canonical_form_of rejects non-monomial matrices") {
    const GammaRep& rep = dirac_rep();
    CHECK_THROWS_AS(canonical_form_of(rep.gamma[0] + rep.gamma[1]), std::domain_error);
    CHECK(canonical_form_of(ExactMatrix(4)).str() == "0");
}

TEST_CASE("format frozen forms") {
    CHECK(format(*parse("i*g0")) == "i*g0");
    CHECK(format(*GammaExpr::make_negate(GammaExpr::make_generator(2))) == "-g2");
    CHECK(format(*GammaExpr::make_unary(GammaExpr::Kind::Dagger, GammaExpr::make_generator(1))) ==
          "dagger(g1)");
    CHECK(format(*parse("-(g0*g2)")) == "-(g0*g2)");
}

namespace {

ExprPtr random_expr(Rng& rng, int depth) {
    long pick = rng.int_in(0, depth > 0 ? 7 : 3);
    switch (pick) {
        case 0: return GammaExpr::make_identity();
        case 1: return GammaExpr::make_imaginary();
        case 2: return GammaExpr::make_integer(mpz_class(rng.int_in(0, 9)));
        case 3: {
            const int gens[5] = {0, 1, 2, 3, 5};
            return GammaExpr::make_generator(gens[rng.int_in(0, 4)]);
        }
        case 4: return GammaExpr::make_negate(random_expr(rng, depth - 1));
        case 5: {
            std::vector<ExprPtr> factors;
            long n = rng.int_in(2, 3);
            for (long k = 0; k < n; ++k) factors.push_back(random_expr(rng, depth - 1));
            return GammaExpr::make_product(std::move(factors));
        }
        case 6:
            return GammaExpr::make_unary(GammaExpr::Kind::Star, random_expr(rng, depth - 1));
        default:
            return GammaExpr::make_unary(rng.int_in(0, 1) ? GammaExpr::Kind::Transpose
                                                          : GammaExpr::Kind::Dagger,
                                         random_expr(rng, depth - 1));
    }
}

}  // namespace

TEST_CASE("format round-trips structure and value for random trees") {
    Rng rng(2024);
    for (int k = 0; k < 200; ++k) {
        ExprPtr e = random_expr(rng, 3);
        ExprPtr back = parse(format(*e));
        CHECK(structurally_equal(*e, *back));
        CHECK(eval_exact(*e) == eval_exact(*back));
    }
}

TEST_CASE("round trip through canonical strings") {
    // canonical strings over Gaussian-integer coefficients re-parse to the
    // same exact matrix
    Rng rng(55);
    const std::vector<std::string> gens{"g0", "g1", "g2", "g3", "g5"};
    for (int k = 0; k < 50; ++k) {
        std::string text = gens[rng.int_in(0, 4)];
        long len = rng.int_in(0, 3);
        for (long j = 0; j < len; ++j) text += "*" + gens[rng.int_in(0, 4)];
        if (rng.int_in(0, 1)) text = "i*" + text;
        if (rng.int_in(0, 1)) text = "-" + text;
        CanonicalForm c = canonicalize(*parse(text));
        CHECK(eval_exact(*parse(c.str())) == eval_exact(*parse(text)));
    }
}
