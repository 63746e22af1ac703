#pragma once

#include "clifford.hpp"
#include "matrix.hpp"

#include <gmpxx.h>

#include <cstddef>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace ptq {

// Expression over the gamma generators. Grammar (whitespace-insensitive):
//
//   expr      := term {'*' term} ;
//   term      := ['-'] factor ;
//   factor    := 'I' | 'i' | integer | generator | func '(' expr ')' | '(' expr ')' ;
//   generator := 'g0' | 'g1' | 'g2' | 'g3' | 'g5' ;
//   func      := 'star' | 'transpose' | 'dagger' ;
//
// Every expression evaluates to an exact 4x4 matrix.
struct GammaExpr;
using ExprPtr = std::shared_ptr<const GammaExpr>;

struct GammaExpr {
    enum class Kind {
        Generator,
        Identity,
        ImaginaryUnit,
        IntegerLiteral,
        Negate,
        Product,
        Star,
        Transpose,
        Dagger,
    };

    Kind kind = Kind::Identity;
    int generator = 0;            // Generator: 0..3 or 5
    mpz_class literal;            // IntegerLiteral
    std::vector<ExprPtr> args;    // unary: 1 element; Product: 2+

    static ExprPtr make_generator(int g);
    static ExprPtr make_identity();
    static ExprPtr make_imaginary();
    static ExprPtr make_integer(mpz_class n);
    static ExprPtr make_negate(ExprPtr e);
    static ExprPtr make_product(std::vector<ExprPtr> factors);
    static ExprPtr make_unary(Kind kind, ExprPtr e);  // Star/Transpose/Dagger
};

class ParseError : public std::runtime_error {
public:
    enum class Kind { lexical, syntax };

    ParseError(Kind kind, std::size_t offset, const std::string& message)
        : std::runtime_error(message), kind(kind), offset(offset) {}

    Kind kind;
    std::size_t offset;  // byte offset into the input
};

// Throws ParseError with a byte offset; never aborts.
ExprPtr parse(std::string_view text);

ExactMatrix eval_exact(const GammaExpr& e);

// Scalar multiple of a single basis element. For the full-index element the
// renderer folds the product g0*g1*g2*g3 = i*g5 back into "g5" so canonical
// strings match how the transformation constants are usually written.
struct CanonicalForm {
    ExactComplex coeff;
    std::uint8_t mask = 0;

    std::string str() const;

    friend bool operator==(const CanonicalForm& a, const CanonicalForm& b) {
        return a.coeff == b.coeff && a.mask == b.mask;
    }
};

// Symbolic normal form; cross-checked against eval_exact before returning.
CanonicalForm canonicalize(const GammaExpr& e);

// Decomposes a matrix as coeff * basis element. Throws std::domain_error
// ("not monomial") if no basis element matches.
CanonicalForm canonical_form_of(const ExactMatrix& m);

// Deterministic rendering; parse(format(e)) is structurally identical to e
// for every AST this module produces.
std::string format(const GammaExpr& e);

bool structurally_equal(const GammaExpr& a, const GammaExpr& b);

}  // namespace ptq
