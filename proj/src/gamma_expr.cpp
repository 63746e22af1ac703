#include "gamma_expr.hpp"

#include <cctype>
#include <utility>

namespace ptq {

ExprPtr GammaExpr::make_generator(int g) {
    if (g != 0 && g != 1 && g != 2 && g != 3 && g != 5)
        throw std::invalid_argument("invalid generator index");
    auto e = std::make_shared<GammaExpr>();
    e->kind = Kind::Generator;
    e->generator = g;
    return e;
}

ExprPtr GammaExpr::make_identity() {
    auto e = std::make_shared<GammaExpr>();
    e->kind = Kind::Identity;
    return e;
}

ExprPtr GammaExpr::make_imaginary() {
    auto e = std::make_shared<GammaExpr>();
    e->kind = Kind::ImaginaryUnit;
    return e;
}

ExprPtr GammaExpr::make_integer(mpz_class n) {
    // The grammar has no signed literals; negation is a Negate node.
    if (sgn(n) < 0) throw std::invalid_argument("integer literals are non-negative");
    auto e = std::make_shared<GammaExpr>();
    e->kind = Kind::IntegerLiteral;
    e->literal = std::move(n);
    return e;
}

ExprPtr GammaExpr::make_negate(ExprPtr inner) {
    auto e = std::make_shared<GammaExpr>();
    e->kind = Kind::Negate;
    e->args.push_back(std::move(inner));
    return e;
}

ExprPtr GammaExpr::make_product(std::vector<ExprPtr> factors) {
    if (factors.empty()) throw std::invalid_argument("empty product");
    if (factors.size() == 1) return factors.front();
    auto e = std::make_shared<GammaExpr>();
    e->kind = Kind::Product;
    e->args = std::move(factors);
    return e;
}

ExprPtr GammaExpr::make_unary(Kind kind, ExprPtr inner) {
    if (kind != Kind::Star && kind != Kind::Transpose && kind != Kind::Dagger)
        throw std::invalid_argument("make_unary expects star/transpose/dagger");
    auto e = std::make_shared<GammaExpr>();
    e->kind = kind;
    e->args.push_back(std::move(inner));
    return e;
}

namespace {

struct Token {
    enum class Type { End, Star, Minus, LParen, RParen, Identifier, Integer };
    Type type = Type::End;
    std::size_t offset = 0;
    std::string text;
};

bool known_identifier(const std::string& s) {
    return s == "I" || s == "i" || s == "g0" || s == "g1" || s == "g2" || s == "g3" ||
           s == "g5" || s == "star" || s == "transpose" || s == "dagger";
}

class Parser {
public:
    explicit Parser(std::string_view src) : src_(src) { advance(); }

    ExprPtr run() {
        ExprPtr e = parse_expr();
        if (tok_.type != Token::Type::End)
            throw ParseError(ParseError::Kind::syntax, tok_.offset, "syntax error: unexpected token");
        return e;
    }

private:
    void advance() {
        while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
        tok_.offset = pos_;
        tok_.text.clear();
        if (pos_ >= src_.size()) {
            tok_.type = Token::Type::End;
            return;
        }
        char c = src_[pos_];
        switch (c) {
            case '*': tok_.type = Token::Type::Star; ++pos_; return;
            case '-': tok_.type = Token::Type::Minus; ++pos_; return;
            case '(': tok_.type = Token::Type::LParen; ++pos_; return;
            case ')': tok_.type = Token::Type::RParen; ++pos_; return;
            default: break;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_])))
                tok_.text += src_[pos_++];
            tok_.type = Token::Type::Integer;
            return;
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            while (pos_ < src_.size() && std::isalnum(static_cast<unsigned char>(src_[pos_])))
                tok_.text += src_[pos_++];
            if (!known_identifier(tok_.text))
                throw ParseError(ParseError::Kind::lexical, tok_.offset,
                                 "lexical error: unknown token '" + tok_.text + "'");
            tok_.type = Token::Type::Identifier;
            return;
        }
        throw ParseError(ParseError::Kind::lexical, tok_.offset,
                         std::string("lexical error: unexpected character '") + c + "'");
    }

    void expect(Token::Type type, const char* what) {
        if (tok_.type != type)
            throw ParseError(ParseError::Kind::syntax, tok_.offset,
                             std::string("syntax error: expected ") + what);
        advance();
    }

    ExprPtr parse_expr() {
        std::vector<ExprPtr> factors;
        factors.push_back(parse_term());
        while (tok_.type == Token::Type::Star) {
            advance();
            factors.push_back(parse_term());
        }
        return GammaExpr::make_product(std::move(factors));
    }

    ExprPtr parse_term() {
        if (tok_.type == Token::Type::Minus) {
            advance();
            return GammaExpr::make_negate(parse_factor());
        }
        return parse_factor();
    }

    ExprPtr parse_factor() {
        switch (tok_.type) {
            case Token::Type::Integer: {
                mpz_class n(tok_.text);
                advance();
                return GammaExpr::make_integer(std::move(n));
            }
            case Token::Type::LParen: {
                advance();
                ExprPtr e = parse_expr();
                expect(Token::Type::RParen, "')'");
                return e;
            }
            case Token::Type::Identifier: {
                std::string name = tok_.text;
                if (name == "I") {
                    advance();
                    return GammaExpr::make_identity();
                }
                if (name == "i") {
                    advance();
                    return GammaExpr::make_imaginary();
                }
                if (name[0] == 'g') {
                    int g = name[1] - '0';
                    advance();
                    return GammaExpr::make_generator(g);
                }
                // star / transpose / dagger
                advance();
                expect(Token::Type::LParen, "'(' after function name");
                ExprPtr inner = parse_expr();
                expect(Token::Type::RParen, "')'");
                GammaExpr::Kind kind = name == "star"        ? GammaExpr::Kind::Star
                                       : name == "transpose" ? GammaExpr::Kind::Transpose
                                                             : GammaExpr::Kind::Dagger;
                return GammaExpr::make_unary(kind, std::move(inner));
            }
            case Token::Type::End:
                throw ParseError(ParseError::Kind::syntax, tok_.offset,
                                 "syntax error: unexpected end of input");
            default:
                throw ParseError(ParseError::Kind::syntax, tok_.offset,
                                 "syntax error: expected expression");
        }
    }

    std::string_view src_;
    std::size_t pos_ = 0;
    Token tok_;
};

}  // namespace

ExprPtr parse(std::string_view text) { return Parser(text).run(); }

ExactMatrix eval_exact(const GammaExpr& e) {
    const GammaRep& rep = dirac_rep();
    switch (e.kind) {
        case GammaExpr::Kind::Generator:
            return e.generator == 5 ? rep.gamma5 : rep.gamma[e.generator];
        case GammaExpr::Kind::Identity:
            return ExactMatrix::identity(4);
        case GammaExpr::Kind::ImaginaryUnit:
            return ExactComplex::i() * ExactMatrix::identity(4);
        case GammaExpr::Kind::IntegerLiteral:
            return ExactComplex(Rational(e.literal)) * ExactMatrix::identity(4);
        case GammaExpr::Kind::Negate:
            return -eval_exact(*e.args[0]);
        case GammaExpr::Kind::Product: {
            ExactMatrix m = eval_exact(*e.args[0]);
            for (std::size_t k = 1; k < e.args.size(); ++k) m = m * eval_exact(*e.args[k]);
            return m;
        }
        case GammaExpr::Kind::Star:
            return eval_exact(*e.args[0]).conjugate();
        case GammaExpr::Kind::Transpose:
            return eval_exact(*e.args[0]).transpose();
        case GammaExpr::Kind::Dagger:
            return eval_exact(*e.args[0]).adjoint();
    }
    throw std::logic_error("unhandled expression kind");
}

namespace {

std::string mask_label(std::uint8_t mask) {
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

struct Fold {
    ExactComplex coeff;
    std::uint8_t mask = 0;
};

// Signs of entrywise conjugation and transposition of single generators:
// conj flips g2 only, transpose flips g1 and g3.
int conj_sign(std::uint8_t mask) { return (mask & 0x4) ? -1 : 1; }
int transpose_sign_product(std::uint8_t mask) {
    int s = 1;
    if (mask & 0x2) s = -s;
    if (mask & 0x8) s = -s;
    return s;
}

Fold fold_star(Fold f) {
    f.coeff = f.coeff.conj();
    if (conj_sign(f.mask) < 0) f.coeff = -f.coeff;
    return f;
}

Fold fold_transpose(Fold f) {
    // (g_a1 ... g_ak)^T = prod of per-generator signs times the reversed
    // word, which re-sorts with one sign flip per swap.
    std::vector<int> reversed;
    for (int a = 3; a >= 0; --a)
        if (f.mask & (1u << a)) reversed.push_back(a);
    CanonicalMonomial cm = canonical_product(reversed);
    f.coeff = f.coeff * cm.phase.value();
    if (transpose_sign_product(f.mask) < 0) f.coeff = -f.coeff;
    return f;
}

Fold fold(const GammaExpr& e) {
    switch (e.kind) {
        case GammaExpr::Kind::Identity:
            return {ExactComplex(1), 0};
        case GammaExpr::Kind::ImaginaryUnit:
            return {ExactComplex::i(), 0};
        case GammaExpr::Kind::IntegerLiteral:
            return {ExactComplex(Rational(e.literal)), 0};
        case GammaExpr::Kind::Generator:
            if (e.generator == 5) return {-ExactComplex::i(), kFullMask};
            return {ExactComplex(1), static_cast<std::uint8_t>(1u << e.generator)};
        case GammaExpr::Kind::Negate: {
            Fold f = fold(*e.args[0]);
            f.coeff = -f.coeff;
            return f;
        }
        case GammaExpr::Kind::Product: {
            Fold acc = fold(*e.args[0]);
            for (std::size_t k = 1; k < e.args.size(); ++k) {
                Fold rhs = fold(*e.args[k]);
                std::vector<int> word;
                for (int a = 0; a < 4; ++a)
                    if (acc.mask & (1u << a)) word.push_back(a);
                for (int a = 0; a < 4; ++a)
                    if (rhs.mask & (1u << a)) word.push_back(a);
                CanonicalMonomial cm = canonical_product(word);
                acc.coeff = acc.coeff * rhs.coeff * cm.phase.value();
                acc.mask = cm.mask;
            }
            return acc;
        }
        case GammaExpr::Kind::Star:
            return fold_star(fold(*e.args[0]));
        case GammaExpr::Kind::Transpose:
            return fold_transpose(fold(*e.args[0]));
        case GammaExpr::Kind::Dagger:
            return fold_transpose(fold_star(fold(*e.args[0])));
    }
    throw std::logic_error("unhandled expression kind");
}

}  // namespace

std::string CanonicalForm::str() const {
    if (coeff.is_zero()) return "0";
    ExactComplex c = coeff;
    std::string base;
    if (mask == kFullMask) {
        // g0*g1*g2*g3 = i*g5
        c = c * ExactComplex::i();
        base = "g5";
    } else {
        base = mask_label(mask);
    }
    if (c == ExactComplex(1)) return base;
    if (c == ExactComplex(-1)) return "-" + base;
    std::string prefix;
    if (c.is_real()) {
        prefix = c.re().get_str();
    } else if (c.is_imaginary()) {
        Rational ai = abs_rational(c.im());
        if (sgn(c.im()) < 0) prefix = "-";
        if (cmp(ai, Rational(1)) != 0) prefix += ai.get_str() + "*";
        prefix += "i";
    } else {
        prefix = "(" + c.str() + ")";
    }
    return prefix + "*" + base;
}

CanonicalForm canonicalize(const GammaExpr& e) {
    Fold f = fold(e);
    if (f.coeff.is_zero()) f.mask = 0;

    // The symbolic route must agree with plain matrix evaluation.
    ExactMatrix direct = eval_exact(e);
    ExactMatrix reconstructed = f.coeff * basis_matrix(f.mask);
    if (!(direct == reconstructed))
        throw std::logic_error("canonicalize: symbolic and matrix routes disagree");
    return {f.coeff, f.mask};
}

CanonicalForm canonical_form_of(const ExactMatrix& m) {
    if (m.dim() != 4) throw std::invalid_argument("canonical_form_of expects a 4x4 matrix");
    bool all_zero = true;
    for (int r = 0; r < 4 && all_zero; ++r)
        for (int c = 0; c < 4 && all_zero; ++c)
            if (!m.at(r, c).is_zero()) all_zero = false;
    if (all_zero) return {ExactComplex(0), 0};

    for (const CliffordBasisElement& e : basis_table()) {
        // Scale from the first nonzero entry of the candidate, then verify.
        ExactComplex scale;
        bool found = false;
        for (int r = 0; r < 4 && !found; ++r)
            for (int c = 0; c < 4 && !found; ++c)
                if (!e.matrix.at(r, c).is_zero()) {
                    scale = m.at(r, c) / e.matrix.at(r, c);
                    found = true;
                }
        if (scale.is_zero()) continue;
        if (m == scale * e.matrix) return {scale, e.mask};
    }
    throw std::domain_error("not monomial");
}

namespace {

void fmt(const GammaExpr& e, std::string& out);

void fmt_child(const GammaExpr& e, std::string& out) {
    if (e.kind == GammaExpr::Kind::Product || e.kind == GammaExpr::Kind::Negate) {
        out += "(";
        fmt(e, out);
        out += ")";
    } else {
        fmt(e, out);
    }
}

void fmt(const GammaExpr& e, std::string& out) {
    switch (e.kind) {
        case GammaExpr::Kind::Generator:
            out += "g";
            out += static_cast<char>('0' + e.generator);
            return;
        case GammaExpr::Kind::Identity:
            out += "I";
            return;
        case GammaExpr::Kind::ImaginaryUnit:
            out += "i";
            return;
        case GammaExpr::Kind::IntegerLiteral:
            out += e.literal.get_str();
            return;
        case GammaExpr::Kind::Negate:
            out += "-";
            fmt_child(*e.args[0], out);
            return;
        case GammaExpr::Kind::Product:
            for (std::size_t k = 0; k < e.args.size(); ++k) {
                if (k) out += "*";
                fmt_child(*e.args[k], out);
            }
            return;
        case GammaExpr::Kind::Star:
        case GammaExpr::Kind::Transpose:
        case GammaExpr::Kind::Dagger:
            out += e.kind == GammaExpr::Kind::Star        ? "star"
                   : e.kind == GammaExpr::Kind::Transpose ? "transpose"
                                                          : "dagger";
            out += "(";
            fmt(*e.args[0], out);
            out += ")";
            return;
    }
}

}  // namespace

std::string format(const GammaExpr& e) {
    std::string out;
    fmt(e, out);
    return out;
}

bool structurally_equal(const GammaExpr& a, const GammaExpr& b) {
    if (a.kind != b.kind) return false;
    if (a.kind == GammaExpr::Kind::Generator && a.generator != b.generator) return false;
    if (a.kind == GammaExpr::Kind::IntegerLiteral && a.literal != b.literal) return false;
    if (a.args.size() != b.args.size()) return false;
    for (std::size_t k = 0; k < a.args.size(); ++k)
        if (!structurally_equal(*a.args[k], *b.args[k])) return false;
    return true;
}

}  // namespace ptq
