#include "matrix.hpp"

#include <cmath>
#include <cstdlib>

namespace ptq {

ExactMatrix inverse(const ExactMatrix& a) {
    const int n = a.dim();
    ExactMatrix work = a;
    ExactMatrix inv = ExactMatrix::identity(n);

    for (int col = 0; col < n; ++col) {
        int pivot = -1;
        for (int r = col; r < n; ++r) {
            if (!work.at(r, col).is_zero()) {
                pivot = r;
                break;
            }
        }
        if (pivot < 0) throw std::domain_error("singular matrix");
        if (pivot != col) {
            for (int c = 0; c < n; ++c) {
                std::swap(work.at(pivot, c), work.at(col, c));
                std::swap(inv.at(pivot, c), inv.at(col, c));
            }
        }
        ExactComplex d = work.at(col, col);
        for (int c = 0; c < n; ++c) {
            work.at(col, c) = work.at(col, c) / d;
            inv.at(col, c) = inv.at(col, c) / d;
        }
        for (int r = 0; r < n; ++r) {
            if (r == col) continue;
            ExactComplex f = work.at(r, col);
            if (f.is_zero()) continue;
            for (int c = 0; c < n; ++c) {
                work.at(r, c) -= f * work.at(col, c);
                inv.at(r, c) -= f * inv.at(col, c);
            }
        }
    }
    return inv;
}

FloatMatrix to_float(const ExactMatrix& a) {
    FloatMatrix out(a.dim());
    for (int r = 0; r < a.dim(); ++r)
        for (int c = 0; c < a.dim(); ++c) out.at(r, c) = a.at(r, c).to_cfloat();
    return out;
}

double max_abs_diff(const FloatMatrix& a, const FloatMatrix& b) {
    if (a.dim() != b.dim()) throw std::invalid_argument("matrix dimension mismatch");
    double worst = 0.0;
    for (int r = 0; r < a.dim(); ++r)
        for (int c = 0; c < a.dim(); ++c) worst = std::max(worst, std::abs(a.at(r, c) - b.at(r, c)));
    return worst;
}

Rational exact_max_dev(const ExactMatrix& a, const ExactMatrix& b) {
    if (a.dim() != b.dim()) throw std::invalid_argument("matrix dimension mismatch");
    Rational worst(0);
    for (int r = 0; r < a.dim(); ++r)
        for (int c = 0; c < a.dim(); ++c) {
            Rational d = (a.at(r, c) - b.at(r, c)).linf();
            if (cmp(d, worst) > 0) worst = d;
        }
    return worst;
}

std::string matrix_str(const ExactMatrix& a) {
    std::string out;
    for (int r = 0; r < a.dim(); ++r) {
        out += "[";
        for (int c = 0; c < a.dim(); ++c) {
            if (c) out += ", ";
            out += a.at(r, c).str();
        }
        out += "]\n";
    }
    return out;
}

}  // namespace ptq
