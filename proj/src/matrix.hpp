#pragma once

#include "exact.hpp"

#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

namespace ptq {

using CFloat = std::complex<double>;

inline ExactComplex scalar_conj(const ExactComplex& x) { return x.conj(); }
inline CFloat scalar_conj(const CFloat& x) { return std::conj(x); }

enum class StarKind { conjugate, transpose, adjoint };

// Square matrix of fixed dimension 2 or 4. Immutable in spirit: every
// operation returns a fresh value. The exact instantiation never rounds.
template <typename Scalar>
class Mat {
public:
    explicit Mat(int dim) : dim_(check_dim(dim)), e_(static_cast<size_t>(dim) * dim) {}

    static Mat identity(int dim) {
        Mat m(dim);
        for (int k = 0; k < dim; ++k) m.at(k, k) = Scalar(1);
        return m;
    }

    int dim() const { return dim_; }

    Scalar& at(int r, int c) { return e_[static_cast<size_t>(r) * dim_ + c]; }
    const Scalar& at(int r, int c) const { return e_[static_cast<size_t>(r) * dim_ + c]; }

    Mat operator+(const Mat& o) const {
        require_same_dim(o);
        Mat out(dim_);
        for (size_t k = 0; k < e_.size(); ++k) out.e_[k] = e_[k] + o.e_[k];
        return out;
    }

    Mat operator-(const Mat& o) const {
        require_same_dim(o);
        Mat out(dim_);
        for (size_t k = 0; k < e_.size(); ++k) out.e_[k] = e_[k] - o.e_[k];
        return out;
    }

    Mat operator-() const {
        Mat out(dim_);
        for (size_t k = 0; k < e_.size(); ++k) out.e_[k] = -e_[k];
        return out;
    }

    Mat operator*(const Mat& o) const {
        require_same_dim(o);
        Mat out(dim_);
        for (int r = 0; r < dim_; ++r)
            for (int c = 0; c < dim_; ++c) {
                Scalar acc(0);
                for (int k = 0; k < dim_; ++k) acc += at(r, k) * o.at(k, c);
                out.at(r, c) = acc;
            }
        return out;
    }

    friend Mat operator*(const Scalar& s, const Mat& m) {
        Mat out(m.dim_);
        for (size_t k = 0; k < m.e_.size(); ++k) out.e_[k] = s * m.e_[k];
        return out;
    }

    Mat conjugate() const {
        Mat out(dim_);
        for (size_t k = 0; k < e_.size(); ++k) out.e_[k] = scalar_conj(e_[k]);
        return out;
    }

    Mat transpose() const {
        Mat out(dim_);
        for (int r = 0; r < dim_; ++r)
            for (int c = 0; c < dim_; ++c) out.at(c, r) = at(r, c);
        return out;
    }

    Mat adjoint() const { return conjugate().transpose(); }

    Mat star_family(StarKind kind) const {
        switch (kind) {
            case StarKind::conjugate: return conjugate();
            case StarKind::transpose: return transpose();
            case StarKind::adjoint: return adjoint();
        }
        throw std::invalid_argument("unknown star kind");
    }

    friend bool operator==(const Mat& a, const Mat& b) {
        return a.dim_ == b.dim_ && a.e_ == b.e_;
    }
    friend bool operator!=(const Mat& a, const Mat& b) { return !(a == b); }

private:
    static int check_dim(int dim) {
        if (dim != 2 && dim != 4) throw std::invalid_argument("matrix dimension must be 2 or 4");
        return dim;
    }
    void require_same_dim(const Mat& o) const {
        if (dim_ != o.dim_) throw std::invalid_argument("matrix dimension mismatch");
    }

    int dim_;
    std::vector<Scalar> e_;
};

using ExactMatrix = Mat<ExactComplex>;
using FloatMatrix = Mat<CFloat>;

// Exact inverse by Gaussian elimination. Throws std::domain_error when
// the matrix is singular over the Gaussian rationals.
ExactMatrix inverse(const ExactMatrix& a);

FloatMatrix to_float(const ExactMatrix& a);

double max_abs_diff(const FloatMatrix& a, const FloatMatrix& b);

// max over entries of max(|Re|, |Im|) of a - b; exact, zero iff a == b.
Rational exact_max_dev(const ExactMatrix& a, const ExactMatrix& b);

std::string matrix_str(const ExactMatrix& a);

}  // namespace ptq
