#pragma once

#include "discrete_ops.hpp"
#include "matrix.hpp"
#include "polynomial.hpp"
#include "rng.hpp"

#include <vector>

namespace ptq::testutil {

inline ExactMatrix random_exact_matrix(Rng& rng, int dim) {
    ExactMatrix m(dim);
    for (int r = 0; r < dim; ++r)
        for (int c = 0; c < dim; ++c) m.at(r, c) = ExactComplex(rng.dyadic(3), rng.dyadic(3));
    return m;
}

inline PolySpinor random_poly_spinor(Rng& rng) {
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

inline std::vector<SamplePoint> random_sample_points(Rng& rng, int n) {
    std::vector<SamplePoint> pts;
    for (int k = 0; k < n; ++k)
        pts.push_back({rng.dyadic(4), rng.dyadic(4), rng.dyadic(4), rng.dyadic(4),
                       rng.nonzero_dyadic(4)});
    return pts;
}

}  // namespace ptq::testutil
