#include "agc/hermite.hpp"

#include <stdexcept>

#include "agc/errors.hpp"

namespace agc {

HermiteReduction hermite_row_form(const PolyMatrix& R) {
    HermiteReduction out;
    out.H = R;
    out.U = PolyMatrix::identity(R.rows());
    PolyMatrix& H = out.H;
    PolyMatrix& U = out.U;

    int r = 0; // next pivot row
    for (int j = 0; j < R.cols() && r < R.rows(); ++j) {
        // Euclid on column j over rows >= r: keep dividing by the
        // minimal-degree entry until a single nonzero entry remains.
        for (;;) {
            int best = -1;
            for (int i = r; i < R.rows(); ++i) {
                if (H.at(i, j).is_zero()) continue;
                if (best < 0 || *H.at(i, j).degree() < *H.at(best, j).degree()) best = i;
            }
            if (best < 0) break; // column has no pivot
            if (best != r) {
                H.swap_rows(r, best);
                U.swap_rows(r, best);
            }
            bool eliminated_all = true;
            for (int i = r + 1; i < R.rows(); ++i) {
                if (H.at(i, j).is_zero()) continue;
                Poly q = poly_divmod(H.at(i, j), H.at(r, j)).first;
                H.add_scaled_row(i, r, -q);
                U.add_scaled_row(i, r, -q);
                if (!H.at(i, j).is_zero()) eliminated_all = false;
            }
            if (eliminated_all) break;
        }
        if (H.at(r, j).is_zero()) continue;

        // Normalize the pivot to monic, then reduce entries above it.
        Rational inv_lead = Rational(1) / H.at(r, j).leading_coeff();
        if (inv_lead != 1) {
            H.scale_row(r, inv_lead);
            U.scale_row(r, inv_lead);
        }
        for (int i = 0; i < r; ++i) {
            if (H.at(i, j).is_zero()) continue;
            Poly q = poly_divmod(H.at(i, j), H.at(r, j)).first;
            H.add_scaled_row(i, r, -q);
            U.add_scaled_row(i, r, -q);
        }
        out.pivot_cols.push_back(j);
        ++r;
    }
    out.rank = r;

    if (U * R != H) throw std::logic_error("Hermite reduction failed re-multiplication check");
    return out;
}

std::optional<PolyMatrix> solve_left(const PolyMatrix& R, const PolyMatrix& S) {
    if (R.cols() != S.cols()) throw DimensionError("solve_left column mismatch");

    const HermiteReduction red = hermite_row_form(R);
    PolyMatrix X(S.rows(), R.rows());
    for (int sr = 0; sr < S.rows(); ++sr) {
        // Peel off pivots left to right: below pivot t the pivot column is
        // zero, so the residual at that column determines coefficient t and
        // must divide exactly.
        std::vector<Poly> residual(static_cast<std::size_t>(S.cols()));
        for (int j = 0; j < S.cols(); ++j) residual[static_cast<std::size_t>(j)] = S.at(sr, j);
        std::vector<Poly> y(static_cast<std::size_t>(red.rank));
        for (int t = 0; t < red.rank; ++t) {
            const int j = red.pivot_cols[static_cast<std::size_t>(t)];
            if (residual[static_cast<std::size_t>(j)].is_zero()) continue;
            auto [q, rem] = poly_divmod(residual[static_cast<std::size_t>(j)], red.H.at(t, j));
            if (!rem.is_zero()) return std::nullopt;
            y[static_cast<std::size_t>(t)] = q;
            for (int c = 0; c < S.cols(); ++c) residual[static_cast<std::size_t>(c)] -= q * red.H.at(t, c);
        }
        for (const Poly& p : residual)
            if (!p.is_zero()) return std::nullopt;
        // X row = y extended by zeros, pushed back through U.
        for (int c = 0; c < R.rows(); ++c) {
            Poly acc;
            for (int t = 0; t < red.rank; ++t) acc += y[static_cast<std::size_t>(t)] * red.U.at(t, c);
            X.at(sr, c) = std::move(acc);
        }
    }

    if (X * R != S) throw std::logic_error("solve_left witness failed re-multiplication check");
    return X;
}

} // namespace agc
