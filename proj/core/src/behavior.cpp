#include "agc/behavior.hpp"

#include <stdexcept>

#include "agc/errors.hpp"

namespace agc {

KernelRep::KernelRep(PolyMatrix R, int n_outputs, int n_inputs)
    : R_(std::move(R)), n_outputs_(n_outputs), n_inputs_(n_inputs) {
    if (n_outputs < 0 || n_inputs < 0) throw DimensionError("negative variable count");
    if (R_.cols() != n_outputs + n_inputs)
        throw DimensionError("kernel representation columns do not match the variable partition");
}

KernelRep KernelRep::over_inputs(PolyMatrix A) {
    const int m = A.cols();
    return KernelRep(std::move(A), 0, m);
}

KernelRep KernelRep::unconstrained(int n_outputs, int n_inputs) {
    return KernelRep(PolyMatrix(0, n_outputs + n_inputs), n_outputs, n_inputs);
}

LatentRep::LatentRep(PolyMatrix R_w, PolyMatrix R_l, int n_outputs, int n_inputs)
    : R_w_(std::move(R_w)), R_l_(std::move(R_l)), n_outputs_(n_outputs), n_inputs_(n_inputs) {
    if (R_w_.rows() != R_l_.rows()) throw DimensionError("latent representation row mismatch");
    if (R_w_.cols() != n_outputs + n_inputs)
        throw DimensionError("latent representation columns do not match the variable partition");
}

InclusionCertificate InclusionCertificate::checked(PolyMatrix M, const PolyMatrix& R_inner,
                                                   const PolyMatrix& R_outer) {
    if (M * R_inner != R_outer)
        throw std::logic_error("inclusion certificate failed re-multiplication check");
    return InclusionCertificate{std::move(M)};
}

std::optional<InclusionCertificate> includes(const KernelRep& B1, const KernelRep& B2) {
    if (!B1.same_partition(B2)) throw DimensionError("inclusion across different variable partitions");
    auto M = solve_left(B1.R(), B2.R());
    if (!M) return std::nullopt;
    return InclusionCertificate::checked(std::move(*M), B1.R(), B2.R());
}

bool behaviour_equal(const KernelRep& B1, const KernelRep& B2) {
    return includes(B1, B2).has_value() && includes(B2, B1).has_value();
}

KernelRep eliminate_latent(const LatentRep& L) {
    const HermiteReduction red = hermite_row_form(L.R_l());
    PolyMatrix transformed = red.U * L.R_w();
    return KernelRep(transformed.row_range(red.rank, transformed.rows()), L.n_outputs(),
                     L.n_inputs());
}

KernelRep project_input(const PolyMatrix& G, const PolyMatrix& H) {
    if (G.rows() != H.rows()) throw DimensionError("guarantee blocks must have equal row counts");
    const HermiteReduction red = hermite_row_form(G);
    PolyMatrix transformed = red.U * H;
    return KernelRep::over_inputs(transformed.row_range(red.rank, transformed.rows()));
}

KernelRep stack(const KernelRep& B1, const KernelRep& B2) {
    if (!B1.same_partition(B2)) throw DimensionError("stack across different variable partitions");
    return KernelRep(vstack(B1.R(), B2.R()), B1.n_outputs(), B1.n_inputs());
}

KernelRep canonical_kernel(const KernelRep& B) {
    const HermiteReduction red = hermite_row_form(B.R());
    return KernelRep(red.H.row_range(0, red.rank), B.n_outputs(), B.n_inputs());
}

KernelRep join_inputs(const KernelRep& A1, const KernelRep& A2) {
    if (A1.n_outputs() != 0 || A2.n_outputs() != 0)
        throw DimensionError("join is defined for pure input behaviours");
    if (A1.n_inputs() != A2.n_inputs()) throw DimensionError("join input dimension mismatch");
    const int m = A1.n_inputs();
    const PolyMatrix I = PolyMatrix::identity(m);

    // [I; 0; 0] u = [I I; A1 0; 0 A2] (l1; l2)
    PolyMatrix r_w = vstack(I, PolyMatrix(A1.R().rows() + A2.R().rows(), m));
    PolyMatrix r_l = vstack(hstack(I, I),
                            vstack(hstack(A1.R(), PolyMatrix(A1.R().rows(), m)),
                                   hstack(PolyMatrix(A2.R().rows(), m), A2.R())));
    KernelRep joined = eliminate_latent(LatentRep(std::move(r_w), std::move(r_l), 0, m));
    return canonical_kernel(joined);
}

bool is_io_form(const IoSystem& S) {
    if (S.P.rows() != S.P.cols()) throw DimensionError("P must be square");
    if (S.P.rows() != S.Q.rows()) throw DimensionError("P and Q must have equal row counts");
    if (det(S.P).is_zero()) return false;
    return rational_properness(S.P, S.Q);
}

KernelRep io_kernel(const IoSystem& S) {
    return KernelRep(hstack(S.P, -S.Q), S.P.rows(), S.Q.cols());
}

std::vector<Poly> apply_operator(const PolyMatrix& R, const std::vector<Poly>& w) {
    if (static_cast<int>(w.size()) != R.cols())
        throw DimensionError("trajectory length does not match operator width");
    std::vector<Poly> out(static_cast<std::size_t>(R.rows()));
    for (int i = 0; i < R.rows(); ++i) {
        Poly acc;
        for (int j = 0; j < R.cols(); ++j) {
            const Poly& entry = R.at(i, j);
            if (entry.is_zero()) continue;
            Poly dk = w[static_cast<std::size_t>(j)]; // k-th derivative of w_j, k ascending
            for (int k = 0; k <= *entry.degree(); ++k) {
                if (entry.coeff(k) != 0) acc += dk * entry.coeff(k);
                dk = dk.derivative();
            }
        }
        out[static_cast<std::size_t>(i)] = std::move(acc);
    }
    return out;
}

std::vector<Poly> poly_trajectory_residual(const KernelRep& B, const std::vector<Poly>& w) {
    return apply_operator(B.R(), w);
}

} // namespace agc
