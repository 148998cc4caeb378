#pragma once

#include <optional>
#include <vector>

#include "agc/hermite.hpp"
#include "agc/poly_matrix.hpp"

namespace agc {

/// Behaviour given as the kernel of a polynomial differential operator:
/// all smooth w with R(d/dt) w = 0, where w stacks outputs above inputs,
/// w = [y; u]. A representation with zero rows places no constraint and
/// denotes the full space. Immutable after construction.
class KernelRep {
  public:
    KernelRep(PolyMatrix R, int n_outputs, int n_inputs);

    /// Pure input behaviour { u : A(d/dt) u = 0 }.
    static KernelRep over_inputs(PolyMatrix A);
    /// The whole space, as a zero-row representation.
    static KernelRep unconstrained(int n_outputs, int n_inputs);

    const PolyMatrix& R() const { return R_; }
    int n_outputs() const { return n_outputs_; }
    int n_inputs() const { return n_inputs_; }
    bool same_partition(const KernelRep& other) const {
        return n_outputs_ == other.n_outputs_ && n_inputs_ == other.n_inputs_;
    }

  private:
    PolyMatrix R_;
    int n_outputs_, n_inputs_;
};

/// System in the form P(d/dt) y = Q(d/dt) u. Input-output form additionally
/// requires det(P) != 0 and P^{-1} Q proper; see is_io_form.
struct IoSystem {
    PolyMatrix P; // p x p
    PolyMatrix Q; // p x m
};

/// Behaviour with an auxiliary latent variable l:
/// { w : exists smooth l with R_w(d/dt) w = R_l(d/dt) l }.
class LatentRep {
  public:
    LatentRep(PolyMatrix R_w, PolyMatrix R_l, int n_outputs, int n_inputs);

    const PolyMatrix& R_w() const { return R_w_; }
    const PolyMatrix& R_l() const { return R_l_; }
    int n_outputs() const { return n_outputs_; }
    int n_inputs() const { return n_inputs_; }

  private:
    PolyMatrix R_w_, R_l_;
    int n_outputs_, n_inputs_;
};

/// Witness that one behaviour contains another: M * R_inner = R_outer.
/// Construct through `checked`, which re-verifies the identity.
struct InclusionCertificate {
    PolyMatrix M;

    static InclusionCertificate checked(PolyMatrix M, const PolyMatrix& R_inner,
                                        const PolyMatrix& R_outer);
};

/// Decides B1 ⊆ B2. Returns the certificate M with M * R1 = R2 when the
/// inclusion holds, nullopt when it does not.
std::optional<InclusionCertificate> includes(const KernelRep& B1, const KernelRep& B2);

/// Equality by mutual inclusion.
bool behaviour_equal(const KernelRep& B1, const KernelRep& B2);

/// Projects the latent behaviour onto its manifest variables: row-reduce
/// R_l, and the rows of the transformed R_w facing the zero block of the
/// reduced R_l constrain w alone.
KernelRep eliminate_latent(const LatentRep& L);

/// Input behaviour of guarantees G(d/dt) y = H(d/dt) u: row-compress G to
/// [G'; 0] and return the rows of the transformed H facing the zero block,
/// a pure input representation. Full row rank G leaves u unconstrained.
KernelRep project_input(const PolyMatrix& G, const PolyMatrix& H);

/// Intersection of behaviours: rows of B1 over rows of B2.
KernelRep stack(const KernelRep& B1, const KernelRep& B2);

/// Sum of two pure input behaviours, built from the latent representation
///   [I; 0; 0] u = [I I; A1 0; 0 A2] (l1; l2)
/// and eliminated. The result is canonicalized to the Hermite basis of its
/// row module, so equal joins produce identical matrices.
KernelRep join_inputs(const KernelRep& A1, const KernelRep& A2);

/// Canonical representation of the same behaviour: the nonzero rows of the
/// Hermite row form of R.
KernelRep canonical_kernel(const KernelRep& B);

/// det(P) != 0 and P^{-1} Q proper.
bool is_io_form(const IoSystem& S);

/// Kernel representation [P  -Q] of an input-output system over w = [y; u].
KernelRep io_kernel(const IoSystem& S);

/// Applies R(d/dt) symbolically to a polynomial trajectory w(t). The result
/// is the zero vector exactly when w lies in the behaviour (within the class
/// of polynomial trajectories).
std::vector<Poly> poly_trajectory_residual(const KernelRep& B, const std::vector<Poly>& w);

/// R(d/dt) applied to polynomial trajectories, one output per matrix row.
std::vector<Poly> apply_operator(const PolyMatrix& R, const std::vector<Poly>& w);

} // namespace agc
