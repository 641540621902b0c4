#ifndef QFROB_ENDO_HPP
#define QFROB_ENDO_HPP

// Endomorphism monoids End(A), the canonical monic involution-preserving
// embedding of any monoid into its endomorphism monoid, and the C*-norm
// induced through that embedding.

#include "qfrob/involution.hpp"

namespace qfrob {

// End(C^n) = (A^* (x) A, id (x) eta (x) id, eps). Dagger-Frobenius and
// unitary for every n; special only for n = 1.
Monoid end_monoid(int n);

// Name/vectorization convention: the state name(X) of [n*, n] has component
// X(i, j) at flattened index (i, j), so that the End multiplication realizes
// the matrix product X.Y.
Morphism name_of(const Matrix& x);
Matrix unname(const Morphism& state);

// h = (id_{A^*} (x) m)(eps_A (x) id_A) : A -> A^* (x) A. A monoid
// homomorphism with retraction (u^* (x) id) h = id, hence monic; preserves
// the involution when the source carries its right involution.
Morphism embed(const Monoid& m);

// The C*-norm of a state: operator norm of its embedded image viewed as a
// matrix. Throws NotFrobenius / InvalidInvolution if the input monoid fails
// its prerequisites.
double cstar_norm(const InvolutionMonoid& im, const Morphism& alpha,
                  const Tolerance& tol = {});

}  // namespace qfrob

#endif
