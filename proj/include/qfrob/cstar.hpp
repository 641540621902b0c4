#ifndef QFROB_CSTAR_HPP
#define QFROB_CSTAR_HPP

// The constructive C*-correspondence: from a basis-free *-algebra, build the
// canonical inner product (the regular trace form), transport to a special
// unitary dagger-Frobenius involution monoid, decompose into matrix blocks,
// and rescale inner products.

#include <cstdint>
#include <vector>

#include "qfrob/involution.hpp"

namespace qfrob {

// A finite-dimensional *-algebra presented by structure constants:
// e_i . e_j = sum_k c[i][j][k] e_k, a unit coordinate vector, and the matrix
// S of the antilinear involution t(v) = S conj(v).
struct StarAlgebra {
    int dim = 0;
    // left_mult[i](k, j) = c[i][j][k], i.e. the matrix of left
    // multiplication by the basis element e_i.
    std::vector<Matrix> left_mult;
    Vector unit;
    Matrix star;

    Complex c(int i, int j, int k) const { return left_mult[static_cast<std::size_t>(i)](k, j); }

    Matrix left_mult_by(const Vector& x) const;
    Matrix right_mult_by(const Vector& x) const;
    Vector product(const Vector& a, const Vector& b) const;
    Vector star_of(const Vector& a) const { return star * a.conjugate(); }
};

// Builders for the standard examples.
// Group algebra C[G] from a multiplication table (mult[g][h] = gh) with
// g* = g^{-1}; the unit is the group identity (mult[e][h] = h for all h).
StarAlgebra group_algebra(const std::vector<std::vector<int>>& mult);
StarAlgebra cyclic_group_algebra(int n);
StarAlgebra symmetric_group_algebra_s3();
// Mat(n) in the matrix-unit basis e_(i,j), involution = conjugate transpose.
StarAlgebra matrix_star_algebra(int n);
StarAlgebra direct_sum(const StarAlgebra& a, const StarAlgebra& b);
// C[x]/x^2 with x* = x: the standard non-semisimple counterexample.
StarAlgebra nilpotent_star_algebra();

// Conjugate the basis by an invertible map T (new basis f_j = sum_i T(i,j) e_i),
// transporting multiplication, unit and involution.
StarAlgebra change_basis(const StarAlgebra& a, const Matrix& T);

CheckReport validate_algebra(const StarAlgebra& a, const Tolerance& tol = {});

struct GramForm {
    Matrix G;  // Hermitian; positive-definite iff the algebra is C*-able
};

// G(a, b) = trace of left multiplication by t(a).b; reproduces the
// blockwise n.Tr(a^dag b) normalization without needing a decomposition
// first. Throws InvalidAlgebra when the *-algebra invariants fail.
GramForm regular_trace_gram(const StarAlgebra& a, const Tolerance& tol = {});

// Transport the algebra onto C^n with the standard inner product via the
// Hermitian square root of the Gram form. The result classifies as a special
// unitary dagger-Frobenius involution monoid. Throws NotCStar when the Gram
// form is not positive-definite (min eigenvalue <= 1e-8 * max eigenvalue).
InvolutionMonoid realize(const StarAlgebra& a, const Tolerance& tol = {});

// Express a monoid in the orthonormal coordinates of the inner product
// scaled by alpha > 0: m -> m / sqrt(alpha), u -> sqrt(alpha) u.
Monoid rescale(const Monoid& m, double alpha);

struct WedderburnDecomposition {
    std::vector<Vector> central_idempotents;
    std::vector<int> block_dims;  // sorted descending; sum of squares = dim
};

// Split a special unitary dagger-Frobenius involution monoid into its matrix
// blocks: compute the center as the nullspace of the commutator system, then
// split it along the eigenspaces of a random self-adjoint central element.
// Retries with fresh seeds (budget 8) when eigenvalue gaps fall below 1e-6;
// throws DegenerateSplit when the budget is exhausted.
WedderburnDecomposition wedderburn(const InvolutionMonoid& im,
                                   const Tolerance& tol = {},
                                   std::uint64_t seed = 0);

// Nullspace of a complex matrix by Gaussian column reduction with the given
// pivot threshold; returns an orthonormal basis of the kernel.
std::vector<Vector> nullspace(const Matrix& m, double pivot_threshold = 1e-10);

}  // namespace qfrob

#endif
