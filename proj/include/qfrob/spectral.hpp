#ifndef QFROB_SPECTRAL_HPP
#define QFROB_SPECTRAL_HPP

// Classical structures and the two spectral theorems: the spectrum of a
// commutative dagger-Frobenius monoid (contravariant equivalence with finite
// sets) and internal diagonalization of normal operators.

#include <cstdint>
#include <vector>

#include "qfrob/frobenius.hpp"

namespace qfrob {

// The spectrum of a commutative dagger-Frobenius monoid: its minimal
// idempotents p_i (m(p_i (x) p_j) = delta_ij p_i, sum p_i = u; copyable and
// orthonormal when the monoid is special) together with the characters
// chi_i (algebra homomorphisms to C, chi_i(p_j) = delta_ij) stored as
// coefficient vectors: chi_i(x) = characters[i]^T x.
struct Spectrum {
    std::vector<Vector> points;
    std::vector<Vector> characters;

    Complex evaluate(std::size_t i, const Vector& x) const {
        return (characters[i].transpose() * x)(0);
    }
};

// A total function between finite sets.
struct FinSetMap {
    int source = 0;
    int target = 0;
    std::vector<int> table;  // table[x] in [0, target)

    static FinSetMap identity(int n);
    bool valid() const;
};

// Split the unit across the eigenspaces of left multiplication by a random
// element; all blocks of a commutative monoid are one-dimensional, so the
// spectrum has exactly dim points. Points are ordered by descending
// (real, imaginary) part of chi_i applied to the fixed probe element
// (n, n-1, ..., 1); on a basis monoid this is the natural basis order.
// Retries with fresh seeds (budget 8) on eigenvalue collisions.
Spectrum spectrum(const Monoid& m, const Tolerance& tol = {}, std::uint64_t seed = 0);

// The free classical structure on a k-element set: the basis monoid.
Monoid free_monoid(int k);

// free_map(f) = (delta_f)^dag where delta_f is the 0/1 matrix of f; an
// involution-preserving monoid homomorphism free(T) -> free(S) for f: S -> T.
Morphism free_map(const FinSetMap& f);

// The function on spectra induced by an involution-preserving monoid
// homomorphism h: B -> A (contravariant): result(i) is the unique j with
// chi_i^A after h = chi_j^B. Throws NotHomomorphism when the homomorphism
// equations fail or when a composed character matches no point of B.
FinSetMap transport_function(const Morphism& h, const Monoid& a, const Monoid& b,
                             const Tolerance& tol = {}, std::uint64_t seed = 0);

// The three equal composites m(f (x) id) = f m = m(id (x) f).
bool is_compatible(const Morphism& f, const Monoid& m, const Tolerance& tol = {});

struct InternalDiagonalization {
    Monoid monoid;    // copies an orthonormal eigenbasis of f
    Morphism phi;     // phi_f = f u, so that m(phi (x) id) = f
};

// Internally diagonalize a normal endomorphism: the monoid copying an
// orthonormal eigenbasis (a_i) of f, with unit sum a_i. Classifies special
// commutative dagger-Frobenius and is compatible with f. The eigenbasis is
// not canonical for degenerate f; we fix the one produced by eig_normal.
// Throws NotNormal for non-normal input.
InternalDiagonalization internal_diagonalize(const Morphism& f,
                                             const Tolerance& tol = {});

}  // namespace qfrob

#endif
