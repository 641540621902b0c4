#ifndef QFROB_GROUPOID_HPP
#define QFROB_GROUPOID_HPP

// Finite groupoids by explicit composition table, their unitary
// representations, equivariant classical structures, and the extraction /
// linearization equivalence with finite G-sets.

#include <cstdint>
#include <vector>

#include "qfrob/involution.hpp"
#include "qfrob/spectral.hpp"

namespace qfrob {

struct GroupoidMorphism {
    int src = 0;
    int tgt = 0;
};

// compose[g][h] = g o h (h first), defined (>= 0) iff src(g) = tgt(h).
struct Groupoid {
    int num_objects = 0;
    std::vector<GroupoidMorphism> morphisms;
    std::vector<std::vector<int>> compose;  // -1 where undefined
    std::vector<int> identity;              // per object
    std::vector<int> inverse;               // per morphism

    int size() const { return static_cast<int>(morphisms.size()); }
    // Identity, inverse, associativity and match-of-endpoints laws.
    CheckReport validate() const;
};

// One-object groupoid from a group multiplication table (mult[g][h] = gh).
Groupoid group_groupoid(const std::vector<std::vector<int>>& mult);
Groupoid cyclic_groupoid(int n);
// Two objects, one connecting isomorphism and its inverse.
Groupoid two_object_iso_groupoid();

struct UnitaryRep {
    std::vector<int> dims;          // per object
    std::vector<Morphism> maps;     // per morphism, dims[src] -> dims[tgt]
};

struct EquivariantClassicalStructure {
    std::vector<Monoid> monoids;  // per object, on the rep's space
};

struct GSet {
    std::vector<int> sizes;                // per object
    std::vector<std::vector<int>> perms;   // per morphism; perms[g][i] = image

    bool valid(const Groupoid& g) const;
};

// Unitarity, functoriality on every defined composite, identities, and the
// dagger condition A(g^{-1}) = A(g)^dag.
CheckReport validate_rep(const Groupoid& g, const UnitaryRep& r,
                         const Tolerance& tol = {});

// Per-object commutative dagger-Frobenius classification plus the
// intertwiner square (each A(g) is a monoid homomorphism).
CheckReport check_classical_structure(const Groupoid& g, const UnitaryRep& r,
                                      const EquivariantClassicalStructure& c,
                                      const Tolerance& tol = {});

// Per-object set = spectrum points; per-morphism permutation pi with
// A(g) p_i within 1e-6 of q_{pi(i)}, assignment injective, functorial.
// Throws NotPermutation when any of those fail.
GSet extract_gset(const Groupoid& g, const UnitaryRep& r,
                  const EquivariantClassicalStructure& c, const Tolerance& tol = {},
                  std::uint64_t seed = 0);

// Free monoid per object, permutation matrix per morphism;
// extract_gset(linearize_gset(x)) returns x (the free spectrum order is the
// natural basis order).
std::pair<UnitaryRep, EquivariantClassicalStructure> linearize_gset(const Groupoid& g,
                                                                    const GSet& x);

}  // namespace qfrob

#endif
