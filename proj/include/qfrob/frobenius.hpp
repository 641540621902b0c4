#ifndef QFROB_FROBENIUS_HPP
#define QFROB_FROBENIUS_HPP

// Monoids in Hilb and their dagger-Frobenius theory: classification
// predicates, the canonical left/right involutions, dimension scalars,
// right actions, and a genus-graded surface invariant.

#include <string>
#include <vector>

#include "qfrob/linalg.hpp"

namespace qfrob {

// A monoid (A, m, u). The object may be a composite word (the endomorphism
// monoids live on A^* (x) A); dim() is its total dimension.
struct Monoid {
    WireWord object;
    Morphism mult;  // A (x) A -> A
    Morphism unit;  // I -> A

    Monoid() = default;
    Monoid(WireWord obj, Morphism m, Morphism u);

    Eigen::Index dim() const { return object.total(); }
};

// The basis ("copying") monoid on C^n: m(e_i (x) e_j) = delta_ij e_i,
// u = sum_i e_i. This is the free classical structure on an n-element set.
Monoid basis_monoid(int n);

// Block direct sum of two monoids on single-factor objects.
Monoid direct_sum(const Monoid& a, const Monoid& b);

// Reinterpret a monoid on a composite object as one on the flattened
// single-factor object of the same total dimension.
Monoid flatten(const Monoid& m);

struct PropertyReport {
    struct Item {
        bool ok = false;
        double deviation = 0.0;
    };
    Item associative;
    Item unital;
    Item frobenius;
    Item special;
    Item commutative;
    Item balanced_symmetric;
    Item unitary;

    bool dagger_frobenius() const {
        return associative.ok && unital.ok && frobenius.ok;
    }
};

// Evaluates all seven predicates numerically. The unitarity check is run via
// s_L even when the Frobenius equations fail; the report just records the
// numeric outcome.
PropertyReport classify(const Monoid& m, const Tolerance& tol = {});

// Canonical involutions A -> A^* of a dagger-Frobenius monoid:
//   s_L = ((u^dag m) (x) id_{A^*}) (id_A (x) eps_{A^*})
//   s_R = (id_{A^*} (x) (u^dag m)) (eps_A (x) id_A)
Morphism left_involution(const Monoid& m);
Morphism right_involution(const Monoid& m);

struct DimensionReport {
    Complex dim;          // eps^dag eps, always the total dimension
    Complex handle_norm;  // u^dag m m^dag u (= dim when the monoid is unitary)
    Complex unit_norm;    // u^dag u (= dim when special unitary)
};

DimensionReport dimension(const Monoid& m);

// R_alpha = m (id (x) alpha): the right action of a state on the algebra.
Morphism right_action(const Monoid& m, const Morphism& alpha);

// alpha' = (id (x) alpha^dag) m^dag u; for dagger-Frobenius monoids
// R_{alpha'} = R_alpha^dag and the operation is an involution.
Morphism star_element(const Monoid& m, const Morphism& alpha);

// Z_g = u^dag m H^g m^dag u with handle H = m m^dag.
// Throws NotFrobenius when the monoid fails the dagger-Frobenius equations.
Complex genus_invariant(const Monoid& m, int genus, const Tolerance& tol = {});

}  // namespace qfrob

#endif
