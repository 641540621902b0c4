#ifndef QFROB_INVOLUTION_HPP
#define QFROB_INVOLUTION_HPP

// Involution monoids, the linear/antilinear involution correspondence, and
// involution-preserving homomorphism checks.

#include <string>
#include <vector>

#include "qfrob/frobenius.hpp"

namespace qfrob {

// A monoid together with a linear involution s : A -> A^*, required to be a
// monoid morphism into the conjugate monoid (A^*, m_*, u_*) with s_* s = id.
struct InvolutionMonoid {
    Monoid monoid;
    Morphism s;

    InvolutionMonoid() = default;
    InvolutionMonoid(Monoid m, Morphism inv);
};

// An antilinear involution t(v) = S conj(v) on a single-factor object.
// Composition rule: (t1 t2)(v) = S1 conj(S2) conj(v), so t t = id reads
// S conj(S) = id.
struct AntilinearInvolution {
    Matrix S;
};

// Named sub-checks with deviations; ok iff every part passed.
struct CheckReport {
    struct Part {
        std::string name;
        bool ok = false;
        double deviation = 0.0;
    };
    std::vector<Part> parts;

    bool ok() const;
    double max_deviation() const;
    void add(const std::string& name, double dev, const Tolerance& tol);
};

// Checks the involution condition s_* s = id and that s is a monoid morphism
// into the conjugate monoid.
CheckReport validate(const InvolutionMonoid& im, const Tolerance& tol = {});

// The correspondence between antilinear *-involutions and linear involutions:
// s phi = (t phi)_* and t phi = (s phi)_*. On a single-factor object this is
// the exact entrywise relation s = conj(S). Throws InvalidInvolution when the
// input fails its own involution condition.
Morphism linear_from_antilinear(const AntilinearInvolution& t, const Tolerance& tol = {});
AntilinearInvolution antilinear_from_linear(const Morphism& s, const Tolerance& tol = {});

// Full *-structure check of an antilinear involution against a monoid:
// t t = id, t reverses multiplication, t(u) = u.
CheckReport validate_antilinear(const Monoid& m, const AntilinearInvolution& t,
                                const Tolerance& tol = {});

// Monoid-homomorphism equations plus the involution-preservation condition
// s_B f = f_* s_A.
CheckReport is_involution_hom(const Morphism& f, const InvolutionMonoid& a,
                              const InvolutionMonoid& b, const Tolerance& tol = {});

// Wrap a dagger-Frobenius monoid with its canonical right (resp. left)
// involution. Throws NotFrobenius otherwise.
InvolutionMonoid frobenius_right_involution(const Monoid& m, const Tolerance& tol = {});
InvolutionMonoid frobenius_left_involution(const Monoid& m, const Tolerance& tol = {});

}  // namespace qfrob

#endif
