#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "helpers.hpp"
#include "qfrob/spectral.hpp"

using namespace qfrob;
using namespace qfrob::testing;

namespace {

const Tolerance tol;

Morphism involution_morphism(const Matrix& s, const WireWord& obj) {
    return Morphism(obj, obj.dualized(), s);
}

// The six equations of the involutions lemma, as maximal deviations:
//   s_L^* = s_R, s_R^* = s_L, (s_L)_* s_L = id, (s_R)_* s_R = id,
//   s_R^dag s_L = id, s_L^dag s_R = id.
std::vector<double> lemma_deviations(const Monoid& m) {
    const Morphism sl = left_involution(m);
    const Morphism sr = right_involution(m);
    const Morphism id = identity(m.object);
    return {max_deviation(dual(sl), sr),
            max_deviation(dual(sr), sl),
            max_deviation(compose(conjugate(sl), sl), id),
            max_deviation(compose(conjugate(sr), sr), id),
            max_deviation(compose(dagger(sr), sl), id),
            max_deviation(compose(dagger(sl), sr), id)};
}

}  // namespace

TEST_CASE("validate: basis monoid involutions") {
    const Monoid b2 = basis_monoid(2);
    const WireWord w = b2.object;

    // s = id is the canonical involution of the basis monoid.
    CHECK(validate(InvolutionMonoid(b2, involution_morphism(Matrix::Identity(2, 2), w)),
                   tol)
              .ok());

    // A permutation involution is also valid: it swaps the two characters.
    Matrix perm(2, 2);
    perm << 0, 1, 1, 0;
    CHECK(validate(InvolutionMonoid(b2, involution_morphism(perm, w)), tol).ok());

    // A scaled involution fails the involution condition (s_* s = 4 id).
    const CheckReport scaled =
        validate(InvolutionMonoid(b2, involution_morphism(2.0 * Matrix::Identity(2, 2), w)),
                 tol);
    CHECK_FALSE(scaled.ok());
}

TEST_CASE("canonical wrappers validate on the standard family") {
    for (const FamilyMember& fm : standard_family()) {
        CAPTURE(fm.name);
        CHECK(validate(frobenius_right_involution(fm.monoid, tol), tol).ok());
        CHECK(validate(frobenius_left_involution(fm.monoid, tol), tol).ok());
    }
    // End(C^3)'s involution X -> X^dag is, on name coordinates, the
    // index-transposition permutation (i,j) -> (j,i) composed with conjugation.
    const InvolutionMonoid e = frobenius_right_involution(flatten(end_monoid(3)), tol);
    Matrix transp = Matrix::Zero(9, 9);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) transp(j * 3 + i, i * 3 + j) = 1.0;
    CHECK(max_deviation(e.s.data, transp) < 1e-12);
}

TEST_CASE("wrappers reject non-Frobenius monoids") {
    std::mt19937_64 rng(31);
    const WireWord w = WireWord::single(2);
    const Monoid bad(w, Morphism(w.concat(w), w, random_matrix(2, 4, rng)),
                     Morphism(WireWord::unit(), w, random_vector(2, rng)));
    CHECK_THROWS_AS(frobenius_right_involution(bad, tol), NotFrobenius);
    CHECK_THROWS_AS(frobenius_left_involution(bad, tol), NotFrobenius);
}

TEST_CASE("six involution-lemma equations on the standard family") {
    for (const FamilyMember& fm : standard_family()) {
        CAPTURE(fm.name);
        for (double dev : lemma_deviations(fm.monoid)) CHECK(dev < 1e-9);
    }
}

TEST_CASE("weighted endomorphism monoid: dagger-Frobenius but not balanced") {
    const Monoid w = weighted_end_monoid(2, {1.0, 2.0});
    const PropertyReport r = classify(w, tol);
    CHECK(r.dagger_frobenius());
    CHECK_FALSE(r.commutative.ok);
    CHECK_FALSE(r.balanced_symmetric.ok);
    CHECK_FALSE(r.unitary.ok);
    // The lemma equations hold for every dagger-Frobenius monoid, balanced or
    // not, and the two canonical involutions genuinely differ here.
    for (double dev : lemma_deviations(w)) CHECK(dev < 1e-9);
    CHECK(max_deviation(left_involution(w), right_involution(w)) > 1e-3);
    CHECK(validate(frobenius_right_involution(w, tol), tol).ok());
    CHECK(validate(frobenius_left_involution(w, tol), tol).ok());
}

TEST_CASE("unitary, balanced-symmetric and s_L = s_R agree flag-for-flag") {
    std::vector<Monoid> monoids;
    for (const FamilyMember& fm : standard_family()) monoids.push_back(fm.monoid);
    monoids.push_back(weighted_end_monoid(2, {1.0, 2.0}));
    monoids.push_back(weighted_end_monoid(3, {1.0, 1.0, 4.0}));
    for (const Monoid& m : monoids) {
        const PropertyReport r = classify(m, tol);
        REQUIRE(r.dagger_frobenius());
        const bool involutions_equal =
            max_deviation(left_involution(m), right_involution(m)) < 1e-9;
        CHECK(r.unitary.ok == r.balanced_symmetric.ok);
        CHECK(r.unitary.ok == involutions_equal);
    }
}

TEST_CASE("linear/antilinear correspondence") {
    // Plain conjugation corresponds to s = id.
    const Morphism s_id = linear_from_antilinear(AntilinearInvolution{Matrix::Identity(3, 3)}, tol);
    CHECK(max_deviation(s_id.data, Matrix(Matrix::Identity(3, 3))) == 0.0);

    // S = swap corresponds to s = swap (real matrices are their own conjugates).
    Matrix perm(2, 2);
    perm << 0, 1, 1, 0;
    CHECK(max_deviation(linear_from_antilinear(AntilinearInvolution{perm}, tol).data, perm) ==
          0.0);

    // Round trip on the group-algebra involutions g -> g^{-1}: exact equality.
    for (const StarAlgebra& a : {cyclic_group_algebra(2), cyclic_group_algebra(3),
                                 symmetric_group_algebra_s3()}) {
        const AntilinearInvolution t{a.star};
        const AntilinearInvolution back =
            antilinear_from_linear(linear_from_antilinear(t, tol), tol);
        CHECK(max_deviation(back.S, t.S) == 0.0);
    }

    // Inputs violating their own involution condition are rejected.
    CHECK_THROWS_AS(linear_from_antilinear(AntilinearInvolution{2.0 * Matrix::Identity(2, 2)},
                                           tol),
                    InvalidInvolution);
    const Morphism bad = involution_morphism(2.0 * Matrix::Identity(2, 2), WireWord::single(2));
    CHECK_THROWS_AS(antilinear_from_linear(bad, tol), InvalidInvolution);
}

TEST_CASE("validate_antilinear: full *-structure check") {
    const Monoid b2 = basis_monoid(2);
    CHECK(validate_antilinear(b2, AntilinearInvolution{Matrix::Identity(2, 2)}, tol).ok());

    // t(e1) = -e1 squares to the identity but fails to reverse products:
    // t(e1 e1) = -e1 while t(e1) t(e1) = e1.
    Matrix sign = Matrix::Identity(2, 2);
    sign(1, 1) = -1.0;
    CHECK_FALSE(validate_antilinear(b2, AntilinearInvolution{sign}, tol).ok());

    // Realized group algebras carry their transported involution.
    const InvolutionMonoid z3 = realize(cyclic_group_algebra(3));
    CHECK(validate_antilinear(z3.monoid, antilinear_from_linear(z3.s, tol), tol).ok());
}

TEST_CASE("is_involution_hom") {
    const InvolutionMonoid b3 = frobenius_right_involution(basis_monoid(3), tol);
    CHECK(is_involution_hom(identity(3), b3, b3, tol).ok());

    // A phase on the one-dimensional monoid fails unit preservation.
    Matrix one(1, 1), phase(1, 1);
    one << 1.0;
    phase << std::polar(1.0, 0.7);
    const WireWord w1 = WireWord::single(1);
    const InvolutionMonoid triv(
        Monoid(w1, Morphism(w1.concat(w1), w1, one), Morphism(WireWord::unit(), w1, one)),
        involution_morphism(Matrix::Identity(1, 1), w1));
    CHECK_FALSE(is_involution_hom(Morphism(w1, w1, phase), triv, triv, tol).ok());

    // free_map of a function is an involution-preserving homomorphism.
    FinSetMap f;
    f.source = 3;
    f.target = 2;
    f.table = {0, 1, 1};
    const InvolutionMonoid b2 = frobenius_right_involution(basis_monoid(2), tol);
    CHECK(is_involution_hom(free_map(f), b2, b3, tol).ok());
}

TEST_CASE("homomorphisms are isometries iff they preserve the counit") {
    std::mt19937_64 rng(32);
    std::uniform_int_distribution<int> size(1, 5);
    int isometries = 0;
    for (int trial = 0; trial < 12; ++trial) {
        // Every third trial is a random bijection, so the isometric case is
        // guaranteed to be exercised; the rest are generic functions.
        const bool bijective = trial % 3 == 0;
        const int s = size(rng);
        const int t = bijective ? s : size(rng);
        FinSetMap f;
        f.source = s;
        f.target = t;
        if (bijective) {
            for (int x = 0; x < s; ++x) f.table.push_back(x);
            std::shuffle(f.table.begin(), f.table.end(), rng);
        } else {
            std::uniform_int_distribution<int> pick(0, t - 1);
            for (int x = 0; x < s; ++x) f.table.push_back(pick(rng));
        }
        // Transport along random unitaries on both sides; both properties are
        // invariant under unitary changes of orthonormal basis.
        const Matrix us = random_unitary(s, rng);
        const Matrix ut = random_unitary(t, rng);
        const Monoid a = conjugate_monoid(free_monoid(t), ut);
        const Monoid b = conjugate_monoid(free_monoid(s), us);
        const Morphism hm(a.object, b.object, Matrix(us * free_map(f).data * ut.adjoint()));
        const bool isometry = max_deviation(Matrix(hm.data.adjoint() * hm.data),
                                            Matrix(Matrix::Identity(t, t))) < 1e-9;
        const bool counit = max_deviation(Matrix(b.unit.data.adjoint() * hm.data),
                                          Matrix(a.unit.data.adjoint())) < 1e-9;
        CHECK(isometry == counit);
        if (isometry) ++isometries;
    }
    // Bijections were hit at least once, so both directions were exercised.
    CHECK(isometries > 0);
}

TEST_CASE("involution-closed isometric sub-monoids are dagger-Frobenius") {
    // The diagonal subalgebra of End(C^n), as the image of the basis monoid
    // under the canonical embedding: the embedding is an isometry, a
    // homomorphism, involution-preserving -- and the sub-monoid is
    // dagger-Frobenius.
    for (int n : {2, 3}) {
        const Monoid b = basis_monoid(n);
        const Morphism h = embed(b);
        CHECK(max_deviation(Matrix(h.data.adjoint() * h.data),
                            Matrix(Matrix::Identity(n, n))) < 1e-12);
        const Monoid e = end_monoid(n);
        CHECK(is_involution_hom(h, frobenius_right_involution(b, tol),
                                frobenius_right_involution(e, tol), tol)
                  .ok());
        CHECK(classify(b, tol).dagger_frobenius());
    }
    // Same for a realized group-algebra image inside End.
    const Monoid z3 = realize(cyclic_group_algebra(3)).monoid;
    const Morphism h = embed(z3);
    CHECK(max_deviation(Matrix(h.data.adjoint() * h.data), Matrix(Matrix::Identity(3, 3))) <
          1e-9);
    CHECK(is_involution_hom(h, frobenius_right_involution(z3, tol),
                            frobenius_right_involution(end_monoid(3), tol), tol)
              .ok());
}
