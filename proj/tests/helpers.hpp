#ifndef QFROB_TEST_HELPERS_HPP
#define QFROB_TEST_HELPERS_HPP

// Shared generators for the test suites: seeded random matrices, unitaries,
// monoid transports, and the standard family of monoids every suite runs
// over.

#include <cmath>
#include <random>
#include <string>
#include <vector>

#include <unsupported/Eigen/KroneckerProduct>

#include "qfrob/cstar.hpp"
#include "qfrob/endo.hpp"

namespace qfrob::testing {

inline Matrix random_matrix(Eigen::Index rows, Eigen::Index cols, std::mt19937_64& rng) {
    std::normal_distribution<double> gauss;
    Matrix m(rows, cols);
    for (Eigen::Index i = 0; i < rows; ++i)
        for (Eigen::Index j = 0; j < cols; ++j) m(i, j) = Complex(gauss(rng), gauss(rng));
    return m;
}

inline Vector random_vector(Eigen::Index n, std::mt19937_64& rng) {
    std::normal_distribution<double> gauss;
    Vector v(n);
    for (Eigen::Index i = 0; i < n; ++i) v(i) = Complex(gauss(rng), gauss(rng));
    return v;
}

inline Matrix random_unitary(Eigen::Index n, std::mt19937_64& rng) {
    const Matrix a = random_matrix(n, n, rng);
    Eigen::HouseholderQR<Matrix> qr(a);
    Matrix q = qr.householderQ();
    // Fix the phases so Q is uniquely determined by A.
    const Matrix r = qr.matrixQR().triangularView<Eigen::Upper>();
    for (Eigen::Index i = 0; i < n; ++i) {
        const Complex d = r(i, i);
        if (std::abs(d) > 0) q.col(i) *= d / std::abs(d);
    }
    return q;
}

inline Matrix random_normal_matrix(Eigen::Index n, std::mt19937_64& rng,
                                   const std::vector<Complex>* eigenvalues = nullptr) {
    const Matrix u = random_unitary(n, rng);
    Vector d(n);
    if (eigenvalues) {
        for (Eigen::Index i = 0; i < n; ++i)
            d(i) = (*eigenvalues)[static_cast<std::size_t>(i) % eigenvalues->size()];
    } else {
        d = random_vector(n, rng);
    }
    return u * d.asDiagonal() * u.adjoint();
}

// Transport a monoid along a unitary: m -> U m (U^dag (x) U^dag), u -> U u.
// Preserves every classification flag.
inline Monoid conjugate_monoid(const Monoid& m, const Matrix& u) {
    const WireWord& obj = m.object;
    Matrix mult = u * m.mult.data * Eigen::kroneckerProduct(u.adjoint(), u.adjoint());
    Matrix unit = u * m.unit.data;
    return Monoid(obj, Morphism(obj.concat(obj), obj, std::move(mult)),
                  Morphism(WireWord::unit(), obj, std::move(unit)));
}

// A random special commutative dagger-Frobenius monoid: a basis monoid in a
// random orthonormal basis.
inline Monoid random_classical_structure(int n, std::mt19937_64& rng) {
    return conjugate_monoid(basis_monoid(n), random_unitary(n, rng));
}

// A random special unitary dagger-Frobenius monoid with the given block
// dimensions, in a random orthonormal basis.
inline InvolutionMonoid random_special_unitary(const std::vector<int>& blocks,
                                               std::mt19937_64& rng) {
    StarAlgebra a = matrix_star_algebra(blocks.at(0));
    for (std::size_t i = 1; i < blocks.size(); ++i)
        a = direct_sum(a, matrix_star_algebra(blocks[i]));
    const InvolutionMonoid im = realize(a);
    const Matrix u = random_unitary(im.monoid.dim(), rng);
    Monoid m = conjugate_monoid(im.monoid, u);
    // s transports as the linear involution of t' = U t U^dag, i.e.
    // S' = U S U^T and s' = conj(S').
    const Matrix s_new = (u.conjugate() * im.s.data * u.adjoint()).eval();
    return InvolutionMonoid(std::move(m),
                            Morphism(im.s.dom, im.s.cod, s_new));
}

// End(C^n) carrying the weighted inner product <a, b> = Tr(a^dag b W) for a
// positive diagonal weight W, expressed in orthonormal coordinates
// phi(a) = name(a W^{1/2}). Dagger-Frobenius for every positive weight, but
// balanced-symmetric (equivalently unitary) only when W is scalar: the left
// and right involutions differ by the Nakayama twist a -> W a W^{-1}. This is
// the suite's canonical non-balanced example.
inline Monoid weighted_end_monoid(int n, const std::vector<double>& weights) {
    const Monoid e = end_monoid(n);
    Matrix c = Matrix::Zero(n, n);        // W^{-1/2}
    Matrix root = Matrix::Zero(n, n);     // W^{1/2}
    for (int i = 0; i < n; ++i) {
        c(i, i) = 1.0 / std::sqrt(weights.at(static_cast<std::size_t>(i)));
        root(i, i) = std::sqrt(weights.at(static_cast<std::size_t>(i)));
    }
    // name(Y) -> name(cY) on the second factor, then the End product:
    // phi(a) phi(b) = name(a W^{1/2}) name(b W^{1/2}) |-> name(a b W^{1/2}).
    const Matrix mc = Eigen::kroneckerProduct(c, Matrix::Identity(n, n));
    const Morphism twist(e.object, e.object, mc);
    const Morphism mult = compose(e.mult, tensor(identity(e.object), twist));
    const Morphism unit = name_of(root);
    return flatten(Monoid(e.object, mult, unit));
}

struct FamilyMember {
    std::string name;
    Monoid monoid;
    // Expected classification flags.
    bool special = false;
    bool commutative = false;
    bool unitary = false;  // == balanced_symmetric for every member
};

// The standard family: basis monoids, endomorphism monoids raw and rescaled
// to special, realized group algebras, a realized block algebra, and direct
// sums. All are dagger-Frobenius.
inline std::vector<FamilyMember> standard_family() {
    std::vector<FamilyMember> fam;
    for (int n = 1; n <= 8; ++n)
        fam.push_back({"basis" + std::to_string(n), basis_monoid(n), true, true, true});
    for (int n = 1; n <= 4; ++n) {
        const Monoid e = flatten(end_monoid(n));
        fam.push_back({"end" + std::to_string(n), e, n == 1, n == 1, true});
        fam.push_back({"end" + std::to_string(n) + "_special", rescale(e, n), true,
                       n == 1, true});
    }
    fam.push_back({"z2", realize(cyclic_group_algebra(2)).monoid, true, true, true});
    fam.push_back({"z3", realize(cyclic_group_algebra(3)).monoid, true, true, true});
    fam.push_back({"s3", realize(symmetric_group_algebra_s3()).monoid, true, false, true});
    fam.push_back({"mat2_plus_c",
                   realize(direct_sum(matrix_star_algebra(2), matrix_star_algebra(1))).monoid,
                   true, false, true});

    const std::size_t base = fam.size();
    for (std::size_t i = 0; i + 1 < base; i += 5) {
        const FamilyMember& a = fam[i];
        const FamilyMember& b = fam[i + 1];
        fam.push_back({a.name + "+" + b.name, direct_sum(a.monoid, b.monoid),
                       a.special && b.special, a.commutative && b.commutative,
                       a.unitary && b.unitary});
    }
    return fam;
}

}  // namespace qfrob::testing

#endif
