#include "qfrob/cstar.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include <Eigen/Eigenvalues>
#include <unsupported/Eigen/KroneckerProduct>

namespace qfrob {

Matrix StarAlgebra::left_mult_by(const Vector& x) const {
    Matrix l = Matrix::Zero(dim, dim);
    for (int i = 0; i < dim; ++i) l += x(i) * left_mult[static_cast<std::size_t>(i)];
    return l;
}

Matrix StarAlgebra::right_mult_by(const Vector& x) const {
    Matrix r = Matrix::Zero(dim, dim);
    for (int j = 0; j < dim; ++j)
        for (int i = 0; i < dim; ++i)
            r.col(j) += x(i) * left_mult[static_cast<std::size_t>(j)].col(i);
    return r;
}

Vector StarAlgebra::product(const Vector& a, const Vector& b) const {
    return left_mult_by(a) * b;
}

StarAlgebra group_algebra(const std::vector<std::vector<int>>& mult) {
    const int n = static_cast<int>(mult.size());
    int e = -1;
    for (int g = 0; g < n; ++g) {
        bool is_id = true;
        for (int h = 0; h < n; ++h) is_id = is_id && mult[g][h] == h && mult[h][g] == h;
        if (is_id) {
            e = g;
            break;
        }
    }
    if (e < 0) throw InvalidAlgebra("multiplication table has no identity");

    StarAlgebra a;
    a.dim = n;
    a.left_mult.assign(static_cast<std::size_t>(n), Matrix::Zero(n, n));
    for (int g = 0; g < n; ++g)
        for (int h = 0; h < n; ++h)
            a.left_mult[static_cast<std::size_t>(g)](mult[g][h], h) = 1.0;
    a.unit = Vector::Zero(n);
    a.unit(e) = 1.0;
    a.star = Matrix::Zero(n, n);
    for (int g = 0; g < n; ++g) {
        int inv = -1;
        for (int h = 0; h < n; ++h)
            if (mult[g][h] == e) inv = h;
        if (inv < 0) throw InvalidAlgebra("element without inverse");
        a.star(inv, g) = 1.0;
    }
    return a;
}

StarAlgebra cyclic_group_algebra(int n) {
    std::vector<std::vector<int>> mult(static_cast<std::size_t>(n),
                                       std::vector<int>(static_cast<std::size_t>(n)));
    for (int g = 0; g < n; ++g)
        for (int h = 0; h < n; ++h) mult[g][h] = (g + h) % n;
    return group_algebra(mult);
}

StarAlgebra symmetric_group_algebra_s3() {
    // Permutations of {0,1,2} listed as images (p[0], p[1], p[2]).
    const int perms[6][3] = {{0, 1, 2}, {1, 2, 0}, {2, 0, 1},
                             {0, 2, 1}, {2, 1, 0}, {1, 0, 2}};
    auto find = [&](const int p[3]) {
        for (int k = 0; k < 6; ++k)
            if (perms[k][0] == p[0] && perms[k][1] == p[1] && perms[k][2] == p[2])
                return k;
        return -1;
    };
    std::vector<std::vector<int>> mult(6, std::vector<int>(6));
    for (int g = 0; g < 6; ++g)
        for (int h = 0; h < 6; ++h) {
            int comp[3];
            for (int x = 0; x < 3; ++x) comp[x] = perms[g][perms[h][x]];
            mult[g][h] = find(comp);
        }
    return group_algebra(mult);
}

StarAlgebra matrix_star_algebra(int n) {
    const int d = n * n;
    auto idx = [n](int i, int j) { return i * n + j; };
    StarAlgebra a;
    a.dim = d;
    a.left_mult.assign(static_cast<std::size_t>(d), Matrix::Zero(d, d));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k)
                for (int l = 0; l < n; ++l)
                    if (j == k)
                        a.left_mult[static_cast<std::size_t>(idx(i, j))](idx(i, l),
                                                                         idx(k, l)) = 1.0;
    a.unit = Vector::Zero(d);
    for (int i = 0; i < n; ++i) a.unit(idx(i, i)) = 1.0;
    a.star = Matrix::Zero(d, d);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) a.star(idx(j, i), idx(i, j)) = 1.0;
    return a;
}

StarAlgebra direct_sum(const StarAlgebra& a, const StarAlgebra& b) {
    StarAlgebra s;
    s.dim = a.dim + b.dim;
    s.left_mult.assign(static_cast<std::size_t>(s.dim), Matrix::Zero(s.dim, s.dim));
    for (int i = 0; i < a.dim; ++i)
        s.left_mult[static_cast<std::size_t>(i)].topLeftCorner(a.dim, a.dim) =
            a.left_mult[static_cast<std::size_t>(i)];
    for (int i = 0; i < b.dim; ++i)
        s.left_mult[static_cast<std::size_t>(a.dim + i)].bottomRightCorner(b.dim, b.dim) =
            b.left_mult[static_cast<std::size_t>(i)];
    s.unit = Vector::Zero(s.dim);
    s.unit.head(a.dim) = a.unit;
    s.unit.tail(b.dim) = b.unit;
    s.star = Matrix::Zero(s.dim, s.dim);
    s.star.topLeftCorner(a.dim, a.dim) = a.star;
    s.star.bottomRightCorner(b.dim, b.dim) = b.star;
    return s;
}

StarAlgebra nilpotent_star_algebra() {
    StarAlgebra a;
    a.dim = 2;
    a.left_mult.assign(2, Matrix::Zero(2, 2));
    a.left_mult[0] = Matrix::Identity(2, 2);  // 1.1 = 1, 1.x = x
    a.left_mult[1](1, 0) = 1.0;               // x.1 = x, x.x = 0
    a.unit = Vector::Zero(2);
    a.unit(0) = 1.0;
    a.star = Matrix::Identity(2, 2);
    return a;
}

StarAlgebra change_basis(const StarAlgebra& a, const Matrix& t) {
    const int n = a.dim;
    const Matrix tinv = t.inverse();
    StarAlgebra out;
    out.dim = n;
    out.left_mult.assign(static_cast<std::size_t>(n), Matrix::Zero(n, n));
    for (int i = 0; i < n; ++i) {
        // left multiplication by the new basis element f_i = T e_i, expressed
        // in the new coordinates.
        out.left_mult[static_cast<std::size_t>(i)] = tinv * a.left_mult_by(t.col(i)) * t;
    }
    out.unit = tinv * a.unit;
    out.star = tinv * a.star * t.conjugate();
    return out;
}

CheckReport validate_algebra(const StarAlgebra& a, const Tolerance& tol) {
    const int n = a.dim;
    CheckReport r;

    double dev = 0.0;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Matrix rhs = Matrix::Zero(n, n);
            for (int k = 0; k < n; ++k)
                rhs += a.c(i, j, k) * a.left_mult[static_cast<std::size_t>(k)];
            const Matrix lhs = a.left_mult[static_cast<std::size_t>(i)] *
                               a.left_mult[static_cast<std::size_t>(j)];
            dev = std::max(dev, (lhs - rhs).cwiseAbs().maxCoeff());
        }
    r.add("associative", dev, tol);

    double udev =
        (a.left_mult_by(a.unit) - Matrix::Identity(n, n)).cwiseAbs().maxCoeff();
    udev = std::max(
        udev, (a.right_mult_by(a.unit) - Matrix::Identity(n, n)).cwiseAbs().maxCoeff());
    r.add("unital", udev, tol);

    r.add("star_involutive",
          (a.star * a.star.conjugate() - Matrix::Identity(n, n)).cwiseAbs().maxCoeff(),
          tol);

    double sdev = 0.0;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Vector prod = Vector::Zero(n);
            for (int k = 0; k < n; ++k) prod(k) = a.c(i, j, k);
            const Vector lhs = a.star * prod.conjugate();
            const Vector rhs = a.product(a.star.col(j), a.star.col(i));
            sdev = std::max(sdev, (lhs - rhs).cwiseAbs().maxCoeff());
        }
    r.add("star_order_reversing", sdev, tol);
    r.add("star_fixes_unit",
          Vector(a.star * a.unit.conjugate() - a.unit).cwiseAbs().maxCoeff(), tol);
    return r;
}

GramForm regular_trace_gram(const StarAlgebra& a, const Tolerance& tol) {
    const CheckReport v = validate_algebra(a, tol);
    if (!v.ok())
        throw InvalidAlgebra("star-algebra invariants fail, deviation " +
                             std::to_string(v.max_deviation()));
    const int n = a.dim;
    Matrix g(n, n);
    for (int i = 0; i < n; ++i) {
        const Vector ti = a.star_of(Vector(Vector::Unit(n, i)));
        for (int j = 0; j < n; ++j) {
            Vector ej = Vector::Unit(n, j);
            g(i, j) = a.left_mult_by(a.product(ti, ej)).trace();
        }
    }
    return GramForm{std::move(g)};
}

InvolutionMonoid realize(const StarAlgebra& a, const Tolerance& tol) {
    const GramForm gram = regular_trace_gram(a, tol);
    const int n = a.dim;
    Eigen::SelfAdjointEigenSolver<Matrix> es(gram.G);
    const double max_eig = es.eigenvalues().maxCoeff();
    const double min_eig = es.eigenvalues().minCoeff();
    if (n > 0 && (max_eig <= 0.0 || min_eig <= 1e-8 * max_eig))
        throw NotCStar("Gram form is not positive-definite", min_eig);

    // Hermitian square root of G: deterministic orthonormalization.
    const Matrix t = es.operatorSqrt();
    const Matrix tinv = es.operatorInverseSqrt();

    Matrix m_old(n, n * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            m_old.col(i * n + j) =
                a.left_mult[static_cast<std::size_t>(i)].col(j);

    const WireWord obj = WireWord::single(n);
    Matrix m_new = t * m_old * Eigen::kroneckerProduct(tinv, tinv);
    Vector u_new = t * a.unit;
    // Antilinear involution in the new coordinates, then its linear form.
    const Matrix s_new = t * a.star * tinv.transpose();
    Monoid monoid(obj, Morphism(obj.concat(obj), obj, std::move(m_new)),
                  Morphism::state(obj, u_new));
    Morphism s(obj, obj.dualized(), s_new.conjugate());
    return InvolutionMonoid(std::move(monoid), std::move(s));
}

Monoid rescale(const Monoid& m, double alpha) {
    if (!(alpha > 0.0)) throw NonpositiveScale("scale factor must be positive");
    const double r = std::sqrt(alpha);
    Morphism mult(m.mult.dom, m.mult.cod, m.mult.data / r);
    Morphism unit(m.unit.dom, m.unit.cod, m.unit.data * r);
    return Monoid(m.object, std::move(mult), std::move(unit));
}

std::vector<Vector> nullspace(const Matrix& m, double pivot_threshold) {
    Matrix a = m;
    const Eigen::Index rows = a.rows();
    const Eigen::Index cols = a.cols();
    std::vector<Eigen::Index> pivot_col;
    Eigen::Index row = 0;
    for (Eigen::Index col = 0; col < cols && row < rows; ++col) {
        Eigen::Index best = row;
        for (Eigen::Index r = row + 1; r < rows; ++r)
            if (std::abs(a(r, col)) > std::abs(a(best, col))) best = r;
        if (std::abs(a(best, col)) <= pivot_threshold) continue;
        a.row(row).swap(a.row(best));
        a.row(row) /= a(row, col);
        for (Eigen::Index r = 0; r < rows; ++r)
            if (r != row) a.row(r) -= a(r, col) * a.row(row);
        pivot_col.push_back(col);
        ++row;
    }

    std::vector<Vector> basis;
    std::size_t p = 0;
    for (Eigen::Index col = 0; col < cols; ++col) {
        if (p < pivot_col.size() && pivot_col[p] == col) {
            ++p;
            continue;
        }
        Vector v = Vector::Zero(cols);
        v(col) = 1.0;
        for (std::size_t k = 0; k < pivot_col.size(); ++k)
            v(pivot_col[k]) = -a(static_cast<Eigen::Index>(k), col);
        // Gram-Schmidt against what we already have.
        for (const Vector& b : basis) v -= b.dot(v) * b;
        v /= v.norm();
        basis.push_back(std::move(v));
    }
    return basis;
}

WedderburnDecomposition wedderburn(const InvolutionMonoid& im, const Tolerance& tol,
                                   std::uint64_t seed) {
    const Monoid& M = im.monoid;
    const auto n = static_cast<int>(M.dim());
    const PropertyReport cls = classify(M, tol);
    if (!cls.dagger_frobenius() || !cls.special.ok || !cls.unitary.ok)
        throw NotFrobenius("wedderburn requires a special unitary dagger-Frobenius monoid");
    if (!validate(im, tol).ok())
        throw InvalidInvolution("involution monoid fails validation");

    const Matrix& mdata = M.mult.data;
    auto left_by = [&](const Vector& x) {
        Matrix l(n, n);
        for (int j = 0; j < n; ++j) {
            Vector acc = Vector::Zero(n);
            for (int i = 0; i < n; ++i) acc += x(i) * mdata.col(i * n + j);
            l.col(j) = acc;
        }
        return l;
    };
    auto right_by = [&](const Vector& x) {
        Matrix r(n, n);
        for (int i = 0; i < n; ++i) {
            Vector acc = Vector::Zero(n);
            for (int j = 0; j < n; ++j) acc += x(j) * mdata.col(i * n + j);
            r.col(i) = acc;
        }
        return r;
    };

    // Center: solve [x, e_i] = 0 for all basis elements.
    Matrix system(static_cast<Eigen::Index>(n) * n, n);
    for (int i = 0; i < n; ++i) {
        const Vector ei = Vector::Unit(n, i);
        system.middleRows(static_cast<Eigen::Index>(i) * n, n) =
            left_by(ei) - right_by(ei);
    }
    const std::vector<Vector> center = nullspace(system, 1e-10);
    const auto c = static_cast<Eigen::Index>(center.size());
    if (c == 0) throw DegenerateSplit("empty center");
    Matrix z(n, c);
    for (Eigen::Index k = 0; k < c; ++k) z.col(k) = center[static_cast<std::size_t>(k)];

    const Matrix star = im.s.data.conjugate();  // antilinear involution matrix
    const Vector& u = M.unit.data.col(0);

    constexpr int kRetryBudget = 8;
    constexpr double kGapThreshold = 1e-6;
    std::string last_failure = "no attempt made";

    for (int attempt = 0; attempt < kRetryBudget; ++attempt) {
        std::mt19937_64 rng(seed + static_cast<std::uint64_t>(attempt));
        std::normal_distribution<double> gauss;
        Vector zcoef(c);
        for (Eigen::Index k = 0; k < c; ++k) zcoef(k) = Complex(gauss(rng), gauss(rng));
        Vector probe = z * zcoef;
        probe += star * probe.conjugate();  // self-adjoint central element

        const Matrix la = left_by(probe);
        // Restricted to the (orthonormal) center basis; self-adjointness of
        // the probe makes this Hermitian in the realized coordinates.
        Eigen::SelfAdjointEigenSolver<Matrix> es((z.adjoint() * la * z).eval());

        double min_gap = std::numeric_limits<double>::infinity();
        for (Eigen::Index i = 0; i + 1 < c; ++i)
            min_gap = std::min(min_gap, es.eigenvalues()(i + 1) - es.eigenvalues()(i));
        if (c > 1 && min_gap < kGapThreshold) {
            last_failure = "eigenvalue gap " + std::to_string(min_gap);
            continue;
        }

        std::vector<Vector> idempotents;
        bool good = true;
        for (Eigen::Index k = 0; k < c && good; ++k) {
            const Vector v = z * es.eigenvectors().col(k);
            const Vector vv = left_by(v) * v;
            const Complex mu = v.dot(vv) / v.dot(v);
            if (std::abs(mu) < 1e-12) {
                good = false;
                last_failure = "vanishing idempotent scale";
                break;
            }
            idempotents.push_back(v / mu);
        }
        if (!good) continue;

        // Verify the split before trusting it.
        double dev = 0.0;
        Vector total = Vector::Zero(n);
        for (std::size_t i = 0; i < idempotents.size(); ++i) {
            total += idempotents[i];
            for (std::size_t j = 0; j < idempotents.size(); ++j) {
                const Vector pij = left_by(idempotents[i]) * idempotents[j];
                const Vector expect = (i == j) ? idempotents[i] : Vector(Vector::Zero(n));
                dev = std::max(dev, (pij - expect).cwiseAbs().maxCoeff());
            }
        }
        dev = std::max(dev, (total - u).cwiseAbs().maxCoeff());
        if (dev > std::max(tol.atol, 1e-7)) {
            last_failure = "idempotent verification deviation " + std::to_string(dev);
            continue;
        }

        WedderburnDecomposition out;
        out.central_idempotents = std::move(idempotents);
        for (const Vector& p : out.central_idempotents) {
            const double rank = right_by(p).trace().real();
            const double nb = std::sqrt(rank);
            const int nb_int = static_cast<int>(std::llround(nb));
            if (std::abs(nb - nb_int) > 1e-6) {
                good = false;
                last_failure = "non-square block dimension " + std::to_string(rank);
                break;
            }
            out.block_dims.push_back(nb_int);
        }
        if (!good) continue;
        std::sort(out.block_dims.rbegin(), out.block_dims.rend());
        return out;
    }
    throw DegenerateSplit("randomized center split failed after retry budget: " +
                          last_failure);
}

}  // namespace qfrob
