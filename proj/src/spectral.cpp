#include "qfrob/spectral.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <random>

#include <Eigen/Eigenvalues>
#include <unsupported/Eigen/KroneckerProduct>

namespace qfrob {

FinSetMap FinSetMap::identity(int n) {
    FinSetMap f;
    f.source = n;
    f.target = n;
    f.table.resize(static_cast<std::size_t>(n));
    std::iota(f.table.begin(), f.table.end(), 0);
    return f;
}

bool FinSetMap::valid() const {
    if (source < 0 || target < 0 ||
        table.size() != static_cast<std::size_t>(source))
        return false;
    for (int v : table)
        if (v < 0 || v >= target) return false;
    return true;
}

namespace {

Matrix left_mult_matrix(const Monoid& m, const Vector& x) {
    const Eigen::Index n = m.dim();
    Matrix l(n, n);
    for (Eigen::Index j = 0; j < n; ++j) {
        Vector acc = Vector::Zero(n);
        for (Eigen::Index i = 0; i < n; ++i) acc += x(i) * m.mult.data.col(i * n + j);
        l.col(j) = acc;
    }
    return l;
}

}  // namespace

Spectrum spectrum(const Monoid& m, const Tolerance& tol, std::uint64_t seed) {
    const PropertyReport cls = classify(m, tol);
    if (!cls.dagger_frobenius())
        throw NotFrobenius("spectrum requires a dagger-Frobenius monoid");
    if (!cls.commutative.ok)
        throw NotCommutative("spectrum requires a commutative monoid, deviation " +
                             std::to_string(cls.commutative.deviation));

    const Eigen::Index n = m.dim();
    if (n == 0) return Spectrum{};
    const Vector& u = m.unit.data.col(0);

    constexpr int kRetryBudget = 8;
    constexpr double kGapThreshold = 1e-6;
    const double verify_tol = std::max(tol.atol, 1e-7);
    std::string last_failure = "no attempt made";

    for (int attempt = 0; attempt < kRetryBudget; ++attempt) {
        std::mt19937_64 rng(seed + static_cast<std::uint64_t>(attempt));
        std::normal_distribution<double> gauss;
        Vector a(n);
        for (Eigen::Index i = 0; i < n; ++i) a(i) = Complex(gauss(rng), gauss(rng));

        Eigen::ComplexEigenSolver<Matrix> es(left_mult_matrix(m, a));
        double min_gap = std::numeric_limits<double>::infinity();
        for (Eigen::Index i = 0; i < n; ++i)
            for (Eigen::Index j = i + 1; j < n; ++j)
                min_gap = std::min(min_gap,
                                   std::abs(es.eigenvalues()(i) - es.eigenvalues()(j)));
        if (n > 1 && min_gap < kGapThreshold) {
            last_failure = "eigenvalue gap " + std::to_string(min_gap);
            continue;
        }

        std::vector<Vector> points;
        bool good = true;
        for (Eigen::Index k = 0; k < n; ++k) {
            const Vector v = es.eigenvectors().col(k);
            const Vector vv = left_mult_matrix(m, v) * v;
            const Complex mu = v.dot(vv) / v.dot(v);
            if (std::abs(mu) < 1e-12) {
                good = false;
                last_failure = "vanishing idempotent scale";
                break;
            }
            points.push_back(v / mu);
        }
        if (!good) continue;

        double dev = 0.0;
        Vector total = Vector::Zero(n);
        for (std::size_t i = 0; i < points.size(); ++i) {
            total += points[i];
            const Matrix li = left_mult_matrix(m, points[i]);
            for (std::size_t j = 0; j < points.size(); ++j) {
                const Vector pij = li * points[j];
                const Vector expect = (i == j) ? points[i] : Vector(Vector::Zero(n));
                dev = std::max(dev, (pij - expect).cwiseAbs().maxCoeff());
            }
        }
        dev = std::max(dev, (total - u).cwiseAbs().maxCoeff());
        if (dev > verify_tol) {
            last_failure = "idempotent verification deviation " + std::to_string(dev);
            continue;
        }

        // chi_i(x) = <p_i, x . p_i> / <p_i, p_i>.
        std::vector<Vector> characters;
        for (const Vector& p : points) {
            Vector chi(n);
            for (Eigen::Index i = 0; i < n; ++i)
                chi(i) = p.dot(left_mult_matrix(m, Vector(Vector::Unit(n, i))) * p) /
                         p.squaredNorm();
            characters.push_back(std::move(chi));
        }

        Vector probe(n);
        for (Eigen::Index i = 0; i < n; ++i) probe(i) = double(n - i);
        std::vector<std::size_t> order(points.size());
        std::iota(order.begin(), order.end(), 0);
        std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
            const Complex cx = (characters[x].transpose() * probe)(0);
            const Complex cy = (characters[y].transpose() * probe)(0);
            if (cx.real() != cy.real()) return cx.real() > cy.real();
            return cx.imag() > cy.imag();
        });

        Spectrum out;
        for (std::size_t k : order) {
            out.points.push_back(std::move(points[k]));
            out.characters.push_back(std::move(characters[k]));
        }
        return out;
    }
    throw DegenerateSplit("randomized spectrum split failed after retry budget: " +
                          last_failure);
}

Monoid free_monoid(int k) {
    if (k < 0) throw ShapeMismatch("free_monoid requires k >= 0");
    return basis_monoid(k);
}

Morphism free_map(const FinSetMap& f) {
    if (!f.valid()) throw ShapeMismatch("free_map requires a total function");
    Matrix d = Matrix::Zero(f.source, f.target);
    for (int x = 0; x < f.source; ++x) d(x, f.table[static_cast<std::size_t>(x)]) = 1.0;
    return Morphism(WireWord::single(f.target), WireWord::single(f.source),
                    std::move(d));
}

FinSetMap transport_function(const Morphism& h, const Monoid& a, const Monoid& b,
                             const Tolerance& tol, std::uint64_t seed) {
    if (h.dom != b.object || h.cod != a.object)
        throw ShapeMismatch("transport_function expects h : B -> A");

    double dev = max_deviation(compose(h, b.mult), compose(a.mult, tensor(h, h)));
    dev = std::max(dev, max_deviation(compose(h, b.unit), a.unit));
    dev = std::max(dev, max_deviation(compose(right_involution(a), h),
                                      compose(conjugate(h), right_involution(b))));
    if (!tol.close(dev, 0.0))
        throw NotHomomorphism("homomorphism equations fail, deviation " +
                              std::to_string(dev));

    const Spectrum sa = spectrum(a, tol, seed);
    const Spectrum sb = spectrum(b, tol, seed);

    FinSetMap f;
    f.source = static_cast<int>(sa.points.size());
    f.target = static_cast<int>(sb.points.size());
    for (const Vector& chi_a : sa.characters) {
        const Vector composed = h.data.transpose() * chi_a;
        int best = -1;
        double best_dev = std::numeric_limits<double>::infinity();
        for (std::size_t j = 0; j < sb.characters.size(); ++j) {
            const double d = (composed - sb.characters[j]).cwiseAbs().maxCoeff();
            if (d < best_dev) {
                best_dev = d;
                best = static_cast<int>(j);
            }
        }
        if (best < 0 || best_dev > 1e-6)
            throw NotHomomorphism(
                "composed character matches no spectrum point, deviation " +
                std::to_string(best_dev));
        f.table.push_back(best);
    }
    return f;
}

bool is_compatible(const Morphism& f, const Monoid& m, const Tolerance& tol) {
    if (f.dom != m.object || f.cod != m.object)
        throw ShapeMismatch("is_compatible expects an endomorphism of the monoid object");
    const Morphism id = identity(m.object);
    const Morphism fm = compose(f, m.mult);
    return approx_equal(compose(m.mult, tensor(f, id)), fm, tol) &&
           approx_equal(compose(m.mult, tensor(id, f)), fm, tol);
}

InternalDiagonalization internal_diagonalize(const Morphism& f, const Tolerance& tol) {
    if (f.dom != f.cod) throw ShapeMismatch("internal_diagonalize expects an endomorphism");
    const std::vector<EigenPair> eig = eig_normal(f, tol);
    const Eigen::Index n = f.dom.total();

    Matrix m = Matrix::Zero(n, n * n);
    Vector u = Vector::Zero(n);
    for (const EigenPair& e : eig) {
        m += e.vector * Eigen::kroneckerProduct(e.vector, e.vector).adjoint();
        u += e.vector;
    }
    const WireWord& obj = f.dom;
    Monoid monoid(obj, Morphism(obj.concat(obj), obj, std::move(m)),
                  Morphism::state(obj, u));
    Morphism phi = compose(f, monoid.unit);
    return InternalDiagonalization{std::move(monoid), std::move(phi)};
}

}  // namespace qfrob
