#include "qfrob/linalg.hpp"

#include <algorithm>
#include <sstream>

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>
#include <unsupported/Eigen/KroneckerProduct>

namespace qfrob {

namespace {

// Permutation sending the flattened index of (i1,...,ik) in word W to the
// flattened index of (ik,...,i1) in the reversed word. perm[old] = new.
std::vector<Eigen::Index> reversal_permutation(const WireWord& w) {
    const Eigen::Index total = w.total();
    const std::size_t k = w.factors.size();
    std::vector<Eigen::Index> dims(k);
    for (std::size_t a = 0; a < k; ++a) dims[a] = w.factors[a].dim;

    std::vector<Eigen::Index> perm(static_cast<std::size_t>(total));
    std::vector<Eigen::Index> idx(k, 0);
    for (Eigen::Index flat = 0; flat < total; ++flat) {
        Eigen::Index rev = 0;
        for (std::size_t a = k; a-- > 0;) rev = rev * dims[a] + idx[a];
        perm[static_cast<std::size_t>(flat)] = rev;
        for (std::size_t a = k; a-- > 0;) {
            if (++idx[a] < dims[a]) break;
            idx[a] = 0;
        }
    }
    return perm;
}

}  // namespace

std::string to_string(const WireWord& w) {
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < w.factors.size(); ++i) {
        if (i) os << ',';
        os << w.factors[i].dim;
        if (w.factors[i].dual) os << '*';
    }
    os << ']';
    return os.str();
}

Morphism::Morphism(WireWord d, WireWord c, Matrix m)
    : dom(std::move(d)), cod(std::move(c)), data(std::move(m)) {
    if (data.rows() != cod.total() || data.cols() != dom.total()) {
        throw ShapeMismatch("matrix shape " + std::to_string(data.rows()) + "x" +
                            std::to_string(data.cols()) + " does not match words " +
                            to_string(cod) + " x " + to_string(dom));
    }
}

Complex Morphism::scalar() const {
    if (!is_scalar()) throw ShapeMismatch("morphism is not a scalar");
    return data(0, 0);
}

Morphism Morphism::scalar_value(Complex z) {
    Matrix m(1, 1);
    m(0, 0) = z;
    return Morphism(WireWord::unit(), WireWord::unit(), std::move(m));
}

Morphism Morphism::state(const WireWord& cod, const Vector& v) {
    return Morphism(WireWord::unit(), cod, v);
}

Morphism identity(const WireWord& w) {
    return Morphism(w, w, Matrix::Identity(w.total(), w.total()));
}

Morphism identity(int n) { return identity(WireWord::single(n)); }

Morphism compose(const Morphism& g, const Morphism& f) {
    if (f.cod != g.dom) {
        throw ShapeMismatch("cannot compose: cod " + to_string(f.cod) +
                            " does not match dom " + to_string(g.dom));
    }
    return Morphism(f.dom, g.cod, g.data * f.data);
}

Morphism tensor(const Morphism& f, const Morphism& g) {
    Matrix m = Eigen::kroneckerProduct(f.data, g.data);
    return Morphism(f.dom.concat(g.dom), f.cod.concat(g.cod), std::move(m));
}

Morphism dagger(const Morphism& f) {
    return Morphism(f.cod, f.dom, f.data.adjoint());
}

Morphism conjugate(const Morphism& f) {
    const auto pd = reversal_permutation(f.dom);
    const auto pc = reversal_permutation(f.cod);
    Matrix m(f.data.rows(), f.data.cols());
    for (Eigen::Index j = 0; j < f.data.rows(); ++j)
        for (Eigen::Index i = 0; i < f.data.cols(); ++i)
            m(pc[static_cast<std::size_t>(j)], pd[static_cast<std::size_t>(i)]) =
                std::conj(f.data(j, i));
    return Morphism(f.dom.dualized(), f.cod.dualized(), std::move(m));
}

Morphism dual(const Morphism& f) {
    const auto pd = reversal_permutation(f.dom);
    const auto pc = reversal_permutation(f.cod);
    Matrix m(f.data.cols(), f.data.rows());
    for (Eigen::Index j = 0; j < f.data.rows(); ++j)
        for (Eigen::Index i = 0; i < f.data.cols(); ++i)
            m(pd[static_cast<std::size_t>(i)], pc[static_cast<std::size_t>(j)]) =
                f.data(j, i);
    return Morphism(f.cod.dualized(), f.dom.dualized(), std::move(m));
}

Morphism cup(const WireWord& w) {
    const Eigen::Index t = w.total();
    const auto rev = reversal_permutation(w);
    Matrix m = Matrix::Zero(t * t, 1);
    for (Eigen::Index i = 0; i < t; ++i)
        m(rev[static_cast<std::size_t>(i)] * t + i, 0) = 1.0;
    return Morphism(WireWord::unit(), w.dualized().concat(w), std::move(m));
}

Morphism cup(int n) { return cup(WireWord::single(n)); }

Morphism cap(const WireWord& w) {
    const Eigen::Index t = w.total();
    const auto rev = reversal_permutation(w);
    Matrix m = Matrix::Zero(1, t * t);
    for (Eigen::Index i = 0; i < t; ++i)
        m(0, i * t + rev[static_cast<std::size_t>(i)]) = 1.0;
    return Morphism(w.concat(w.dualized()), WireWord::unit(), std::move(m));
}

Morphism cap(int n) { return cap(WireWord::single(n)); }

Morphism swap(const WireWord& a, const WireWord& b) {
    const Eigen::Index ta = a.total();
    const Eigen::Index tb = b.total();
    Matrix m = Matrix::Zero(ta * tb, ta * tb);
    for (Eigen::Index i = 0; i < ta; ++i)
        for (Eigen::Index j = 0; j < tb; ++j) m(j * ta + i, i * tb + j) = 1.0;
    return Morphism(a.concat(b), b.concat(a), std::move(m));
}

Morphism swap(int a, int b) {
    return swap(WireWord::single(a), WireWord::single(b));
}

Morphism relabel(const Morphism& f, const WireWord& dom, const WireWord& cod) {
    if (dom.total() != f.dom.total() || cod.total() != f.cod.total()) {
        throw ShapeMismatch("relabel changes total dimension");
    }
    return Morphism(dom, cod, f.data);
}

double operator_norm(const Matrix& m) {
    if (m.size() == 0) return 0.0;
    return m.jacobiSvd().singularValues()(0);
}

double operator_norm(const Morphism& f) { return operator_norm(f.data); }

std::vector<EigenPair> eig_normal(const Matrix& m, const Tolerance& tol) {
    if (m.rows() != m.cols()) throw ShapeMismatch("eig_normal needs a square matrix");
    if (m.rows() == 0) return {};
    const Matrix comm = m * m.adjoint() - m.adjoint() * m;
    const double scale = (m * m.adjoint()).cwiseAbs().maxCoeff();
    const double dev = comm.cwiseAbs().maxCoeff();
    if (dev > tol.atol + tol.rtol * scale) {
        throw NotNormal("commutator deviation " + std::to_string(dev) +
                        " exceeds tolerance");
    }
    // For a normal matrix the Schur form is diagonal and the Schur vectors
    // form an orthonormal eigenbasis, degenerate spectra included.
    Eigen::ComplexSchur<Matrix> schur(m);
    std::vector<EigenPair> out;
    out.reserve(static_cast<std::size_t>(m.rows()));
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        Vector v = schur.matrixU().col(i);
        // Deterministic phase: make the largest-magnitude entry real positive.
        Eigen::Index arg = 0;
        v.cwiseAbs().maxCoeff(&arg);
        const Complex pivot = v(arg);
        if (std::abs(pivot) > 0) v *= std::conj(pivot) / std::abs(pivot);
        out.push_back({schur.matrixT()(i, i), std::move(v)});
    }
    return out;
}

std::vector<EigenPair> eig_normal(const Morphism& f, const Tolerance& tol) {
    if (f.dom.total() != f.cod.total())
        throw ShapeMismatch("eig_normal needs an endomorphism");
    return eig_normal(f.data, tol);
}

double max_deviation(const Matrix& a, const Matrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw ShapeMismatch("max_deviation shape mismatch");
    if (a.size() == 0) return 0.0;
    return (a - b).cwiseAbs().maxCoeff();
}

double max_deviation(const Morphism& a, const Morphism& b) {
    return max_deviation(a.data, b.data);
}

bool approx_equal(const Morphism& a, const Morphism& b, const Tolerance& tol) {
    if (a.dom.total() != b.dom.total() || a.cod.total() != b.cod.total()) return false;
    for (Eigen::Index j = 0; j < a.data.rows(); ++j)
        for (Eigen::Index i = 0; i < a.data.cols(); ++i)
            if (!tol.close(a.data(j, i), b.data(j, i))) return false;
    return true;
}

}  // namespace qfrob
