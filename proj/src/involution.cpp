#include "qfrob/involution.hpp"

namespace qfrob {

InvolutionMonoid::InvolutionMonoid(Monoid m, Morphism inv)
    : monoid(std::move(m)), s(std::move(inv)) {
    if (s.dom != monoid.object || s.cod != monoid.object.dualized())
        throw ShapeMismatch("involution must have signature A -> A^*");
}

bool CheckReport::ok() const {
    for (const Part& p : parts)
        if (!p.ok) return false;
    return true;
}

double CheckReport::max_deviation() const {
    double d = 0.0;
    for (const Part& p : parts) d = std::max(d, p.deviation);
    return d;
}

void CheckReport::add(const std::string& name, double dev, const Tolerance& tol) {
    parts.push_back({name, tol.close(dev, 0.0), dev});
}

CheckReport validate(const InvolutionMonoid& im, const Tolerance& tol) {
    const Monoid& M = im.monoid;
    const Morphism& s = im.s;
    CheckReport r;
    r.add("involution_condition",
          max_deviation(compose(conjugate(s), s), identity(M.object)), tol);
    r.add("multiplication_hom",
          max_deviation(compose(s, M.mult), compose(conjugate(M.mult), tensor(s, s))),
          tol);
    r.add("unit_hom", max_deviation(compose(s, M.unit), conjugate(M.unit)), tol);
    return r;
}

Morphism linear_from_antilinear(const AntilinearInvolution& t, const Tolerance& tol) {
    const Eigen::Index n = t.S.rows();
    if (t.S.cols() != n) throw InvalidInvolution("S must be square");
    const double dev =
        max_deviation(Matrix(t.S * t.S.conjugate()), Matrix(Matrix::Identity(n, n)));
    if (!tol.close(dev, 0.0))
        throw InvalidInvolution("S conj(S) = id fails, deviation " + std::to_string(dev));
    // s phi = (t phi)_* entrywise: s = conj(S).
    return Morphism(WireWord::single(static_cast<int>(n)),
                    WireWord::single(static_cast<int>(n), true), t.S.conjugate());
}

AntilinearInvolution antilinear_from_linear(const Morphism& s, const Tolerance& tol) {
    if (s.dom.factors.size() != 1 || s.cod != s.dom.dualized())
        throw InvalidInvolution("expected a linear involution [n] -> [n*]");
    const double dev =
        max_deviation(compose(conjugate(s), s), identity(s.dom));
    if (!tol.close(dev, 0.0))
        throw InvalidInvolution("s_* s = id fails, deviation " + std::to_string(dev));
    return AntilinearInvolution{s.data.conjugate()};
}

CheckReport validate_antilinear(const Monoid& M, const AntilinearInvolution& t,
                                const Tolerance& tol) {
    const Eigen::Index n = M.dim();
    if (t.S.rows() != n || t.S.cols() != n)
        throw ShapeMismatch("antilinear involution dimension mismatch");
    CheckReport r;
    r.add("involutive",
          max_deviation(Matrix(t.S * t.S.conjugate()), Matrix(Matrix::Identity(n, n))),
          tol);
    // t(e_i e_j) = t(e_j) t(e_i) on all basis pairs.
    double dev = 0.0;
    for (Eigen::Index i = 0; i < n; ++i) {
        for (Eigen::Index j = 0; j < n; ++j) {
            const Vector prod = M.mult.data.col(i * n + j);
            const Vector lhs = t.S * prod.conjugate();
            Vector rhs = Vector::Zero(n);
            const Vector ti = t.S.col(i);
            const Vector tj = t.S.col(j);
            for (Eigen::Index a = 0; a < n; ++a)
                for (Eigen::Index b = 0; b < n; ++b)
                    rhs += tj(a) * ti(b) * M.mult.data.col(a * n + b);
            dev = std::max(dev, (lhs - rhs).cwiseAbs().maxCoeff());
        }
    }
    r.add("order_reversing", dev, tol);
    r.add("fixes_unit",
          (t.S * M.unit.data.conjugate() - M.unit.data).cwiseAbs().maxCoeff(), tol);
    return r;
}

CheckReport is_involution_hom(const Morphism& f, const InvolutionMonoid& a,
                              const InvolutionMonoid& b, const Tolerance& tol) {
    if (f.dom != a.monoid.object || f.cod != b.monoid.object)
        throw ShapeMismatch("homomorphism signature does not match the monoids");
    CheckReport r;
    r.add("multiplicative",
          max_deviation(compose(f, a.monoid.mult), compose(b.monoid.mult, tensor(f, f))),
          tol);
    r.add("unital", max_deviation(compose(f, a.monoid.unit), b.monoid.unit), tol);
    r.add("involution_preserving",
          max_deviation(compose(b.s, f), compose(conjugate(f), a.s)), tol);
    return r;
}

namespace {

Monoid require_frobenius(const Monoid& m, const Tolerance& tol) {
    if (!classify(m, tol).dagger_frobenius())
        throw NotFrobenius("monoid is not dagger-Frobenius");
    return m;
}

}  // namespace

InvolutionMonoid frobenius_right_involution(const Monoid& m, const Tolerance& tol) {
    return InvolutionMonoid(require_frobenius(m, tol), right_involution(m));
}

InvolutionMonoid frobenius_left_involution(const Monoid& m, const Tolerance& tol) {
    return InvolutionMonoid(require_frobenius(m, tol), left_involution(m));
}

}  // namespace qfrob
