#include "qfrob/frobenius.hpp"

namespace qfrob {

namespace {

PropertyReport::Item check(const Morphism& a, const Morphism& b, const Tolerance& tol) {
    PropertyReport::Item item;
    item.deviation = max_deviation(a, b);
    item.ok = approx_equal(a, b, tol);
    return item;
}

PropertyReport::Item worst(const PropertyReport::Item& a, const PropertyReport::Item& b) {
    return {a.ok && b.ok, std::max(a.deviation, b.deviation)};
}

}  // namespace

Monoid::Monoid(WireWord obj, Morphism m, Morphism u)
    : object(std::move(obj)), mult(std::move(m)), unit(std::move(u)) {
    if (mult.dom != object.concat(object) || mult.cod != object)
        throw ShapeMismatch("multiplication must have signature A (x) A -> A");
    if (!unit.dom.factors.empty() || unit.cod != object)
        throw ShapeMismatch("unit must have signature I -> A");
}

Monoid basis_monoid(int n) {
    WireWord obj = WireWord::single(n);
    Matrix m = Matrix::Zero(n, static_cast<Eigen::Index>(n) * n);
    Matrix u = Matrix::Zero(n, 1);
    for (Eigen::Index i = 0; i < n; ++i) {
        m(i, i * n + i) = 1.0;
        u(i, 0) = 1.0;
    }
    return Monoid(obj, Morphism(obj.concat(obj), obj, std::move(m)),
                  Morphism(WireWord::unit(), obj, std::move(u)));
}

Monoid direct_sum(const Monoid& a, const Monoid& b) {
    if (a.object.factors.size() > 1 || b.object.factors.size() > 1)
        throw ShapeMismatch("direct_sum expects single-factor objects (flatten first)");
    const Eigen::Index na = a.dim();
    const Eigen::Index nb = b.dim();
    const Eigen::Index n = na + nb;
    WireWord obj = WireWord::single(static_cast<int>(n));

    Matrix m = Matrix::Zero(n, n * n);
    for (Eigen::Index i = 0; i < na; ++i)
        for (Eigen::Index j = 0; j < na; ++j)
            m.block(0, i * n + j, na, 1) = a.mult.data.col(i * na + j);
    for (Eigen::Index i = 0; i < nb; ++i)
        for (Eigen::Index j = 0; j < nb; ++j)
            m.block(na, (na + i) * n + (na + j), nb, 1) = b.mult.data.col(i * nb + j);

    Matrix u = Matrix::Zero(n, 1);
    u.topRows(na) = a.unit.data;
    u.bottomRows(nb) = b.unit.data;

    return Monoid(obj, Morphism(obj.concat(obj), obj, std::move(m)),
                  Morphism(WireWord::unit(), obj, std::move(u)));
}

Monoid flatten(const Monoid& m) {
    WireWord obj = WireWord::single(static_cast<int>(m.dim()));
    return Monoid(obj, relabel(m.mult, obj.concat(obj), obj),
                  relabel(m.unit, WireWord::unit(), obj));
}

PropertyReport classify(const Monoid& M, const Tolerance& tol) {
    const WireWord& A = M.object;
    const Morphism id_A = identity(A);
    const Morphism& m = M.mult;
    const Morphism& u = M.unit;
    const Morphism md = dagger(m);
    const Morphism ud = dagger(u);

    PropertyReport r;

    r.associative = check(compose(m, tensor(m, id_A)), compose(m, tensor(id_A, m)), tol);
    r.unital = worst(check(compose(m, tensor(u, id_A)), id_A, tol),
                     check(compose(m, tensor(id_A, u)), id_A, tol));

    const Morphism frob_mid = compose(md, m);
    r.frobenius = worst(check(compose(tensor(id_A, m), tensor(md, id_A)), frob_mid, tol),
                        check(compose(tensor(m, id_A), tensor(id_A, md)), frob_mid, tol));

    r.special = check(compose(m, md), id_A, tol);
    r.commutative = check(compose(m, swap(A, A)), m, tol);

    // In Hilb the balancing loop is the identity, so balanced symmetry
    // reduces to u^dag m swap = u^dag m.
    const Morphism counit_mult = compose(ud, m);
    r.balanced_symmetric = check(compose(counit_mult, swap(A, A)), counit_mult, tol);

    const Morphism sl = left_involution(M);
    r.unitary = worst(check(compose(dagger(sl), sl), id_A, tol),
                      check(compose(sl, dagger(sl)), identity(A.dualized()), tol));
    return r;
}

Morphism left_involution(const Monoid& M) {
    const WireWord& A = M.object;
    const WireWord As = A.dualized();
    const Morphism cm = compose(dagger(M.unit), M.mult);  // u^dag m : A (x) A -> I
    return compose(tensor(cm, identity(As)), tensor(identity(A), cup(As)));
}

Morphism right_involution(const Monoid& M) {
    const WireWord& A = M.object;
    const WireWord As = A.dualized();
    const Morphism cm = compose(dagger(M.unit), M.mult);
    return compose(tensor(identity(As), cm), tensor(cup(A), identity(A)));
}

DimensionReport dimension(const Monoid& M) {
    const Morphism eps = cup(M.object);
    const Morphism mdu = compose(dagger(M.mult), M.unit);
    DimensionReport r;
    r.dim = compose(dagger(eps), eps).scalar();
    r.handle_norm = compose(dagger(mdu), mdu).scalar();
    r.unit_norm = compose(dagger(M.unit), M.unit).scalar();
    return r;
}

Morphism right_action(const Monoid& M, const Morphism& alpha) {
    if (alpha.cod != M.object || !alpha.is_state())
        throw ShapeMismatch("right_action expects a state of the monoid object");
    return compose(M.mult, tensor(identity(M.object), alpha));
}

Morphism star_element(const Monoid& M, const Morphism& alpha) {
    if (alpha.cod != M.object || !alpha.is_state())
        throw ShapeMismatch("star_element expects a state of the monoid object");
    return compose(tensor(identity(M.object), dagger(alpha)),
                   compose(dagger(M.mult), M.unit));
}

Complex genus_invariant(const Monoid& M, int genus, const Tolerance& tol) {
    const PropertyReport report = classify(M, tol);
    if (!report.dagger_frobenius())
        throw NotFrobenius("genus_invariant requires a dagger-Frobenius monoid");
    const Morphism handle = compose(M.mult, dagger(M.mult));
    Morphism acc = compose(handle, M.unit);
    for (int g = 0; g < genus; ++g) acc = compose(handle, acc);
    return compose(dagger(M.unit), acc).scalar();
}

}  // namespace qfrob
