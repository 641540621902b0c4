#include "qfrob/endo.hpp"

#include <cmath>

namespace qfrob {

Monoid end_monoid(int n) {
    if (n < 1) throw ShapeMismatch("end_monoid requires n >= 1");
    const WireWord a = WireWord::single(n);
    const WireWord as = a.dualized();
    const WireWord obj = as.concat(a);
    Morphism m = tensor(identity(as), tensor(cap(n), identity(a)));
    m = relabel(m, obj.concat(obj), obj);
    return Monoid(obj, std::move(m), cup(n));
}

Morphism name_of(const Matrix& x) {
    if (x.rows() != x.cols()) throw ShapeMismatch("name_of expects a square matrix");
    const Eigen::Index n = x.rows();
    Vector v(n * n);
    for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index j = 0; j < n; ++j) v(i * n + j) = x(i, j);
    const WireWord a = WireWord::single(static_cast<int>(n));
    return Morphism::state(a.dualized().concat(a), v);
}

Matrix unname(const Morphism& state) {
    if (!state.is_state()) throw ShapeMismatch("unname expects a state");
    const Eigen::Index total = state.cod.total();
    const auto n = static_cast<Eigen::Index>(std::llround(std::sqrt(double(total))));
    if (n * n != total) throw ShapeMismatch("state dimension is not a perfect square");
    Matrix x(n, n);
    for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index j = 0; j < n; ++j) x(i, j) = state.data(i * n + j, 0);
    return x;
}

Morphism embed(const Monoid& M) {
    const WireWord& a = M.object;
    const WireWord as = a.dualized();
    return compose(tensor(identity(as), M.mult), tensor(cup(a), identity(a)));
}

double cstar_norm(const InvolutionMonoid& im, const Morphism& alpha,
                  const Tolerance& tol) {
    if (!classify(im.monoid, tol).dagger_frobenius())
        throw NotFrobenius("cstar_norm requires a dagger-Frobenius monoid");
    const CheckReport v = validate(im, tol);
    if (!v.ok())
        throw InvalidInvolution("involution monoid fails validation, deviation " +
                                std::to_string(v.max_deviation()));
    if (alpha.cod != im.monoid.object || !alpha.is_state())
        throw ShapeMismatch("cstar_norm expects a state of the monoid object");
    return operator_norm(unname(compose(embed(im.monoid), alpha)));
}

}  // namespace qfrob
