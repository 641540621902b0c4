#include "qfrob/groupoid.hpp"

#include <algorithm>
#include <limits>

namespace qfrob {

CheckReport Groupoid::validate() const {
    const int n = size();
    CheckReport r;
    const Tolerance exact = Tolerance::strict();

    bool shape_ok = static_cast<int>(identity.size()) == num_objects &&
                    static_cast<int>(inverse.size()) == n &&
                    static_cast<int>(compose.size()) == n;
    for (const auto& row : compose) shape_ok = shape_ok && static_cast<int>(row.size()) == n;
    for (const GroupoidMorphism& m : morphisms)
        shape_ok = shape_ok && m.src >= 0 && m.src < num_objects && m.tgt >= 0 &&
                   m.tgt < num_objects;
    r.add("table_shape", shape_ok ? 0.0 : 1.0, exact);
    if (!shape_ok) return r;

    bool domains_ok = true;
    for (int g = 0; g < n; ++g)
        for (int h = 0; h < n; ++h) {
            const bool defined = compose[static_cast<std::size_t>(g)][static_cast<std::size_t>(h)] >= 0;
            const bool should = morphisms[static_cast<std::size_t>(g)].src ==
                                morphisms[static_cast<std::size_t>(h)].tgt;
            domains_ok = domains_ok && defined == should;
            if (defined) {
                const int gh = compose[static_cast<std::size_t>(g)][static_cast<std::size_t>(h)];
                domains_ok = domains_ok && gh < n &&
                             morphisms[static_cast<std::size_t>(gh)].src ==
                                 morphisms[static_cast<std::size_t>(h)].src &&
                             morphisms[static_cast<std::size_t>(gh)].tgt ==
                                 morphisms[static_cast<std::size_t>(g)].tgt;
            }
        }
    r.add("composition_domains", domains_ok ? 0.0 : 1.0, exact);

    bool id_ok = true;
    for (int x = 0; x < num_objects; ++x) {
        const int e = identity[static_cast<std::size_t>(x)];
        id_ok = id_ok && e >= 0 && e < n && morphisms[static_cast<std::size_t>(e)].src == x &&
                morphisms[static_cast<std::size_t>(e)].tgt == x;
    }
    for (int g = 0; g < n && id_ok; ++g) {
        const GroupoidMorphism& m = morphisms[static_cast<std::size_t>(g)];
        id_ok = compose[static_cast<std::size_t>(g)]
                       [static_cast<std::size_t>(identity[static_cast<std::size_t>(m.src)])] == g &&
                compose[static_cast<std::size_t>(identity[static_cast<std::size_t>(m.tgt)])]
                       [static_cast<std::size_t>(g)] == g;
    }
    r.add("identity_laws", id_ok ? 0.0 : 1.0, exact);

    bool inv_ok = true;
    for (int g = 0; g < n; ++g) {
        const int gi = inverse[static_cast<std::size_t>(g)];
        const GroupoidMorphism& m = morphisms[static_cast<std::size_t>(g)];
        inv_ok = inv_ok && gi >= 0 && gi < n &&
                 morphisms[static_cast<std::size_t>(gi)].src == m.tgt &&
                 morphisms[static_cast<std::size_t>(gi)].tgt == m.src &&
                 compose[static_cast<std::size_t>(gi)][static_cast<std::size_t>(g)] ==
                     identity[static_cast<std::size_t>(m.src)] &&
                 compose[static_cast<std::size_t>(g)][static_cast<std::size_t>(gi)] ==
                     identity[static_cast<std::size_t>(m.tgt)];
    }
    r.add("inverse_laws", inv_ok ? 0.0 : 1.0, exact);

    bool assoc_ok = true;
    for (int g = 0; g < n; ++g)
        for (int h = 0; h < n; ++h) {
            const int gh = compose[static_cast<std::size_t>(g)][static_cast<std::size_t>(h)];
            if (gh < 0) continue;
            for (int k = 0; k < n; ++k) {
                const int hk = compose[static_cast<std::size_t>(h)][static_cast<std::size_t>(k)];
                if (hk < 0) continue;
                assoc_ok = assoc_ok &&
                           compose[static_cast<std::size_t>(gh)][static_cast<std::size_t>(k)] ==
                               compose[static_cast<std::size_t>(g)][static_cast<std::size_t>(hk)];
            }
        }
    r.add("associativity", assoc_ok ? 0.0 : 1.0, exact);
    return r;
}

Groupoid group_groupoid(const std::vector<std::vector<int>>& mult) {
    const int n = static_cast<int>(mult.size());
    Groupoid g;
    g.num_objects = 1;
    g.morphisms.assign(static_cast<std::size_t>(n), GroupoidMorphism{0, 0});
    g.compose.assign(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n), -1));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            g.compose[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = mult[a][b];
    int e = -1;
    for (int a = 0; a < n; ++a) {
        bool is_id = true;
        for (int b = 0; b < n; ++b) is_id = is_id && mult[a][b] == b && mult[b][a] == b;
        if (is_id) e = a;
    }
    if (e < 0) throw ShapeMismatch("group table has no identity");
    g.identity = {e};
    g.inverse.assign(static_cast<std::size_t>(n), -1);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (mult[a][b] == e) g.inverse[static_cast<std::size_t>(a)] = b;
    return g;
}

Groupoid cyclic_groupoid(int n) {
    std::vector<std::vector<int>> mult(static_cast<std::size_t>(n),
                                       std::vector<int>(static_cast<std::size_t>(n)));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) mult[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = (a + b) % n;
    return group_groupoid(mult);
}

Groupoid two_object_iso_groupoid() {
    // Morphisms: 0 = id_0, 1 = id_1, 2 = f : 0 -> 1, 3 = f^{-1} : 1 -> 0.
    Groupoid g;
    g.num_objects = 2;
    g.morphisms = {{0, 0}, {1, 1}, {0, 1}, {1, 0}};
    g.identity = {0, 1};
    g.inverse = {0, 1, 3, 2};
    g.compose.assign(4, std::vector<int>(4, -1));
    auto set = [&](int a, int b, int c) {
        g.compose[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = c;
    };
    set(0, 0, 0);
    set(1, 1, 1);
    set(2, 0, 2);
    set(1, 2, 2);
    set(3, 1, 3);
    set(0, 3, 3);
    set(3, 2, 0);
    set(2, 3, 1);
    return g;
}

bool GSet::valid(const Groupoid& g) const {
    if (static_cast<int>(sizes.size()) != g.num_objects ||
        static_cast<int>(perms.size()) != g.size())
        return false;
    for (int m = 0; m < g.size(); ++m) {
        const GroupoidMorphism& mor = g.morphisms[static_cast<std::size_t>(m)];
        const std::vector<int>& p = perms[static_cast<std::size_t>(m)];
        const int src_size = sizes[static_cast<std::size_t>(mor.src)];
        const int tgt_size = sizes[static_cast<std::size_t>(mor.tgt)];
        if (src_size != tgt_size || static_cast<int>(p.size()) != src_size) return false;
        std::vector<bool> hit(static_cast<std::size_t>(tgt_size), false);
        for (int v : p) {
            if (v < 0 || v >= tgt_size || hit[static_cast<std::size_t>(v)]) return false;
            hit[static_cast<std::size_t>(v)] = true;
        }
    }
    return true;
}

CheckReport validate_rep(const Groupoid& g, const UnitaryRep& r, const Tolerance& tol) {
    if (static_cast<int>(r.dims.size()) != g.num_objects ||
        static_cast<int>(r.maps.size()) != g.size())
        throw ShapeMismatch("representation shape does not match the groupoid");
    for (int m = 0; m < g.size(); ++m) {
        const GroupoidMorphism& mor = g.morphisms[static_cast<std::size_t>(m)];
        const Morphism& a = r.maps[static_cast<std::size_t>(m)];
        if (a.dom != WireWord::single(r.dims[static_cast<std::size_t>(mor.src)]) ||
            a.cod != WireWord::single(r.dims[static_cast<std::size_t>(mor.tgt)]))
            throw ShapeMismatch("representation map shape mismatch");
    }

    CheckReport rep;
    double udev = 0.0;
    for (const Morphism& a : r.maps) {
        udev = std::max(udev, max_deviation(compose(dagger(a), a), identity(a.dom)));
        udev = std::max(udev, max_deviation(compose(a, dagger(a)), identity(a.cod)));
    }
    rep.add("unitary", udev, tol);

    double fdev = 0.0;
    for (int a = 0; a < g.size(); ++a)
        for (int b = 0; b < g.size(); ++b) {
            const int ab = g.compose[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)];
            if (ab < 0) continue;
            fdev = std::max(fdev, max_deviation(compose(r.maps[static_cast<std::size_t>(a)],
                                                        r.maps[static_cast<std::size_t>(b)]),
                                                r.maps[static_cast<std::size_t>(ab)]));
        }
    rep.add("functorial", fdev, tol);

    double idev = 0.0;
    for (int x = 0; x < g.num_objects; ++x)
        idev = std::max(
            idev, max_deviation(r.maps[static_cast<std::size_t>(g.identity[static_cast<std::size_t>(x)])],
                                identity(r.dims[static_cast<std::size_t>(x)])));
    rep.add("identities", idev, tol);

    double ddev = 0.0;
    for (int m = 0; m < g.size(); ++m)
        ddev = std::max(
            ddev,
            max_deviation(r.maps[static_cast<std::size_t>(g.inverse[static_cast<std::size_t>(m)])],
                          dagger(r.maps[static_cast<std::size_t>(m)])));
    rep.add("dagger_condition", ddev, tol);
    return rep;
}

CheckReport check_classical_structure(const Groupoid& g, const UnitaryRep& r,
                                      const EquivariantClassicalStructure& c,
                                      const Tolerance& tol) {
    if (static_cast<int>(c.monoids.size()) != g.num_objects)
        throw ShapeMismatch("classical structure shape does not match the groupoid");
    for (int x = 0; x < g.num_objects; ++x)
        if (c.monoids[static_cast<std::size_t>(x)].object !=
            WireWord::single(r.dims[static_cast<std::size_t>(x)]))
            throw ShapeMismatch("classical structure object mismatch");

    CheckReport rep;
    double cdev = 0.0;
    bool cls_ok = true;
    for (const Monoid& m : c.monoids) {
        const PropertyReport p = classify(m, tol);
        cls_ok = cls_ok && p.dagger_frobenius() && p.commutative.ok;
        cdev = std::max({cdev, p.associative.deviation, p.unital.deviation,
                         p.frobenius.deviation, p.commutative.deviation});
    }
    rep.parts.push_back({"commutative_frobenius", cls_ok, cdev});

    double mdev = 0.0;
    for (int m = 0; m < g.size(); ++m) {
        const GroupoidMorphism& mor = g.morphisms[static_cast<std::size_t>(m)];
        const Morphism& a = r.maps[static_cast<std::size_t>(m)];
        const Monoid& ms = c.monoids[static_cast<std::size_t>(mor.src)];
        const Monoid& mt = c.monoids[static_cast<std::size_t>(mor.tgt)];
        mdev = std::max(mdev, max_deviation(compose(a, ms.mult),
                                            compose(mt.mult, tensor(a, a))));
        mdev = std::max(mdev, max_deviation(compose(a, ms.unit), mt.unit));
    }
    rep.add("intertwiner", mdev, tol);
    return rep;
}

GSet extract_gset(const Groupoid& g, const UnitaryRep& r,
                  const EquivariantClassicalStructure& c, const Tolerance& tol,
                  std::uint64_t seed) {
    const CheckReport pre = check_classical_structure(g, r, c, tol);
    if (!pre.ok())
        throw NotPermutation("classical-structure prerequisites fail, deviation " +
                             std::to_string(pre.max_deviation()));

    std::vector<Spectrum> spectra;
    spectra.reserve(c.monoids.size());
    for (const Monoid& m : c.monoids) spectra.push_back(spectrum(m, tol, seed));

    GSet out;
    for (const Spectrum& s : spectra) out.sizes.push_back(static_cast<int>(s.points.size()));

    constexpr double kMatch = 1e-6;
    for (int m = 0; m < g.size(); ++m) {
        const GroupoidMorphism& mor = g.morphisms[static_cast<std::size_t>(m)];
        const Spectrum& src = spectra[static_cast<std::size_t>(mor.src)];
        const Spectrum& tgt = spectra[static_cast<std::size_t>(mor.tgt)];
        const Matrix& a = r.maps[static_cast<std::size_t>(m)].data;
        std::vector<int> pi;
        std::vector<bool> used(tgt.points.size(), false);
        for (const Vector& p : src.points) {
            const Vector image = a * p;
            int best = -1;
            double best_dev = std::numeric_limits<double>::infinity();
            for (std::size_t j = 0; j < tgt.points.size(); ++j) {
                const double d = (image - tgt.points[j]).cwiseAbs().maxCoeff();
                if (d < best_dev) {
                    best_dev = d;
                    best = static_cast<int>(j);
                }
            }
            if (best < 0 || best_dev > kMatch)
                throw NotPermutation("image of a spectrum point matches no point, "
                                     "deviation " +
                                     std::to_string(best_dev));
            if (used[static_cast<std::size_t>(best)])
                throw NotPermutation("point assignment is not injective");
            used[static_cast<std::size_t>(best)] = true;
            pi.push_back(best);
        }
        out.perms.push_back(std::move(pi));
    }

    // Functoriality of the extracted permutations.
    for (int a = 0; a < g.size(); ++a)
        for (int b = 0; b < g.size(); ++b) {
            const int ab = g.compose[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)];
            if (ab < 0) continue;
            const std::vector<int>& pa = out.perms[static_cast<std::size_t>(a)];
            const std::vector<int>& pb = out.perms[static_cast<std::size_t>(b)];
            const std::vector<int>& pab = out.perms[static_cast<std::size_t>(ab)];
            for (std::size_t i = 0; i < pb.size(); ++i)
                if (pa[static_cast<std::size_t>(pb[i])] != pab[i])
                    throw NotPermutation("extracted permutations are not functorial");
        }
    return out;
}

std::pair<UnitaryRep, EquivariantClassicalStructure> linearize_gset(const Groupoid& g,
                                                                    const GSet& x) {
    if (!x.valid(g)) throw ShapeMismatch("invalid G-set data");
    UnitaryRep r;
    r.dims = x.sizes;
    for (int m = 0; m < g.size(); ++m) {
        const GroupoidMorphism& mor = g.morphisms[static_cast<std::size_t>(m)];
        const int ns = x.sizes[static_cast<std::size_t>(mor.src)];
        const int nt = x.sizes[static_cast<std::size_t>(mor.tgt)];
        Matrix p = Matrix::Zero(nt, ns);
        for (int i = 0; i < ns; ++i)
            p(x.perms[static_cast<std::size_t>(m)][static_cast<std::size_t>(i)], i) = 1.0;
        r.maps.emplace_back(WireWord::single(ns), WireWord::single(nt), std::move(p));
    }
    EquivariantClassicalStructure c;
    for (int size : x.sizes) c.monoids.push_back(free_monoid(size));
    return {std::move(r), std::move(c)};
}

}  // namespace qfrob
