#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "helpers.hpp"
#include "qfrob/groupoid.hpp"

using namespace qfrob;
using namespace qfrob::testing;

namespace {

const Tolerance tol;

Morphism rep_map(int from, int to, const Matrix& m) {
    return Morphism(WireWord::single(from), WireWord::single(to), m);
}

Matrix swap2() {
    Matrix s(2, 2);
    s << 0, 1, 1, 0;
    return s;
}

// Z_2 acting on C^2 by the given matrix for the nontrivial element.
UnitaryRep z2_rep(const Matrix& g) {
    UnitaryRep r;
    r.dims = {2};
    r.maps = {rep_map(2, 2, Matrix::Identity(2, 2)), rep_map(2, 2, g)};
    return r;
}

EquivariantClassicalStructure basis_cs(const std::vector<int>& dims) {
    EquivariantClassicalStructure c;
    for (int d : dims) c.monoids.push_back(basis_monoid(d));
    return c;
}

}  // namespace

TEST_CASE("groupoid builders validate; broken tables fail") {
    for (const Groupoid& g : {cyclic_groupoid(1), cyclic_groupoid(2), cyclic_groupoid(3),
                              two_object_iso_groupoid()}) {
        CHECK(g.validate().ok());
    }
    Groupoid broken = cyclic_groupoid(3);
    broken.compose[1][1] = 0;  // g g = e breaks associativity/inverses
    CHECK_FALSE(broken.validate().ok());

    Groupoid bad_inverse = cyclic_groupoid(3);
    bad_inverse.inverse[1] = 1;
    CHECK_FALSE(bad_inverse.validate().ok());
}

TEST_CASE("two-object groupoid shape") {
    const Groupoid g = two_object_iso_groupoid();
    CHECK(g.num_objects == 2);
    CHECK(g.size() == 4);
    CHECK(g.morphisms[2].src == 0);
    CHECK(g.morphisms[2].tgt == 1);
    CHECK(g.compose[3][2] == g.identity[0]);  // f^{-1} o f = id_0
    CHECK(g.compose[2][3] == g.identity[1]);
}

TEST_CASE("validate_rep") {
    // Trivial group, any dimension.
    UnitaryRep triv;
    triv.dims = {3};
    triv.maps = {rep_map(3, 3, Matrix::Identity(3, 3))};
    CHECK(validate_rep(cyclic_groupoid(1), triv, tol).ok());

    // Z_2 by swap: valid.
    CHECK(validate_rep(cyclic_groupoid(2), z2_rep(swap2()), tol).ok());

    // Z_2 by diag(1,2): fails unitarity.
    Matrix d = Matrix::Zero(2, 2);
    d(0, 0) = 1.0;
    d(1, 1) = 2.0;
    CHECK_FALSE(validate_rep(cyclic_groupoid(2), z2_rep(d), tol).ok());

    // Z_2 by a rotation with square -id: unitary but not functorial.
    Matrix rot(2, 2);
    rot << 0, -1, 1, 0;
    CHECK_FALSE(validate_rep(cyclic_groupoid(2), z2_rep(rot), tol).ok());
}

TEST_CASE("check_classical_structure") {
    const Groupoid z2 = cyclic_groupoid(2);
    // Swap permutes the standard basis: pass.
    CHECK(check_classical_structure(z2, z2_rep(swap2()), basis_cs({2}), tol).ok());

    // A rotated classical structure is still a classical structure, but swap
    // is no longer a homomorphism for it: the intertwiner square fails.
    std::mt19937_64 rng(71);
    EquivariantClassicalStructure rotated;
    rotated.monoids.push_back(random_classical_structure(2, rng));
    REQUIRE(classify(rotated.monoids[0], tol).dagger_frobenius());
    CHECK_FALSE(check_classical_structure(z2, z2_rep(swap2()), rotated, tol).ok());

    // Non-Frobenius per-object data also fails.
    EquivariantClassicalStructure bad;
    const WireWord w = WireWord::single(2);
    bad.monoids.push_back(Monoid(w, Morphism(w.concat(w), w, random_matrix(2, 4, rng)),
                                 Morphism(WireWord::unit(), w, random_vector(2, rng))));
    CHECK_FALSE(check_classical_structure(z2, z2_rep(swap2()), bad, tol).ok());

    // Trivial group: reduces to plain classification.
    UnitaryRep triv;
    triv.dims = {3};
    triv.maps = {rep_map(3, 3, Matrix::Identity(3, 3))};
    CHECK(check_classical_structure(cyclic_groupoid(1), triv, basis_cs({3}), tol).ok());
}

TEST_CASE("extract_gset examples") {
    // Z_2 swap: a 2-element set with the nontrivial involution.
    const GSet x = extract_gset(cyclic_groupoid(2), z2_rep(swap2()), basis_cs({2}), tol);
    CHECK(x.sizes == std::vector<int>{2});
    CHECK(x.perms[0] == std::vector<int>{0, 1});
    CHECK(x.perms[1] == std::vector<int>{1, 0});

    // Trivial group on C^3: a bare 3-element set.
    UnitaryRep triv;
    triv.dims = {3};
    triv.maps = {rep_map(3, 3, Matrix::Identity(3, 3))};
    const GSet t = extract_gset(cyclic_groupoid(1), triv, basis_cs({3}), tol);
    CHECK(t.sizes == std::vector<int>{3});
    CHECK(t.perms[0] == std::vector<int>{0, 1, 2});

    // Two-object groupoid: the connecting isomorphism acts as a bijection.
    const Groupoid g2 = two_object_iso_groupoid();
    UnitaryRep r2;
    r2.dims = {2, 2};
    r2.maps = {rep_map(2, 2, Matrix::Identity(2, 2)),
               rep_map(2, 2, Matrix::Identity(2, 2)), rep_map(2, 2, swap2()),
               rep_map(2, 2, swap2())};
    const GSet b = extract_gset(g2, r2, basis_cs({2, 2}), tol);
    CHECK(b.sizes == std::vector<int>{2, 2});
    CHECK(b.perms[2] == std::vector<int>{1, 0});
    CHECK(b.perms[3] == std::vector<int>{1, 0});
    CHECK(b.valid(g2));
}

TEST_CASE("extract_gset rejects non-permutation actions") {
    // diag(1, e^{i theta}) is unitary and functorial only if theta in pi Z;
    // with A(g)^2 = id it needs theta = pi: diag(1,-1). That rep is valid but
    // is not a homomorphism of the basis monoid, so extraction must throw.
    Matrix d = Matrix::Identity(2, 2);
    d(1, 1) = -1.0;
    const UnitaryRep r = z2_rep(d);
    CHECK(validate_rep(cyclic_groupoid(2), r, tol).ok());
    CHECK_THROWS_AS(extract_gset(cyclic_groupoid(2), r, basis_cs({2}), tol),
                    NotPermutation);
}

TEST_CASE("linearize round trips") {
    // 2-element Z_2 swap set: the swap rep with the basis monoid.
    const Groupoid z2 = cyclic_groupoid(2);
    GSet x;
    x.sizes = {2};
    x.perms = {{0, 1}, {1, 0}};
    const auto [r, c] = linearize_gset(z2, x);
    CHECK(r.dims == std::vector<int>{2});
    CHECK(max_deviation(r.maps[1].data, swap2()) == 0.0);
    CHECK(max_deviation(c.monoids[0].mult, basis_monoid(2).mult) == 0.0);
    const GSet back = extract_gset(z2, r, c, tol);
    CHECK(back.sizes == x.sizes);
    CHECK(back.perms == x.perms);

    // Empty set: 0-dimensional rep.
    GSet empty;
    empty.sizes = {0};
    empty.perms = {{}, {}};
    const auto [re, ce] = linearize_gset(z2, empty);
    CHECK(re.dims == std::vector<int>{0});
    const GSet back_empty = extract_gset(z2, re, ce, tol);
    CHECK(back_empty.sizes == empty.sizes);
    CHECK(back_empty.perms == empty.perms);

    // 1-element set over Z_3: the trivial rep.
    GSet one;
    one.sizes = {1};
    one.perms = {{0}, {0}, {0}};
    const auto [r1, c1] = linearize_gset(cyclic_groupoid(3), one);
    const GSet back_one = extract_gset(cyclic_groupoid(3), r1, c1, tol);
    CHECK(back_one.perms == one.perms);

    // A 3-element Z_3 cycle.
    GSet cyc;
    cyc.sizes = {3};
    cyc.perms = {{0, 1, 2}, {1, 2, 0}, {2, 0, 1}};
    const auto [r3, c3] = linearize_gset(cyclic_groupoid(3), cyc);
    CHECK(validate_rep(cyclic_groupoid(3), r3, tol).ok());
    const GSet back_cyc = extract_gset(cyclic_groupoid(3), r3, c3, tol);
    CHECK(back_cyc.perms == cyc.perms);
}

TEST_CASE("equivariant morphisms transport to equivariant set functions") {
    // X = the 2-element swap Z_2-set, Y = the 1-element set; the constant
    // function X -> Y is equivariant and its linearization intertwines the
    // linearized actions.
    const Groupoid z2 = cyclic_groupoid(2);
    GSet x;
    x.sizes = {2};
    x.perms = {{0, 1}, {1, 0}};
    GSet y;
    y.sizes = {1};
    y.perms = {{0}, {0}};
    const auto [rx, cx] = linearize_gset(z2, x);
    const auto [ry, cy] = linearize_gset(z2, y);

    const FinSetMap f{2, 1, {0, 0}};
    const Morphism h = free_map(f);  // C^1 -> C^2, from Y-space to X-space
    CHECK(is_involution_hom(h, frobenius_right_involution(cy.monoids[0], tol),
                            frobenius_right_involution(cx.monoids[0], tol), tol)
              .ok());
    for (int g = 0; g < 2; ++g) {
        CHECK(max_deviation(compose(rx.maps[static_cast<std::size_t>(g)], h),
                            compose(h, ry.maps[static_cast<std::size_t>(g)])) == 0.0);
    }
    // The adjoint-direction transport recovers the set function.
    const FinSetMap back = transport_function(h, cx.monoids[0], cy.monoids[0], tol);
    CHECK(back.table == f.table);
}

TEST_CASE("Z_2 counting check: two classes of 2-dimensional permutation actions") {
    // Exhaustive search over 2-dimensional permutation representations of Z_2
    // carrying the standard basis monoid: A(g) is one of the two 2x2
    // permutation matrices. Both pass all checks, and their extracted G-sets
    // fall into exactly 2 isomorphism classes (trivial and swap), matching
    // the number of 2-element Z_2-sets up to isomorphism.
    const Groupoid z2 = cyclic_groupoid(2);
    std::set<std::vector<int>> cycle_types;
    int valid = 0;
    for (const Matrix& g : {Matrix(Matrix::Identity(2, 2)), swap2()}) {
        const UnitaryRep r = z2_rep(g);
        if (!validate_rep(z2, r, tol).ok()) continue;
        if (!check_classical_structure(z2, r, basis_cs({2}), tol).ok()) continue;
        const GSet gs = extract_gset(z2, r, basis_cs({2}), tol);
        ++valid;
        // Isomorphism class of a Z_2-set = multiset of cycle lengths of the
        // generator's permutation; record it as a sorted list.
        std::vector<int> lengths;
        std::vector<bool> seen(2, false);
        for (int i = 0; i < 2; ++i) {
            if (seen[static_cast<std::size_t>(i)]) continue;
            int len = 0;
            int j = i;
            do {
                seen[static_cast<std::size_t>(j)] = true;
                j = gs.perms[1][static_cast<std::size_t>(j)];
                ++len;
            } while (j != i);
            lengths.push_back(len);
        }
        std::sort(lengths.begin(), lengths.end());
        cycle_types.insert(lengths);
    }
    CHECK(valid == 2);
    CHECK(cycle_types.size() == 2);
}
