#include "qfrob/io.hpp"

#include <fstream>
#include <map>

namespace qfrob {

namespace {

Json complex_to_json(const Complex& z) { return Json::array({z.real(), z.imag()}); }

Complex complex_from_json(const Json& j) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
        throw IoError("expected a complex number as [re, im]");
    return {j[0].get<double>(), j[1].get<double>()};
}

Json matrix_to_json(const Matrix& m) {
    Json rows = Json::array();
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(complex_to_json(m(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

Matrix matrix_from_json(const Json& j, Eigen::Index rows, Eigen::Index cols) {
    if (!j.is_array() || static_cast<Eigen::Index>(j.size()) != rows)
        throw IoError("matrix has wrong row count");
    Matrix m(rows, cols);
    for (Eigen::Index i = 0; i < rows; ++i) {
        const Json& row = j[static_cast<std::size_t>(i)];
        if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != cols)
            throw IoError("matrix has wrong column count");
        for (Eigen::Index k = 0; k < cols; ++k)
            m(i, k) = complex_from_json(row[static_cast<std::size_t>(k)]);
    }
    return m;
}

Json vector_to_json(const Vector& v) {
    Json out = Json::array();
    for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(complex_to_json(v(i)));
    return out;
}

Vector vector_from_json(const Json& j, Eigen::Index size) {
    if (!j.is_array() || static_cast<Eigen::Index>(j.size()) != size)
        throw IoError("vector has wrong length");
    Vector v(size);
    for (Eigen::Index i = 0; i < size; ++i)
        v(i) = complex_from_json(j[static_cast<std::size_t>(i)]);
    return v;
}

Json word_to_json(const WireWord& w) {
    Json out = Json::array();
    for (const Wire& f : w.factors)
        out.push_back(Json{{"dim", f.dim}, {"dual", f.dual}});
    return out;
}

WireWord word_from_json(const Json& j) {
    if (!j.is_array()) throw IoError("expected a wire word (array)");
    WireWord w;
    for (const Json& f : j) {
        if (!f.is_object() || !f.contains("dim") || !f["dim"].is_number_integer())
            throw IoError("wire must be an object with an integer 'dim'");
        Wire wire;
        wire.dim = f["dim"].get<int>();
        wire.dual = f.value("dual", false);
        if (wire.dim < 0) throw IoError("wire dimension must be nonnegative");
        w.factors.push_back(wire);
    }
    return w;
}

const Json& field(const Json& j, const char* name) {
    if (!j.is_object() || !j.contains(name))
        throw IoError(std::string("missing field '") + name + "'");
    return j[name];
}

int int_field(const Json& j, const char* name) {
    const Json& f = field(j, name);
    if (!f.is_number_integer()) throw IoError(std::string("field '") + name + "' must be an integer");
    return f.get<int>();
}

}  // namespace

Json to_json(const Morphism& m) {
    return Json{{"dom", word_to_json(m.dom)},
                {"cod", word_to_json(m.cod)},
                {"data", matrix_to_json(m.data)}};
}

Morphism morphism_from_json(const Json& j) {
    const WireWord dom = word_from_json(field(j, "dom"));
    const WireWord cod = word_from_json(field(j, "cod"));
    Matrix data = matrix_from_json(field(j, "data"), cod.total(), dom.total());
    try {
        return Morphism(dom, cod, std::move(data));
    } catch (const ShapeMismatch& e) {
        throw IoError(e.what());
    }
}

Json to_json(const Monoid& m) {
    return Json{{"dim", static_cast<int>(m.dim())},
                {"m", matrix_to_json(m.mult.data)},
                {"u", vector_to_json(m.unit.data.col(0))}};
}

Monoid monoid_from_json(const Json& j) {
    const int n = int_field(j, "dim");
    if (n < 0) throw IoError("monoid dimension must be nonnegative");
    const WireWord obj = WireWord::single(n);
    Matrix m = matrix_from_json(field(j, "m"), n, static_cast<Eigen::Index>(n) * n);
    Vector u = vector_from_json(field(j, "u"), n);
    return Monoid(obj, Morphism(obj.concat(obj), obj, std::move(m)),
                  Morphism::state(obj, u));
}

Json to_json(const InvolutionMonoid& m) {
    Json j = to_json(m.monoid);
    j["s"] = matrix_to_json(m.s.data);
    return j;
}

InvolutionMonoid involution_monoid_from_json(const Json& j) {
    Monoid m = monoid_from_json(j);
    const Eigen::Index n = m.dim();
    Matrix s = matrix_from_json(field(j, "s"), n, n);
    Morphism sm(m.object, m.object.dualized(), std::move(s));
    return InvolutionMonoid(std::move(m), std::move(sm));
}

Json to_json(const StarAlgebra& a) {
    Json mult = Json::array();
    for (int i = 0; i < a.dim; ++i) {
        Json plane = Json::array();
        for (int j = 0; j < a.dim; ++j) {
            Json row = Json::array();
            for (int k = 0; k < a.dim; ++k) row.push_back(complex_to_json(a.c(i, j, k)));
            plane.push_back(std::move(row));
        }
        mult.push_back(std::move(plane));
    }
    return Json{{"dim", a.dim},
                {"mult", std::move(mult)},
                {"unit", vector_to_json(a.unit)},
                {"star", Json{{"S", matrix_to_json(a.star)}}}};
}

StarAlgebra star_algebra_from_json(const Json& j) {
    StarAlgebra a;
    a.dim = int_field(j, "dim");
    if (a.dim < 0) throw IoError("algebra dimension must be nonnegative");
    const Json& mult = field(j, "mult");
    if (!mult.is_array() || static_cast<int>(mult.size()) != a.dim)
        throw IoError("'mult' must be a dim-length array of matrices");
    a.left_mult.assign(static_cast<std::size_t>(a.dim), Matrix::Zero(a.dim, a.dim));
    for (int i = 0; i < a.dim; ++i) {
        // mult[i][j][k] = c[i][j][k]; left_mult[i](k, j) = c[i][j][k].
        const Matrix cij = matrix_from_json(mult[static_cast<std::size_t>(i)], a.dim, a.dim);
        a.left_mult[static_cast<std::size_t>(i)] = cij.transpose();
    }
    a.unit = vector_from_json(field(j, "unit"), a.dim);
    a.star = matrix_from_json(field(field(j, "star"), "S"), a.dim, a.dim);
    return a;
}

Json to_json(const Groupoid& g) {
    Json morphisms = Json::array();
    for (int m = 0; m < g.size(); ++m)
        morphisms.push_back(Json{{"id", m},
                                 {"src", g.morphisms[static_cast<std::size_t>(m)].src},
                                 {"tgt", g.morphisms[static_cast<std::size_t>(m)].tgt}});
    Json comp = Json::array();
    for (int a = 0; a < g.size(); ++a)
        for (int b = 0; b < g.size(); ++b)
            if (g.compose[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] >= 0)
                comp.push_back(Json::array(
                    {a, b, g.compose[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)]}));
    Json inv = Json::array();
    for (int m = 0; m < g.size(); ++m)
        inv.push_back(Json::array({m, g.inverse[static_cast<std::size_t>(m)]}));
    Json objects = Json::array();
    for (int x = 0; x < g.num_objects; ++x) objects.push_back(x);
    return Json{{"objects", std::move(objects)},
                {"morphisms", std::move(morphisms)},
                {"compose", std::move(comp)},
                {"inverses", std::move(inv)}};
}

Groupoid groupoid_from_json(const Json& j) {
    Groupoid g;
    const Json& objects = field(j, "objects");
    if (!objects.is_array()) throw IoError("'objects' must be an array");
    g.num_objects = static_cast<int>(objects.size());

    const Json& morphisms = field(j, "morphisms");
    if (!morphisms.is_array()) throw IoError("'morphisms' must be an array");
    const int n = static_cast<int>(morphisms.size());
    std::map<int, int> id_to_index;
    g.morphisms.resize(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) {
        const Json& m = morphisms[static_cast<std::size_t>(k)];
        const int id = int_field(m, "id");
        if (!id_to_index.emplace(id, k).second) throw IoError("duplicate morphism id");
        GroupoidMorphism gm{int_field(m, "src"), int_field(m, "tgt")};
        if (gm.src < 0 || gm.src >= g.num_objects || gm.tgt < 0 || gm.tgt >= g.num_objects)
            throw IoError("morphism endpoint out of range");
        g.morphisms[static_cast<std::size_t>(k)] = gm;
    }
    auto index_of = [&](int id) {
        const auto it = id_to_index.find(id);
        if (it == id_to_index.end()) throw IoError("unknown morphism id in table");
        return it->second;
    };

    g.compose.assign(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n), -1));
    const Json& comp = field(j, "compose");
    if (!comp.is_array()) throw IoError("'compose' must be an array of triples");
    for (const Json& triple : comp) {
        if (!triple.is_array() || triple.size() != 3)
            throw IoError("compose entries must be [g, h, gh] triples");
        const int a = index_of(triple[0].get<int>());
        const int b = index_of(triple[1].get<int>());
        g.compose[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] =
            index_of(triple[2].get<int>());
    }

    g.inverse.assign(static_cast<std::size_t>(n), -1);
    const Json& inv = field(j, "inverses");
    if (!inv.is_array()) throw IoError("'inverses' must be an array of pairs");
    for (const Json& pair : inv) {
        if (!pair.is_array() || pair.size() != 2)
            throw IoError("inverse entries must be [g, ginv] pairs");
        g.inverse[static_cast<std::size_t>(index_of(pair[0].get<int>()))] =
            index_of(pair[1].get<int>());
    }

    // Identities are determined by the tables: id_{tgt(g)} = g o g^{-1}.
    g.identity.assign(static_cast<std::size_t>(g.num_objects), -1);
    for (int m = 0; m < n; ++m) {
        const int mi = g.inverse[static_cast<std::size_t>(m)];
        if (mi < 0) throw IoError("morphism without an inverse");
        const int e = g.compose[static_cast<std::size_t>(m)][static_cast<std::size_t>(mi)];
        if (e < 0) throw IoError("composition g o g^{-1} missing from the table");
        g.identity[static_cast<std::size_t>(g.morphisms[static_cast<std::size_t>(m)].tgt)] = e;
    }
    for (int x = 0; x < g.num_objects; ++x)
        if (g.identity[static_cast<std::size_t>(x)] < 0)
            throw IoError("object without an identity morphism");
    return g;
}

Json to_json(const UnitaryRep& r) {
    Json maps = Json::array();
    for (const Morphism& m : r.maps) maps.push_back(matrix_to_json(m.data));
    return Json{{"dims", r.dims}, {"maps", std::move(maps)}};
}

UnitaryRep rep_from_json(const Json& j) {
    UnitaryRep r;
    const Json& dims = field(j, "dims");
    if (!dims.is_array()) throw IoError("'dims' must be an array");
    for (const Json& d : dims) {
        if (!d.is_number_integer() || d.get<int>() < 0)
            throw IoError("dimensions must be nonnegative integers");
        r.dims.push_back(d.get<int>());
    }
    const Json& maps = field(j, "maps");
    if (!maps.is_array()) throw IoError("'maps' must be an array");
    for (const Json& m : maps) {
        if (!m.is_array() || m.empty())
            throw IoError("representation maps must be nonempty matrices");
        const auto rows = static_cast<Eigen::Index>(m.size());
        const auto cols = static_cast<Eigen::Index>(m[0].size());
        Matrix data = matrix_from_json(m, rows, cols);
        r.maps.emplace_back(WireWord::single(static_cast<int>(cols)),
                            WireWord::single(static_cast<int>(rows)), std::move(data));
    }
    return r;
}

Json to_json(const EquivariantClassicalStructure& c) {
    Json monoids = Json::array();
    for (const Monoid& m : c.monoids) monoids.push_back(to_json(m));
    return Json{{"monoids", std::move(monoids)}};
}

EquivariantClassicalStructure classical_structure_from_json(const Json& j) {
    EquivariantClassicalStructure c;
    const Json& monoids = field(j, "monoids");
    if (!monoids.is_array()) throw IoError("'monoids' must be an array");
    for (const Json& m : monoids) c.monoids.push_back(monoid_from_json(m));
    return c;
}

Json to_json(const GSet& x) { return Json{{"sizes", x.sizes}, {"perms", x.perms}}; }

GSet gset_from_json(const Json& j) {
    GSet x;
    const Json& sizes = field(j, "sizes");
    const Json& perms = field(j, "perms");
    if (!sizes.is_array() || !perms.is_array())
        throw IoError("'sizes' and 'perms' must be arrays");
    for (const Json& s : sizes) x.sizes.push_back(s.get<int>());
    for (const Json& p : perms) x.perms.push_back(p.get<std::vector<int>>());
    return x;
}

Json to_json(const PropertyReport& r) {
    auto item = [](const PropertyReport::Item& i) {
        return Json{{"ok", i.ok}, {"deviation", i.deviation}};
    };
    return Json{{"associative", item(r.associative)},
                {"unital", item(r.unital)},
                {"frobenius", item(r.frobenius)},
                {"special", item(r.special)},
                {"commutative", item(r.commutative)},
                {"balanced_symmetric", item(r.balanced_symmetric)},
                {"unitary", item(r.unitary)},
                {"dagger_frobenius", r.dagger_frobenius()}};
}

Json to_json(const CheckReport& r) {
    Json parts = Json::array();
    for (const CheckReport::Part& p : r.parts)
        parts.push_back(Json{{"name", p.name}, {"ok", p.ok}, {"deviation", p.deviation}});
    return Json{{"ok", r.ok()}, {"parts", std::move(parts)}};
}

Json to_json(const DimensionReport& r) {
    return Json{{"dim", complex_to_json(r.dim)},
                {"handle_norm", complex_to_json(r.handle_norm)},
                {"unit_norm", complex_to_json(r.unit_norm)}};
}

Json to_json(const Spectrum& s) {
    Json points = Json::array();
    for (const Vector& p : s.points) points.push_back(vector_to_json(p));
    Json characters = Json::array();
    for (const Vector& c : s.characters) characters.push_back(vector_to_json(c));
    return Json{{"points", std::move(points)}, {"characters", std::move(characters)}};
}

Json to_json(const FinSetMap& f) {
    return Json{{"source", f.source}, {"target", f.target}, {"table", f.table}};
}

Json to_json(const WedderburnDecomposition& w) {
    Json idem = Json::array();
    for (const Vector& p : w.central_idempotents) idem.push_back(vector_to_json(p));
    return Json{{"central_idempotents", std::move(idem)},
                {"block_dims", w.block_dims}};
}

Json to_json(const GramForm& g) { return Json{{"G", matrix_to_json(g.G)}}; }

Json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open file: " + path);
    try {
        return Json::parse(in);
    } catch (const Json::exception& e) {
        throw IoError("cannot parse " + path + ": " + e.what());
    }
}

}  // namespace qfrob
