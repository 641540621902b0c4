#ifndef QFROB_IO_HPP
#define QFROB_IO_HPP

// JSON serialization for every interchange type. Complex numbers are
// [re, im] pairs; matrices are row-major nested arrays. Emitted numbers use
// the shortest representation that round-trips exactly.
//
// Schemas:
//   Morphism:   {"dom":[{"dim":k,"dual":b},...],"cod":[...],"data":[[[re,im],...],...]}
//   Monoid:     {"dim":n,"m":<n x n^2 matrix>,"u":<vector>}
//   InvolutionMonoid: Monoid plus "s": <n x n matrix>
//   StarAlgebra:{"dim":n,"mult":c[i][j][k],"unit":<vector>,"star":{"S":<matrix>}}
//   Env:        {"name":<Morphism>,...}
//   Groupoid:   {"objects":[...],"morphisms":[{"id":g,"src":x,"tgt":y},...],
//                "compose":[[g,h,gh],...],"inverses":[[g,ginv],...]}
//   UnitaryRep: {"dims":[...],"maps":[<matrix>,...]} (indexed like morphisms)
//   ClassicalStructure: {"monoids":[<Monoid>,...]}
//   GSet:       {"sizes":[...],"perms":[[...],...]}
//
// Schema violations raise IoError (a usage error, distinct from the domain
// failures in errors.hpp).

#include <json.hpp>

#include "qfrob/cstar.hpp"
#include "qfrob/groupoid.hpp"
#include "qfrob/spectral.hpp"

namespace qfrob {

struct IoError : Error {
    using Error::Error;
};

struct Env;  // diagram.hpp

using Json = nlohmann::json;

Json to_json(const Morphism& m);
Morphism morphism_from_json(const Json& j);

Json to_json(const Monoid& m);
Monoid monoid_from_json(const Json& j);

Json to_json(const InvolutionMonoid& m);
InvolutionMonoid involution_monoid_from_json(const Json& j);

Json to_json(const StarAlgebra& a);
StarAlgebra star_algebra_from_json(const Json& j);

Json to_json(const Groupoid& g);
Groupoid groupoid_from_json(const Json& j);

Json to_json(const UnitaryRep& r);
UnitaryRep rep_from_json(const Json& j);

Json to_json(const EquivariantClassicalStructure& c);
EquivariantClassicalStructure classical_structure_from_json(const Json& j);

Json to_json(const GSet& x);
GSet gset_from_json(const Json& j);

// Reports and results (output only).
Json to_json(const PropertyReport& r);
Json to_json(const CheckReport& r);
Json to_json(const DimensionReport& r);
Json to_json(const Spectrum& s);
Json to_json(const FinSetMap& f);
Json to_json(const WedderburnDecomposition& w);
Json to_json(const GramForm& g);

Json load_json_file(const std::string& path);

}  // namespace qfrob

#endif
