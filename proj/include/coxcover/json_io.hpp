#ifndef COXCOVER_JSON_IO_HPP
#define COXCOVER_JSON_IO_HPP

#include <string>

#include <json.hpp>

#include "coxcover/chambers.hpp"
#include "coxcover/cover.hpp"
#include "coxcover/coxeter.hpp"
#include "coxcover/products.hpp"
#include "coxcover/simplicial.hpp"

namespace coxcover {

using Json = nlohmann::ordered_json;

/// Raised on malformed input documents.
class json_format_error : public std::runtime_error {
public:
    explicit json_format_error(const std::string& what) : std::runtime_error(what) {}
};

// Coxeter matrix: {"generators":["s","t"],"matrix":[[1,3],[3,1]]}, 0 = infinity.
CoxeterMatrix coxeter_from_json(const Json& j);
Json coxeter_to_json(const CoxeterMatrix& M);

// Complex: {"vertices":[...],"facets":[[labels...],...]}; closed downward on load.
SimplicialComplex complex_from_json(const Json& j);
Json complex_to_json(const SimplicialComplex& L);

// Building: {"coxeter":{...},"chambers":[ids],"panels":{"s":[[ids]...]}},
// optional "delta" (map id -> id -> [labels]); or the incidence form
// {"coxeter":{...},"flags":{"lines":[[points]...]}}.
Building building_from_json(const Json& j);
Json building_to_json(const Building& B, bool include_delta = false);

// Folding: {"L":{complex},"target":{coxeter},"f":{"s":"s'"}}.
FoldingData folding_from_json(const Json& j);
Json folding_to_json(const FoldingData& fd);

Json homology_to_json(const HomologyReport& h);

// Ball export: folding, base id, radius, classes (weyl, gallery, projection),
// panels per generator.
Json ball_to_json(const CoveredBall& ball);
CoveredBall ball_from_json(const Json& j);

// Product spec: {"factors":[coxeter...]} plus one of
//   "relations": {"i,j":[["s","t"],...]}
//   "graph": {"edges":[[i,j],...]}
//   "square": {} or {"square":{"bijections":{"1":{"s":"s"},...}}}
// Returns the assembled matrix plus a tag describing the route taken.
struct ParsedProduct {
    std::vector<CoxeterMatrix> factors;
    CoxeterMatrix assembled;
    bool is_square = false;
    std::string kind;  // "relations", "graph", "square"
};
ParsedProduct product_from_json(const Json& j);

Json load_json_file(const std::string& path);

}  // namespace coxcover

#endif
