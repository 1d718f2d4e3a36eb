#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"

#include "fi1/decomposition.hpp"
#include "fi1/element.hpp"
#include "fi1/numerical.hpp"
#include "fi1/presentation.hpp"
#include "fi1/ptrans.hpp"
#include "fi1/subsemigroup.hpp"
#include "fi1/witness.hpp"

namespace fi1::io {

using Json = nlohmann::ordered_json;

// Elements are triples [-a, p, b].
Json to_json(Element const& e);
Element element_from_json(Json const& j);
// Parses "[-1, 0, 2]" or "-1,0,2".
Element parse_element(std::string const& text);

Json to_json(PartialMap const& f);
Json to_json(std::vector<Element> const& es);

// {"generators": [[-a, p, b], ...]}
GeneratorSet generators_from_json(Json const& j);
// {"gens": [3, 5]}
numerical::NumericalSgp numerical_from_json(Json const& j);

Json to_json(ClassificationReport const& r);
Json to_json(Witness const& w);
Json to_json(Decomposition const& d);
Json to_json(ScheinReport const& r);
Json to_json(numerical::CommutativePresentation const& p);

// {"alphabet": [...], "relations": [[["g1","g2"],["g2","g1"]], ...]}
Json to_json(Presentation const& p);
Presentation presentation_from_json(Json const& j);
Json to_json(Presentation const& p, VerificationReport const& r);

// Reads and parses a JSON file; throws DomainError on I/O or syntax errors.
Json read_json_file(std::string const& path);

}  // namespace fi1::io
