#pragma once

// JSON forms of the library's objects. Rationals are "p/q" strings, words
// are strings over a, b, A, B, integers are JSON numbers when they fit in a
// long and decimal strings otherwise.
//
// Parsers throw ParseError with the JSON pointer of the offending value.

#include <json.hpp>

#include <string>

#include "paradoxkit/cauchy.hpp"
#include "paradoxkit/exactlin.hpp"
#include "paradoxkit/freeness.hpp"
#include "paradoxkit/measures.hpp"
#include "paradoxkit/paradox.hpp"
#include "paradoxkit/report.hpp"
#include "paradoxkit/smp.hpp"
#include "paradoxkit/sphere.hpp"
#include "paradoxkit/words.hpp"

namespace paradoxkit::io {

// Insertion-ordered, so output is deterministic.
using Json = nlohmann::ordered_json;

Json to_json(const exactlin::Rational& q);
Json to_json(const exactlin::Integer& z);
Json to_json(const exactlin::Mat3Q& m);
Json to_json(const exactlin::Vec3Q& v);
Json to_json(const exactlin::ProjectiveDirection& d);
Json to_json(const words::ReducedWord& w);
Json to_json(const CheckList& checks);
Json to_json(const freeness::FreenessCertificate& c);
Json to_json(const sphere::FixedDirectionSet& c);
Json to_json(const sphere::AbsorbingRotation& g);
Json to_json(const paradox::NNPoly& p);
Json to_json(const measures::GroupTable& g);
Json to_json(const measures::PointMassMeasure& mu);
Json to_json(const measures::CellWitness& w);
Json to_json(const cauchy::HamelModel& f);
Json to_json(const cauchy::Coords& x);

exactlin::Rational rational_from_json(const Json& j, const std::string& path = "");
exactlin::Integer integer_from_json(const Json& j, const std::string& path = "");
words::ReducedWord word_from_json(const Json& j, const std::string& path = "");
freeness::FreenessCertificate certificate_from_json(const Json& j);
sphere::FixedDirectionSet fixed_directions_from_json(const Json& j);
measures::GroupTable group_from_json(const Json& j);
cauchy::HamelModel hamel_from_json(const Json& j);

// Input of the contradiction engine, in one of two forms:
//   {"cells": [...names], "pieces_a": [[names]], "moved_a": [[names]],
//    "pieces_b": ..., "moved_b": ..., "nu": ["p/q", ...], "invariant": bool}
// or
//   {"model": {"points": n, "identity": "e", "actions": {"label": [images]},
//              "compositions": [["g", "h", "gh"]]},
//    "E": [points], "pieces_a": [[points]], "movers_a": [labels],
//    "pieces_b": ..., "movers_b": ..., "nu": ["p/q" per point of E],
//    "invariant": bool}
struct ContradictionInput {
    measures::CellWitness witness;
    std::vector<exactlin::Rational> nu;
    bool invariant = false;
};
ContradictionInput contradiction_input_from_json(const Json& j);
Json to_json(const ContradictionInput& in);

// Parses text; syntax errors report line and column.
Json parse(const std::string& text, const std::string& source = "input");

} // namespace paradoxkit::io
