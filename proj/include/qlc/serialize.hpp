#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "qlc/criteria.hpp"
#include "qlc/qpoly.hpp"
#include "qlc/seqprops.hpp"
#include "qlc/triangles.hpp"

namespace qlc {

using json = nlohmann::json;

// A QPoly is a JSON array of decimal integer strings, ascending degree:
// q^2+4q+1 <-> ["1","4","1"]; the zero polynomial is [].
json to_json(const QPoly& p);
QPoly qpoly_from_json(const json& j);

// A PolySeq is a JSON array of QPoly serializations.
json to_json(const PolySeq& s);
PolySeq polyseq_from_json(const json& j);

// Numeric sequences are JSON arrays of decimal strings ("7", "-3", "22/7").
json to_json(const std::vector<Int>& s);
json to_json(const std::vector<Rat>& s);
std::vector<Int> ints_from_json(const json& j);
std::vector<Rat> rats_from_json(const json& j);

// {"name":.., "f":.., "g":.., "h":.., "boundary":{"g0":..,"h0":..}?}
json to_json(const TriangleSpec& spec);
TriangleSpec spec_from_json(const json& j);

// Array of rows, each row an array of QPoly serializations.
json to_json(const Triangle& t);
Triangle triangle_from_json(const json& j);

json to_json(const Report& r);
json to_json(const CriterionReport& r);

/// CSV: one row per line, entries rendered canonically ("q^2+4*q+1").
std::string to_csv(const Triangle& t);
std::string to_csv(const Triangle& t, const Rat& eval_q);

std::string rat_to_string(const Rat& r);
Rat rat_from_string(const std::string& s);

json load_json_file(const std::string& path);

}  // namespace qlc
