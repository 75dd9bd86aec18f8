#ifndef AFFPAV_JSONIO_HPP
#define AFFPAV_JSONIO_HPP

#include <string>
#include <vector>

#include <json.hpp>

#include "affpav/hecke.hpp"
#include "affpav/paving.hpp"
#include "affpav/weyl.hpp"

namespace affpav::jsonio {

using nlohmann::json;
using rootdata::RootDatum;
using rootdata::Vec;
using weyl::WeylElement;

// ---- element text forms ------------------------------------------------------
// "e"                      identity
// "0,1,2"                  word in S_aff indices (0 = extra affine reflection)
// "t[1,-1]"                translation, simple-coroot coordinates
// "c[1,0]"                 translation, lattice-basis coordinates
// "t[1,1]*1,2"             translation times finite/affine word
std::string element_to_string(const WeylElement& x);
WeylElement parse_element(const RootDatum& rd, const std::string& text);
std::vector<int> parse_word(const std::string& text);
std::vector<int> parse_subset(const RootDatum& rd, const std::string& text);  // "" | "spherical" | "0,2"

// ---- JSON schemas -------------------------------------------------------------
// element: {"lambda":[...], "w":"word in finite simple indices"}
json element_to_json(const WeylElement& x);
WeylElement element_from_json(const RootDatum& rd, const json& j);

// PolyQ: {"coeffs":[c0,c1,...]} (numbers when they fit, decimal strings otherwise)
json polyq_to_json(const PolyQ& p);
PolyQ polyq_from_json(const json& j);

// HeckeElement: [{"element":{...},"coeffs":[...]}, ...] sorted by (length, element)
json hecke_to_json(const hecke::HeckeElement& h);

// StructureConstantTable: object keyed by serialized max representatives
json table_to_json(const hecke::StructureConstantTable& t);

// PavingPolynomial: {"monomials":[[a,b,mult],...],"value":{"coeffs":[...]}}
json paving_to_json(const paving::PavingPolynomial& p);
// Cell: {"a":..,"b":..,"factors":["A1","Gm",...],"trace":[elements]}
json cells_to_json(const std::vector<paving::PavingCell>& cells);

json bigint_to_json(const BigInt& v);

}  // namespace affpav::jsonio

#endif
