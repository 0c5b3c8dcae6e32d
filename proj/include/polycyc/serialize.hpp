#pragma once

// JSON interchange. Ring: {"p","r","m","modulus"} with the modulus ascending
// and its leading 1 included (omitted for m = 1). Element: list of m
// coordinates; a bare integer is read as a constant. Polynomial: list of
// elements, ascending. Matrix: list of rows.

#include "polycyc/codes.hpp"

#include <json.hpp>

namespace polycyc {

using json = nlohmann::json;

// Parses text, throwing ParseError with the parser's message.
json parse_json_text(const std::string& text, const std::string& what);

json ring_to_json(const GaloisRing& ring);
GaloisRing ring_from_json(const json& j);

json elem_to_json(const RingElem& a);
RingElem elem_from_json(const GaloisRing& ring, const json& j);

json vector_to_json(std::span<const RingElem> v);
RowVector vector_from_json(const GaloisRing& ring, const json& j);

json poly_to_json(const Poly& f);
Poly poly_from_json(const GaloisRing& ring, const json& j);

json matrix_to_json(const RingMatrix& m);
RingMatrix matrix_from_json(const GaloisRing& ring, const json& j);

json code_to_json(const Code& c);

}  // namespace polycyc
