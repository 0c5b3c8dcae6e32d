#include "polycyc/serialize.hpp"

namespace polycyc {

json parse_json_text(const std::string& text, const std::string& what) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError("malformed JSON for " + what + ": " + e.what());
  }
}

namespace {

std::int64_t as_int(const json& j, const std::string& what) {
  if (!j.is_number_integer()) throw ParseError(what + " must be an integer");
  return j.get<std::int64_t>();
}

unsigned as_positive(const json& j, const std::string& key) {
  if (!j.contains(key)) throw ParseError("ring spec is missing \"" + key + "\"");
  const std::int64_t v = as_int(j.at(key), "ring field \"" + key + "\"");
  if (v < 1) throw PreconditionError("ring field \"" + key + "\" must be positive");
  return static_cast<unsigned>(v);
}

}  // namespace

json ring_to_json(const GaloisRing& ring) {
  json j = {{"p", ring.p()}, {"r", ring.nilpotency()}, {"m", ring.degree()}};
  if (ring.degree() > 1) j["modulus"] = ring.modulus();
  return j;
}

GaloisRing ring_from_json(const json& j) {
  if (!j.is_object()) throw ParseError("ring spec must be a JSON object");
  const unsigned p = as_positive(j, "p");
  const unsigned r = as_positive(j, "r");
  const unsigned m = j.contains("m") ? as_positive(j, "m") : 1u;
  if (j.contains("modulus") && m > 1) {
    if (!j.at("modulus").is_array()) throw ParseError("modulus must be a list of integers");
    std::vector<Coeff> mod;
    for (const auto& c : j.at("modulus")) {
      const std::int64_t v = as_int(c, "modulus coefficient");
      if (v < 0) throw PreconditionError("modulus coefficients must be non-negative");
      mod.push_back(static_cast<Coeff>(v));
    }
    if (mod.size() != m + 1) throw PreconditionError("modulus must have m + 1 coefficients");
    return GaloisRing(p, r, std::move(mod));
  }
  return GaloisRing(p, r, m);
}

json elem_to_json(const RingElem& a) {
  json j = json::array();
  for (Coeff c : a.coeffs()) j.push_back(c);
  return j;
}

RingElem elem_from_json(const GaloisRing& ring, const json& j) {
  if (j.is_number_integer()) return ring.from_int(j.get<std::int64_t>());
  if (!j.is_array()) throw ParseError("element must be an integer or a list of coordinates");
  if (j.size() > ring.degree()) {
    throw ParseError("element has " + std::to_string(j.size()) + " coordinates; ring degree is " +
                     std::to_string(ring.degree()));
  }
  std::vector<std::int64_t> coords(ring.degree(), 0);
  for (std::size_t i = 0; i < j.size(); ++i) coords[i] = as_int(j[i], "element coordinate");
  return ring.from_coeffs(coords);
}

json vector_to_json(std::span<const RingElem> v) {
  json j = json::array();
  for (const auto& a : v) j.push_back(elem_to_json(a));
  return j;
}

RowVector vector_from_json(const GaloisRing& ring, const json& j) {
  if (!j.is_array()) throw ParseError("expected a list of elements");
  RowVector v;
  for (const auto& e : j) v.push_back(elem_from_json(ring, e));
  return v;
}

json poly_to_json(const Poly& f) { return vector_to_json(f.coeffs()); }

Poly poly_from_json(const GaloisRing& ring, const json& j) { return Poly(ring, vector_from_json(ring, j)); }

json matrix_to_json(const RingMatrix& m) {
  json j = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) j.push_back(vector_to_json(m.row(i)));
  return j;
}

RingMatrix matrix_from_json(const GaloisRing& ring, const json& j) {
  if (!j.is_array()) throw ParseError("matrix must be a list of rows");
  std::vector<RowVector> rows;
  for (const auto& r : j) rows.push_back(vector_from_json(ring, r));
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  for (const auto& r : rows) {
    if (r.size() != cols) throw ParseError("matrix rows have different lengths");
  }
  return RingMatrix::from_rows(ring, cols, rows);
}

json code_to_json(const Code& c) {
  json j;
  j["basis"] = matrix_to_json(c.basis().matrix());
  j["pivots"] = c.basis().pivot_columns();
  j["pivot_valuations"] = c.basis().pivot_valuations();
  j["log_p_size"] = c.log_size();
  j["ideal"] = c.shift_closed();
  return j;
}

}  // namespace polycyc
