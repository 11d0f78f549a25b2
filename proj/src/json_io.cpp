#include "pbl/json_io.hpp"

#include "pbl/error.hpp"

namespace pbl {

Json to_json(const Rational& r) { return r.str(); }

Rational rational_from_json(const Json& j) {
  if (j.is_string()) return Rational::parse(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long>());
  throw Error(ErrorCode::BadInput, "expected a rational as \"p/q\" string or integer");
}

Json to_json(const RatVector& v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(to_json(x));
  return a;
}

RatVector vector_from_json(const Json& j) {
  if (!j.is_array()) throw Error(ErrorCode::BadInput, "expected an array of rationals");
  RatVector v;
  for (const auto& x : j) v.push_back(rational_from_json(x));
  return v;
}

Json to_json(const RatMatrix& m) {
  Json a = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) a.push_back(to_json(m.row(i)));
  return a;
}

RatMatrix matrix_from_json(const Json& j) {
  if (!j.is_array() || j.empty()) throw Error(ErrorCode::BadInput, "expected a nonempty array of rows");
  std::vector<RatVector> rows;
  for (const auto& r : j) rows.push_back(vector_from_json(r));
  const std::size_t cols = rows.front().size();
  for (const auto& r : rows)
    if (r.size() != cols) throw Error(ErrorCode::BadInput, "ragged matrix");
  return RatMatrix::from_rows(rows, cols);
}

Json to_json(const MultiPoly& p) {
  Json blocks = Json::array();
  for (const auto& b : p.blocks()) blocks.push_back({{"name", b.name}, {"arity", b.arity}});
  Json terms = Json::array();
  for (const auto& [e, c] : p.sorted_terms()) {
    Json ex = Json::array();
    std::size_t off = 0;
    for (const auto& b : p.blocks()) {
      Json be = Json::array();
      for (std::size_t i = 0; i < b.arity; ++i) be.push_back(e[off + i]);
      ex.push_back(be);
      off += b.arity;
    }
    terms.push_back({{"exponents", ex}, {"coefficient", to_json(c)}});
  }
  return {{"blocks", blocks}, {"terms", terms}};
}

MultiPoly poly_from_json(const Json& j) {
  try {
    std::vector<Block> blocks;
    for (const auto& b : j.at("blocks")) blocks.push_back({b.at("name").get<std::string>(), b.at("arity").get<std::size_t>()});
    MultiPoly p(blocks);
    for (const auto& t : j.at("terms")) {
      const auto& ex = t.at("exponents");
      if (ex.size() != blocks.size()) throw Error(ErrorCode::BadInput, "exponent blocks mismatch");
      Exponent e;
      for (std::size_t b = 0; b < blocks.size(); ++b) {
        if (ex[b].size() != blocks[b].arity) throw Error(ErrorCode::BadInput, "exponent arity mismatch");
        for (const auto& k : ex[b]) e.push_back(k.get<unsigned>());
      }
      p.add_term(e, rational_from_json(t.at("coefficient")));
    }
    return p;
  } catch (const nlohmann::json::exception& ex) {
    throw Error(ErrorCode::BadInput, std::string("malformed polynomial: ") + ex.what());
  }
}

}  // namespace pbl
