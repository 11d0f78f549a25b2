#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "pbl/bundle.hpp"
#include "pbl/json_io.hpp"
#include "pbl/rational.hpp"

namespace pbl {

// Divisor class a*xi + b*H.
struct DivisorClass {
  long xi = 0;
  long h = 0;
  friend bool operator==(const DivisorClass&, const DivisorClass&) = default;
};

struct ConeReport {
  std::string label;
  std::array<DivisorClass, 2> nef;
  std::array<DivisorClass, 2> eff;
  Rational c;
  std::optional<Rational> table_c;  // empty when the bundle has no tabulated value
  Rational computed_c;
  bool slope_agrees = true;
  bool xi_big = false;
  std::string verdict;
  std::string center;
  std::vector<std::string> notes;
};

// Tabulated slope, if the family has one.
std::optional<Rational> table_slope(const BundlePresentation& bp);

// Throws UnknownTag for Custom presentations.
ConeReport cone_report(const BundlePresentation& bp, int a_max = 4);

struct FanoCheck {
  long h_coefficient = 0;   // n + 1 - c1
  long xi_coefficient = 0;  // r
  bool fano = false;
};
FanoCheck fano_check(const BundlePresentation& bp);

Json to_json(const ConeReport& r);
Json to_json(const FanoCheck& f);

}  // namespace pbl
