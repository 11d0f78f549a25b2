#pragma once

#include <string>
#include <vector>

#include "pbl/json_io.hpp"

namespace pbl {

// Integer shadow of a drum built on (Y, L-, L+): Y is a projective bundle over Y- and Y+,
// E- and E+ are the pushforwards of L+ and L-, X is the drum.
struct DrumDatum {
  std::string id;
  std::string family;
  std::string y, y_minus, y_plus, x;
  long dim_y = 0, dim_y_minus = 0, dim_y_plus = 0, dim_x = 0;
  long k_minus = 0, k_plus = 0;
  long deg_e_minus = 0, deg_e_plus = 0;
  long index_y_minus = 0, index_y_plus = 0;
  long h0_l_minus = 0, h0_l_plus = 0;
  // Pn base only: which bundle E- is ("T(-1)", "Omega(2)", "trivial") and n.
  std::string base_bundle;
  long base_n = 0;
  bool flagged = false;
  std::string note;

  friend bool operator==(const DrumDatum&, const DrumDatum&) = default;
};

// Throws BadParams on k <= 0, negative dimensions or inconsistent k.
void validate(const DrumDatum& d);
DrumDatum mirrored(const DrumDatum& d);

std::vector<DrumDatum> drum_catalog();
const DrumDatum& find_drum(const std::vector<DrumDatum>& catalog, const std::string& id);

struct CanonicalIdentityReport {
  // deg E- - index Y- = -(k+ + 1), as printed.
  long printed_lhs = 0, printed_rhs = 0;
  bool printed = false;
  // deg E+ - index Y+ = -(k- + 1), signs swapped.
  long mirrored_lhs = 0, mirrored_rhs = 0;
  bool mirrored = false;
  // deg E+ - index Y- = -(k+ + 1), the coefficient read off the canonical class display.
  long alternate_lhs = 0, alternate_rhs = 0;
  bool alternate = false;
  bool passes() const { return printed || mirrored; }
};
CanonicalIdentityReport check_canonical_identity(const DrumDatum& d);

enum class FlipKind { Flip, Flop };
struct FlipVerdict {
  FlipKind kind = FlipKind::Flop;
  long deg_k_minus = 0;  // deg K_{W-}|Y- = dim Y+ - dim Y-
  long deg_k_plus = 0;
};
// Throws AsymmetricUnknown if dim Y- < dim Y+.
FlipVerdict flip_classify(const DrumDatum& d);

struct BlowupChecks {
  long hs_lhs = 0, hs_rhs = 0;  // dim(H_s cap Y+) + k+ vs dim Y - 1
  long ray_length = 0;          // l(R) = k+
  bool hyperplane_identity = false;
  bool ray_identity = false;
  bool bundle_dimension = false;  // dim P_{Y-}(L- + E-) = dim X
  bool x_dimension = false;       // dim X = dim Y + 1
  bool ok() const { return hyperplane_identity && ray_identity && bundle_dimension && x_dimension; }
};
BlowupChecks blowup_dimension_checks(const DrumDatum& d);

// h0 of E- on a Pn base recomputed by the bundles module; -1 when the base is not Pn.
long recomputed_h0_e_minus(const DrumDatum& d);

Json to_json(const DrumDatum& d);
DrumDatum drum_from_json(const Json& j);
Json to_json(const CanonicalIdentityReport& r);
Json to_json(const FlipVerdict& v);
Json to_json(const BlowupChecks& b);

constexpr int kDrumCatalogVersion = 1;
Json drum_catalog_json(const std::vector<DrumDatum>& catalog);
std::vector<DrumDatum> load_drum_catalog(const std::string& path);
std::string default_drum_catalog_path();

}  // namespace pbl
