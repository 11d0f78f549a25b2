#include "doctest.h"

#include <set>

#include "pbl/cohomology.hpp"
#include "pbl/drum.hpp"
#include "pbl/error.hpp"

using namespace pbl;

namespace {

// Dimensions of homogeneous spaces from first principles.
long dim_gr(long k, long n) { return k * (n - k); }
long dim_sg(long k, long m) { return 2 * k * (m - k) + k * (k + 1) / 2; }

}  // namespace

TEST_CASE("tangent drums") {
  const auto cat = drum_catalog();
  const DrumDatum& d = find_drum(cat, "ptangent-2");
  CHECK(d.dim_y == 3);
  CHECK(d.k_minus == 1);
  CHECK(d.k_plus == 1);
  CHECK(d.dim_x == 4);
  CHECK(check_canonical_identity(d).printed);
  CHECK(check_canonical_identity(d).mirrored);
  CHECK(blowup_dimension_checks(d).ok());
  CHECK(flip_classify(d).kind == FlipKind::Flop);
  CHECK(recomputed_h0_e_minus(d) == 3);
}

TEST_CASE("every catalog entry satisfies the integer identities") {
  for (const auto& d : drum_catalog()) {
    CAPTURE(d.id);
    CHECK_NOTHROW(validate(d));
    CHECK(d.dim_y == d.dim_y_minus + d.k_minus);
    CHECK(d.dim_y == d.dim_y_plus + d.k_plus);
    CHECK(check_canonical_identity(d).passes());
    CHECK(blowup_dimension_checks(d).ok());
    const long h0 = recomputed_h0_e_minus(d);
    if (h0 >= 0) CHECK(h0 == d.h0_l_plus);
  }
}

TEST_CASE("a corrupted entry fails the canonical class identity") {
  DrumDatum d = find_drum(drum_catalog(), "ptangent-3");
  d.deg_e_minus -= 1;
  const CanonicalIdentityReport r = check_canonical_identity(d);
  CHECK_FALSE(r.printed);
  CHECK(r.printed_lhs == -4);
  CHECK(r.printed_rhs == -3);
}

TEST_CASE("mirroring swaps the sides") {
  for (const auto& d : drum_catalog()) {
    const DrumDatum m = mirrored(d);
    const DrumDatum mm = mirrored(m);
    CHECK(mm.dim_y_minus == d.dim_y_minus);
    CHECK(mm.k_plus == d.k_plus);
    CHECK(mm.deg_e_minus == d.deg_e_minus);
    CHECK(mm.index_y_plus == d.index_y_plus);
    CHECK(mm.h0_l_minus == d.h0_l_minus);
    CHECK(m.k_minus == d.k_plus);
    CHECK(m.dim_y_minus == d.dim_y_plus);
    CHECK(check_canonical_identity(m).passes() == check_canonical_identity(d).passes());
  }
}

TEST_CASE("flip classification") {
  const auto cat = drum_catalog();
  for (const auto& d : cat) {
    if (d.dim_y_minus < d.dim_y_plus) {
      CHECK_THROWS_AS(flip_classify(d), Error);
      continue;
    }
    const FlipVerdict v = flip_classify(d);
    CHECK(v.deg_k_minus == d.dim_y_plus - d.dim_y_minus);
    CHECK((v.kind == FlipKind::Flop) == (d.dim_y_minus == d.dim_y_plus));
  }
  try {
    flip_classify(find_drum(cat, "pomega-3"));
    FAIL("expected AsymmetricUnknown");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::AsymmetricUnknown);
  }
}

TEST_CASE("invalid data is rejected") {
  DrumDatum d = find_drum(drum_catalog(), "ptangent-2");
  d.k_plus = 0;
  CHECK_THROWS_AS(validate(d), Error);
  CHECK_THROWS_AS(find_drum(drum_catalog(), "nope"), Error);
}

TEST_CASE("catalog ids are unique and dimensions match an independent count") {
  std::set<std::string> ids;
  for (const auto& d : drum_catalog()) {
    CHECK(ids.insert(d.id).second);
    if (d.family == "symplectic" && !d.flagged) {
      // Y- = SG(r+1, 2m), Y+ = SG(r, 2m), r = k- (fibres of Y -> Y- are P^r)
      const long r = d.k_minus;
      long m = 0;
      for (long mm = 2; mm <= 5; ++mm)
        if (dim_sg(r + 1, mm) == d.dim_y_minus && dim_sg(r, mm) == d.dim_y_plus) m = mm;
      CAPTURE(d.id);
      CHECK(m > 0);
    }
    if (d.family == "grassmannian") {
      bool found = false;
      for (long n = 3; n <= 6; ++n)
        for (long r = 1; r + 1 < n; ++r)
          if ((dim_gr(r, n) == d.dim_y_minus && dim_gr(r + 1, n) == d.dim_y_plus) ||
              (dim_gr(r + 1, n) == d.dim_y_minus && dim_gr(r, n) == d.dim_y_plus))
            found = found || d.dim_x == dim_gr(r + 1, n + 1);
      CAPTURE(d.id);
      CHECK(found);
    }
  }
}

TEST_CASE("JSON round trip and the shipped data file") {
  const auto cat = drum_catalog();
  for (const auto& d : cat) CHECK(drum_from_json(to_json(d)) == d);
  const Json j = drum_catalog_json(cat);
  CHECK(j.at("version") == kDrumCatalogVersion);
  const std::string path = std::string(PBL_SOURCE_DIR) + "/data/drum_catalog.json";
  CHECK(load_drum_catalog(path) == cat);
  CHECK_THROWS_AS(load_drum_catalog(path + ".missing"), Error);
}
