#include "pbl/drum.hpp"

#include <fstream>

#include "pbl/bundle.hpp"
#include "pbl/cohomology.hpp"
#include "pbl/error.hpp"
#include "pbl/sections.hpp"

#ifndef PBL_DATA_DIR
#define PBL_DATA_DIR "data"
#endif

namespace pbl {

namespace {

std::string s(long v) { return std::to_string(v); }
std::string pn(long n) { return "P^" + s(n); }

long gr_dim(long k, long n) { return k * (n - k); }
long sg_dim(long k, long m) { return k * (4 * m - 3 * k + 1) / 2; }
long og_dim(long m) { return m * (m + 1) / 2; }  // OG(m, 2m+1)

long sg_h0(long k, long m) { return binomial(2 * m, k) - (k >= 2 ? binomial(2 * m, k - 2) : 0); }

DrumDatum finish(DrumDatum d) {
  d.k_minus = d.dim_y - d.dim_y_minus;
  d.k_plus = d.dim_y - d.dim_y_plus;
  validate(d);
  return d;
}

// Y = P(T_Pn), both sides Pn, drum Q_2n. E = T(-1) on each side.
DrumDatum tangent_drum(long n) {
  DrumDatum d;
  d.id = "ptangent-" + s(n);
  d.family = "tangent";
  d.y = "P(T_" + pn(n) + ")";
  d.y_minus = d.y_plus = pn(n);
  d.x = "Q_" + s(2 * n);
  d.dim_y = 2 * n - 1;
  d.dim_y_minus = d.dim_y_plus = n;
  d.dim_x = 2 * n;
  d.deg_e_minus = d.deg_e_plus = 1;
  d.index_y_minus = d.index_y_plus = n + 1;
  d.h0_l_minus = d.h0_l_plus = n + 1;
  d.base_bundle = "T(-1)";
  d.base_n = n;
  return finish(d);
}

// Flags (U_r in U_r+1) in k^N: Y- = Gr(r, N) with E- = Q*(1), Y+ = Gr(r+1, N) with
// E+ = U (x) det U*. The drum is Gr(r+1, N+1).
DrumDatum grassmann_drum(long r, long m, bool swap_sides) {
  const long N = m + 1;
  DrumDatum d;
  d.family = "grassmannian";
  d.y = "F(" + s(r) + "," + s(r + 1) + ";" + s(N) + ")";
  d.y_minus = "Gr(" + s(r) + "," + s(N) + ")";
  d.y_plus = "Gr(" + s(r + 1) + "," + s(N) + ")";
  d.x = "Gr(" + s(r + 1) + "," + s(N + 1) + ")";
  d.dim_y_minus = gr_dim(r, N);
  d.dim_y_plus = gr_dim(r + 1, N);
  d.dim_y = d.dim_y_minus + (N - r - 1);
  d.dim_x = gr_dim(r + 1, N + 1);
  d.deg_e_minus = N - r - 1;
  d.deg_e_plus = r;
  d.index_y_minus = d.index_y_plus = N;
  d.h0_l_minus = binomial(N, r);
  d.h0_l_plus = binomial(N, r + 1);
  if (r == 1) {
    d.base_bundle = "Omega(2)";
    d.base_n = m;
  }
  if (swap_sides) {
    d = mirrored(d);
    d.id = "gr-center-small-" + s(r) + "-" + s(m);
  } else {
    d.id = "gr-center-large-" + s(r) + "-" + s(m);
  }
  return finish(d);
}

// Y = P_Pn(Omega), Y- = Pn, Y+ = Gr(2, n+1), drum Gr(2, n+2).
DrumDatum cotangent_drum(long n) {
  DrumDatum d = grassmann_drum(1, n, false);
  d.id = "pomega-" + s(n);
  d.family = "cotangent";
  d.y = "P(Omega_" + pn(n) + ")";
  d.y_minus = pn(n);
  return d;
}

// Both sides are the spinor variety OG(m-1, 2m-1); with det U* = L^2 the bundle U (x) L
// has degree m - 2.
DrumDatum orthogonal_drum(long m) {
  DrumDatum d;
  d.id = "og-" + s(m);
  d.family = "orthogonal";
  d.y = "OG(m-1,m;2m) flags, m=" + s(m);
  d.y_minus = "OG(" + s(m - 1) + "," + s(2 * m - 1) + ")";
  d.y_plus = "OG_+(" + s(m) + "," + s(2 * m) + ")";
  d.x = "OG(" + s(m) + "," + s(2 * m + 1) + ")";
  d.dim_x = og_dim(m);
  d.dim_y = d.dim_x - 1;
  d.dim_y_minus = d.dim_y_plus = og_dim(m - 1);
  d.deg_e_minus = d.deg_e_plus = m - 2;
  d.index_y_minus = d.index_y_plus = 2 * (m - 1);
  d.h0_l_minus = d.h0_l_plus = 1L << (m - 1);
  return finish(d);
}

// Isotropic flags (U_r in U_r+1) in a symplectic k^2m. Y- = SG(r+1, 2m) with
// E- = U (x) det U*, Y+ = SG(r, 2m) with E+ = (U^perp/U)(1). The drum is the odd
// symplectic Grassmannian of (r+1)-planes in k^{2m+1}.
DrumDatum symplectic_drum(long r, long m, bool as_printed_second) {
  DrumDatum d;
  d.family = "symplectic";
  d.y = "SF(" + s(r) + "," + s(r + 1) + ";" + s(2 * m) + ")";
  d.y_minus = "SG(" + s(r + 1) + "," + s(2 * m) + ")";
  d.y_plus = "SG(" + s(r) + "," + s(2 * m) + ")";
  d.x = "Gr_w(" + s(r + 1) + "," + s(2 * m + 1) + ")";
  d.dim_y_minus = sg_dim(r + 1, m);
  d.dim_y_plus = sg_dim(r, m);
  d.dim_y = d.dim_y_minus + r;
  d.dim_x = (r + 1) * (4 * m - 3 * r) / 2;
  d.deg_e_minus = r;
  d.deg_e_plus = 2 * m - 2 * r;
  d.index_y_minus = 2 * m - r;
  d.index_y_plus = 2 * m - r + 1;
  d.h0_l_minus = sg_h0(r + 1, m);
  d.h0_l_plus = sg_h0(r, m);
  if (!as_printed_second) {
    d.id = "sg-a-" + s(r) + "-" + s(m);
    return finish(d);
  }
  // The second statement names SG(r+1, 2m) both as center and as base. The integers use
  // the mirrored orientation; the names are kept as printed.
  d = mirrored(d);
  d.id = "sg-b-" + s(r) + "-" + s(m);
  d.y_minus = d.y_plus = "SG(" + s(r + 1) + "," + s(2 * m) + ")";
  d.flagged = true;
  d.note = "center and base are both printed as SG(" + s(r + 1) + "," + s(2 * m) +
           "); integers follow the mirrored orientation with base SG(" + s(r) + "," + s(2 * m) + ")";
  return finish(d);
}

// Y = P^m x P^n (m >= n), trivial bundles, drum P^{m+n+1}.
DrumDatum segre_drum(long m, long n) {
  DrumDatum d;
  d.id = "segre-" + s(m) + "-" + s(n);
  d.family = "segre";
  d.y = pn(m) + "x" + pn(n);
  d.y_minus = pn(m);
  d.y_plus = pn(n);
  d.x = pn(m + n + 1);
  d.dim_y = m + n;
  d.dim_y_minus = m;
  d.dim_y_plus = n;
  d.dim_x = m + n + 1;
  d.deg_e_minus = d.deg_e_plus = 0;
  d.index_y_minus = m + 1;
  d.index_y_plus = n + 1;
  d.h0_l_minus = m + 1;
  d.h0_l_plus = n + 1;
  d.base_bundle = "trivial";
  d.base_n = m;
  return finish(d);
}

}  // namespace

void validate(const DrumDatum& d) {
  auto fail = [&](const std::string& why) { throw Error(ErrorCode::BadParams, "drum " + d.id + ": " + why); };
  if (d.dim_y < 0 || d.dim_y_minus < 0 || d.dim_y_plus < 0 || d.dim_x < 0) fail("negative dimension");
  if (d.k_minus < 1 || d.k_plus < 1) fail("k must be at least 1");
  if (d.k_minus != d.dim_y - d.dim_y_minus || d.k_plus != d.dim_y - d.dim_y_plus) fail("k does not match dimensions");
  if (d.index_y_minus < 0 || d.index_y_plus < 0 || d.h0_l_minus < 0 || d.h0_l_plus < 0) fail("negative index or h0");
}

DrumDatum mirrored(const DrumDatum& d) {
  DrumDatum m = d;
  std::swap(m.y_minus, m.y_plus);
  std::swap(m.dim_y_minus, m.dim_y_plus);
  std::swap(m.k_minus, m.k_plus);
  std::swap(m.deg_e_minus, m.deg_e_plus);
  std::swap(m.index_y_minus, m.index_y_plus);
  std::swap(m.h0_l_minus, m.h0_l_plus);
  if (m.base_bundle != "trivial") {
    m.base_bundle.clear();
    m.base_n = 0;
  }
  m.id = d.id + "-mirror";
  return m;
}

std::vector<DrumDatum> drum_catalog() {
  std::vector<DrumDatum> out;
  for (long n = 2; n <= 5; ++n) out.push_back(tangent_drum(n));
  for (long n = 3; n <= 5; ++n) out.push_back(cotangent_drum(n));
  for (long m = 2; m <= 5; ++m)
    for (long r = 1; r <= m - 1; ++r) {
      out.push_back(grassmann_drum(r, m, false));
      out.push_back(grassmann_drum(r, m, true));
    }
  for (long m = 3; m <= 5; ++m) out.push_back(orthogonal_drum(m));
  for (long m = 2; m <= 5; ++m)
    for (long r = 1; r <= m - 1; ++r) {
      out.push_back(symplectic_drum(r, m, false));
      out.push_back(symplectic_drum(r, m, true));
    }
  for (long m = 1; m <= 5; ++m)
    for (long n = 1; n <= m; ++n) out.push_back(segre_drum(m, n));
  return out;
}

const DrumDatum& find_drum(const std::vector<DrumDatum>& catalog, const std::string& id) {
  for (const auto& d : catalog)
    if (d.id == id) return d;
  throw Error(ErrorCode::BadInput, "unknown drum id: " + id);
}

CanonicalIdentityReport check_canonical_identity(const DrumDatum& d) {
  CanonicalIdentityReport r;
  r.printed_lhs = d.deg_e_minus - d.index_y_minus;
  r.printed_rhs = -(d.k_plus + 1);
  r.printed = r.printed_lhs == r.printed_rhs;
  r.mirrored_lhs = d.deg_e_plus - d.index_y_plus;
  r.mirrored_rhs = -(d.k_minus + 1);
  r.mirrored = r.mirrored_lhs == r.mirrored_rhs;
  r.alternate_lhs = d.deg_e_plus - d.index_y_minus;
  r.alternate_rhs = -(d.k_plus + 1);
  r.alternate = r.alternate_lhs == r.alternate_rhs;
  return r;
}

FlipVerdict flip_classify(const DrumDatum& d) {
  if (d.dim_y_minus < d.dim_y_plus)
    throw Error(ErrorCode::AsymmetricUnknown, "dim Y- < dim Y+ for " + d.id + "; classify the mirrored drum");
  FlipVerdict v;
  v.kind = d.dim_y_minus > d.dim_y_plus ? FlipKind::Flip : FlipKind::Flop;
  v.deg_k_minus = d.k_minus - d.k_plus;
  v.deg_k_plus = -v.deg_k_minus;
  return v;
}

BlowupChecks blowup_dimension_checks(const DrumDatum& d) {
  BlowupChecks b;
  b.hs_lhs = (d.dim_y_plus - 1) + d.k_plus;
  b.hs_rhs = d.dim_y - 1;
  b.hyperplane_identity = b.hs_lhs == b.hs_rhs;
  b.ray_length = d.k_plus;
  b.ray_identity = b.ray_length == d.dim_y - d.dim_y_plus && b.ray_length >= 1;
  b.bundle_dimension = d.dim_y_minus + (d.k_minus + 1) == d.dim_x;
  b.x_dimension = d.dim_x == d.dim_y + 1;
  return b;
}

long recomputed_h0_e_minus(const DrumDatum& d) {
  const int n = static_cast<int>(d.base_n);
  if (d.base_bundle == "T(-1)") {
    // O(1) + T(-1) minus the O(1) part
    long total = section_dimension(make_drum_bundle("ptangent", n), 1, 0).dimension;
    return total - h0_line(n, 1);
  }
  if (d.base_bundle == "Omega(2)") {
    if (n >= 3) {
      long total = section_dimension(make_drum_bundle("pomega", n), 1, 0).dimension;
      return total - h0_line(n, 1);
    }
    return bott_h(n, 1, 0, 2);
  }
  if (d.base_bundle == "trivial") return static_cast<long>(d.dim_y - d.dim_y_minus + 1) * h0_line(n, 0);
  return -1;
}

Json to_json(const DrumDatum& d) {
  Json j;
  j["id"] = d.id;
  j["family"] = d.family;
  j["Y"] = d.y;
  j["Y_minus"] = d.y_minus;
  j["Y_plus"] = d.y_plus;
  j["X"] = d.x;
  j["dim_Y"] = d.dim_y;
  j["dim_Y_minus"] = d.dim_y_minus;
  j["dim_Y_plus"] = d.dim_y_plus;
  j["dim_X"] = d.dim_x;
  j["k_minus"] = d.k_minus;
  j["k_plus"] = d.k_plus;
  j["deg_E_minus"] = d.deg_e_minus;
  j["deg_E_plus"] = d.deg_e_plus;
  j["index_Y_minus"] = d.index_y_minus;
  j["index_Y_plus"] = d.index_y_plus;
  j["h0_L_minus"] = d.h0_l_minus;
  j["h0_L_plus"] = d.h0_l_plus;
  j["base_bundle"] = d.base_bundle;
  j["base_n"] = d.base_n;
  j["flagged"] = d.flagged;
  j["note"] = d.note;
  return j;
}

DrumDatum drum_from_json(const Json& j) {
  DrumDatum d;
  try {
    d.id = j.at("id").get<std::string>();
    d.family = j.at("family").get<std::string>();
    d.y = j.at("Y").get<std::string>();
    d.y_minus = j.at("Y_minus").get<std::string>();
    d.y_plus = j.at("Y_plus").get<std::string>();
    d.x = j.at("X").get<std::string>();
    d.dim_y = j.at("dim_Y").get<long>();
    d.dim_y_minus = j.at("dim_Y_minus").get<long>();
    d.dim_y_plus = j.at("dim_Y_plus").get<long>();
    d.dim_x = j.at("dim_X").get<long>();
    d.k_minus = j.at("k_minus").get<long>();
    d.k_plus = j.at("k_plus").get<long>();
    d.deg_e_minus = j.at("deg_E_minus").get<long>();
    d.deg_e_plus = j.at("deg_E_plus").get<long>();
    d.index_y_minus = j.at("index_Y_minus").get<long>();
    d.index_y_plus = j.at("index_Y_plus").get<long>();
    d.h0_l_minus = j.at("h0_L_minus").get<long>();
    d.h0_l_plus = j.at("h0_L_plus").get<long>();
    d.base_bundle = j.value("base_bundle", "");
    d.base_n = j.value("base_n", 0L);
    d.flagged = j.value("flagged", false);
    d.note = j.value("note", "");
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::BadInput, std::string("malformed drum record: ") + e.what());
  }
  validate(d);
  return d;
}

Json to_json(const CanonicalIdentityReport& r) {
  return Json{{"printed", {{"lhs", r.printed_lhs}, {"rhs", r.printed_rhs}, {"holds", r.printed}}},
              {"mirrored", {{"lhs", r.mirrored_lhs}, {"rhs", r.mirrored_rhs}, {"holds", r.mirrored}}},
              {"alternate", {{"lhs", r.alternate_lhs}, {"rhs", r.alternate_rhs}, {"holds", r.alternate}}},
              {"pass", r.passes()}};
}

Json to_json(const FlipVerdict& v) {
  return Json{{"kind", v.kind == FlipKind::Flip ? "Flip" : "Flop"},
              {"deg_K_minus", v.deg_k_minus},
              {"deg_K_plus", v.deg_k_plus}};
}

Json to_json(const BlowupChecks& b) {
  return Json{{"hyperplane_section", {{"lhs", b.hs_lhs}, {"rhs", b.hs_rhs}, {"holds", b.hyperplane_identity}}},
              {"ray_length", b.ray_length},
              {"ray_identity", b.ray_identity},
              {"bundle_dimension", b.bundle_dimension},
              {"x_dimension", b.x_dimension},
              {"pass", b.ok()}};
}

Json drum_catalog_json(const std::vector<DrumDatum>& catalog) {
  Json entries = Json::array();
  for (const auto& d : catalog) entries.push_back(to_json(d));
  return Json{{"version", kDrumCatalogVersion}, {"entries", entries}};
}

std::vector<DrumDatum> load_drum_catalog(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::BadInput, "cannot open " + path);
  Json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::BadInput, std::string("bad JSON in ") + path + ": " + e.what());
  }
  if (j.value("version", 0) != kDrumCatalogVersion) throw Error(ErrorCode::BadInput, "unsupported catalog version");
  std::vector<DrumDatum> out;
  for (const auto& e : j.at("entries")) out.push_back(drum_from_json(e));
  return out;
}

std::string default_drum_catalog_path() { return std::string(PBL_DATA_DIR) + "/drum_catalog.json"; }

}  // namespace pbl
