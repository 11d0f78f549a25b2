#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "pbl/json_io.hpp"
#include "pbl/matrix.hpp"
#include "pbl/poly.hpp"

namespace pbl {

enum class BundleTag { Type1, Type2, Type3, Type4a, Type4b, Type5, Type6, SectionFstar, DrumBundle, Custom };

std::string tag_name(BundleTag tag);
std::optional<BundleTag> parse_tag(const std::string& s);

// Alpha block "a" of arity n+1 used for relation entries.
std::vector<Block> alpha_block(int n);

// A map O(twist) -> W given by one form per summand of W; entry j has degree d_j - twist.
struct Relation {
  int twist = 0;
  std::vector<MultiPoly> entries;
};

struct BundleParams {
  int d = 0;                  // SectionFstar(d)
  int t = -1;                 // Type5 with n = 2: rk[A:B] - 2
  RatMatrix pencil_a;         // Type5: (r+2) x (n+1)
  RatMatrix pencil_b;
  RatVector section;          // Type3: (l_0..l_n, c_0..c_n, lambda_1..lambda_{r-n})
  std::string drum_id;        // DrumBundle: "ptangent" or "pomega"
  std::size_t extra_trivial = 0;  // trivial summands appended to a catalog bundle
};

// E = coker( (+) O(e_k) -> W = (+) O(d_j) ), optionally with a known resolution tail.
struct BundlePresentation {
  int n = 0;
  std::vector<int> twists;
  std::vector<Relation> relations;
  // Twists of the further terms of a resolution (first syzygies, second syzygies, ...).
  std::vector<std::vector<int>> resolution_tail;
  BundleTag tag = BundleTag::Custom;
  BundleParams params;
  int rank = 0;
  // Target coordinates of each summand: h^0(O(d_j)) indices into x.
  std::vector<std::vector<std::size_t>> layout;
  std::size_t target_size = 0;

  bool is_split() const { return relations.empty(); }
  int first_chern() const;
  // Alternating count of the resolution; must equal rank.
  int resolution_rank() const;
  std::string label() const;
};

// Checks twists, entry degrees, layout shape, rank bookkeeping and generic rank of the
// relation matrix at five seeded random points. Throws BadParams.
void validate(const BundlePresentation& bp);

// Catalog constructors. n is the base dimension, r the rank of E.
BundlePresentation make_type1(int n, int r);
BundlePresentation make_type2(int n, int r);
// section empty means the default (x0 = 1 on the O(1) slot, first T-slot = 1, lambda = 0).
BundlePresentation make_type3(int n, int r, RatVector section = {});
BundlePresentation make_type4a(int r);
BundlePresentation make_type4b(int r);
// Empty pencil means the default: canonical t-pencil for n = 2, shift pencil otherwise.
BundlePresentation make_type5(int n, int r, int t = -1, std::optional<std::pair<RatMatrix, RatMatrix>> pencil = {});
BundlePresentation make_type6(int n, int r);
BundlePresentation make_section_fstar(int d, int n, int r);
BundlePresentation make_drum_bundle(const std::string& id, int n);

struct CatalogRequest {
  std::string tag;
  int n = 2;
  int r = -1;  // -1: smallest admissible
  int t = -1;
  int d = 2;
  std::string id;
};
BundlePresentation catalog_bundle(const CatalogRequest& req);

// O (+) E: one more trivial summand (placed last, new target coordinate last).
BundlePresentation add_trivial_summand(const BundlePresentation& bp);

Json to_json(const BundlePresentation& bp);
BundlePresentation presentation_from_json(const Json& j);

// Standard catalog instances used by reports and acceptance runs.
std::vector<BundlePresentation> standard_catalog();

}  // namespace pbl
