#include "pbl/bundle.hpp"

#include <algorithm>
#include <set>

#include "pbl/cohomology.hpp"
#include "pbl/error.hpp"
#include "pbl/pencil.hpp"
#include "pbl/random.hpp"

namespace pbl {

std::string tag_name(BundleTag tag) {
  switch (tag) {
    case BundleTag::Type1: return "Type1";
    case BundleTag::Type2: return "Type2";
    case BundleTag::Type3: return "Type3";
    case BundleTag::Type4a: return "Type4a";
    case BundleTag::Type4b: return "Type4b";
    case BundleTag::Type5: return "Type5";
    case BundleTag::Type6: return "Type6";
    case BundleTag::SectionFstar: return "SectionFstar";
    case BundleTag::DrumBundle: return "DrumBundle";
    case BundleTag::Custom: return "Custom";
  }
  return "Custom";
}

std::optional<BundleTag> parse_tag(const std::string& s) {
  std::string l = s;
  std::transform(l.begin(), l.end(), l.begin(), [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  if (l == "type1") return BundleTag::Type1;
  if (l == "type2") return BundleTag::Type2;
  if (l == "type3") return BundleTag::Type3;
  if (l == "type4a" || l == "type4") return BundleTag::Type4a;
  if (l == "type4b") return BundleTag::Type4b;
  if (l == "type5") return BundleTag::Type5;
  if (l == "type6") return BundleTag::Type6;
  if (l == "sectionfstar" || l == "fstar") return BundleTag::SectionFstar;
  if (l == "drumbundle" || l == "drum") return BundleTag::DrumBundle;
  if (l == "custom") return BundleTag::Custom;
  return std::nullopt;
}

std::vector<Block> alpha_block(int n) { return {Block{"a", static_cast<std::size_t>(n) + 1}}; }

int BundlePresentation::first_chern() const {
  int c = 0;
  for (int d : twists) c += d;
  for (const auto& rel : relations) c -= rel.twist;
  int sign = 1;
  for (const auto& step : resolution_tail) {
    for (int e : step) c += sign * e;
    sign = -sign;
  }
  return c;
}

int BundlePresentation::resolution_rank() const {
  int r = static_cast<int>(twists.size()) - static_cast<int>(relations.size());
  int sign = 1;
  for (const auto& step : resolution_tail) {
    r += sign * static_cast<int>(step.size());
    sign = -sign;
  }
  return r;
}

std::string BundlePresentation::label() const {
  std::string s = tag_name(tag);
  if (tag == BundleTag::SectionFstar) s += "(" + std::to_string(params.d) + ")";
  if (tag == BundleTag::DrumBundle) s += "(" + params.drum_id + ")";
  s += "[n=" + std::to_string(n) + ",r=" + std::to_string(rank);
  if (tag == BundleTag::Type5 && params.t >= 0) s += ",t=" + std::to_string(params.t);
  if (params.extra_trivial) s += ",+O^" + std::to_string(params.extra_trivial);
  return s + "]";
}

void validate(const BundlePresentation& bp) {
  auto fail = [](const std::string& m) { throw Error(ErrorCode::BadParams, m); };
  if (bp.n < 1) fail("base dimension must be positive");
  if (bp.twists.empty()) fail("W needs at least one summand");
  const std::size_t nw = bp.twists.size();
  for (int d : bp.twists) {
    if (d < 0) fail("summand twists must be nonnegative");
    if (!bp.is_split() && d > 1) fail("twists above 1 are only supported for split bundles");
  }
  if (bp.layout.size() != nw) fail("layout needs one entry per summand");
  std::set<std::size_t> seen;
  for (std::size_t j = 0; j < nw; ++j) {
    if (static_cast<Count>(bp.layout[j].size()) != h0_line(bp.n, bp.twists[j])) fail("layout block has the wrong size");
    for (auto i : bp.layout[j]) {
      if (i >= bp.target_size || !seen.insert(i).second) fail("layout indices must be distinct and in range");
    }
  }
  if (seen.size() != bp.target_size) fail("layout must cover every target coordinate");
  const auto ab = alpha_block(bp.n);
  for (const auto& rel : bp.relations) {
    if (rel.entries.size() != nw) fail("relation needs one entry per summand");
    bool nonzero = false;
    for (std::size_t j = 0; j < nw; ++j) {
      const auto& f = rel.entries[j];
      if (f.is_zero()) continue;
      nonzero = true;
      if (!(f.blocks() == ab)) fail("relation entries must be forms in the alpha block");
      if (!f.is_multihomogeneous() || f.degree_in_block(0) != bp.twists[j] - rel.twist)
        fail("relation entry has the wrong degree");
    }
    if (!nonzero) fail("zero relation column");
  }
  if (bp.rank != bp.resolution_rank()) fail("rank does not match the resolution");
  if (bp.rank < 1) fail("rank must be positive");
  if (!bp.relations.empty()) {
    Rng rng(0x5eed);
    std::size_t best = 0;
    for (int trial = 0; trial < 5; ++trial) {
      RatVector a(static_cast<std::size_t>(bp.n) + 1);
      for (auto& x : a) x = rng.uniform(-9, 9);
      RatMatrix m(nw, bp.relations.size());
      for (std::size_t k = 0; k < bp.relations.size(); ++k)
        for (std::size_t j = 0; j < nw; ++j)
          if (!bp.relations[k].entries[j].is_zero()) m(j, k) = bp.relations[k].entries[j].evaluate(a);
      best = std::max(best, mat_rank(m));
    }
    if (static_cast<int>(best) != static_cast<int>(nw) - bp.rank)
      fail("relation columns have the wrong generic rank");
  }
}

namespace {

MultiPoly zero_alpha(int n) { return MultiPoly(alpha_block(n)); }

MultiPoly const_alpha(int n, const Rational& c) { return MultiPoly::constant(alpha_block(n), c); }

MultiPoly alpha_var(int n, std::size_t i) { return MultiPoly::variable(alpha_block(n), 0, i); }

MultiPoly alpha_power(int n, std::size_t i, unsigned k) {
  Exponent e(static_cast<std::size_t>(n) + 1, 0);
  e[i] = k;
  return MultiPoly::monomial(alpha_block(n), e);
}

// Consecutive layout in summand order.
void consecutive_layout(BundlePresentation& bp) {
  bp.layout.clear();
  std::size_t next = 0;
  for (int d : bp.twists) {
    std::vector<std::size_t> blk;
    for (Count i = 0; i < h0_line(bp.n, d); ++i) blk.push_back(next++);
    bp.layout.push_back(std::move(blk));
  }
  bp.target_size = next;
}

// W = O(1) + O^{n+1} + O^{extra}; x_{2i} is the O(1) block, x_{2i+1} the i-th middle slot,
// trivial slots follow from 2n+2.
void interleaved_layout(BundlePresentation& bp, std::size_t extra) {
  const std::size_t n1 = static_cast<std::size_t>(bp.n) + 1;
  bp.layout.clear();
  std::vector<std::size_t> u;
  for (std::size_t i = 0; i < n1; ++i) u.push_back(2 * i);
  bp.layout.push_back(u);
  for (std::size_t i = 0; i < n1; ++i) bp.layout.push_back({2 * i + 1});
  for (std::size_t k = 0; k < extra; ++k) bp.layout.push_back({2 * n1 + k});
  bp.target_size = 2 * n1 + extra;
}

std::vector<std::pair<std::size_t, std::size_t>> pairs_of(std::size_t m) {
  std::vector<std::pair<std::size_t, std::size_t>> p;
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j) p.emplace_back(i, j);
  return p;
}

// Contractions iota_alpha(e_i ^ e_j ^ e_k) into the pair slots starting at `offset`.
std::vector<Relation> contraction_relations(int n, std::size_t nw, std::size_t offset) {
  const std::size_t m = static_cast<std::size_t>(n) + 1;
  auto pairs = pairs_of(m);
  auto slot = [&](std::size_t i, std::size_t j) {
    return offset + static_cast<std::size_t>(std::find(pairs.begin(), pairs.end(), std::make_pair(i, j)) - pairs.begin());
  };
  std::vector<Relation> rels;
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j)
      for (std::size_t k = j + 1; k < m; ++k) {
        Relation rel{-1, std::vector<MultiPoly>(nw, zero_alpha(n))};
        rel.entries[slot(j, k)] = alpha_var(n, i);
        rel.entries[slot(i, k)] = -alpha_var(n, j);
        rel.entries[slot(i, j)] = alpha_var(n, k);
        rels.push_back(std::move(rel));
      }
  return rels;
}

// Koszul tail of Omega(2): Lambda^k V (-(k-2)) for k = 4..n+1.
std::vector<std::vector<int>> omega_tail(int n) {
  std::vector<std::vector<int>> tail;
  for (int k = 4; k <= n + 1; ++k) tail.emplace_back(static_cast<std::size_t>(binomial(n + 1, k)), -(k - 2));
  return tail;
}

}  // namespace

BundlePresentation make_type1(int n, int r) {
  if (n < 2 || r < 2) throw Error(ErrorCode::BadParams, "Type1 needs n >= 2 and r >= 2");
  BundlePresentation bp;
  bp.n = n;
  bp.tag = BundleTag::Type1;
  bp.twists.assign(static_cast<std::size_t>(r), 0);
  bp.twists[0] = 2;
  bp.rank = r;
  consecutive_layout(bp);
  validate(bp);
  return bp;
}

BundlePresentation make_type2(int n, int r) {
  if (n < 2 || r < 2) throw Error(ErrorCode::BadParams, "Type2 needs n >= 2 and r >= 2");
  BundlePresentation bp;
  bp.n = n;
  bp.tag = BundleTag::Type2;
  bp.twists.assign(static_cast<std::size_t>(r), 0);
  bp.twists[0] = bp.twists[1] = 1;
  bp.rank = r;
  consecutive_layout(bp);
  validate(bp);
  return bp;
}

BundlePresentation make_type3(int n, int r, RatVector section) {
  if (n < 2 || r < n) throw Error(ErrorCode::BadParams, "Type3 needs n >= 2 and r >= n");
  const std::size_t n1 = static_cast<std::size_t>(n) + 1;
  const std::size_t extra = static_cast<std::size_t>(r - n);
  if (section.empty()) {
    section.assign(2 * n1 + extra, 0);
    section[0] = 1;
    section[n1] = 1;
  }
  if (section.size() != 2 * n1 + extra) throw Error(ErrorCode::BadParams, "Type3 section has the wrong length");
  // Nowhere vanishing: some lambda nonzero, or l(c) != 0.
  bool lambda_nonzero = false;
  for (std::size_t k = 0; k < extra; ++k)
    if (!section[2 * n1 + k].is_zero()) lambda_nonzero = true;
  Rational lc = 0;
  for (std::size_t i = 0; i < n1; ++i) lc += section[i] * section[n1 + i];
  if (!lambda_nonzero && lc.is_zero()) throw Error(ErrorCode::BadParams, "Type3 section vanishes somewhere");

  BundlePresentation bp;
  bp.n = n;
  bp.tag = BundleTag::Type3;
  bp.params.section = section;
  bp.twists.assign(1 + n1 + extra, 0);
  bp.twists[0] = 1;
  const std::size_t nw = bp.twists.size();
  Relation euler{-1, std::vector<MultiPoly>(nw, zero_alpha(n))};
  for (std::size_t i = 0; i < n1; ++i) euler.entries[1 + i] = alpha_var(n, i);
  Relation sec{0, std::vector<MultiPoly>(nw, zero_alpha(n))};
  for (std::size_t i = 0; i < n1; ++i) sec.entries[0] += alpha_var(n, i) * section[i];
  for (std::size_t i = 0; i < n1; ++i) sec.entries[1 + i] = const_alpha(n, section[n1 + i]);
  for (std::size_t k = 0; k < extra; ++k) sec.entries[1 + n1 + k] = const_alpha(n, section[2 * n1 + k]);
  bp.relations = {euler, sec};
  bp.rank = r;
  interleaved_layout(bp, extra);
  validate(bp);
  return bp;
}

namespace {

BundlePresentation omega_like(int n, std::size_t extra, BundleTag tag, bool with_form) {
  BundlePresentation bp;
  bp.n = n;
  bp.tag = tag;
  const std::size_t np = static_cast<std::size_t>(binomial(n + 1, 2));
  bp.twists.assign(np + extra, 0);
  bp.relations = contraction_relations(n, bp.twists.size(), 0);
  bp.resolution_tail = omega_tail(n);
  if (with_form) {
    // omega = e01 + e23, a nondegenerate form, hence nowhere zero in Omega(2).
    Relation w{0, std::vector<MultiPoly>(bp.twists.size(), zero_alpha(n))};
    w.entries[0] = const_alpha(n, 1);
    w.entries[5] = const_alpha(n, 1);
    bp.relations.push_back(std::move(w));
  }
  bp.rank = bp.resolution_rank();
  consecutive_layout(bp);
  validate(bp);
  return bp;
}

}  // namespace

BundlePresentation make_type4a(int r) {
  if (r < 3) throw Error(ErrorCode::BadParams, "Type4a needs r >= 3");
  return omega_like(3, static_cast<std::size_t>(r - 3), BundleTag::Type4a, false);
}

BundlePresentation make_type4b(int r) {
  if (r < 2) throw Error(ErrorCode::BadParams, "Type4b needs r >= 2");
  return omega_like(3, static_cast<std::size_t>(r - 2), BundleTag::Type4b, true);
}

BundlePresentation make_type5(int n, int r, int t, std::optional<std::pair<RatMatrix, RatMatrix>> pencil) {
  if (n < 2 || r < n) throw Error(ErrorCode::BadParams, "Type5 needs n >= 2 and r >= n");
  RatMatrix A, B;
  if (pencil) {
    A = pencil->first;
    B = pencil->second;
    if (A.rows() != static_cast<std::size_t>(r) + 2 || A.cols() != static_cast<std::size_t>(n) + 1 ||
        B.rows() != A.rows() || B.cols() != A.cols())
      throw Error(ErrorCode::BadParams, "Type5 pencil must be (r+2) x (n+1)");
  } else if (n == 2) {
    if (t < 0) t = std::min(r, 4);
    PencilPair p = canonical_pencil(t, r);
    A = p.A();
    B = p.B();
  } else {
    A = RatMatrix(static_cast<std::size_t>(r) + 2, static_cast<std::size_t>(n) + 1);
    B = A;
    for (std::size_t i = 0; i <= static_cast<std::size_t>(n); ++i) {
      A(i, i) = 1;
      B(i + 1, i) = 1;
    }
  }
  if (!pencil_regular(A, B)) throw Error(ErrorCode::IrregularPencil, "Type5 needs a regular pencil");
  BundlePresentation bp;
  bp.n = n;
  bp.tag = BundleTag::Type5;
  bp.params.pencil_a = A;
  bp.params.pencil_b = B;
  bp.params.t = n == 2 ? static_cast<int>(mat_rank(A.hconcat(B))) - 2 : -1;
  bp.twists.assign(static_cast<std::size_t>(r) + 2, 0);
  for (const RatMatrix* M : {&A, &B}) {
    Relation rel{-1, {}};
    for (std::size_t j = 0; j < M->rows(); ++j) {
      MultiPoly f = zero_alpha(n);
      for (std::size_t i = 0; i < M->cols(); ++i) f += alpha_var(n, i) * (*M)(j, i);
      rel.entries.push_back(f);
    }
    bp.relations.push_back(std::move(rel));
  }
  bp.rank = r;
  consecutive_layout(bp);
  validate(bp);
  return bp;
}

BundlePresentation make_type6(int n, int r) {
  if (n < 2 || r < n) throw Error(ErrorCode::BadParams, "Type6 needs n >= 2 and r >= n");
  BundlePresentation bp;
  bp.n = n;
  bp.tag = BundleTag::Type6;
  bp.twists.assign(static_cast<std::size_t>(r) + 1, 0);
  Relation q{-2, std::vector<MultiPoly>(bp.twists.size(), zero_alpha(n))};
  for (std::size_t i = 0; i <= static_cast<std::size_t>(n); ++i) q.entries[i] = alpha_power(n, i, 2);
  bp.relations = {q};
  bp.rank = r;
  consecutive_layout(bp);
  validate(bp);
  return bp;
}

BundlePresentation make_section_fstar(int d, int n, int r) {
  if (d < 2 || n < 2 || r < 0) throw Error(ErrorCode::BadParams, "SectionFstar needs d >= 2, n >= 2, r >= 0");
  const std::size_t n1 = static_cast<std::size_t>(n) + 1;
  BundlePresentation bp;
  bp.n = n;
  bp.tag = BundleTag::SectionFstar;
  bp.params.d = d;
  bp.twists.assign(1 + n1 + static_cast<std::size_t>(r), 0);
  bp.twists[0] = 1;
  Relation rel{-(d - 1), std::vector<MultiPoly>(bp.twists.size(), zero_alpha(n))};
  for (std::size_t i = 0; i < n1; ++i) rel.entries[1 + i] = alpha_power(n, i, static_cast<unsigned>(d - 1));
  bp.relations = {rel};
  bp.rank = 1 + n + r;
  interleaved_layout(bp, static_cast<std::size_t>(r));
  validate(bp);
  return bp;
}

BundlePresentation make_drum_bundle(const std::string& id, int n) {
  if (n < 2) throw Error(ErrorCode::BadParams, "drum bundles need n >= 2");
  const std::size_t n1 = static_cast<std::size_t>(n) + 1;
  BundlePresentation bp;
  bp.n = n;
  bp.tag = BundleTag::DrumBundle;
  bp.params.drum_id = id;
  if (id == "ptangent") {
    // O(1) + T(-1)
    bp.twists.assign(1 + n1, 0);
    bp.twists[0] = 1;
    Relation euler{-1, std::vector<MultiPoly>(bp.twists.size(), zero_alpha(n))};
    for (std::size_t i = 0; i < n1; ++i) euler.entries[1 + i] = alpha_var(n, i);
    bp.relations = {euler};
    bp.rank = n + 1;
    interleaved_layout(bp, 0);
  } else if (id == "pomega") {
    // O(1) + Omega(2)
    const std::size_t np = static_cast<std::size_t>(binomial(n + 1, 2));
    bp.twists.assign(1 + np, 0);
    bp.twists[0] = 1;
    bp.relations = contraction_relations(n, bp.twists.size(), 1);
    bp.resolution_tail = omega_tail(n);
    bp.rank = bp.resolution_rank();
    consecutive_layout(bp);
  } else {
    throw Error(ErrorCode::BadParams, "unknown drum bundle id '" + id + "' (ptangent|pomega)");
  }
  validate(bp);
  return bp;
}

BundlePresentation catalog_bundle(const CatalogRequest& req) {
  auto tag = parse_tag(req.tag);
  if (!tag) throw Error(ErrorCode::UnknownTag, "unknown bundle tag '" + req.tag + "'");
  const int n = req.n;
  switch (*tag) {
    case BundleTag::Type1: return make_type1(n, req.r < 0 ? 2 : req.r);
    case BundleTag::Type2: return make_type2(n, req.r < 0 ? 2 : req.r);
    case BundleTag::Type3: return make_type3(n, req.r < 0 ? n : req.r);
    case BundleTag::Type4a:
      if (n != 3) throw Error(ErrorCode::BadParams, "Type4 needs n = 3");
      return make_type4a(req.r < 0 ? 3 : req.r);
    case BundleTag::Type4b:
      if (n != 3) throw Error(ErrorCode::BadParams, "Type4 needs n = 3");
      return make_type4b(req.r < 0 ? 2 : req.r);
    case BundleTag::Type5: {
      int r = req.r;
      if (r < 0) r = (n == 2 && req.t > 0) ? req.t : n;
      return make_type5(n, r, req.t);
    }
    case BundleTag::Type6: return make_type6(n, req.r < 0 ? n : req.r);
    case BundleTag::SectionFstar: return make_section_fstar(req.d, n, req.r < 0 ? 0 : req.r);
    case BundleTag::DrumBundle: return make_drum_bundle(req.id.empty() ? "ptangent" : req.id, n);
    case BundleTag::Custom: break;
  }
  throw Error(ErrorCode::UnknownTag, "Custom bundles are read from JSON, not built from the catalog");
}

BundlePresentation add_trivial_summand(const BundlePresentation& bp) {
  BundlePresentation out = bp;
  out.twists.push_back(0);
  for (auto& rel : out.relations) rel.entries.push_back(zero_alpha(bp.n));
  out.layout.push_back({bp.target_size});
  out.target_size = bp.target_size + 1;
  out.rank = bp.rank + 1;
  out.params.extra_trivial = bp.params.extra_trivial + 1;
  validate(out);
  return out;
}

Json to_json(const BundlePresentation& bp) {
  Json rels = Json::array();
  for (const auto& rel : bp.relations) {
    Json entries = Json::array();
    for (const auto& f : rel.entries) entries.push_back(to_json(f));
    rels.push_back({{"twist", rel.twist}, {"entries", entries}});
  }
  Json params = Json::object();
  if (bp.tag == BundleTag::SectionFstar) params["d"] = bp.params.d;
  if (bp.tag == BundleTag::Type5) {
    params["t"] = bp.params.t;
    params["pencil_a"] = to_json(bp.params.pencil_a);
    params["pencil_b"] = to_json(bp.params.pencil_b);
  }
  if (!bp.params.section.empty()) params["section"] = to_json(bp.params.section);
  if (!bp.params.drum_id.empty()) params["drum_id"] = bp.params.drum_id;
  params["extra_trivial"] = bp.params.extra_trivial;
  return {{"tag", tag_name(bp.tag)},
          {"n", bp.n},
          {"rank", bp.rank},
          {"c1", bp.first_chern()},
          {"twists", bp.twists},
          {"relations", rels},
          {"resolution_tail", bp.resolution_tail},
          {"layout", bp.layout},
          {"target_size", bp.target_size},
          {"params", params}};
}

BundlePresentation presentation_from_json(const Json& j) {
  try {
    BundlePresentation bp;
    auto tag = parse_tag(j.at("tag").get<std::string>());
    if (!tag) throw Error(ErrorCode::UnknownTag, "unknown tag in presentation");
    bp.tag = *tag;
    bp.n = j.at("n").get<int>();
    bp.rank = j.at("rank").get<int>();
    bp.twists = j.at("twists").get<std::vector<int>>();
    for (const auto& r : j.at("relations")) {
      Relation rel;
      rel.twist = r.at("twist").get<int>();
      for (const auto& e : r.at("entries")) {
        MultiPoly f = poly_from_json(e);
        rel.entries.push_back(f.is_zero() ? MultiPoly(alpha_block(bp.n)) : f);
      }
      bp.relations.push_back(std::move(rel));
    }
    if (j.contains("resolution_tail")) bp.resolution_tail = j.at("resolution_tail").get<std::vector<std::vector<int>>>();
    if (j.contains("layout")) {
      bp.layout = j.at("layout").get<std::vector<std::vector<std::size_t>>>();
      bp.target_size = j.at("target_size").get<std::size_t>();
    } else {
      consecutive_layout(bp);
    }
    if (j.contains("params")) {
      const auto& p = j.at("params");
      if (p.contains("d")) bp.params.d = p.at("d").get<int>();
      if (p.contains("t")) bp.params.t = p.at("t").get<int>();
      if (p.contains("pencil_a")) bp.params.pencil_a = matrix_from_json(p.at("pencil_a"));
      if (p.contains("pencil_b")) bp.params.pencil_b = matrix_from_json(p.at("pencil_b"));
      if (p.contains("section")) bp.params.section = vector_from_json(p.at("section"));
      if (p.contains("drum_id")) bp.params.drum_id = p.at("drum_id").get<std::string>();
      if (p.contains("extra_trivial")) bp.params.extra_trivial = p.at("extra_trivial").get<std::size_t>();
    }
    validate(bp);
    return bp;
  } catch (const nlohmann::json::exception& ex) {
    throw Error(ErrorCode::BadInput, std::string("malformed bundle presentation: ") + ex.what());
  }
}

std::vector<BundlePresentation> standard_catalog() {
  return {make_type1(2, 2),           make_type2(2, 2),           make_type3(2, 2),
          make_type3(2, 3),           make_type3(3, 3),           make_type4a(3),
          make_type4b(2),             make_type5(2, 2, 2),        make_type5(2, 3, 3),
          make_type5(2, 4, 4),        make_type5(3, 3),           make_type6(2, 2),
          make_type6(3, 3),           make_section_fstar(2, 2, 0), make_section_fstar(3, 2, 0)};
}

}  // namespace pbl
