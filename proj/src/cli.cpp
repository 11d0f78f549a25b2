#include "pbl/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "pbl/bundle.hpp"
#include "pbl/cone.hpp"
#include "pbl/drum.hpp"
#include "pbl/error.hpp"
#include "pbl/geometry.hpp"
#include "pbl/incidence.hpp"
#include "pbl/pencil.hpp"
#include "pbl/report.hpp"
#include "pbl/sections.hpp"
#include "pbl/verify.hpp"

namespace pbl {

namespace {

constexpr int kOk = 0;
constexpr int kFailure = 1;
constexpr int kBadInput = 2;

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::BadInput:
    case ErrorCode::BadParams:
    case ErrorCode::BadT:
    case ErrorCode::TooSmall:
    case ErrorCode::UnknownTag:
    case ErrorCode::NotOnHypersurface:
    case ErrorCode::NoImageEquation:
      return kBadInput;
    default:
      return kFailure;
  }
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::BadInput, "cannot open " + path);
  try {
    Json j;
    in >> j;
    return j;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::BadInput, "bad JSON in " + path + ": " + e.what());
  }
}

RatVector parse_point(const std::string& s) {
  RatVector v;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      v.push_back(Rational::parse(item));
    } catch (const std::exception&) {
      throw Error(ErrorCode::BadInput, "bad coordinate '" + item + "'");
    }
  }
  if (v.empty()) throw Error(ErrorCode::BadInput, "empty point");
  if (is_zero(v)) throw Error(ErrorCode::BadInput, "the zero vector is not a projective point");
  return v;
}

std::string join(const RatVector& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + v[i].pretty();
  return s;
}

struct Options {
  std::string format = "table";
  std::string seed;
  // bundle selection
  CatalogRequest req;
  std::string file;
  // misc
  std::string x;
  std::string path;
  int a = 1, b = 0, a_max = 4, t = 2, s = 2, n = 2, d = 2;
  long radius = 3;
  std::string id;
  int samples = 500;
};

void add_bundle_options(CLI::App* cmd, Options& o) {
  cmd->add_option("--tag", o.req.tag, "type1..type6, type4a, type4b, fstar, drum");
  cmd->add_option("--n", o.req.n, "base dimension");
  cmd->add_option("--r", o.req.r, "rank of E");
  cmd->add_option("--t", o.req.t, "pencil invariant (type5)");
  cmd->add_option("--d", o.req.d, "degree (fstar)");
  cmd->add_option("--id", o.req.id, "drum bundle id: ptangent or pomega");
  cmd->add_option("--file", o.file, "bundle presentation JSON");
}

BundlePresentation selected_bundle(const Options& o) {
  if (!o.file.empty()) {
    try {
      return presentation_from_json(read_json_file(o.file));
    } catch (const nlohmann::json::exception& e) {
      throw Error(ErrorCode::BadInput, std::string("bad presentation: ") + e.what());
    }
  }
  if (o.req.tag.empty()) throw Error(ErrorCode::BadInput, "give --tag or --file");
  return catalog_bundle(o.req);
}

void emit(std::ostream& out, OutputFormat fmt, const Json& j, const std::string& table) {
  if (fmt == OutputFormat::Json) out << j.dump(2) << '\n';
  else out << table;
}

std::string kv_table(const std::vector<std::pair<std::string, std::string>>& rows) {
  std::vector<std::vector<std::string>> r;
  for (const auto& [k, v] : rows) r.push_back({k, v});
  return text_table({"field", "value"}, r);
}

std::string matrix_str(const RatMatrix& m) {
  std::string s;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    s += "  [";
    for (std::size_t j = 0; j < m.cols(); ++j) s += (j ? " " : "") + m(i, j).pretty();
    s += "]\n";
  }
  return s;
}

int pencil_check(const Options& o, OutputFormat fmt, std::ostream& out) {
  const PencilPair p = pencil_from_json(read_json_file(o.path));
  const bool regular = pencil_is_regular(p);
  Json j{{"rows", p.A().rows()}, {"regular", regular}};
  std::vector<std::pair<std::string, std::string>> rows{{"rows", std::to_string(p.A().rows())},
                                                        {"regular", regular ? "yes" : "no"}};
  if (regular) {
    const int t = pencil_t(p);
    j["t"] = t;
    rows.push_back({"t", std::to_string(t)});
  }
  emit(out, fmt, j, kv_table(rows));
  return kOk;
}

int pencil_normalize(const Options& o, OutputFormat fmt, std::ostream& out) {
  const PencilPair p = pencil_from_json(read_json_file(o.path));
  const PencilNormalForm nf = pencil_normal_form(p);
  const bool ok = verify_normal_form(p, nf);
  Json j = to_json(nf);
  j["verified"] = ok;
  std::string table = kv_table({{"t", std::to_string(nf.t)}, {"P A Q canonical", ok ? "yes" : "no"},
                                {"P B Q canonical", ok ? "yes" : "no"}});
  table += "P =\n" + matrix_str(nf.P) + "Q =\n" + matrix_str(nf.Q);
  emit(out, fmt, j, table);
  return ok ? kOk : kFailure;
}

int pencil_canonical(const Options& o, OutputFormat fmt, std::ostream& out) {
  const PencilPair p = canonical_pencil(o.t, o.s);
  emit(out, fmt, to_json(p), "A =\n" + matrix_str(p.A()) + "B =\n" + matrix_str(p.B()));
  return kOk;
}

int geom_smooth_scan(const Options& o, OutputFormat fmt, std::ostream& out) {
  if (o.radius < 1) throw Error(ErrorCode::BadInput, "radius must be at least 1");
  const Hypersurface v = vnd_hypersurface(o.n, o.d);
  const LinearSubspace l0 = even_coordinate_subspace(o.n);
  long on = 0, singular = 0, in_l0 = 0, singular_off_l0 = 0;
  Json sing = Json::array();
  for_each_grid_point(v.ambient + 1, o.radius, [&](const ProjPoint& p) {
    if (!on_hypersurface(v, p)) return;
    ++on;
    const bool l = subspace_contains(l0, p);
    in_l0 += l;
    if (!smooth_at(v, p)) {
      ++singular;
      singular_off_l0 += !l;
      if (sing.size() < 20) sing.push_back(join(p.coords()));
    }
  });
  Json j{{"n", o.n}, {"d", o.d}, {"radius", o.radius}, {"points_on_V", on}, {"singular", singular},
         {"points_in_L0", in_l0}, {"singular_outside_L0", singular_off_l0}, {"first_singular", sing}};
  emit(out, fmt, j,
       kv_table({{"hypersurface", v.f.str()}, {"points on V", std::to_string(on)}, {"singular", std::to_string(singular)},
                 {"points in L0", std::to_string(in_l0)}, {"singular outside L0", std::to_string(singular_off_l0)}}));
  return kOk;
}

int geom_locus(const Options& o, OutputFormat fmt, std::ostream& out) {
  const DeterminantalLocus loc = determinantal_locus(o.t);
  const RatVector x = parse_point(o.x);
  if (x.size() != loc.ambient + 1) throw Error(ErrorCode::BadInput, "point needs " + std::to_string(loc.ambient + 1) + " coordinates");
  const ProjPoint p(x);
  const bool in = loc.contains(p);
  Json j{{"t", o.t}, {"point", join(x)}, {"on_locus", in}};
  std::vector<std::pair<std::string, std::string>> rows{{"t", std::to_string(o.t)}, {"point", join(x)},
                                                        {"on locus", in ? "yes" : "no"}};
  if (in) {
    const bool smooth = loc.smooth_at(p);
    j["smooth"] = smooth;
    rows.push_back({"smooth", smooth ? "yes" : "no"});
  }
  emit(out, fmt, j, kv_table(rows));
  return kOk;
}

int bundle_catalog_cmd(OutputFormat fmt, std::ostream& out) {
  Json arr = Json::array();
  std::vector<std::vector<std::string>> rows;
  for (const auto& bp : standard_catalog()) {
    arr.push_back(to_json(bp));
    rows.push_back({bp.label(), std::to_string(bp.n), std::to_string(bp.rank), std::to_string(bp.first_chern()),
                    std::to_string(bp.twists.size()), std::to_string(bp.relations.size())});
  }
  emit(out, fmt, arr, text_table({"bundle", "n", "rank", "c1", "summands", "relations"}, rows));
  return kOk;
}

int bundle_show(const Options& o, OutputFormat fmt, std::ostream& out) {
  const BundlePresentation bp = selected_bundle(o);
  emit(out, fmt, to_json(bp),
       kv_table({{"bundle", bp.label()}, {"n", std::to_string(bp.n)}, {"rank", std::to_string(bp.rank)},
                 {"c1", std::to_string(bp.first_chern())}, {"target size", std::to_string(bp.target_size)}}));
  return kOk;
}

int bundle_fiber(const Options& o, OutputFormat fmt, std::ostream& out) {
  const BundlePresentation bp = selected_bundle(o);
  const RatVector x = parse_point(o.x);
  if (x.size() != bp.target_size)
    throw Error(ErrorCode::BadInput, "point needs " + std::to_string(bp.target_size) + " coordinates");
  const FiberClass fc = fiber_over(bp, ProjPoint(x));
  emit(out, fmt, Json{{"bundle", bp.label()}, {"point", join(x)}, {"fiber", fc.str()}, {"dimension", fc.dimension}},
       kv_table({{"bundle", bp.label()}, {"point", join(x)}, {"fiber", fc.str()}, {"dimension", std::to_string(fc.dimension)}}));
  return kOk;
}

int bundle_image(const Options& o, OutputFormat fmt, std::ostream& out) {
  const BundlePresentation bp = selected_bundle(o);
  const RatVector x = parse_point(o.x);
  if (x.size() != bp.target_size)
    throw Error(ErrorCode::BadInput, "point needs " + std::to_string(bp.target_size) + " coordinates");
  const bool in = image_membership(bp, ProjPoint(x));
  Json eqs = Json::array();
  std::string eq_str;
  for (const auto& f : image_equations(bp)) {
    eqs.push_back(f.str());
    eq_str += (eq_str.empty() ? "" : "; ") + f.str();
  }
  emit(out, fmt, Json{{"bundle", bp.label()}, {"point", join(x)}, {"equations", eqs}, {"in_image", in}},
       kv_table({{"bundle", bp.label()}, {"point", join(x)}, {"equations", eq_str}, {"in image", in ? "yes" : "no"}}));
  return kOk;
}

int bundle_sections(const Options& o, OutputFormat fmt, std::ostream& out) {
  const BundlePresentation bp = selected_bundle(o);
  const SectionSpace s = section_space(bp, o.a, o.b);
  Json basis = Json::array();
  for (const auto& tuple : s.basis) {
    Json t = Json::array();
    for (const auto& p : tuple) t.push_back(p.str());
    basis.push_back(t);
  }
  Json j{{"bundle", bp.label()}, {"a", s.a}, {"b", s.b}, {"dimension", s.dimension}, {"method", s.method},
         {"exactness", s.exact ? "exact" : "exactness assumed"}, {"basis", basis}};
  std::string table = kv_table({{"bundle", bp.label()}, {"a", std::to_string(s.a)}, {"b", std::to_string(s.b)},
                                {"dimension", std::to_string(s.dimension)}, {"method", s.method},
                                {"exactness", s.exact ? "exact" : "exactness assumed"}});
  emit(out, fmt, j, table);
  return kOk;
}

int bundle_cone(const Options& o, OutputFormat fmt, std::ostream& out) {
  const BundlePresentation bp = selected_bundle(o);
  const ConeReport r = cone_report(bp, o.a_max);
  auto cls = [](const DivisorClass& d) { return std::to_string(d.xi) + " xi + " + std::to_string(d.h) + " H"; };
  std::vector<std::pair<std::string, std::string>> rows{
      {"bundle", r.label},
      {"nef", "<" + cls(r.nef[0]) + ", " + cls(r.nef[1]) + ">"},
      {"eff", "<" + cls(r.eff[0]) + ", " + cls(r.eff[1]) + ">"},
      {"c", r.c.pretty()},
      {"table c", r.table_c ? r.table_c->pretty() : "-"},
      {"computed c", r.computed_c.pretty()},
      {"xi big", r.xi_big ? "yes" : "no"},
      {"verdict", r.verdict},
      {"center", r.center}};
  for (const auto& n : r.notes) rows.push_back({"note", n});
  emit(out, fmt, to_json(r), kv_table(rows));
  return r.slope_agrees ? kOk : kFailure;
}

int bundle_fano(const Options& o, OutputFormat fmt, std::ostream& out) {
  const BundlePresentation bp = selected_bundle(o);
  const FanoCheck f = fano_check(bp);
  emit(out, fmt, to_json(f),
       kv_table({{"bundle", bp.label()},
                 {"-K", std::to_string(f.h_coefficient) + " H + " + std::to_string(f.xi_coefficient) + " xi"},
                 {"fano", f.fano ? "yes" : "not certified"}}));
  return kOk;
}

int drum_list(OutputFormat fmt, std::ostream& out) {
  const auto catalog = drum_catalog();
  std::vector<std::vector<std::string>> rows;
  for (const auto& d : catalog)
    rows.push_back({d.id, d.y_minus, d.y_plus, d.x, std::to_string(d.dim_y), std::to_string(d.k_minus),
                    std::to_string(d.k_plus), std::to_string(d.deg_e_minus), std::to_string(d.deg_e_plus),
                    d.flagged ? "FLAGGED" : ""});
  emit(out, fmt, drum_catalog_json(catalog),
       text_table({"id", "Y-", "Y+", "X", "dimY", "k-", "k+", "degE-", "degE+", "flag"}, rows));
  return kOk;
}

int drum_check(const Options& o, OutputFormat fmt, std::ostream& out) {
  const auto catalog = drum_catalog();
  const DrumDatum& d = find_drum(catalog, o.id);
  const CanonicalIdentityReport eq = check_canonical_identity(d);
  const BlowupChecks bc = blowup_dimension_checks(d);
  Json j{{"drum", to_json(d)}, {"canonical_identity", to_json(eq)}, {"blowup", to_json(bc)}};
  std::string flip;
  try {
    const FlipVerdict v = flip_classify(d);
    j["flip"] = to_json(v);
    flip = std::string(v.kind == FlipKind::Flip ? "Flip" : "Flop") + ", deg K- = " + std::to_string(v.deg_k_minus);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::AsymmetricUnknown) throw;
    const FlipVerdict v = flip_classify(mirrored(d));
    j["flip"] = to_json(v);
    j["flip"]["mirrored"] = true;
    flip = std::string(v.kind == FlipKind::Flip ? "Flip" : "Flop") + " (mirrored), deg K- = " + std::to_string(v.deg_k_minus);
  }
  auto side = [](long l, long r, bool ok) { return std::to_string(l) + " vs " + std::to_string(r) + (ok ? " holds" : " fails"); };
  std::vector<std::pair<std::string, std::string>> rows{
      {"drum", d.id},
      {"Y- / Y+ / X", d.y_minus + " / " + d.y_plus + " / " + d.x},
      {"K identity printed", side(eq.printed_lhs, eq.printed_rhs, eq.printed)},
      {"K identity mirrored", side(eq.mirrored_lhs, eq.mirrored_rhs, eq.mirrored)},
      {"K identity alternate", side(eq.alternate_lhs, eq.alternate_rhs, eq.alternate)},
      {"hyperplane identity", side(bc.hs_lhs, bc.hs_rhs, bc.hyperplane_identity)},
      {"ray length", std::to_string(bc.ray_length)},
      {"flip", flip}};
  if (d.flagged) rows.push_back({"FLAGGED", d.note});
  emit(out, fmt, j, kv_table(rows));
  return eq.passes() && bc.ok() ? kOk : kFailure;
}

int verify_all_cmd(const Options& o, OutputFormat fmt, std::ostream& out) {
  RunConfig cfg;
  cfg.seed = o.seed.empty() ? seed_from_env() : parse_seed(o.seed);
  cfg.a_max = o.a_max;
  cfg.radius = o.radius;
  cfg.samples = o.samples;
  cfg.format = fmt;
  const VerificationReport r = verify_all(cfg);
  out << emit_report(r, fmt);
  return r.ok() ? kOk : kFailure;
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact toolkit for projective bundles, pencils and drums", "pbl"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_option("--format", o.format, "json or table")->check(CLI::IsMember({"json", "table"}));

  auto* pencil = app.add_subcommand("pencil", "matrix pencils");
  pencil->require_subcommand(1);
  auto* p_check = pencil->add_subcommand("check", "regularity and t of a pencil file");
  p_check->add_option("file", o.path)->required();
  auto* p_norm = pencil->add_subcommand("normalize", "normal form of a pencil file");
  p_norm->add_option("file", o.path)->required();
  auto* p_canon = pencil->add_subcommand("canonical", "canonical pencil for (t, s)");
  p_canon->add_option("--t", o.t)->required();
  p_canon->add_option("--s", o.s)->required();

  auto* geom = app.add_subcommand("geom", "hypersurfaces and determinantal loci");
  geom->require_subcommand(1);
  auto* g_scan = geom->add_subcommand("smooth-scan", "scan V(n,d) for singular points");
  g_scan->add_option("--n", o.n);
  g_scan->add_option("--d", o.d);
  g_scan->add_option("--radius", o.radius);
  auto* g_locus = geom->add_subcommand("locus", "membership in the determinantal locus for t");
  g_locus->add_option("--t", o.t)->required();
  g_locus->add_option("--check", o.x, "comma separated point")->required();

  auto* bundle = app.add_subcommand("bundle", "bundle presentations");
  bundle->require_subcommand(1);
  auto* b_catalog = bundle->add_subcommand("catalog", "standard catalog");
  auto* b_show = bundle->add_subcommand("show", "presentation as JSON");
  add_bundle_options(b_show, o);
  auto* b_fiber = bundle->add_subcommand("fiber", "fibre of the contraction over a point");
  add_bundle_options(b_fiber, o);
  b_fiber->add_option("--x", o.x)->required();
  auto* b_image = bundle->add_subcommand("image", "image equation test");
  add_bundle_options(b_image, o);
  b_image->add_option("--x", o.x)->required();
  auto* b_sections = bundle->add_subcommand("sections", "H0(a xi - b H)");
  add_bundle_options(b_sections, o);
  b_sections->add_option("--a", o.a);
  b_sections->add_option("--b", o.b);
  auto* b_cone = bundle->add_subcommand("cone", "nef and effective cones");
  add_bundle_options(b_cone, o);
  b_cone->add_option("--a-max", o.a_max);
  auto* b_fano = bundle->add_subcommand("fano", "anticanonical class");
  add_bundle_options(b_fano, o);

  auto* drum = app.add_subcommand("drum", "drum catalog");
  drum->require_subcommand(1);
  auto* d_list = drum->add_subcommand("list", "all catalog drums");
  auto* d_check = drum->add_subcommand("check", "identities for one drum");
  d_check->add_option("--id", o.id)->required();

  auto* verify = app.add_subcommand("verify-all", "run every acceptance check");
  verify->add_option("--seed", o.seed, "decimal or 0x-hex; default PBL_SEED or 0xD8B5");
  verify->add_option("--a-max", o.a_max);
  verify->add_option("--radius", o.radius);
  verify->add_option("--samples", o.samples);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    CLI::App* sub = &app;
    for (auto* s : app.get_subcommands()) sub = s;
    err << sub->help();
    return kBadInput;
  }

  try {
    const OutputFormat fmt = parse_format(o.format);
    if (*p_check) return pencil_check(o, fmt, out);
    if (*p_norm) return pencil_normalize(o, fmt, out);
    if (*p_canon) return pencil_canonical(o, fmt, out);
    if (*g_scan) return geom_smooth_scan(o, fmt, out);
    if (*g_locus) return geom_locus(o, fmt, out);
    if (*b_catalog) return bundle_catalog_cmd(fmt, out);
    if (*b_show) return bundle_show(o, fmt, out);
    if (*b_fiber) return bundle_fiber(o, fmt, out);
    if (*b_image) return bundle_image(o, fmt, out);
    if (*b_sections) return bundle_sections(o, fmt, out);
    if (*b_cone) return bundle_cone(o, fmt, out);
    if (*b_fano) return bundle_fano(o, fmt, out);
    if (*d_list) return drum_list(fmt, out);
    if (*d_check) return drum_check(o, fmt, out);
    if (*verify) return verify_all_cmd(o, fmt, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kFailure;
  }
  return kBadInput;
}

}  // namespace pbl
