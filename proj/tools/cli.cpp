#include "cli.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "matchfield/ehrhart.hpp"
#include "matchfield/equivalence.hpp"
#include "matchfield/errors.hpp"
#include "matchfield/json_io.hpp"
#include "matchfield/mutation.hpp"
#include "matchfield/pluecker.hpp"

namespace matchfield::cli {

namespace {

using json_io::Json;
using json_io::to_json;

struct Options {
  std::string out_file;
  std::string format = "json";
  bool json = false;
  std::uint64_t seed = 0;
  std::uint64_t max_candidates = 10'000'000;
  long long timeout_ms = 0;

  int k = 0;
  int n = 0;
  std::string family;
  std::size_t index = 0;
  std::string weights;
  std::string big_n;
  std::string tuples;
  std::string poset;
  std::string map;
  int lattice_t = -1;
  bool extremal = false;
  std::string point;
  bool list = false;
  std::string filter;
  std::size_t step = 0;
  int ehrhart_depth = 0;
  bool witnesses = false;
  bool equivalences = false;
  std::string w;
  std::string factor;
  std::string points;
  std::size_t matrices = 5;
};

struct Output {
  Json json;
  std::vector<std::string> csv_header;
  std::vector<std::vector<std::string>> csv_rows;
  int code = Ok;
};

class UsageFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string join(const std::vector<int>& v, char sep = ' ') {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? std::string(1, sep) : "") + std::to_string(v[i]);
  return s;
}

/// Inline JSON, or a path to a JSON file (optionally prefixed with '@').
Json load_json(const std::string& text) {
  std::string src = text;
  if (!src.empty() && src.front() == '@') src.erase(0, 1);
  std::error_code ec;
  if (std::filesystem::is_regular_file(src, ec)) {
    std::ifstream in(src);
    return Json::parse(in);
  }
  return Json::parse(text);
}

ResourceLimits limits_of(const Options& o) {
  ResourceLimits limits =
      o.timeout_ms > 0 ? ResourceLimits::with_timeout(std::chrono::milliseconds(o.timeout_ms)) : ResourceLimits{};
  limits.max_candidates = o.max_candidates;
  return limits;
}

void require_kn(const Options& o) {
  if (o.k <= 0 || o.n <= 0) throw UsageFailure("--k and --n are required");
}

struct FieldChoice {
  MatchingField field;
  std::optional<WeightMatrix> weights;
};

FieldChoice choose_field(const Options& o) {
  if (!o.tuples.empty()) return {json_io::matching_field_from_json(load_json(o.tuples)), std::nullopt};
  if (!o.weights.empty()) {
    WeightMatrix m = json_io::weight_matrix_from_json(load_json(o.weights));
    return {induce_field(m), m};
  }
  if (o.family.empty()) throw UsageFailure("give --family, --weights or --tuples");
  require_kn(o);
  if (o.family == "diagonal") return {diagonal(o.k, o.n), diagonal_weight_matrix(o.k, o.n)};
  if (o.family == "block") return {block_diagonal(o.k, o.n), block_diagonal_weight_matrix(o.k, o.n)};
  if (o.family == "fflv") {
    std::optional<Rational> big_n;
    if (!o.big_n.empty()) big_n = parse_rational(o.big_n);
    WeightMatrix m = fflv_weight_matrix(o.k, o.n, big_n);
    return {induce_field(m), m};
  }
  if (o.family == "intermediate") {
    const auto seq = weight_sequence(o.k, o.n);
    if (o.index >= seq.size()) throw UsageFailure("--index out of range");
    return {intermediate_field(o.k, o.n, o.index), seq[o.index]};
  }
  throw UsageFailure("unknown family '" + o.family + "'");
}

std::optional<LatticePolytope> poset_polytope(const Options& o) {
  if (o.poset.empty()) return std::nullopt;
  require_kn(o);
  GrassmannPoset poset(o.k, o.n);
  if (o.poset == "order") return LatticePolytope(poset.size(), order_polytope_vertices(poset));
  if (o.poset == "chain") return LatticePolytope(poset.size(), chain_polytope_vertices(poset));
  throw UsageFailure("--poset must be order or chain");
}

void vertex_csv(const LatticePolytope& p, Output& out) {
  out.csv_header = {"vertex"};
  for (const auto& v : p.vertices()) out.csv_rows.push_back({join(v)});
}

Output cmd_poset(const Options& o) {
  require_kn(o);
  GrassmannPoset poset(o.k, o.n);
  Output out;
  out.json["poset"] = to_json(poset);
  const auto filters = enumerate_filters(poset);
  const auto antichains = enumerate_antichains(poset);
  out.json["filters"] = filters.size();
  out.json["antichains"] = antichains.size();
  out.json["longest_chain"] = poset.longest_chain_length();
  if (!o.filter.empty()) {
    std::vector<PosetElement> members;
    for (const auto& e : load_json(o.filter)) members.push_back({e.at(0).get<int>(), e.at(1).get<int>()});
    const Filter f = make_filter(poset, members);
    out.json["filter"] = to_json(f.members);
    out.json["min_elements"] = to_json(min_elements(poset, f).members);
    out.json["subset"] = filter_subset(poset, f);
  }
  if (o.list) {
    Json fl = Json::array(), al = Json::array();
    for (const auto& f : filters) fl.push_back(to_json(f.members));
    for (const auto& a : antichains) al.push_back(to_json(a.members));
    out.json["filter_list"] = fl;
    out.json["antichain_list"] = al;
  }
  out.csv_header = {"row", "col"};
  for (const auto& e : poset.elements()) out.csv_rows.push_back({std::to_string(e.row), std::to_string(e.col)});
  return out;
}

Output cmd_field(const Options& o) {
  const FieldChoice choice = choose_field(o);
  Output out;
  out.json = to_json(choice.field);
  if (choice.weights) out.json["weights"] = to_json(*choice.weights);
  out.csv_header = {"set", "tuple"};
  for (std::size_t i = 0; i < choice.field.size(); ++i)
    out.csv_rows.push_back({join(choice.field.subsets()[i]), join(choice.field.tuples()[i])});
  return out;
}

Output cmd_polytope(const Options& o) {
  Output out;
  if (!o.map.empty()) {
    require_kn(o);
    EquivalenceReport report;
    LatticePolytope image(1, {{0}});
    if (o.map == "gt") {
      GrassmannPoset poset(o.k, o.n);
      image = apply_affine_map(gt_equivalence_map(o.k, o.n), LatticePolytope(poset.size(), order_polytope_vertices(poset)));
      report = verify_gt_equivalence(o.k, o.n);
    } else if (o.map == "fflv") {
      image = apply_affine_map(fflv_projection(o.k, o.n), polytope_of_field(fflv(o.k, o.n)));
      report = verify_fflv_projection(o.k, o.n);
    } else if (o.map == "block") {
      if (o.k != 3) throw UsageFailure("--map block requires --k 3");
      image = apply_affine_map(gr3_block_projection(o.n), polytope_of_field(block_diagonal(3, o.n)));
      report = verify_gr3_block_projection(o.n);
    } else {
      throw UsageFailure("--map must be gt, fflv or block");
    }
    out.json["map"] = o.map;
    out.json["image"] = to_json(image);
    out.json["report"] = to_json(report);
    out.code = report.passed() ? Ok : VerificationFailed;
    vertex_csv(image, out);
    return out;
  }
  auto poly = poset_polytope(o);
  if (!poly) poly = polytope_of_field(choose_field(o).field);
  out.json["polytope"] = to_json(*poly);
  out.json["vertex_count"] = poly->num_vertices();
  if (o.extremal) out.json["all_extremal"] = all_vertices_extremal(*poly);
  if (!o.point.empty()) {
    RationalVector x;
    for (const auto& v : load_json(o.point)) x.push_back(json_io::rational_from_json(v));
    if (x.size() != poly->ambient_dim()) throw UsageFailure("--point has the wrong dimension");
    out.json["contains"] = contains(*poly, x);
  }
  if (o.lattice_t >= 0) {
    const auto c = lattice_points(*poly, o.lattice_t, limits_of(o));
    Json lp;
    lp["t"] = o.lattice_t;
    lp["count"] = c.count;
    lp["candidates"] = c.candidates;
    out.json["lattice_points"] = lp;
  }
  vertex_csv(*poly, out);
  return out;
}

Output cmd_ehrhart(const Options& o) {
  Output out;
  EhrhartResult result;
  if (!o.poset.empty()) {
    require_kn(o);
    GrassmannPoset poset(o.k, o.n);
    if (o.poset == "order") result = ehrhart_order_polytope(poset);
    else if (o.poset == "chain") result = ehrhart_chain_polytope(poset);
    else throw UsageFailure("--poset must be order or chain");
  } else {
    result = ehrhart(polytope_of_field(choose_field(o).field), limits_of(o));
  }
  out.json = to_json(result);
  out.csv_header = {"t", "count"};
  for (std::size_t t = 0; t < result.counts.size(); ++t)
    out.csv_rows.push_back({std::to_string(t), std::to_string(result.counts[t])});
  return out;
}

Output cmd_mutate(const Options& o) {
  Output out;
  if (!o.w.empty()) {
    if (o.factor.empty() || o.points.empty()) throw UsageFailure("--w needs --factor and --points");
    const MutationData data(load_json(o.w).get<IntVector>(), load_json(o.factor).get<std::vector<IntVector>>());
    auto pts = load_json(o.points).get<std::vector<IntVector>>();
    const LatticePolytope poly(data.dim(), std::move(pts));
    const MappedPolytope mapped = map_polytope(data, poly);
    out.json["data"] = to_json(data);
    Json images = Json::array();
    for (std::size_t i = 0; i < mapped.images.size(); ++i) {
      Json e;
      e["point"] = poly.vertices()[i];
      e["image"] = mapped.images[i];
      e["vertex"] = static_cast<bool>(mapped.extremal[i]);
      images.push_back(e);
    }
    out.json["images"] = images;
    out.json["vertices"] = mapped.vertices;
    out.csv_header = {"point", "image", "vertex"};
    for (std::size_t i = 0; i < mapped.images.size(); ++i)
      out.csv_rows.push_back({join(poly.vertices()[i]), join(mapped.images[i]), mapped.extremal[i] ? "1" : "0"});
    return out;
  }
  require_kn(o);
  if (o.step == 0) throw UsageFailure("--step is required (1-based)");
  const MutationData data = mutation_data(o.k, o.n, o.step);
  const auto values = classify_vertices(o.k, o.n, o.step, Side::Before);
  const StepReport report = verify_step(o.k, o.n, o.step);
  out.json["k"] = o.k;
  out.json["n"] = o.n;
  out.json["step"] = o.step;
  out.json["triple"] = to_json(report.triple);
  out.json["data"] = to_json(data);
  Json vertices = Json::array();
  out.csv_header = {"set", "tuple", "value", "image_tuple"};
  for (const auto& v : values) {
    Json e = to_json(v);
    const Tuple img = vertex_tuple(tropical_map(data, tuple_vertex(v.tuple, o.n)), o.k, o.n);
    e["image"] = img;
    vertices.push_back(e);
    out.csv_rows.push_back({join(v.subset), join(v.tuple), std::to_string(v.value), join(img)});
  }
  out.json["vertices"] = vertices;
  out.json["report"] = to_json(report, o.witnesses);
  out.code = report.passed() ? Ok : VerificationFailed;
  return out;
}

Output cmd_verify(const Options& o) {
  require_kn(o);
  ChainOptions options;
  options.ehrhart_depth = o.ehrhart_depth;
  options.limits = limits_of(o);
  const ChainReport report = verify_chain(o.k, o.n, options);
  Output out;
  out.json = to_json(report, o.witnesses);
  bool ok = report.passed();
  if (o.equivalences) {
    Json eq;
    const auto gt = verify_gt_equivalence(o.k, o.n);
    const auto ff = verify_fflv_projection(o.k, o.n);
    eq["gt"] = to_json(gt);
    eq["fflv"] = to_json(ff);
    ok = ok && gt.passed() && ff.passed();
    if (o.k == 3) {
      const auto bl = verify_gr3_block_projection(o.n);
      eq["block"] = to_json(bl);
      ok = ok && bl.passed();
    }
    out.json["equivalences"] = eq;
    out.json["passed"] = ok;
  }
  out.csv_header = {"index", "triple", "bijection", "before", "after", "passed"};
  for (const auto& s : report.steps)
    out.csv_rows.push_back({std::to_string(s.index), join({s.triple.p, s.triple.l, s.triple.q}),
                            s.bijection ? "1" : "0", s.before.passed() ? "1" : "0", s.after.passed() ? "1" : "0",
                            s.passed() ? "1" : "0"});
  out.code = ok ? Ok : VerificationFailed;
  return out;
}

Output cmd_coherence(const Options& o) {
  const MatchingField field = choose_field(o).field;
  const CoherenceResult result = coherence_check(field);
  Output out;
  out.json["coherent"] = result.coherent;
  out.json["constraints"] = result.constraints;
  if (result.witness) {
    out.json["witness"] = to_json(*result.witness);
    const bool again = is_generic(*result.witness) && induce_field(*result.witness) == field;
    out.json["witness_reinduces"] = again;
    if (!again) out.code = VerificationFailed;
  }
  return out;
}

WeightMatrix pluecker_weights(const Options& o) {
  require_kn(o);
  const std::string& spec = o.weights.empty() ? std::string("diagonal") : o.weights;
  if (spec == "diagonal") return diagonal_weight_matrix(o.k, o.n);
  if (spec == "block") return block_diagonal_weight_matrix(o.k, o.n);
  if (spec == "fflv") return fflv_weight_matrix(o.k, o.n);
  if (spec.rfind("intermediate:", 0) == 0) {
    const auto seq = weight_sequence(o.k, o.n);
    const std::size_t i = std::stoul(spec.substr(13));
    if (i >= seq.size()) throw UsageFailure("intermediate index out of range");
    return seq[i];
  }
  WeightMatrix m = json_io::weight_matrix_from_json(load_json(spec));
  if (m.rows() != o.k || m.cols() != o.n) throw UsageFailure("weight matrix is not k x n");
  return m;
}

Output cmd_pluecker(const Options& o) {
  const WeightMatrix m = pluecker_weights(o);
  const InducedWeight w = induced_weight(m);
  Output out;
  out.json["k"] = o.k;
  out.json["n"] = o.n;
  out.json["weights"] = to_json(m);
  out.json["induced_weight"] = to_json(w);
  const bool generic = is_generic(m);
  out.json["generic"] = generic;
  if (generic) {
    Json terms = Json::array();
    for (const auto& s : w.subsets) terms.push_back(to_json(initial_term(m, s)));
    out.json["initial_terms"] = terms;
  }
  const auto relations = gp_relations(o.k, o.n);
  Json rels = Json::array();
  std::size_t binomial = 0;
  out.csv_header = {"relation", "initial_form", "binomial"};
  for (const auto& r : relations) {
    const InitialForm f = initial_form(r, w);
    Json e = to_json(r);
    e["initial_form"] = to_json(f);
    rels.push_back(e);
    binomial += f.binomial;
    out.csv_rows.push_back({r.to_string(), e["initial_form"]["text"].get<std::string>(), f.binomial ? "1" : "0"});
  }
  out.json["relations"] = rels;
  out.json["binomial_initial_forms"] = binomial;
  out.json["diagnostic"] = "binomial initial forms of exchange relations are reported only; they do not certify a toric degeneration";
  const GpCheck check = check_gp_relations(relations, o.k, o.n, o.seed, o.matrices);
  Json gp;
  gp["relations"] = check.relations;
  gp["matrices"] = check.matrices;
  gp["seed"] = o.seed;
  gp["failures"] = check.failures;
  out.json["vanishing_check"] = gp;
  out.code = check.failures == 0 ? Ok : VerificationFailed;
  return out;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) q += c == '"' ? std::string("\"\"") : std::string(1, c);
  return q + "\"";
}

std::string render(const Output& out, const Options& o, const std::string& command) {
  if (o.format == "csv" && !o.json) {
    if (out.csv_header.empty()) throw UsageFailure("csv output is not available for " + command);
    std::ostringstream s;
    for (std::size_t i = 0; i < out.csv_header.size(); ++i) s << (i ? "," : "") << csv_field(out.csv_header[i]);
    s << "\n";
    for (const auto& row : out.csv_rows) {
      for (std::size_t i = 0; i < row.size(); ++i) s << (i ? "," : "") << csv_field(row[i]);
      s << "\n";
    }
    return s.str();
  }
  return out.json.dump(2) + "\n";
}

void add_kn(CLI::App* app, Options& o) {
  app->add_option("--k", o.k, "Rows k of Gr(k,n)");
  app->add_option("--n", o.n, "n of Gr(k,n)");
}

void add_field_source(CLI::App* app, Options& o) {
  add_kn(app, o);
  app->add_option("--family", o.family, "diagonal | block | fflv | intermediate");
  app->add_option("--index", o.index, "Chain index for --family intermediate");
  app->add_option("--weights", o.weights, "Weight matrix JSON (inline or file)");
  app->add_option("--N", o.big_n, "Diagonal shift for --family fflv (default n^3)");
  app->add_option("--tuples", o.tuples, "Matching field JSON (inline or file)");
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& stdout_stream, std::ostream& err) {
  Options o;
  CLI::App app{"Matching fields, their polytopes, and the mutation chain between GT and FFLV polytopes"};
  app.name("matchfield");
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--out", o.out_file, "Write output to FILE");
  app.add_option("--format", o.format, "json | csv")->check(CLI::IsMember({"json", "csv"}));
  app.add_flag("--json", o.json, "Force JSON output");
  app.add_option("--seed", o.seed, "Seed for randomized checks");
  app.add_option("--max-candidates", o.max_candidates, "Cap on enumerated lattice-point candidates");
  app.add_option("--timeout", o.timeout_ms, "Per-command time limit in milliseconds");

  auto* poset = app.add_subcommand("poset", "Grassmannian poset Q_{k,n}: filters and anti-chains");
  add_kn(poset, o);
  poset->add_flag("--list", o.list, "List every filter and anti-chain");
  poset->add_option("--filter", o.filter, "Filter as [[i,j],...]: report its minimal elements and subset");

  auto* field = app.add_subcommand("field", "Construct or induce a matching field");
  add_field_source(field, o);

  auto* polytope = app.add_subcommand("polytope", "Matching-field or poset polytope");
  add_field_source(polytope, o);
  polytope->add_option("--poset", o.poset, "order | chain");
  polytope->add_option("--map", o.map, "gt | fflv | block: apply an equivalence map and check it");
  polytope->add_option("--lattice-points", o.lattice_t, "Count lattice points of the t-th dilate");
  polytope->add_flag("--check-extremal", o.extremal, "Check every vertex is extremal");
  polytope->add_option("--point", o.point, "Membership test for a rational point");

  auto* ehr = app.add_subcommand("ehrhart", "Ehrhart polynomial by counting and interpolation");
  add_field_source(ehr, o);
  ehr->add_option("--poset", o.poset, "order | chain");

  auto* mutate = app.add_subcommand("mutate", "One chain step, or a tropical map given by --w/--factor");
  add_kn(mutate, o);
  mutate->add_option("--step", o.step, "Chain step i >= 1");
  mutate->add_flag("--witnesses", o.witnesses, "Include pair witnesses");
  mutate->add_option("--w", o.w, "Direction as JSON array");
  mutate->add_option("--factor", o.factor, "Factor vertices as JSON array of arrays");
  mutate->add_option("--points", o.points, "Polytope vertices as JSON array of arrays");

  auto* verify = app.add_subcommand("verify", "Verify the full mutation chain");
  add_kn(verify, o);
  verify->add_option("--ehrhart-depth", o.ehrhart_depth, "Compare lattice-point counts for t = 1..depth");
  verify->add_flag("--witnesses", o.witnesses, "Include pair witnesses");
  verify->add_flag("--equivalences", o.equivalences, "Also check the endpoint equivalences");

  auto* coherence = app.add_subcommand("coherence", "Decide coherence by exact LP");
  add_field_source(coherence, o);

  auto* pluecker = app.add_subcommand("pluecker", "Induced weights and initial forms of Pluecker relations");
  add_kn(pluecker, o);
  pluecker->add_option("--weights", o.weights, "diagonal | block | fflv | intermediate:i | FILE");
  pluecker->add_option("--matrices", o.matrices, "Random matrices for the vanishing check");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    stdout_stream << app.help();
    return Ok;
  } catch (const CLI::CallForAllHelp&) {
    stdout_stream << app.help("", CLI::AppFormatMode::All);
    return Ok;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return UsageError;
  }

  CLI::App* sub = app.get_subcommands().front();
  const std::string name = sub->get_name();
  try {
    Output out;
    if (name == "poset") out = cmd_poset(o);
    else if (name == "field") out = cmd_field(o);
    else if (name == "polytope") out = cmd_polytope(o);
    else if (name == "ehrhart") out = cmd_ehrhart(o);
    else if (name == "mutate") out = cmd_mutate(o);
    else if (name == "verify") out = cmd_verify(o);
    else if (name == "coherence") out = cmd_coherence(o);
    else out = cmd_pluecker(o);
    const std::string text = render(out, o, name);
    if (o.out_file.empty()) {
      stdout_stream << text << std::flush;
    } else {
      std::ofstream file(o.out_file);
      if (!file) throw UsageFailure("cannot open " + o.out_file);
      file << text;
    }
    return out.code;
  } catch (const UsageFailure& e) {
    err << "error: " << e.what() << "\n";
    return UsageError;
  } catch (const ResourceError& e) {
    err << "resource limit: " << e.what() << "\n";
    return ResourceAbort;
  } catch (const NonGenericError& e) {
    err << "not generic: " << e.what() << "\n";
    return VerificationFailed;
  } catch (const VerificationError& e) {
    err << "verification failed: " << e.what() << "\n";
    return VerificationFailed;
  } catch (const Json::exception& e) {
    err << "error: bad JSON input: " << e.what() << "\n";
    return UsageError;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return UsageError;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << "\n";
    return UsageError;
  }
}

}  // namespace matchfield::cli
