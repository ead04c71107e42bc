#include "matchfield/json_io.hpp"

#include <stdexcept>

namespace matchfield::json_io {

Json to_json(const Rational& value) { return to_string(value); }

Json to_json(const RationalVector& values) {
  Json out = Json::array();
  for (const auto& v : values) out.push_back(to_string(v));
  return out;
}

Json to_json(const PosetElement& element) { return Json::array({element.row, element.col}); }

Json to_json(const std::vector<PosetElement>& elements) {
  Json out = Json::array();
  for (const auto& e : elements) out.push_back(to_json(e));
  return out;
}

Json to_json(const GrassmannPoset& poset) {
  Json out;
  out["k"] = poset.k();
  out["n"] = poset.n();
  out["size"] = poset.size();
  out["elements"] = to_json(poset.elements());
  Json covers = Json::array();
  for (const auto& [a, b] : poset.covering_relations())
    covers.push_back(Json::array({to_json(poset.element(a)), to_json(poset.element(b))}));
  out["covering_relations"] = covers;
  return out;
}

Json to_json(const MatchingField& field) {
  Json out;
  out["k"] = field.k();
  out["n"] = field.n();
  Json tuples = Json::array();
  for (std::size_t i = 0; i < field.size(); ++i) {
    Json entry;
    entry["set"] = field.subsets()[i];
    entry["tuple"] = field.tuples()[i];
    tuples.push_back(entry);
  }
  out["tuples"] = tuples;
  return out;
}

Json to_json(const WeightMatrix& weights) {
  Json out = Json::array();
  for (const auto& row : weights.entries()) out.push_back(to_json(row));
  return out;
}

Json to_json(const LatticePolytope& polytope) {
  Json out;
  out["ambient_dim"] = polytope.ambient_dim();
  out["vertices"] = polytope.vertices();
  return out;
}

Json to_json(const EhrhartPolynomial& polynomial) {
  Json out;
  out["coefficients"] = to_json(polynomial.coefficients);
  out["text"] = polynomial.to_string();
  return out;
}

Json to_json(const EhrhartResult& result) {
  Json out;
  out["dimension"] = result.dimension;
  out["counts"] = result.counts;
  out["polynomial"] = to_json(result.polynomial);
  return out;
}

Json to_json(const Triple& triple) { return Json::array({triple.p, triple.l, triple.q}); }

Json to_json(const MutationData& data) {
  Json out;
  out["w"] = data.w();
  out["factor"] = data.factor();
  return out;
}

Json to_json(const VertexValue& value) {
  Json out;
  out["set"] = value.subset;
  out["tuple"] = value.tuple;
  out["value"] = value.value;
  return out;
}

namespace {

Json subsets_json(const std::vector<Subset>& subsets) {
  Json out = Json::array();
  for (const auto& s : subsets) out.push_back(s);
  return out;
}

Json optional_subset(const std::optional<Subset>& s) { return s ? Json(*s) : Json(nullptr); }

}  // namespace

Json to_json(const MutationCertificate& certificate, bool witnesses) {
  Json out;
  out["side"] = to_string(certificate.side);
  out["negative"] = subsets_json(certificate.negative);
  out["zero"] = certificate.zero.size();
  out["positive"] = subsets_json(certificate.positive);
  out["pairs"] = certificate.witnesses.size();
  out["passed"] = certificate.passed();
  if (witnesses) {
    Json list = Json::array();
    for (const auto& w : certificate.witnesses) {
      Json entry;
      entry["positive"] = w.positive;
      entry["negative"] = w.negative;
      entry["constructive"] = Json::array({w.constructive_first, w.constructive_second});
      entry["constructive_valid"] = w.constructive_valid;
      entry["search"] = Json::array({optional_subset(w.search_first), optional_subset(w.search_second)});
      list.push_back(entry);
    }
    out["witnesses"] = list;
  }
  return out;
}

Json to_json(const StepReport& step, bool witnesses) {
  Json out;
  out["index"] = step.index;
  out["triple"] = to_json(step.triple);
  out["bijection"] = step.bijection;
  out["matches_swap"] = step.matches_swap;
  out["inverse"] = step.inverse_ok;
  out["before"] = to_json(step.before, witnesses);
  out["after"] = to_json(step.after, witnesses);
  out["issues"] = step.issues;
  out["passed"] = step.passed();
  return out;
}

Json to_json(const ChainReport& report, bool witnesses) {
  Json out;
  out["k"] = report.k;
  out["n"] = report.n;
  out["starts_at_diagonal"] = report.starts_at_diagonal;
  out["ends_at_fflv"] = report.ends_at_fflv;
  Json steps = Json::array();
  for (const auto& s : report.steps) steps.push_back(to_json(s, witnesses));
  out["steps"] = steps;
  if (!report.counts.empty()) {
    Json counts = Json::array();
    for (std::size_t t = 0; t < report.counts.size(); ++t) {
      Json entry;
      entry["t"] = t + 1;
      entry["counts"] = report.counts[t];
      counts.push_back(entry);
    }
    out["lattice_points"] = counts;
    out["counts_constant"] = report.counts_constant;
  }
  out["passed"] = report.passed();
  return out;
}

Json to_json(const EquivalenceReport& report) {
  Json out;
  out["source_vertices"] = report.source_vertices;
  out["target_vertices"] = report.target_vertices;
  out["images_match"] = report.images_match;
  out["injective"] = report.injective;
  out["lattice"] = report.lattice_ok;
  out["pointwise"] = report.pointwise_ok;
  out["issues"] = report.issues;
  out["passed"] = report.passed();
  return out;
}

Json to_json(const InitialTerm& term) {
  Json out;
  out["set"] = term.subset;
  out["sign"] = term.sign;
  out["assignment"] = term.assignment;
  out["weight"] = to_json(term.weight);
  return out;
}

Json to_json(const InducedWeight& weight) {
  Json out = Json::array();
  for (std::size_t i = 0; i < weight.subsets.size(); ++i) {
    Json entry;
    entry["set"] = weight.subsets[i];
    entry["weight"] = to_json(weight.values[i]);
    out.push_back(entry);
  }
  return out;
}

Json to_json(const PlueckerTerm& term) {
  Json out;
  out["coefficient"] = term.coefficient;
  out["first"] = term.first;
  out["second"] = term.second;
  return out;
}

Json to_json(const PlueckerRelation& relation) {
  Json out;
  out["a"] = relation.a;
  out["b"] = relation.b;
  out["text"] = relation.to_string();
  Json terms = Json::array();
  for (const auto& t : relation.terms) terms.push_back(to_json(t));
  out["terms"] = terms;
  return out;
}

Json to_json(const InitialForm& form) {
  Json out;
  std::string text;
  Json terms = Json::array();
  for (std::size_t i = 0; i < form.terms.size(); ++i) {
    terms.push_back(to_json(form.terms[i]));
    text += format_term(form.terms[i], i == 0);
  }
  out["text"] = text;
  out["terms"] = terms;
  out["weight"] = to_json(form.weight);
  out["binomial"] = form.binomial;
  return out;
}

Rational rational_from_json(const Json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long long>());
  throw std::invalid_argument("expected an integer or a rational string");
}

WeightMatrix weight_matrix_from_json(const Json& j) {
  const Json& rows = j.is_object() ? j.at("weights") : j;
  if (!rows.is_array() || rows.empty()) throw std::invalid_argument("weight matrix must be a non-empty array of rows");
  RationalMatrix m;
  for (const auto& row : rows) {
    if (!row.is_array()) throw std::invalid_argument("weight matrix rows must be arrays");
    RationalVector r;
    for (const auto& x : row) r.push_back(rational_from_json(x));
    m.push_back(std::move(r));
  }
  return WeightMatrix(std::move(m));
}

MatchingField matching_field_from_json(const Json& j) {
  std::vector<Tuple> tuples;
  const Json& list = j.is_object() ? j.at("tuples") : j;
  if (!list.is_array() || list.empty()) throw std::invalid_argument("matching field needs a non-empty tuple list");
  for (const auto& entry : list) tuples.push_back((entry.is_object() ? entry.at("tuple") : entry).get<Tuple>());
  int n = 0;
  for (const auto& t : tuples)
    for (int x : t) n = std::max(n, x);
  const int k = static_cast<int>(tuples.front().size());
  if (j.is_object()) {
    if (j.contains("k") && j.at("k").get<int>() != k) throw std::invalid_argument("tuple length differs from k");
    if (j.contains("n")) n = j.at("n").get<int>();
  }
  return MatchingField(k, n, std::move(tuples));
}

LatticePolytope polytope_from_json(const Json& j) {
  auto vertices = j.at("vertices").get<std::vector<IntVector>>();
  const std::size_t dim = j.contains("ambient_dim") ? j.at("ambient_dim").get<std::size_t>()
                                                    : (vertices.empty() ? 0 : vertices.front().size());
  return LatticePolytope(dim, std::move(vertices));
}

}  // namespace matchfield::json_io
