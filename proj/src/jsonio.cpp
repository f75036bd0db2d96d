#include "cgb/jsonio.hpp"

#include <fstream>
#include <numeric>
#include <sstream>

#include "cgb/parse.hpp"

namespace cgb {

namespace {

long long int_field(const Json& j) {
  if (!j.is_number_integer()) fail("parse_error", "expected an integer");
  return j.get<long long>();
}

std::vector<std::string> names_from_json(const Json& j) {
  if (!j.is_array() || j.empty()) fail("parse_error", "expected a nonempty array of names");
  std::vector<std::string> names;
  for (const Json& n : j) {
    if (!n.is_string()) fail("parse_error", "expected a variable name");
    names.push_back(n.get<std::string>());
  }
  return names;
}

Json names_to_json(const std::vector<std::string>& names) {
  Json a = Json::array();
  for (const auto& n : names) a.push_back(n);
  return a;
}

Json polys_to_json(const std::vector<Poly>& ps) {
  Json a = Json::array();
  for (const Poly& p : ps) a.push_back(to_string(p));
  return a;
}

std::vector<Poly> polys_from_json(const Json& j, const RingPtr& ring) {
  if (!j.is_array()) fail("parse_error", "expected an array of polynomials");
  std::vector<Poly> ps;
  for (const Json& s : j) {
    if (!s.is_string()) fail("parse_error", "expected a polynomial string");
    ps.push_back(parse_poly(ring, s.get<std::string>()));
  }
  return ps;
}

Json classes_to_json(const std::vector<std::vector<int>>& classes) {
  Json a = Json::array();
  for (const auto& cls : classes) {
    Json c = Json::array();
    for (int i : cls) c.push_back(i + 1);  // 1-based, matching variable names
    a.push_back(std::move(c));
  }
  return a;
}

}  // namespace

Json matrix_to_json(const IntMat& m) {
  Json rows = Json::array();
  for (int r = 0; r < m.rows; ++r) {
    Json row = Json::array();
    for (int c = 0; c < m.cols; ++c) row.push_back(m.at(r, c));
    rows.push_back(std::move(row));
  }
  return rows;
}

IntMat matrix_from_json(const Json& j) {
  if (!j.is_array() || j.empty() || !j.at(0).is_array() || j.at(0).empty())
    fail("parse_error", "a matrix is a nonempty array of nonempty rows");
  IntMat m(static_cast<int>(j.size()), static_cast<int>(j.at(0).size()));
  for (int r = 0; r < m.rows; ++r) {
    const Json& row = j.at(r);
    if (!row.is_array() || static_cast<int>(row.size()) != m.cols)
      fail("parse_error", "matrix rows have unequal lengths");
    for (int c = 0; c < m.cols; ++c) m.at(r, c) = int_field(row.at(c));
  }
  return m;
}

Json vector_to_json(const std::vector<long long>& v) {
  Json a = Json::array();
  for (long long x : v) a.push_back(x);
  return a;
}

std::vector<long long> vector_from_json(const Json& j) {
  if (!j.is_array()) fail("parse_error", "expected an array of integers");
  std::vector<long long> v;
  for (const Json& x : j) v.push_back(int_field(x));
  return v;
}

Json order_to_json(const TermOrderSpec& spec, const RingSpec& ring) {
  Json j = Json::object();
  j["kind"] = spec.kind == OrderKind::Lex ? "lex" : "degrevlex";
  Json pri = Json::array();
  for (int p : spec.priority) pri.push_back(ring.names.at(p));
  j["priority"] = std::move(pri);
  if (!spec.weights.empty()) {
    Json ws = Json::array();
    for (const auto& w : spec.weights) ws.push_back(vector_to_json(w));
    j["weights"] = std::move(ws);
  }
  return j;
}

TermOrderSpec order_from_json(const Json& j, const RingSpec& ring) {
  if (!j.is_object()) fail("parse_error", "an order is an object with kind and priority");
  TermOrderSpec spec;
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "lex")
    spec.kind = OrderKind::Lex;
  else if (kind == "degrevlex")
    spec.kind = OrderKind::DegRevLex;
  else
    fail("parse_error", "unknown order kind '" + kind + "'");
  if (j.contains("priority")) {
    for (const std::string& name : names_from_json(j.at("priority"))) {
      int idx = ring.index_of(name);
      if (idx < 0) fail("parse_error", "unknown variable '" + name + "' in order priority");
      spec.priority.push_back(idx);
    }
  } else {
    spec.priority.resize(ring.nvars());
    std::iota(spec.priority.begin(), spec.priority.end(), 0);
  }
  if (j.contains("weights"))
    for (const Json& w : j.at("weights")) spec.weights.push_back(vector_from_json(w));
  spec.validate(ring.nvars());
  return spec;
}

Json basis_to_json(const GroebnerBasis& gb) {
  Json j = Json::object();
  j["ring"] = names_to_json(gb.ring->names);
  j["order"] = order_to_json(gb.order, *gb.ring);
  j["reduced"] = gb.reduced;
  j["elements"] = polys_to_json(gb.elements);
  Json inits = Json::array();
  for (const Exponents& e : gb.initial_exponents) inits.push_back(monomial_to_string(*gb.ring, e));
  j["initials"] = std::move(inits);
  return j;
}

Json map_to_json(const MonomialMap& map) {
  Json j = Json::object();
  j["matrix"] = matrix_to_json(map.matrix);
  j["source"] = names_to_json(map.source->names);
  j["target"] = names_to_json(map.target_names);
  return j;
}

MonomialMap map_from_json(const Json& j) {
  if (!j.is_object()) fail("parse_error", "a map is an object with a matrix");
  IntMat m = matrix_from_json(j.at("matrix"));
  RingPtr source = j.contains("source") ? make_ring(names_from_json(j.at("source")))
                                        : make_ring("x", m.cols);
  std::vector<std::string> target;
  if (j.contains("target")) target = names_from_json(j.at("target"));
  return make_map(std::move(m), std::move(source), std::move(target));
}

Json problem_to_json(const ContractionProblem& p) {
  Json j = Json::object();
  j["map"] = map_to_json(p.map);
  j["grading"] = matrix_to_json(p.grading.deg);
  Json h = Json::array();
  for (const auto& v : p.h_generators) h.push_back(vector_to_json(v));
  j["h_generators"] = std::move(h);
  j["ideal"] = polys_to_json(p.ideal.generators);
  j["weight"] = vector_to_json(p.weight);
  j["order"] = order_to_json(p.order, *p.map.source);
  return j;
}

ContractionProblem problem_from_json(const Json& j) {
  if (!j.is_object()) fail("parse_error", "a problem is an object with map, ideal and order");
  ContractionProblem p;
  p.map = map_from_json(j.at("map"));
  const RingPtr target = make_ring(p.map.target_names);
  p.grading.deg = matrix_from_json(j.at("grading"));
  if (j.contains("h_generators"))
    for (const Json& v : j.at("h_generators")) p.h_generators.push_back(vector_from_json(v));
  p.ideal = IdealPresentation{target, polys_from_json(j.at("ideal"), target)};
  p.weight = vector_from_json(j.at("weight"));
  p.order = j.contains("order") ? order_from_json(j.at("order"), *p.map.source)
                                : TermOrderSpec::degrevlex(p.map.source->nvars());
  return p;
}

Json report_to_json(const ContractionReport& r, const RingPtr& source_ring) {
  Json j = Json::object();
  j["structured"] = r.structured;
  j["pulled_back_weight"] = vector_to_json(r.pulled_back_weight);
  j["groebner"] = basis_to_json(r.groebner);
  Json inits = Json::array();
  for (const Exponents& e : r.initial.generators())
    inits.push_back(monomial_to_string(*source_ring, e));
  j["initial"] = std::move(inits);
  j["delta"] = r.delta;
  j["squarefree"] = r.squarefree;
  j["delta_ideal"] = r.delta_ideal;
  j["squarefree_ideal"] = r.squarefree_ideal;
  j["delta_kernel"] = r.delta_kernel;
  j["squarefree_kernel"] = r.squarefree_kernel;
  return j;
}

Json nested_instance_to_json(const NestedInstance& inst) {
  Json j = Json::object();
  j["degree_patterns"] = matrix_to_json(inst.a_config);
  j["property_matrix"] = matrix_to_json(inst.v_matrix);
  Json t = Json::array();
  for (const auto& v : inst.targets) t.push_back(vector_to_json(v));
  j["targets"] = std::move(t);
  Json b = Json::array();
  for (const IntMat& m : inst.blocks) b.push_back(matrix_to_json(m));
  j["blocks"] = std::move(b);
  return j;
}

NestedInstance nested_instance_from_json(const Json& j) {
  if (!j.is_object()) fail("parse_error", "an instance needs degree patterns, a property matrix, targets and blocks");
  NestedInstance inst;
  inst.a_config = matrix_from_json(j.at("degree_patterns"));
  inst.v_matrix = matrix_from_json(j.at("property_matrix"));
  for (const Json& v : j.at("targets")) inst.targets.push_back(vector_from_json(v));
  for (const Json& m : j.at("blocks")) inst.blocks.push_back(matrix_from_json(m));
  return inst;
}

Json nested_result_to_json(const NestedResult& r) {
  Json j = Json::object();
  j["fiber_union"] = map_to_json(r.a_tilde);
  j["block_matrix"] = matrix_to_json(r.b_matrix);
  j["product"] = map_to_json(r.product.map);
  j["duplicate_columns"] = classes_to_json(r.product.duplicate_classes);
  j["grading"] = matrix_to_json(r.grading.deg);
  return j;
}

Json fiber_product_instance_to_json(const FiberProductInstance& inst) {
  Json j = Json::object();
  j["s_sizes"] = vector_to_json(std::vector<long long>(inst.s_sizes.begin(), inst.s_sizes.end()));
  j["t_sizes"] = vector_to_json(std::vector<long long>(inst.t_sizes.begin(), inst.t_sizes.end()));
  j["ideal_y"] = polys_to_json(inst.gens_1);
  j["ideal_z"] = polys_to_json(inst.gens_2);
  j["w1"] = vector_to_json(inst.w1);
  j["w2"] = vector_to_json(inst.w2);
  return j;
}

FiberProductInstance fiber_product_instance_from_json(const Json& j) {
  if (!j.is_object()) fail("parse_error", "an instance needs block sizes, ideals and weights");
  FiberProductInstance inst;
  for (long long v : vector_from_json(j.at("s_sizes"))) inst.s_sizes.push_back(static_cast<int>(v));
  for (long long v : vector_from_json(j.at("t_sizes"))) inst.t_sizes.push_back(static_cast<int>(v));
  const RingPtr ry = block_ring(inst.s_sizes, "y");
  const RingPtr rz = block_ring(inst.t_sizes, "z");
  if (j.contains("ideal_y")) inst.gens_1 = polys_from_json(j.at("ideal_y"), ry);
  if (j.contains("ideal_z")) inst.gens_2 = polys_from_json(j.at("ideal_z"), rz);
  inst.w1 = j.contains("w1") ? vector_from_json(j.at("w1")) : WeightVec(ry->nvars(), 0);
  inst.w2 = j.contains("w2") ? vector_from_json(j.at("w2")) : WeightVec(rz->nvars(), 0);
  return inst;
}

Json fiber_product_result_to_json(const FiberProductResult& r) {
  Json j = Json::object();
  j["kernel"] = basis_to_json(r.kernel);
  j["kernel_verified"] = r.kernel_verified;
  j["problem"] = problem_to_json(r.problem);
  return j;
}

Json flagship_report_to_json(const FlagshipReport& r) {
  Json j = Json::object();
  j["data_dir"] = r.data_dir;
  Json checks = Json::array();
  for (const FlagshipCheck& c : r.checks) {
    Json e = Json::object();
    e["name"] = c.name;
    e["detail"] = c.detail;
    checks.push_back(std::move(e));
  }
  j["checks"] = std::move(checks);
  j["sold_tally"] = vector_to_json(r.sold_tally);
  j["ingredient_tally"] = vector_to_json(r.ingredient_tally);
  j["duplicate_columns"] = classes_to_json(r.duplicate_classes);
  j["block_matrix_kernel"] = basis_to_json(r.pb_basis);
  j["composite_kernel_size"] = r.product_kernel.elements.size();
  j["witness_order"] = order_to_json(r.witness.order, *r.witness.kernel.ring);
  j["witness_candidate"] = r.witness.candidate_index;
  j["contraction"] = report_to_json(r.contraction, r.witness.kernel.ring);
  return j;
}

std::string flagship_report_text(const FlagshipReport& r) {
  std::ostringstream os;
  os << "worked example report (" << r.data_dir << ")\n";
  for (const FlagshipCheck& c : r.checks)
    os << "  [ok] " << c.name << ": " << c.detail << "\n";
  return os.str();
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail("io_error", "cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

Json load_json_file(const std::string& path) {
  const std::string text = read_text_file(path);
  try {
    return Json::parse(text);
  } catch (const std::exception& e) {
    fail("parse_error", path + ": " + e.what());
  }
}

std::uint64_t fnv1a64(std::string_view bytes) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

std::string checksum_hex(std::string_view bytes) {
  static const char* digits = "0123456789abcdef";
  std::uint64_t h = fnv1a64(bytes);
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i) {
    out[i] = digits[h & 0xf];
    h >>= 4;
  }
  return out;
}

std::string load_checked_text(const std::string& dir, const std::string& name) {
  const Json manifest = load_json_file(dir + "/manifest.json");
  if (!manifest.contains(name)) fail("fixture_checksum", name + " is not in the manifest");
  const std::string text = read_text_file(dir + "/" + name);
  if (checksum_hex(text) != manifest.at(name).get<std::string>())
    fail("fixture_checksum", name + " is stale or edited");
  return text;
}

Json load_checked_json(const std::string& dir, const std::string& name) {
  const std::string text = load_checked_text(dir, name);
  try {
    return Json::parse(text);
  } catch (const std::exception& e) {
    fail("parse_error", dir + "/" + name + ": " + e.what());
  }
}

}  // namespace cgb
