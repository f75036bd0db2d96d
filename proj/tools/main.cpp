#include <cctype>
#include <fstream>
#include <iostream>
#include <numeric>
#include <string>

#include "CLI11.hpp"

#include "cgb/jsonio.hpp"
#include "cgb/parse.hpp"

namespace {

using namespace cgb;

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == ',') {
      out.push_back(cur);
      cur.clear();
    } else if (!std::isspace(static_cast<unsigned char>(c))) {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

// Grammar: kind[:name1,name2,...] with the names listed largest first;
// each --weight row is prepended as a refinement, first row outermost.
TermOrderSpec order_flag(const std::string& text, const std::vector<std::string>& weight_rows,
                         const RingSpec& ring) {
  std::string kind = text, names;
  if (size_t pos = text.find(':'); pos != std::string::npos) {
    kind = text.substr(0, pos);
    names = text.substr(pos + 1);
  }
  TermOrderSpec spec;
  if (kind == "lex")
    spec.kind = OrderKind::Lex;
  else if (kind == "degrevlex")
    spec.kind = OrderKind::DegRevLex;
  else
    fail("parse_error", "unknown order kind '" + kind + "'");
  if (names.empty()) {
    spec.priority.resize(ring.nvars());
    std::iota(spec.priority.begin(), spec.priority.end(), 0);
  } else {
    for (const std::string& n : split_list(names)) {
      int idx = ring.index_of(n);
      if (idx < 0) fail("parse_error", "unknown variable '" + n + "' in the order flag");
      spec.priority.push_back(idx);
    }
  }
  for (const std::string& row : weight_rows) {
    WeightVec w;
    for (const std::string& v : split_list(row)) {
      try {
        w.push_back(std::stoll(v));
      } catch (const std::exception&) {
        fail("parse_error", "bad weight entry '" + v + "'");
      }
    }
    spec.weights.push_back(std::move(w));
  }
  spec.validate(ring.nvars());
  return spec;
}

void emit(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) fail("io_error", "cannot write " + path);
  out << text;
}

std::vector<Poly> read_poly_file(const RingPtr& ring, const std::string& path) {
  std::ifstream in(path);
  if (!in) fail("io_error", "cannot open " + path);
  std::vector<Poly> out;
  std::string line;
  while (std::getline(in, line)) {
    size_t a = line.find_first_not_of(" \t\r");
    if (a == std::string::npos || line[a] == '#') continue;
    out.push_back(parse_poly(ring, line));
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Groebner bases of toric ideals and their contractions under monomial maps"};
  app.require_subcommand(1);

  std::string matrix_path, target_path, ring_list, gens_path, problem_path, instance_path;
  std::string order_text = "degrevlex";
  std::vector<std::string> weight_rows;
  std::string out_path, data_dir;
  bool oracle = false, as_json = false;

  CLI::App* toric_cmd = app.add_subcommand("toric", "Reduced kernel basis of an integer matrix");
  toric_cmd->add_option("--matrix", matrix_path, "matrix JSON (array of rows)")->required();
  toric_cmd->add_option("--order", order_text, "term order, kind[:names largest first]");
  toric_cmd->add_option("--weight", weight_rows, "weight refinement row w1,w2,...");
  toric_cmd->add_option("--output", out_path, "output path (default stdout)");
  toric_cmd->callback([&] {
    IntMat m = matrix_from_json(load_json_file(matrix_path));
    RingPtr src = make_ring("x", m.cols);
    TermOrderSpec spec = order_flag(order_text, weight_rows, *src);
    GroebnerBasis gb = toric_ideal(make_map(std::move(m), src), spec);
    emit(basis_to_json(gb).dump(2) + "\n", out_path);
  });

  CLI::App* gro_cmd = app.add_subcommand("groebner", "Reduced basis of an explicit ideal");
  gro_cmd->add_option("--ring", ring_list, "comma-separated variable names")->required();
  gro_cmd->add_option("--gens", gens_path, "generator file, one polynomial per line")->required();
  gro_cmd->add_option("--order", order_text, "term order, kind[:names largest first]");
  gro_cmd->add_option("--weight", weight_rows, "weight refinement row w1,w2,...");
  gro_cmd->add_option("--output", out_path, "output path (default stdout)");
  gro_cmd->callback([&] {
    RingPtr ring = make_ring(split_list(ring_list));
    TermOrderSpec spec = order_flag(order_text, weight_rows, *ring);
    GroebnerBasis gb = buchberger({ring, read_poly_file(ring, gens_path)}, spec);
    emit(basis_to_json(gb).dump(2) + "\n", out_path);
  });

  CLI::App* con_cmd = app.add_subcommand("contract", "Contraction of an ideal along a monomial map");
  con_cmd->add_option("--problem", problem_path, "problem JSON")->required();
  con_cmd->add_flag("--oracle", oracle, "elimination route, no structural hypotheses");
  con_cmd->add_option("--output", out_path, "output path (default stdout)");
  con_cmd->callback([&] {
    ContractionProblem p = problem_from_json(load_json_file(problem_path));
    ContractionReport rep = oracle ? contract_oracle(p) : contract_initial(p);
    emit(report_to_json(rep, p.map.source).dump(2) + "\n", out_path);
  });

  CLI::App* fib_cmd = app.add_subcommand("fiber", "All nonnegative preimages of a degree vector");
  fib_cmd->add_option("--matrix", matrix_path, "grading matrix JSON")->required();
  fib_cmd->add_option("--target", target_path, "target vector JSON")->required();
  fib_cmd->add_option("--output", out_path, "output path (default stdout)");
  fib_cmd->callback([&] {
    Grading g{matrix_from_json(load_json_file(matrix_path))};
    std::vector<long long> target = vector_from_json(load_json_file(target_path));
    Json arr = Json::array();
    for (const Exponents& e : fiber(g, target)) {
      Json row = Json::array();
      for (int v : e) row.push_back(v);
      arr.push_back(std::move(row));
    }
    emit(arr.dump(2) + "\n", out_path);
  });

  CLI::App* nest_cmd = app.add_subcommand("nested", "Fiber-union and composite configuration");
  nest_cmd->add_option("--instance", instance_path, "instance JSON")->required();
  nest_cmd->add_option("--output", out_path, "output path (default stdout)");
  nest_cmd->callback([&] {
    NestedResult r = nested_config(nested_instance_from_json(load_json_file(instance_path)));
    emit(nested_result_to_json(r).dump(2) + "\n", out_path);
  });

  CLI::App* fp_cmd = app.add_subcommand("fiberproduct", "Glued contraction of two block ideals");
  fp_cmd->add_option("--instance", instance_path, "instance JSON")->required();
  fp_cmd->add_option("--output", out_path, "output path (default stdout)");
  fp_cmd->callback([&] {
    FiberProductResult r = fiber_product(fiber_product_instance_from_json(load_json_file(instance_path)));
    Json j = fiber_product_result_to_json(r);
    j["contraction"] = report_to_json(contract_initial(r.problem), r.problem.map.source);
    emit(j.dump(2) + "\n", out_path);
  });

  CLI::App* ver_cmd = app.add_subcommand("verify-paper-example", "Recompute the checked-in worked example");
  ver_cmd->add_option("--data", data_dir, "fixture directory (default: checked-in data)");
  ver_cmd->add_flag("--json", as_json, "emit the JSON report instead of the text table");
  ver_cmd->add_option("--output", out_path, "output path (default stdout)");
  ver_cmd->callback([&] {
    FlagshipReport rep = data_dir.empty() ? flagship_example() : flagship_example(data_dir);
    emit(as_json ? flagship_report_to_json(rep).dump(2) + "\n" : flagship_report_text(rep),
         out_path);
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const cgb::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
