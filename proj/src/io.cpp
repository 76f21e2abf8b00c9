#include "matsolve/io.hpp"

#include <fstream>
#include <sstream>

#include "matsolve/errors.hpp"

namespace matsolve {

namespace {

// nlohmann exceptions carry internal context; collapse them to Parse errors
// so callers and the CLI see one error taxonomy.
template <typename Fn>
auto guarded(const char* what, Fn&& fn) -> decltype(fn()) {
  try {
    return fn();
  } catch (const nlohmann::json::exception& e) {
    throw parse_error(std::string(what) + ": " + e.what());
  }
}

}  // namespace

Json rat_matrix_to_json(const RatMatrix& m) {
  Json rows = Json::array();
  for (int i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (int j = 0; j < m.cols(); ++j) row.push_back(rat_to_string(m.at(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

RatMatrix rat_matrix_from_json(const Json& j) {
  return guarded("matrix", [&] {
    if (!j.is_array() || j.empty()) throw parse_error("matrix must be a non-empty array");
    std::vector<std::vector<Rat>> rows;
    for (const Json& row : j) {
      std::vector<Rat> r;
      for (const Json& cell : row) {
        if (cell.is_number_integer())
          r.push_back(Rat(cell.get<long>()));
        else
          r.push_back(parse_rat(cell.get<std::string>()));
      }
      rows.push_back(std::move(r));
    }
    return RatMatrix::from_rows(rows);
  });
}

Json complex_to_json(const Complex& z) { return Json{{"re", z.real()}, {"im", z.imag()}}; }

Json cmatrix_to_json(const CMatrix& m) {
  Json rows = Json::array();
  for (int i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (int j = 0; j < m.cols(); ++j) row.push_back(complex_to_json(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Json equation_to_json(const EquationSpec& spec) {
  Json j;
  j["type"] = "equation";
  j["n"] = spec.n;
  Json terms = Json::array();
  for (const EquationSpec::Word& w : spec.words) {
    Json word = Json::array();
    for (const EquationSpec::Factor& f : w) word.push_back(f.is_x ? "X" : f.name);
    terms.push_back(Json{{"word", std::move(word)}});
  }
  j["terms"] = std::move(terms);
  Json consts = Json::object();
  for (const auto& [name, m] : spec.constants) consts[name] = rat_matrix_to_json(m);
  j["constants"] = std::move(consts);
  if (spec.constant_term) j["F"] = rat_matrix_to_json(*spec.constant_term);
  return j;
}

EquationSpec equation_from_json(const Json& j) {
  return guarded("equation", [&] {
    EquationSpec spec;
    spec.n = j.at("n").get<int>();
    for (const Json& term : j.at("terms")) {
      EquationSpec::Word w;
      for (const Json& factor : term.at("word")) {
        std::string name = factor.get<std::string>();
        w.push_back(name == "X" ? EquationSpec::x() : EquationSpec::c(name));
      }
      spec.words.push_back(std::move(w));
    }
    if (j.contains("constants")) {
      for (const auto& [name, m] : j.at("constants").items()) {
        if (name == "X") throw parse_error("the name X is reserved for the unknown");
        spec.constants[name] = rat_matrix_from_json(m);
      }
    }
    if (j.contains("F")) spec.constant_term = rat_matrix_from_json(j.at("F"));
    spec.validate();
    return spec;
  });
}

Json instance_to_json(const Instance& inst) {
  Json j;
  j["type"] = shape_name(inst.shape);
  j["n"] = inst.n;
  j["k"] = inst.k;
  j["seed"] = inst.seed;
  if (!inst.coeffs.empty()) {
    Json coeffs = Json::array();
    for (const RatMatrix& m : inst.coeffs) coeffs.push_back(rat_matrix_to_json(m));
    j["coeffs"] = std::move(coeffs);
  }
  if (!inst.named.empty()) {
    Json named = Json::object();
    for (const auto& [name, m] : inst.named) named[name] = rat_matrix_to_json(m);
    j["matrices"] = std::move(named);
  }
  return j;
}

Instance instance_from_json(const Json& j) {
  return guarded("instance", [&] {
    Instance inst;
    inst.shape = shape_from_name(j.at("type").get<std::string>());
    inst.n = j.at("n").get<int>();
    inst.k = j.value("k", 2);
    inst.seed = j.value("seed", 0ULL);
    if (j.contains("coeffs"))
      for (const Json& m : j.at("coeffs")) inst.coeffs.push_back(rat_matrix_from_json(m));
    if (j.contains("matrices"))
      for (const auto& [name, m] : j.at("matrices").items())
        inst.named[name] = rat_matrix_from_json(m);
    return inst;
  });
}

EquationSpec load_equation(const Json& j) {
  std::string type = guarded("problem", [&] { return j.value("type", "equation"); });
  if (type == "equation") return equation_from_json(j);
  return to_equation_spec(instance_from_json(j));
}

std::pair<RingPtr, std::vector<MultiPoly>> ideal_from_json(const Json& j, MonomialOrder order) {
  return guarded("ideal", [&] {
    std::vector<std::string> vars = j.at("vars").get<std::vector<std::string>>();
    if (vars.empty()) throw parse_error("an ideal needs at least one variable");
    RingPtr ring = make_ring(vars, order);
    std::vector<MultiPoly> polys;
    for (const Json& p : j.at("polys")) polys.push_back(parse_poly(ring, p.get<std::string>()));
    return std::make_pair(ring, polys);
  });
}

Json solution_set_to_json(const SolutionSet& sols) {
  Json j;
  j["n"] = sols.n;
  j["method"] = sols.method;
  j["expected_count"] = sols.expected_count;
  j["found_count"] = sols.solutions.size();
  j["all_simple"] = sols.all_simple;
  Json list = Json::array();
  for (const Solvent& s : sols.solutions) {
    Json e;
    e["x"] = cmatrix_to_json(s.x);
    e["subset"] = s.subset;
    e["residual"] = s.residual;
    list.push_back(std::move(e));
  }
  j["solutions"] = std::move(list);
  return j;
}

Json verify_report_to_json(const VerifyReport& rep) {
  Json j;
  j["equation_residual"] = rep.equation_residual;
  j["phi_residual"] = rep.phi_residual;
  j["equation_ok"] = rep.equation_ok;
  j["phi_ok"] = rep.phi_ok;
  j["ok"] = rep.ok();
  return j;
}

Json count_result_to_json(const CountResult& res) {
  Json j;
  j["method"] = res.method;
  j["order"] = order_name(res.summary.order);
  j["zero_dimensional"] = res.summary.is_zero_dimensional;
  if (res.summary.quotient_dimension)
    j["count_with_multiplicity"] = *res.summary.quotient_dimension;
  j["hilbert_dimension"] = res.summary.hilbert_dimension;
  j["basis_size"] = res.summary.basis_size;
  Json basis = Json::array();
  for (const MultiPoly& g : res.basis.gens) basis.push_back(g.to_string());
  j["basis"] = std::move(basis);
  if (res.solutions) j["solutions"] = solution_set_to_json(*res.solutions);
  return j;
}

Json jacobian_report_to_json(const JacobianReport& rep) {
  Json j;
  j["jacobian"] = rat_matrix_to_json(rep.jacobian);
  j["det"] = rat_to_string(rep.det);
  j["singular"] = rep.singular;
  return j;
}

Json trace_evenness_to_json(const TraceEvennessReport& rep) {
  Json j;
  j["tau"] = rep.tau;
  j["shift"] = complex_to_json(rep.shift);
  j["max_odd_rel"] = rep.max_odd_rel;
  j["is_even"] = rep.is_even;
  Json r = Json::array();
  for (const Complex& c : rep.r_coeffs) r.push_back(complex_to_json(c));
  j["half_polynomial"] = std::move(r);
  return j;
}

Json fixture_outcome_to_json(const FixtureOutcome& out) {
  Json j;
  j["name"] = out.name;
  j["pass"] = out.pass;
  j["expected"] = out.expected;
  j["actual"] = out.actual;
  j["failures"] = out.failures;
  return j;
}

std::string digest_hex(const std::string& bytes) {
  unsigned long long h = 14695981039346656037ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  std::ostringstream os;
  os << std::hex;
  for (int shift = 60; shift >= 0; shift -= 4) os << ((h >> shift) & 0xF);
  return os.str();
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw parse_error("cannot read file '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

Json load_json_file(const std::string& path) {
  std::string text = read_text_file(path);
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw parse_error("bad JSON in '" + path + "': " + e.what());
  }
}

void write_json_file(const std::string& path, const Json& j) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw parse_error("cannot write file '" + path + "'");
  out << j.dump(2) << "\n";
}

}  // namespace matsolve
