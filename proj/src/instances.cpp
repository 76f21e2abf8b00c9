#include "matsolve/instances.hpp"

#include <random>

#include "matsolve/errors.hpp"

namespace matsolve {

namespace {

const std::map<std::string, Shape>& shape_table() {
  static const std::map<std::string, Shape> t = {
      {"unilateral", Shape::Unilateral}, {"riccati", Shape::Riccati},
      {"plex1", Shape::Plex1},           {"plex2", Shape::Plex2},
      {"degmax", Shape::Degmax},         {"commuting", Shape::Commuting},
      {"symmetric", Shape::Symmetric},   {"binome", Shape::Binome}};
  return t;
}

// Modulo instead of uniform_int_distribution: the distribution's algorithm is
// implementation-defined, and reproducibility across standard libraries
// matters more here than the negligible bias.
Rat draw_entry(std::mt19937_64& rng) { return Rat(static_cast<long>(rng() % 5) - 2); }

RatMatrix draw_matrix(std::mt19937_64& rng, int n) {
  RatMatrix m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m.at(i, j) = draw_entry(rng);
  return m;
}

EquationSpec::Word x_times(int count) {
  EquationSpec::Word w;
  for (int i = 0; i < count; ++i) w.push_back(EquationSpec::x());
  return w;
}

EquationSpec::Word left_word(const std::string& name, int xs) {
  EquationSpec::Word w{EquationSpec::c(name)};
  for (int i = 0; i < xs; ++i) w.push_back(EquationSpec::x());
  return w;
}

const RatMatrix& named_or_throw(const Instance& inst, const std::string& key) {
  auto it = inst.named.find(key);
  if (it == inst.named.end()) throw parse_error("instance lacks matrix " + key);
  return it->second;
}

}  // namespace

std::string shape_name(Shape s) {
  for (const auto& [name, shape] : shape_table())
    if (shape == s) return name;
  throw parse_error("unknown shape");
}

Shape shape_from_name(const std::string& name) {
  auto it = shape_table().find(name);
  if (it == shape_table().end()) throw parse_error("unknown shape '" + name + "'");
  return it->second;
}

Instance random_instance(Shape shape, int n, int k, unsigned long long seed) {
  if (n < 1) throw parse_error("dimension must be positive");
  bool degree_matters = shape == Shape::Unilateral || shape == Shape::Commuting;
  if (degree_matters && k < 2) throw parse_error("degree must be at least 2");

  Instance inst;
  inst.shape = shape;
  inst.n = n;
  inst.k = degree_matters ? k : 2;
  inst.seed = seed;
  std::mt19937_64 rng(seed);

  switch (shape) {
    case Shape::Unilateral: {
      // Unilateral instances promise the full simple solvent family, so the
      // draw is gated: invertible leading coefficient (exact), then a solve
      // whose genericity checks reject repeated lambda-roots and dependent
      // eigenvector subsets. Degenerate draws advance the stream and retry,
      // keeping generation deterministic per seed.
      long expected = binomial(n * k, n);
      for (int attempt = 0;; ++attempt) {
        if (attempt >= 64) throw not_generic("no generic unilateral draw for this seed");
        std::vector<RatMatrix> cs;
        for (int i = 0; i <= k; ++i) cs.push_back(draw_matrix(rng, n));
        if (cs.back().det() == 0) continue;
        try {
          SolutionSet sols = solve_unilateral(RatMatPolynomial{cs});
          if (static_cast<long>(sols.solutions.size()) != expected || !sols.all_simple)
            continue;
        } catch (const Error&) {
          continue;
        }
        inst.coeffs = std::move(cs);
        break;
      }
      break;
    }
    case Shape::Riccati: {
      // The reduction path inverts A, so singular draws are skipped; the rng
      // stream continues, keeping generation deterministic per seed.
      RatMatrix a = draw_matrix(rng, n);
      while (a.det() == 0) a = draw_matrix(rng, n);
      inst.named["A"] = a;
      for (const char* key : {"B1", "B2", "C"}) inst.named[key] = draw_matrix(rng, n);
      break;
    }
    case Shape::Plex1:
      for (const char* key : {"B", "C", "D"}) inst.named[key] = draw_matrix(rng, n);
      break;
    case Shape::Plex2:
      for (const char* key : {"B", "C"}) inst.named[key] = draw_matrix(rng, n);
      break;
    case Shape::Degmax:
      for (const char* key : {"A", "B1", "B2", "C", "D", "F"})
        inst.named[key] = draw_matrix(rng, n);
      break;
    case Shape::Commuting: {
      RatMatrix b0 = draw_matrix(rng, n);
      inst.coeffs.push_back(b0);
      for (int j = 1; j < k; ++j) {
        RatMatrix bj(n, n);
        RatMatrix power = RatMatrix::identity(n);
        for (int c = 0; c < n; ++c) {
          bj = bj + power * draw_entry(rng);
          power = power * b0;
        }
        inst.coeffs.push_back(bj);
      }
      break;
    }
    case Shape::Symmetric:
      for (const char* key : {"B", "C"}) inst.named[key] = draw_matrix(rng, n);
      break;
    case Shape::Binome:
      inst.named["T"] = draw_matrix(rng, n);
      break;
  }
  return inst;
}

EquationSpec to_equation_spec(const Instance& inst) {
  EquationSpec s;
  s.n = inst.n;
  switch (inst.shape) {
    case Shape::Unilateral: {
      if (static_cast<int>(inst.coeffs.size()) != inst.k + 1)
        throw parse_error("unilateral instance needs k+1 coefficients");
      for (int i = inst.k; i >= 1; --i) {
        std::string name = "A" + std::to_string(i);
        s.constants[name] = inst.coeffs[i];
        s.words.push_back(left_word(name, i));
      }
      s.constant_term = inst.coeffs[0];
      break;
    }
    case Shape::Riccati:
      s.words = {{EquationSpec::x(), EquationSpec::c("A"), EquationSpec::x()},
                 left_word("B1", 1),
                 {EquationSpec::x(), EquationSpec::c("B2")}};
      s.constants["A"] = named_or_throw(inst, "A");
      s.constants["B1"] = named_or_throw(inst, "B1");
      s.constants["B2"] = named_or_throw(inst, "B2");
      s.constant_term = named_or_throw(inst, "C");
      break;
    case Shape::Plex1:
      s.words = {x_times(2),
                 {EquationSpec::c("B"), EquationSpec::x(), EquationSpec::c("C")}};
      s.constants["B"] = named_or_throw(inst, "B");
      s.constants["C"] = named_or_throw(inst, "C");
      s.constant_term = named_or_throw(inst, "D");
      break;
    case Shape::Plex2:
      s.words = {x_times(2),
                 {EquationSpec::c("B"), EquationSpec::x(), EquationSpec::c("B")}};
      s.constants["B"] = named_or_throw(inst, "B");
      s.constant_term = named_or_throw(inst, "C");
      break;
    case Shape::Degmax:
      s.words = {{EquationSpec::c("A"), EquationSpec::x(), EquationSpec::c("B1"),
                  EquationSpec::x()},
                 {EquationSpec::x(), EquationSpec::c("B2"), EquationSpec::x()},
                 {EquationSpec::x(), EquationSpec::x(), EquationSpec::c("C")},
                 left_word("D", 1)};
      for (const char* key : {"A", "B1", "B2", "C", "D"})
        s.constants[key] = named_or_throw(inst, key);
      s.constant_term = named_or_throw(inst, "F");
      break;
    case Shape::Commuting: {
      if (static_cast<int>(inst.coeffs.size()) != inst.k)
        throw parse_error("commuting instance needs k coefficients");
      s.words.push_back(x_times(inst.k));
      for (int j = inst.k - 1; j >= 1; --j) {
        std::string name = "B" + std::to_string(j);
        s.constants[name] = inst.coeffs[j];
        s.words.push_back(left_word(name, j));
      }
      s.constant_term = inst.coeffs[0];
      break;
    }
    case Shape::Symmetric:
      s.words = {x_times(2), left_word("B", 1), {EquationSpec::x(), EquationSpec::c("B")}};
      s.constants["B"] = named_or_throw(inst, "B");
      s.constant_term = named_or_throw(inst, "C");
      break;
    case Shape::Binome:
      s.words = {x_times(2), left_word("T", 1)};
      s.constants["T"] = named_or_throw(inst, "T");
      break;
  }
  s.validate();
  return s;
}

RatMatPolynomial to_unilateral(const Instance& inst) {
  if (inst.shape != Shape::Unilateral) throw parse_error("instance is not unilateral");
  if (static_cast<int>(inst.coeffs.size()) != inst.k + 1)
    throw parse_error("unilateral instance needs k+1 coefficients");
  RatMatPolynomial mp{inst.coeffs};
  mp.validate();
  return mp;
}

RiccatiProblem to_riccati(const Instance& inst) {
  if (inst.shape != Shape::Riccati) throw parse_error("instance is not a Riccati problem");
  RiccatiProblem p{named_or_throw(inst, "A"), named_or_throw(inst, "B1"),
                   named_or_throw(inst, "B2"), named_or_throw(inst, "C")};
  p.validate();
  return p;
}

CommutingFamily to_commuting(const Instance& inst) {
  if (inst.shape != Shape::Commuting) throw parse_error("instance is not a commuting family");
  CommutingFamily fam{inst.coeffs};
  fam.validate();
  return fam;
}

}  // namespace matsolve
