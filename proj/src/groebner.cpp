#include "matsolve/groebner.hpp"

#include <algorithm>

namespace matsolve {

bool GroebnerBasis::contains_one() const {
  for (const MultiPoly& g : gens)
    if (g.is_constant() && !g.is_zero()) return true;
  return false;
}

MultiPoly normal_form(const MultiPoly& p, const std::vector<MultiPoly>& gens) {
  MultiPoly work = p;
  std::vector<Term> done;
  while (!work.is_zero()) {
    const Term& lt = work.leading_term();
    const MultiPoly* red = nullptr;
    for (const MultiPoly& g : gens) {
      if (!g.is_zero() && divides(g.leading_monomial(), lt.mono)) {
        red = &g;
        break;
      }
    }
    if (red) {
      Monomial m = mono_div(lt.mono, red->leading_monomial());
      work = work - red->mul_term(m, lt.coeff / red->leading_term().coeff);
    } else {
      done.push_back(lt);
      work = work - MultiPoly::term(work.ring(), lt.mono, lt.coeff);
    }
  }
  return MultiPoly(p.ring(), std::move(done));
}

namespace {

MultiPoly spoly(const MultiPoly& f, const MultiPoly& g) {
  Monomial l = mono_lcm(f.leading_monomial(), g.leading_monomial());
  MultiPoly a = f.mul_term(mono_div(l, f.leading_monomial()), 1 / f.leading_term().coeff);
  MultiPoly b = g.mul_term(mono_div(l, g.leading_monomial()), 1 / g.leading_term().coeff);
  return a - b;
}

struct Pair {
  int i, j;
  Monomial lcm;
  int deg;
};

}  // namespace

GroebnerBasis buchberger(const std::vector<MultiPoly>& gens, const GroebnerOptions& opts) {
  RingPtr ring;
  std::vector<MultiPoly> g;
  for (const MultiPoly& p : gens) {
    if (!ring) ring = p.ring();
    if (!p.is_zero()) g.push_back(p.primitive());
  }
  if (!ring) throw parse_error("empty generator list");
  const MonomialOrder ord = ring->order;

  std::vector<Pair> pending;
  auto add_pairs_for = [&](int idx) {
    for (int i = 0; i < idx; ++i) {
      Monomial l = mono_lcm(g[i].leading_monomial(), g[idx].leading_monomial());
      int d = total_degree(l);
      pending.push_back(Pair{i, idx, std::move(l), d});
    }
  };
  for (int i = 1; i < static_cast<int>(g.size()); ++i) add_pairs_for(i);

  auto pair_pending = [&](int a, int b) {
    for (const Pair& p : pending)
      if ((p.i == a && p.j == b) || (p.i == b && p.j == a)) return true;
    return false;
  };

  long reductions = 0;
  while (!pending.empty()) {
    // normal strategy: smallest lcm degree, ties by monomial order then index
    size_t best = 0;
    for (size_t k = 1; k < pending.size(); ++k) {
      const Pair &a = pending[k], &b = pending[best];
      if (a.deg != b.deg) {
        if (a.deg < b.deg) best = k;
        continue;
      }
      int c = mono_cmp(a.lcm, b.lcm, ord);
      if (c != 0) {
        if (c < 0) best = k;
        continue;
      }
      if (a.j < b.j || (a.j == b.j && a.i < b.i)) best = k;
    }
    Pair pr = std::move(pending[best]);
    pending.erase(pending.begin() + best);

    const Monomial& lmi = g[pr.i].leading_monomial();
    const Monomial& lmj = g[pr.j].leading_monomial();
    if (mono_coprime(lmi, lmj)) continue;
    // chain criterion: some third generator divides the lcm and both side
    // pairs are already settled
    bool skip = false;
    for (int k = 0; k < static_cast<int>(g.size()); ++k) {
      if (k == pr.i || k == pr.j) continue;
      if (divides(g[k].leading_monomial(), pr.lcm) && !pair_pending(pr.i, k) &&
          !pair_pending(pr.j, k)) {
        skip = true;
        break;
      }
    }
    if (skip) continue;

    if (++reductions > opts.pair_budget)
      throw budget_exceeded("pair budget exhausted after " + std::to_string(opts.pair_budget) +
                            " reductions");
    MultiPoly nf = normal_form(spoly(g[pr.i], g[pr.j]), g).primitive();
    if (!nf.is_zero()) {
      g.push_back(std::move(nf));
      add_pairs_for(static_cast<int>(g.size()) - 1);
    }
  }

  // minimalize: drop generators whose leading monomial another one divides
  std::vector<MultiPoly> minimal;
  for (size_t i = 0; i < g.size(); ++i) {
    bool redundant = false;
    for (size_t j = 0; j < g.size() && !redundant; ++j) {
      if (i == j) continue;
      if (divides(g[j].leading_monomial(), g[i].leading_monomial())) {
        // on equal leading monomials keep the earlier generator
        if (g[i].leading_monomial() == g[j].leading_monomial()) redundant = j < i;
        else redundant = true;
      }
    }
    if (!redundant) minimal.push_back(g[i]);
  }

  // tail-reduce to the unique reduced basis
  bool changed = true;
  while (changed) {
    changed = false;
    for (size_t i = 0; i < minimal.size(); ++i) {
      std::vector<MultiPoly> others;
      others.reserve(minimal.size() - 1);
      for (size_t j = 0; j < minimal.size(); ++j)
        if (j != i) others.push_back(minimal[j]);
      MultiPoly r = normal_form(minimal[i], others).primitive();
      if (!(r == minimal[i])) {
        minimal[i] = std::move(r);
        changed = true;
      }
    }
  }
  for (MultiPoly& p : minimal) p = p.monic();
  std::sort(minimal.begin(), minimal.end(), [ord](const MultiPoly& a, const MultiPoly& b) {
    return mono_cmp(a.leading_monomial(), b.leading_monomial(), ord) < 0;
  });
  return GroebnerBasis{ring, std::move(minimal)};
}

namespace {

bool lm_supported_in(const Monomial& lm, unsigned subset_mask) {
  for (size_t v = 0; v < lm.size(); ++v)
    if (lm[v] > 0 && !(subset_mask & (1u << v))) return false;
  return true;
}

}  // namespace

IdealSummary analyze_ideal(const GroebnerBasis& gb) {
  IdealSummary s;
  s.order = gb.ring->order;
  s.basis_size = static_cast<int>(gb.gens.size());
  const int n = gb.ring->nvars();
  if (n > 20) throw cap_exceeded("dimension analysis limited to 20 variables");

  std::vector<Monomial> lms;
  for (const MultiPoly& g : gb.gens) lms.push_back(g.leading_monomial());

  // Hilbert dimension of the leading-term ideal: the largest variable subset
  // S such that no leading monomial is supported entirely inside S.
  int dim = 0;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    bool ok = true;
    for (const Monomial& lm : lms)
      if (lm_supported_in(lm, mask)) {
        ok = false;
        break;
      }
    if (ok) dim = std::max(dim, __builtin_popcount(mask));
  }
  if (gb.contains_one()) dim = 0;  // empty variety
  s.hilbert_dimension = dim;
  s.is_zero_dimensional = (dim == 0);
  if (s.is_zero_dimensional)
    s.quotient_dimension = static_cast<long>(standard_monomials(gb).size());
  return s;
}

std::vector<Monomial> standard_monomials(const GroebnerBasis& gb) {
  const int n = gb.ring->nvars();
  std::vector<Monomial> lms;
  for (const MultiPoly& g : gb.gens) lms.push_back(g.leading_monomial());

  // Zero-dimensionality gives every variable a pure-power leading monomial;
  // its degree bounds the exponent of standard monomials in that variable.
  std::vector<unsigned> caps(n, 0);
  for (int v = 0; v < n; ++v) {
    bool found = false;
    unsigned best = 0;
    for (const Monomial& lm : lms) {
      bool pure = true;
      for (int w = 0; w < n; ++w)
        if (w != v && lm[w] > 0) {
          pure = false;
          break;
        }
      if (pure && (!found || lm[v] < best)) {
        found = true;
        best = lm[v];
      }
    }
    if (!found)
      throw Error(ErrorKind::Internal, "standard_monomials called on a positive-dimensional ideal");
    caps[v] = best;
  }

  long box = 1;
  for (int v = 0; v < n; ++v) {
    box *= caps[v] == 0 ? 1 : caps[v];
    if (box > 10000000L) throw cap_exceeded("standard monomial box too large");
  }

  std::vector<Monomial> out;
  Monomial cur(n, 0);
  for (;;) {
    bool standard = true;
    for (const Monomial& lm : lms)
      if (divides(lm, cur)) {
        standard = false;
        break;
      }
    if (standard) out.push_back(cur);
    // odometer over the box [0, caps)
    int v = n - 1;
    while (v >= 0) {
      if (caps[v] > 0 && cur[v] + 1 < caps[v]) {
        ++cur[v];
        break;
      }
      cur[v] = 0;
      --v;
    }
    if (v < 0) break;
  }
  return out;
}

bool variety_is_origin_only(const GroebnerBasis& gb, int max_power) {
  return variety_is_single_point(gb, std::vector<Rat>(gb.ring->nvars(), Rat(0)), max_power);
}

bool variety_is_single_point(const GroebnerBasis& gb, const std::vector<Rat>& point,
                             int max_power) {
  for (int v = 0; v < gb.ring->nvars(); ++v) {
    MultiPoly shifted =
        MultiPoly::variable(gb.ring, v) - MultiPoly::constant(gb.ring, point[v]);
    MultiPoly p = MultiPoly::constant(gb.ring, Rat(1));
    bool vanished = false;
    for (int m = 1; m <= max_power; ++m) {
      p = p * shifted;
      if (normal_form(p, gb.gens).is_zero()) {
        vanished = true;
        break;
      }
    }
    if (!vanished) return false;
  }
  return true;
}

}  // namespace matsolve
