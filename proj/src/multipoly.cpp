#include "matsolve/multipoly.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace matsolve {

std::string order_name(MonomialOrder o) {
  return o == MonomialOrder::Grevlex ? "grevlex" : "lex";
}

MonomialOrder order_from_name(const std::string& name) {
  if (name == "grevlex") return MonomialOrder::Grevlex;
  if (name == "lex") return MonomialOrder::Lex;
  throw parse_error("unknown monomial order '" + name + "'");
}

int total_degree(const Monomial& m) {
  int d = 0;
  for (unsigned e : m) d += static_cast<int>(e);
  return d;
}

bool divides(const Monomial& a, const Monomial& b) {
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

Monomial mono_mul(const Monomial& a, const Monomial& b) {
  Monomial r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

Monomial mono_div(const Monomial& b, const Monomial& a) {
  Monomial r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = b[i] - a[i];
  return r;
}

Monomial mono_lcm(const Monomial& a, const Monomial& b) {
  Monomial r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = std::max(a[i], b[i]);
  return r;
}

bool mono_coprime(const Monomial& a, const Monomial& b) {
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i] > 0 && b[i] > 0) return false;
  return true;
}

int mono_cmp(const Monomial& a, const Monomial& b, MonomialOrder order) {
  if (order == MonomialOrder::Lex) {
    for (size_t i = 0; i < a.size(); ++i) {
      if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    }
    return 0;
  }
  // grevlex: compare total degree, then the last non-zero difference with
  // reversed sign.
  int da = total_degree(a), db = total_degree(b);
  if (da != db) return da < db ? -1 : 1;
  for (size_t i = a.size(); i-- > 0;) {
    if (a[i] != b[i]) return a[i] > b[i] ? -1 : 1;
  }
  return 0;
}

int PolyRing::var_index(const std::string& name) const {
  for (size_t i = 0; i < vars.size(); ++i)
    if (vars[i] == name) return static_cast<int>(i);
  return -1;
}

RingPtr make_ring(std::vector<std::string> vars, MonomialOrder order) {
  auto r = std::make_shared<PolyRing>();
  r->vars = std::move(vars);
  r->order = order;
  return r;
}

MultiPoly MultiPoly::constant(const RingPtr& ring, const Rat& v) {
  MultiPoly p(ring);
  if (v != 0) p.terms_ = {Term{Monomial(ring->nvars(), 0), v}};
  return p;
}

MultiPoly MultiPoly::variable(const RingPtr& ring, int var) {
  Monomial m(ring->nvars(), 0);
  m[var] = 1;
  return MultiPoly(ring, {Term{std::move(m), Rat(1)}});
}

MultiPoly MultiPoly::term(const RingPtr& ring, Monomial m, const Rat& c) {
  MultiPoly p(ring);
  if (c != 0) p.terms_ = {Term{std::move(m), c}};
  return p;
}

bool MultiPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && total_degree(terms_[0].mono) == 0);
}

const Term& MultiPoly::leading_term() const {
  if (terms_.empty()) throw Error(ErrorKind::ZeroPolynomial, "leading term of zero polynomial");
  return terms_.front();
}

const Monomial& MultiPoly::leading_monomial() const { return leading_term().mono; }

int MultiPoly::total_deg() const {
  int d = -1;
  for (const Term& t : terms_) d = std::max(d, total_degree(t.mono));
  return d;
}

namespace {

std::vector<Term> merge_sorted(const RingPtr& ring, const std::vector<Term>& a,
                               const std::vector<Term>& b, bool subtract) {
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  size_t i = 0, j = 0;
  const MonomialOrder ord = ring->order;
  while (i < a.size() || j < b.size()) {
    int c;
    if (i >= a.size()) c = -1;
    else if (j >= b.size()) c = 1;
    else c = mono_cmp(a[i].mono, b[j].mono, ord);
    if (c > 0) {
      out.push_back(a[i++]);
    } else if (c < 0) {
      Term t = b[j++];
      if (subtract) t.coeff = -t.coeff;
      out.push_back(std::move(t));
    } else {
      Rat v = a[i].coeff;
      if (subtract)
        v -= b[j].coeff;
      else
        v += b[j].coeff;
      if (v != 0) out.push_back(Term{a[i].mono, std::move(v)});
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

MultiPoly MultiPoly::operator+(const MultiPoly& o) const {
  return MultiPoly(ring_, merge_sorted(ring_, terms_, o.terms_, false));
}

MultiPoly MultiPoly::operator-(const MultiPoly& o) const {
  return MultiPoly(ring_, merge_sorted(ring_, terms_, o.terms_, true));
}

MultiPoly MultiPoly::mul_term(const Monomial& m, const Rat& c) const {
  if (c == 0) return MultiPoly(ring_);
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const Term& t : terms_) out.push_back(Term{mono_mul(t.mono, m), t.coeff * c});
  return MultiPoly(ring_, std::move(out));
}

MultiPoly MultiPoly::operator*(const MultiPoly& o) const {
  struct Cmp {
    MonomialOrder ord;
    bool operator()(const Monomial& a, const Monomial& b) const {
      return mono_cmp(a, b, ord) > 0;  // descending
    }
  };
  std::map<Monomial, Rat, Cmp> acc(Cmp{ring_->order});
  for (const Term& t : terms_)
    for (const Term& u : o.terms_) {
      acc[mono_mul(t.mono, u.mono)] += t.coeff * u.coeff;
    }
  std::vector<Term> out;
  out.reserve(acc.size());
  for (auto& [m, c] : acc)
    if (c != 0) out.push_back(Term{m, std::move(c)});
  return MultiPoly(ring_, std::move(out));
}

MultiPoly MultiPoly::operator*(const Rat& s) const {
  if (s == 0) return MultiPoly(ring_);
  std::vector<Term> out(terms_);
  for (Term& t : out) t.coeff *= s;
  return MultiPoly(ring_, std::move(out));
}

bool MultiPoly::operator==(const MultiPoly& o) const {
  if (terms_.size() != o.terms_.size()) return false;
  for (size_t i = 0; i < terms_.size(); ++i)
    if (terms_[i].mono != o.terms_[i].mono || terms_[i].coeff != o.terms_[i].coeff) return false;
  return true;
}

MultiPoly MultiPoly::differentiate(int var) const {
  std::vector<Term> out;
  for (const Term& t : terms_) {
    if (t.mono[var] == 0) continue;
    Term d;
    d.mono = t.mono;
    d.coeff = t.coeff * Rat(static_cast<long>(t.mono[var]));
    d.mono[var] -= 1;
    out.push_back(std::move(d));
  }
  return MultiPoly(ring_, std::move(out));
}

Rat MultiPoly::eval(const std::vector<Rat>& point) const {
  Rat acc = 0;
  for (const Term& t : terms_) {
    Rat v = t.coeff;
    for (size_t i = 0; i < t.mono.size(); ++i)
      for (unsigned e = 0; e < t.mono[i]; ++e) v *= point[i];
    acc += v;
  }
  return acc;
}

Complex MultiPoly::eval(const std::vector<Complex>& point) const {
  Complex acc = 0;
  for (const Term& t : terms_) {
    Complex v = rat_to_double(t.coeff);
    for (size_t i = 0; i < t.mono.size(); ++i)
      for (unsigned e = 0; e < t.mono[i]; ++e) v *= point[i];
    acc += v;
  }
  return acc;
}

MultiPoly MultiPoly::primitive() const {
  if (terms_.empty()) return *this;
  mpz_class den_lcm = 1, num_gcd = 0;
  for (const Term& t : terms_) {
    mpz_class g;
    const mpz_class& d = t.coeff.get_den();
    mpz_gcd(g.get_mpz_t(), den_lcm.get_mpz_t(), d.get_mpz_t());
    den_lcm = den_lcm / g * d;
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), t.coeff.get_num().get_mpz_t());
  }
  Rat scale = Rat(den_lcm) / Rat(num_gcd);
  if (terms_.front().coeff < 0) scale = -scale;
  return *this * scale;
}

MultiPoly MultiPoly::monic() const {
  if (terms_.empty()) return *this;
  return *this * (1 / terms_.front().coeff);
}

MultiPoly MultiPoly::with_order(MonomialOrder order) const {
  RingPtr r2 = make_ring(ring_->vars, order);
  std::vector<Term> out(terms_);
  std::sort(out.begin(), out.end(), [order](const Term& a, const Term& b) {
    return mono_cmp(a.mono, b.mono, order) > 0;
  });
  return MultiPoly(std::move(r2), std::move(out));
}

std::string MultiPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const Term& t : terms_) {
    Rat c = t.coeff;
    if (!first) os << (c < 0 ? " - " : " + ");
    else if (c < 0) os << "-";
    first = false;
    Rat a = abs(c);
    bool printed = false;
    if (a != 1 || total_degree(t.mono) == 0) {
      os << rat_to_string(a);
      printed = true;
    }
    for (size_t i = 0; i < t.mono.size(); ++i) {
      if (t.mono[i] == 0) continue;
      if (printed) os << "*";
      os << ring_->vars[i];
      if (t.mono[i] > 1) os << "^" << t.mono[i];
      printed = true;
    }
  }
  return os.str();
}

namespace {

struct Tokenizer {
  std::string s;
  size_t pos = 0;

  void skip_ws() {
    while (pos < s.size() && isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }
  bool done() {
    skip_ws();
    return pos >= s.size();
  }
  char peek() {
    skip_ws();
    return pos < s.size() ? s[pos] : '\0';
  }
};

std::string normalize_minus(const std::string& in) {
  // map U+2212 to '-'
  std::string out;
  for (size_t i = 0; i < in.size(); ++i) {
    if (i + 2 < in.size() && static_cast<unsigned char>(in[i]) == 0xE2 &&
        static_cast<unsigned char>(in[i + 1]) == 0x88 &&
        static_cast<unsigned char>(in[i + 2]) == 0x92) {
      out += '-';
      i += 2;
    } else {
      out += in[i];
    }
  }
  return out;
}

Rat read_number(Tokenizer& tk) {
  tk.skip_ws();
  size_t start = tk.pos;
  while (tk.pos < tk.s.size() && isdigit(static_cast<unsigned char>(tk.s[tk.pos]))) ++tk.pos;
  if (tk.pos == start) throw parse_error("expected number at '" + tk.s.substr(start) + "'");
  std::string num = tk.s.substr(start, tk.pos - start);
  if (tk.peek() == '/') {
    ++tk.pos;
    tk.skip_ws();
    size_t dstart = tk.pos;
    while (tk.pos < tk.s.size() && isdigit(static_cast<unsigned char>(tk.s[tk.pos]))) ++tk.pos;
    if (tk.pos == dstart) throw parse_error("expected denominator in '" + tk.s + "'");
    num += "/" + tk.s.substr(dstart, tk.pos - dstart);
  }
  return parse_rat(num);
}

std::string read_name(Tokenizer& tk) {
  tk.skip_ws();
  size_t start = tk.pos;
  while (tk.pos < tk.s.size() &&
         (isalnum(static_cast<unsigned char>(tk.s[tk.pos])) || tk.s[tk.pos] == '_'))
    ++tk.pos;
  if (tk.pos == start) throw parse_error("expected variable at '" + tk.s.substr(start) + "'");
  return tk.s.substr(start, tk.pos - start);
}

MultiPoly read_term(const RingPtr& ring, Tokenizer& tk) {
  Rat coeff(1);
  Monomial mono(ring->nvars(), 0);
  bool saw_factor = false;
  for (;;) {
    char c = tk.peek();
    if (isdigit(static_cast<unsigned char>(c))) {
      coeff *= read_number(tk);
      saw_factor = true;
    } else if (isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::string name = read_name(tk);
      int vi = ring->var_index(name);
      if (vi < 0) throw parse_error("unknown variable '" + name + "'");
      unsigned e = 1;
      if (tk.peek() == '^') {
        ++tk.pos;
        Rat ev = read_number(tk);
        if (!is_integer(ev) || ev < 0) throw parse_error("exponent must be a non-negative integer");
        e = static_cast<unsigned>(ev.get_num().get_ui());
      }
      mono[vi] += e;
      saw_factor = true;
    } else {
      throw parse_error(std::string("unexpected character '") + c + "' in polynomial");
    }
    if (tk.peek() == '*') {
      ++tk.pos;
      continue;
    }
    break;
  }
  if (!saw_factor) throw parse_error("empty term");
  return MultiPoly::term(ring, std::move(mono), coeff);
}

}  // namespace

MultiPoly parse_poly(const RingPtr& ring, const std::string& text) {
  Tokenizer tk{normalize_minus(text)};
  MultiPoly acc(ring);
  bool negate = false;
  // leading sign
  if (tk.peek() == '-') {
    negate = true;
    ++tk.pos;
  } else if (tk.peek() == '+') {
    ++tk.pos;
  }
  for (;;) {
    MultiPoly t = read_term(ring, tk);
    acc = negate ? acc - t : acc + t;
    if (tk.done()) break;
    char c = tk.peek();
    if (c == '+') negate = false;
    else if (c == '-') negate = true;
    else throw parse_error(std::string("unexpected character '") + c + "' in polynomial");
    ++tk.pos;
  }
  return acc;
}

}  // namespace matsolve
