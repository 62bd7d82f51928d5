#include "mfv/polyring.h"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

namespace mfv {

namespace {
constexpr std::int32_t kExpCap = 1 << 24;
}

Rational rat(long n, long d) {
  if (d == 0) throw DomainError("zero denominator");
  Rational q(n, d);
  q.canonicalize();
  return q;
}

ParseError::ParseError(const std::string& what, std::size_t pos)
    : MfvError(what + " (at position " + std::to_string(pos) + ")"), position(pos) {}

MonomialOrder MonomialOrder::block(int split, OrderKind outer, OrderKind inner) {
  if (outer == OrderKind::Block || inner == OrderKind::Block)
    throw DomainError("nested block orders are not supported");
  return {OrderKind::Block, split, outer, inner};
}

std::string to_string(const MonomialOrder& o) {
  switch (o.kind) {
    case OrderKind::Lex: return "lex";
    case OrderKind::GrevLex: return "grevlex";
    case OrderKind::Block: return "block(" + std::to_string(o.split) + ")";
  }
  return "?";
}

static bool valid_var_name(std::string_view s) {
  if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])))) return false;
  for (char c : s)
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
  return true;
}

Ring RingSignature::make(std::vector<std::string> vars, MonomialOrder order) {
  auto sig = std::shared_ptr<RingSignature>(new RingSignature());
  sig->vars_ = std::move(vars);
  sig->order_ = order;
  for (std::size_t i = 0; i < sig->vars_.size(); ++i) {
    const std::string& v = sig->vars_[i];
    if (!valid_var_name(v)) throw RingError("invalid variable name: '" + v + "'");
    if (!sig->index_.emplace(v, static_cast<int>(i)).second)
      throw RingError("duplicate variable name: '" + v + "'");
  }
  if (order.kind == OrderKind::Block &&
      (order.split <= 0 || order.split >= static_cast<int>(sig->vars_.size())))
    throw RingError("block split out of range");
  return sig;
}

int RingSignature::var_index(std::string_view name) const {
  auto it = index_.find(name);
  return it == index_.end() ? -1 : it->second;
}

bool same_ring(const Ring& a, const Ring& b) {
  if (a.get() == b.get()) return true;
  if (!a || !b) return false;
  return a->vars() == b->vars() && a->order() == b->order();
}

void require_same_ring(const Ring& a, const Ring& b) {
  if (!same_ring(a, b)) throw RingError("ring signature mismatch");
}

Monomial Monomial::var(int nvars, int i, std::int32_t exp) {
  Monomial m = one(nvars);
  m.e[static_cast<std::size_t>(i)] = exp;
  return m;
}

std::int64_t Monomial::degree() const {
  std::int64_t d = 0;
  for (auto x : e) d += x;
  return d;
}

bool Monomial::is_one() const {
  return std::all_of(e.begin(), e.end(), [](std::int32_t x) { return x == 0; });
}

namespace {

int cmp_lex(std::span<const std::int32_t> a, std::span<const std::int32_t> b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
  return 0;
}

int cmp_grevlex(std::span<const std::int32_t> a, std::span<const std::int32_t> b) {
  std::int64_t da = 0, db = 0;
  for (auto x : a) da += x;
  for (auto x : b) db += x;
  if (da != db) return da < db ? -1 : 1;
  for (std::size_t i = a.size(); i-- > 0;)
    if (a[i] != b[i]) return a[i] > b[i] ? -1 : 1;
  return 0;
}

int cmp_kind(OrderKind k, std::span<const std::int32_t> a, std::span<const std::int32_t> b) {
  return k == OrderKind::Lex ? cmp_lex(a, b) : cmp_grevlex(a, b);
}

}  // namespace

int compare(const MonomialOrder& order, const Monomial& a, const Monomial& b) {
  std::span<const std::int32_t> ea(a.e), eb(b.e);
  if (order.kind != OrderKind::Block) return cmp_kind(order.kind, ea, eb);
  auto k = static_cast<std::size_t>(order.split);
  if (int c = cmp_kind(order.outer, ea.first(k), eb.first(k))) return c;
  return cmp_kind(order.inner, ea.subspan(k), eb.subspan(k));
}

bool divides(const Monomial& a, const Monomial& b) {
  for (std::size_t i = 0; i < a.e.size(); ++i)
    if (a.e[i] > b.e[i]) return false;
  return true;
}

bool coprime(const Monomial& a, const Monomial& b) {
  for (std::size_t i = 0; i < a.e.size(); ++i)
    if (a.e[i] > 0 && b.e[i] > 0) return false;
  return true;
}

Monomial mono_mul(const Monomial& a, const Monomial& b) {
  Monomial m = a;
  for (std::size_t i = 0; i < m.e.size(); ++i) {
    m.e[i] += b.e[i];
    if (m.e[i] > kExpCap) throw OverflowError("monomial exponent overflow");
  }
  return m;
}

Monomial mono_div(const Monomial& a, const Monomial& b) {
  Monomial m = a;
  for (std::size_t i = 0; i < m.e.size(); ++i) {
    m.e[i] -= b.e[i];
    if (m.e[i] < 0) throw DomainError("monomial division is not exact");
  }
  return m;
}

Monomial mono_lcm(const Monomial& a, const Monomial& b) {
  Monomial m = a;
  for (std::size_t i = 0; i < m.e.size(); ++i) m.e[i] = std::max(m.e[i], b.e[i]);
  return m;
}

Polynomial Polynomial::constant(Ring ring, Rational c) {
  Polynomial p(std::move(ring));
  if (c != 0) p.terms_.push_back({Monomial::one(p.ring_->nvars()), std::move(c)});
  return p;
}

Polynomial Polynomial::variable(const Ring& ring, int index, std::int32_t exp) {
  if (index < 0 || index >= ring->nvars()) throw RingError("variable index out of range");
  Polynomial p(ring);
  if (exp == 0) return constant(ring, 1);
  p.terms_.push_back({Monomial::var(ring->nvars(), index, exp), rat(1)});
  return p;
}

Polynomial Polynomial::from_terms(Ring ring, std::vector<Term> terms) {
  Polynomial p(ring);
  const MonomialOrder& ord = ring->order();
  for (const Term& t : terms)
    if (static_cast<int>(t.mono.e.size()) != ring->nvars())
      throw RingError("term arity does not match ring");
  std::sort(terms.begin(), terms.end(), [&](const Term& a, const Term& b) {
    return compare(ord, a.mono, b.mono) > 0;
  });
  for (Term& t : terms) {
    if (t.coeff == 0) continue;
    if (!p.terms_.empty() && p.terms_.back().mono == t.mono) {
      p.terms_.back().coeff += t.coeff;
      if (p.terms_.back().coeff == 0) p.terms_.pop_back();
    } else {
      p.terms_.push_back(std::move(t));
    }
  }
  return p;
}

bool Polynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one());
}

const Term& Polynomial::leading_term() const {
  if (terms_.empty()) throw DomainError("zero polynomial has no leading term");
  return terms_.front();
}

std::int64_t Polynomial::total_degree() const {
  std::int64_t d = -1;
  for (const Term& t : terms_) d = std::max(d, t.mono.degree());
  return d;
}

bool Polynomial::is_homogeneous() const {
  if (terms_.empty()) return true;
  std::int64_t d = terms_[0].mono.degree();
  for (const Term& t : terms_)
    if (t.mono.degree() != d) return false;
  return true;
}

Polynomial Polynomial::operator-() const {
  Polynomial p = *this;
  for (Term& t : p.terms_) t.coeff = -t.coeff;
  return p;
}

Polynomial add_scaled(const Polynomial& f, const Rational& c, const Monomial& m,
                      const Polynomial& g) {
  require_same_ring(f.ring(), g.ring());
  if (c == 0 || g.is_zero()) return f;
  const MonomialOrder& ord = f.ring()->order();
  Polynomial out(f.ring());
  out.terms_.reserve(f.terms_.size() + g.terms_.size());
  std::size_t i = 0, j = 0;
  Monomial gm;
  bool gm_fresh = false;
  while (i < f.terms_.size() || j < g.terms_.size()) {
    if (j == g.terms_.size()) {
      out.terms_.push_back(f.terms_[i++]);
      continue;
    }
    if (!gm_fresh) {
      gm = mono_mul(m, g.terms_[j].mono);
      gm_fresh = true;
    }
    int cmp = i == f.terms_.size() ? -1 : compare(ord, f.terms_[i].mono, gm);
    if (cmp > 0) {
      out.terms_.push_back(f.terms_[i++]);
    } else if (cmp < 0) {
      out.terms_.push_back({std::move(gm), c * g.terms_[j].coeff});
      ++j, gm_fresh = false;
    } else {
      Rational s = f.terms_[i].coeff + c * g.terms_[j].coeff;
      if (s != 0) out.terms_.push_back({std::move(gm), std::move(s)});
      ++i, ++j, gm_fresh = false;
    }
  }
  return out;
}

Polynomial& Polynomial::operator+=(const Polynomial& g) {
  *this = add_scaled(*this, rat(1), Monomial::one(ring_->nvars()), g);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& g) {
  *this = add_scaled(*this, rat(-1), Monomial::one(ring_->nvars()), g);
  return *this;
}

Polynomial operator*(const Polynomial& f, const Polynomial& g) {
  require_same_ring(f.ring(), g.ring());
  std::vector<Term> prods;
  prods.reserve(f.terms().size() * g.terms().size());
  for (const Term& a : f.terms())
    for (const Term& b : g.terms()) prods.push_back({mono_mul(a.mono, b.mono), a.coeff * b.coeff});
  return Polynomial::from_terms(f.ring(), std::move(prods));
}

Polynomial& Polynomial::operator*=(const Polynomial& g) {
  *this = *this * g;
  return *this;
}

Polynomial Polynomial::scaled(const Rational& c) const {
  if (c == 0) return zero(ring_);
  Polynomial p = *this;
  for (Term& t : p.terms_) t.coeff *= c;
  return p;
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return *this;
  return scaled(1 / leading_coeff());
}

Polynomial Polynomial::pow(int n) const {
  if (n < 0) throw DomainError("negative polynomial power");
  Polynomial acc = constant(ring_, 1);
  for (int i = 0; i < n; ++i) acc *= *this;
  return acc;
}

bool Polynomial::operator==(const Polynomial& g) const {
  if (!same_ring(ring_, g.ring_)) return false;
  if (terms_.size() != g.terms_.size()) return false;
  for (std::size_t i = 0; i < terms_.size(); ++i)
    if (terms_[i].mono != g.terms_[i].mono || terms_[i].coeff != g.terms_[i].coeff) return false;
  return true;
}

Polynomial operator*(const Rational& c, const Polynomial& f) { return f.scaled(c); }

std::string to_string(const Ring& ring, const Monomial& m) {
  std::string s;
  for (std::size_t i = 0; i < m.e.size(); ++i) {
    if (m.e[i] == 0) continue;
    if (!s.empty()) s += "*";
    s += ring->var(static_cast<int>(i));
    if (m.e[i] != 1) s += "^" + std::to_string(m.e[i]);
  }
  return s.empty() ? "1" : s;
}

static std::string rat_str(const Rational& q) { return q.get_str(); }

std::string to_string(const Polynomial& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const Term& t : p.terms()) {
    bool neg = t.coeff < 0;
    Rational a = neg ? Rational(-t.coeff) : t.coeff;
    out += first ? (neg ? "-" : "") : (neg ? " - " : " + ");
    first = false;
    if (t.mono.is_one()) {
      out += rat_str(a);
    } else {
      if (a != 1) out += rat_str(a) + "*";
      out += to_string(p.ring(), t.mono);
    }
  }
  return out;
}

namespace {

struct Lexer {
  std::string_view src;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < src.size() && std::isspace(static_cast<unsigned char>(src[pos]))) ++pos;
  }
  bool eof() {
    skip_ws();
    return pos >= src.size();
  }
  char peek() {
    skip_ws();
    return pos < src.size() ? src[pos] : '\0';
  }
  bool accept(char c) {
    if (peek() == c) {
      ++pos;
      return true;
    }
    return false;
  }
  Integer number() {
    skip_ws();
    std::size_t start = pos;
    while (pos < src.size() && std::isdigit(static_cast<unsigned char>(src[pos]))) ++pos;
    if (pos == start) throw ParseError("expected integer", start);
    return Integer(std::string(src.substr(start, pos - start)), 10);
  }
  std::string ident() {
    skip_ws();
    std::size_t start = pos;
    if (pos < src.size() && std::isalpha(static_cast<unsigned char>(src[pos]))) {
      ++pos;
      while (pos < src.size() && (std::isalnum(static_cast<unsigned char>(src[pos])) ||
                                  src[pos] == '_'))
        ++pos;
    }
    if (pos == start) throw ParseError("expected identifier", start);
    return std::string(src.substr(start, pos - start));
  }
};

class PolyParser {
 public:
  PolyParser(const Ring& ring, std::string_view text) : ring_(ring), lex_{text} {}

  Polynomial run() {
    Polynomial p = expr();
    if (!lex_.eof()) throw ParseError("unexpected trailing input", lex_.pos);
    return p;
  }

 private:
  Polynomial expr() {
    bool neg = false;
    if (lex_.accept('-'))
      neg = true;
    else
      lex_.accept('+');
    Polynomial p = term();
    if (neg) p = -p;
    for (;;) {
      if (lex_.accept('+'))
        p += term();
      else if (lex_.accept('-'))
        p -= term();
      else
        break;
    }
    return p;
  }

  Polynomial term() {
    Polynomial p = factor();
    while (lex_.accept('*')) p *= factor();
    char c = lex_.peek();
    if (c != '\0' && c != '+' && c != '-' && c != ')')
      throw ParseError("expected operator", lex_.pos);
    return p;
  }

  Polynomial factor() {
    Polynomial base = atom();
    if (lex_.accept('^')) {
      Integer n = lex_.number();
      if (n < 0 || n > 100000) throw ParseError("exponent out of range", lex_.pos);
      return base.pow(static_cast<int>(n.get_si()));
    }
    return base;
  }

  Polynomial atom() {
    char c = lex_.peek();
    if (c == '(') {
      lex_.accept('(');
      Polynomial p = expr();
      if (!lex_.accept(')')) throw ParseError("expected ')'", lex_.pos);
      return p;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      Integer num = lex_.number();
      if (lex_.accept('/')) {
        std::size_t dpos = lex_.pos;
        Integer den = lex_.number();
        if (den == 0) throw ParseError("zero denominator", dpos);
        Rational q(num, den);
        q.canonicalize();
        return Polynomial::constant(ring_, q);
      }
      return Polynomial::constant(ring_, Rational(num));
    }
    std::size_t vpos = lex_.pos;
    std::string name = lex_.ident();
    int idx = ring_->var_index(name);
    if (idx < 0) throw ParseError("unknown variable '" + name + "'", vpos);
    return Polynomial::variable(ring_, idx);
  }

  Ring ring_;
  Lexer lex_;
};

}  // namespace

Polynomial parse_polynomial(const Ring& ring, std::string_view text) {
  return PolyParser(ring, text).run();
}

namespace {

std::string strip(std::string_view s) {
  std::size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return std::string(s.substr(a, b - a));
}

MonomialOrder parse_order_token(const std::string& tok, int nvars) {
  if (tok == "grevlex") return MonomialOrder::grevlex();
  if (tok == "lex") return MonomialOrder::lex();
  if (tok.starts_with("block(") && tok.ends_with(")")) {
    int k = 0;
    try {
      k = std::stoi(tok.substr(6, tok.size() - 7));
    } catch (const std::exception&) {
      throw ParseError("malformed block order '" + tok + "'", 0);
    }
    if (k <= 0 || k >= nvars) throw ParseError("block split out of range", 0);
    return MonomialOrder::block(k);
  }
  throw ParseError("unknown order '" + tok + "'", 0);
}

}  // namespace

ParsedIdealFile parse_ideal_file(std::string_view content) {
  std::vector<std::string> lines;
  std::size_t start = 0;
  while (start <= content.size()) {
    std::size_t end = content.find('\n', start);
    if (end == std::string_view::npos) end = content.size();
    lines.push_back(std::string(content.substr(start, end - start)));
    start = end + 1;
  }

  Ring ring;
  std::vector<Polynomial> polys;
  for (const std::string& raw : lines) {
    std::string line = strip(raw);
    if (line.empty() || line[0] == '#') continue;
    if (!ring) {
      if (!line.starts_with("ring:")) throw ParseError("first content line must declare a ring", 0);
      std::string rest = line.substr(5);
      std::size_t opos = rest.find("order:");
      std::string order_tok = "grevlex";
      std::string vars_part = rest;
      if (opos != std::string::npos) {
        order_tok = strip(rest.substr(opos + 6));
        vars_part = rest.substr(0, opos);
      }
      std::vector<std::string> names;
      std::stringstream ss(vars_part);
      std::string item;
      while (std::getline(ss, item, ',')) {
        std::string v = strip(item);
        if (!v.empty()) names.push_back(v);
      }
      if (names.empty()) throw ParseError("ring declares no variables", 0);
      MonomialOrder order = parse_order_token(order_tok, static_cast<int>(names.size()));
      ring = RingSignature::make(std::move(names), order);
      continue;
    }
    polys.push_back(parse_polynomial(ring, line));
  }
  if (!ring) throw ParseError("no ring declaration found", 0);
  return {ring, std::move(polys)};
}

ParsedIdealFile load_ideal_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw MfvError("cannot open file: " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_ideal_file(buf.str());
}

Polynomial rename_into(const Polynomial& f, const Ring& target) {
  return rename_into(f, target, {});
}

Polynomial rename_into(const Polynomial& f, const Ring& target,
                       const std::vector<std::pair<std::string, std::string>>& renames) {
  auto renamed = [&](const std::string& name) -> const std::string& {
    for (const auto& [from, to] : renames)
      if (from == name) return to;
    return name;
  };
  std::vector<int> remap(static_cast<std::size_t>(f.ring()->nvars()), -1);
  std::vector<Term> out;
  out.reserve(f.terms().size());
  for (const Term& t : f.terms()) {
    Monomial m = Monomial::one(target->nvars());
    for (std::size_t i = 0; i < t.mono.e.size(); ++i) {
      if (t.mono.e[i] == 0) continue;
      if (remap[i] == -1) {
        const std::string& name = renamed(f.ring()->var(static_cast<int>(i)));
        remap[i] = target->var_index(name);
        if (remap[i] == -1)
          throw RingError("variable '" + name + "' is absent from the target ring");
      }
      m.e[static_cast<std::size_t>(remap[i])] = t.mono.e[i];
    }
    out.push_back({std::move(m), t.coeff});
  }
  return Polynomial::from_terms(target, std::move(out));
}

}  // namespace mfv
