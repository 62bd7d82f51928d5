#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <memory>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace mfv {

using Rational = mpq_class;
using Integer = mpz_class;

/// Reduced rational n/d with positive denominator.
Rational rat(long n, long d = 1);

struct MfvError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct RingError : MfvError {
  using MfvError::MfvError;
};
struct OverflowError : MfvError {
  using MfvError::MfvError;
};
struct DomainError : MfvError {
  using MfvError::MfvError;
};
struct ParseError : MfvError {
  ParseError(const std::string& what, std::size_t position);
  std::size_t position;
};

enum class OrderKind { Lex, GrevLex, Block };

/// Term order on monomials. Block compares the first `split` exponents with
/// `outer`, the rest with `inner`; with a degree-respecting pair this is an
/// elimination order for the leading block.
struct MonomialOrder {
  OrderKind kind = OrderKind::GrevLex;
  int split = 0;
  OrderKind outer = OrderKind::Lex;
  OrderKind inner = OrderKind::GrevLex;

  static MonomialOrder lex() { return {OrderKind::Lex, 0, OrderKind::Lex, OrderKind::Lex}; }
  static MonomialOrder grevlex() {
    return {OrderKind::GrevLex, 0, OrderKind::GrevLex, OrderKind::GrevLex};
  }
  static MonomialOrder block(int split, OrderKind outer = OrderKind::Lex,
                             OrderKind inner = OrderKind::GrevLex);
  bool operator==(const MonomialOrder&) const = default;
};

std::string to_string(const MonomialOrder& order);

class RingSignature;
using Ring = std::shared_ptr<const RingSignature>;

/// Immutable list of variable names plus the active term order.
class RingSignature {
 public:
  static Ring make(std::vector<std::string> vars, MonomialOrder order);

  const std::vector<std::string>& vars() const { return vars_; }
  const std::string& var(int i) const { return vars_[static_cast<std::size_t>(i)]; }
  const MonomialOrder& order() const { return order_; }
  int nvars() const { return static_cast<int>(vars_.size()); }
  /// Index of `name`, or -1 when absent.
  int var_index(std::string_view name) const;

 private:
  RingSignature() = default;
  std::vector<std::string> vars_;
  MonomialOrder order_;
  std::unordered_map<std::string_view, int> index_;
};

bool same_ring(const Ring& a, const Ring& b);
void require_same_ring(const Ring& a, const Ring& b);

/// Exponent vector; its length always matches the ring it is used with.
struct Monomial {
  std::vector<std::int32_t> e;

  static Monomial one(int nvars) { return Monomial{std::vector<std::int32_t>(nvars, 0)}; }
  static Monomial var(int nvars, int i, std::int32_t exp = 1);
  std::int64_t degree() const;
  bool is_one() const;
  bool operator==(const Monomial&) const = default;
};

int compare(const MonomialOrder& order, const Monomial& a, const Monomial& b);
bool divides(const Monomial& a, const Monomial& b);
bool coprime(const Monomial& a, const Monomial& b);
Monomial mono_mul(const Monomial& a, const Monomial& b);
Monomial mono_div(const Monomial& a, const Monomial& b);
Monomial mono_lcm(const Monomial& a, const Monomial& b);

struct Term {
  Monomial mono;
  Rational coeff;
};

/// Sparse polynomial with exact rational coefficients. Terms are kept
/// strictly descending in the ring's order; no zero coefficients are stored.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(Ring ring) : ring_(std::move(ring)) {}

  static Polynomial zero(Ring ring) { return Polynomial(std::move(ring)); }
  static Polynomial constant(Ring ring, Rational c);
  static Polynomial variable(const Ring& ring, int index, std::int32_t exp = 1);
  static Polynomial from_terms(Ring ring, std::vector<Term> terms);

  const Ring& ring() const { return ring_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  std::size_t size() const { return terms_.size(); }

  const Term& leading_term() const;
  const Monomial& leading_monomial() const { return leading_term().mono; }
  const Rational& leading_coeff() const { return leading_term().coeff; }

  std::int64_t total_degree() const;
  bool is_homogeneous() const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& g);
  Polynomial& operator-=(const Polynomial& g);
  friend Polynomial operator+(Polynomial f, const Polynomial& g) { return f += g; }
  friend Polynomial operator-(Polynomial f, const Polynomial& g) { return f -= g; }
  friend Polynomial operator*(const Polynomial& f, const Polynomial& g);
  Polynomial& operator*=(const Polynomial& g);

  Polynomial scaled(const Rational& c) const;
  Polynomial monic() const;
  Polynomial pow(int n) const;

  bool operator==(const Polynomial& g) const;
  bool operator!=(const Polynomial& g) const { return !(*this == g); }

 private:
  friend Polynomial add_scaled(const Polynomial& f, const Rational& c, const Monomial& m,
                               const Polynomial& g);
  Ring ring_;
  std::vector<Term> terms_;
};

/// f + c * m * g in one merge pass; the workhorse of polynomial reduction.
Polynomial add_scaled(const Polynomial& f, const Rational& c, const Monomial& m,
                      const Polynomial& g);

Polynomial operator*(const Rational& c, const Polynomial& f);

std::string to_string(const Polynomial& p);
std::string to_string(const Ring& ring, const Monomial& m);

/// Parses the textual grammar: rational literals, variables, + - * ^ and
/// parentheses; no juxtaposition; whitespace insignificant.
Polynomial parse_polynomial(const Ring& ring, std::string_view text);

struct ParsedIdealFile {
  Ring ring;
  std::vector<Polynomial> polys;
};

/// Ideal file: `#` comments, then `ring: x, y order: grevlex|lex|block(k)`,
/// then one polynomial per line.
ParsedIdealFile parse_ideal_file(std::string_view content);
ParsedIdealFile load_ideal_file(const std::string& path);

/// Remaps f into `target` by variable name; every variable occurring in f
/// must exist in `target`.
Polynomial rename_into(const Polynomial& f, const Ring& target);
/// Same, with explicit name substitutions applied first; unlisted variables
/// keep their names.
Polynomial rename_into(const Polynomial& f, const Ring& target,
                       const std::vector<std::pair<std::string, std::string>>& renames);

}  // namespace mfv
