#pragma once

#include <array>

#include "mfv/groebner.h"

namespace mfv {

/// Diagonal torus action data: one integer weight vector per ring variable
/// plus the distinguished character chi.
struct TorusWeightSystem {
  Ring ring;
  int rank = 0;
  std::vector<std::vector<int>> var_weights;
  std::vector<int> chi;
};

std::vector<int> monomial_weight(const TorusWeightSystem& ws, const Monomial& m);

/// All monomials of weight chi_power * chi and total degree <= degree_cap,
/// ascending in the ring order. Exhaustive enumeration.
std::vector<Monomial> semi_invariant_basis(const TorusWeightSystem& ws, int chi_power,
                                           int degree_cap);

struct NamedGenerator {
  std::string name;
  Polynomial expr;
};

/// Weight common to all terms of f; rejects weight-mixed input.
std::vector<int> polynomial_weight(const TorusWeightSystem& ws, const Polynomial& f);

/// Do products of `gens` span every semi-invariant piece of chi^n, n up to
/// `up_to_chi_power`, within `degree_cap`? Decided by exact rank over Q.
bool check_generation(const std::vector<NamedGenerator>& gens, const TorusWeightSystem& ws,
                      int up_to_chi_power, int degree_cap);

/// One scalar probe direction of the acting group: an exponent per variable.
/// probe_divisor is 2 for det-type factors of a GL2 probed with t*Id.
struct GroupFactor {
  std::string name;
  std::vector<int> var_weights;
  int chi_component = 0;
  int probe_divisor = 1;
};

/// Weight of f along the factor's scalar probe; DomainError when the terms
/// disagree (f is not a semi-invariant) or the probe exponent is not a
/// multiple of the divisor.
int scalar_equivariance(const Polynomial& f, const GroupFactor& factor);

/// 2x2 matrix of polynomials; the symbol algebra behind the classical
/// generator constructions.
struct Mat2 {
  std::array<Polynomial, 4> a;  // row-major

  static Mat2 zero(const Ring& ring);
  static Mat2 identity(const Ring& ring);
  static Mat2 generic(const Ring& ring, int i11, int i12, int i21, int i22);
  /// [[d, u], [l, -d]]
  static Mat2 traceless(const Ring& ring, int d, int u, int l);
  static Mat2 scalar(const Polynomial& c);

  const Polynomial& at(int r, int c) const { return a[static_cast<std::size_t>(2 * r + c)]; }
  Polynomial trace() const;
  Polynomial det() const;
  Mat2 adjugate() const;

  friend Mat2 operator*(const Mat2& x, const Mat2& y);
  friend Mat2 operator+(const Mat2& x, const Mat2& y);
  friend Mat2 operator-(const Mat2& x, const Mat2& y);
};

Mat2 commutator(const Mat2& x, const Mat2& y);

struct Vec2 {
  Polynomial x, y;
};

Vec2 operator*(const Mat2& m, const Vec2& v);
/// Determinant of the 2x2 matrix with columns c1, c2.
Polynomial det2(const Vec2& c1, const Vec2& c2);

/// Entries of X*Y, Y*X, X^2, Y^2 and [X, Y]: the order-2 nilpotency relations
/// for a commuting pair, kept redundantly.
std::vector<Polynomial> nilpotent_pair_relations(const Mat2& x, const Mat2& y);

enum class ClassicalCase { XiHalf, ZetaFull, TraceSl2 };

struct ClassicalSystem {
  Ring ambient;
  std::vector<NamedGenerator> gens;
  Ideal nilpotency;
};

/// xi-half: seven stacked-column determinants over Hom(C^2,Q) x N(Q).
/// zeta-full: five trace generators over N(V) x Hom(V,Q) x N(Q).
/// trace-sl2: the four mixed traces tr(Z_i Z_j) over two 2x2 matrix pairs.
ClassicalSystem classical_generators(ClassicalCase which);

/// Kernel of Q[gen names] -> ambient/(ambient_relations).
Ideal relation_ideal(const std::vector<NamedGenerator>& gens, const Ideal& ambient_relations,
                     const MonomialOrder& order = MonomialOrder::grevlex());

}  // namespace mfv
