#pragma once

#include <mutex>
#include <optional>

#include "mfv/polyring.h"

namespace mfv {

/// Finitely generated ideal; the reduced Groebner basis for the ring's order
/// is computed once on demand and shared between copies.
class Ideal {
 public:
  Ideal() = default;
  Ideal(Ring ring, std::vector<Polynomial> gens);

  const Ring& ring() const { return ring_; }
  const std::vector<Polynomial>& generators() const& { return gens_; }
  std::vector<Polynomial> generators() const&& { return gens_; }
  const std::vector<Polynomial>& groebner_basis() const&;
  std::vector<Polynomial> groebner_basis() const&&;
  bool is_zero() const { return groebner_basis().empty(); }
  bool is_unit() const;
  bool contains(const Polynomial& f) const;
  bool contains_ideal(const Ideal& other) const;

 private:
  struct Cache {
    std::once_flag flag;
    std::vector<Polynomial> gb;
  };
  Ring ring_;
  std::vector<Polynomial> gens_;
  std::shared_ptr<Cache> cache_;
};

struct BuchbergerOptions {
  bool coprime_criterion = true;
  bool chain_criterion = true;
};

/// Reduced Groebner basis: monic, auto-reduced, sorted by leading term
/// ascending. Unique for a given ideal and ring order.
std::vector<Polynomial> buchberger(const Ring& ring, std::vector<Polynomial> gens,
                                   const BuchbergerOptions& opts = {});

/// Remainder of full multivariate division: no term of the result is
/// divisible by any leading term of `basis`.
Polynomial normal_form(const Polynomial& f, std::span<const Polynomial> basis);
Polynomial normal_form(const Polynomial& f, const std::vector<Polynomial>& basis);

bool ideal_membership(const Polynomial& f, const Ideal& ideal);

/// Same ideal presented in a ring with another term order.
Ideal with_order(const Ideal& ideal, const MonomialOrder& order);

/// I cap Q[keep]; `keep` lists retained variable names, original order.
/// Internally eliminates the complementary block with a Block(lex, grevlex)
/// order, eliminated variables first.
Ideal elimination_ideal(const Ideal& ideal, const std::vector<std::string>& keep);

/// Polynomial map source -> target/(target_relations), one image per source
/// variable.
struct RingMap {
  Ring source;
  Ring target;
  std::vector<Polynomial> images;
  std::optional<Ideal> target_relations;
};

Polynomial apply_map(const RingMap& map, const Polynomial& f);
Ideal kernel_of_map(const RingMap& map);
Ideal preimage_ideal(const RingMap& map, const Ideal& ideal);

/// Map with the listed images; any unlisted source variable maps to the
/// target variable of the same name.
RingMap make_map(Ring source, Ring target,
                 const std::vector<std::pair<std::string, Polynomial>>& images,
                 std::optional<Ideal> target_relations = std::nullopt);

/// f in rad(I), decided by the Rabinowitsch trick: 1 in I + (1 - tau f).
bool radical_membership(const Polynomial& f, const Ideal& ideal);

/// Generator-wise mutual radical membership; the official meaning of the
/// radical equalities certified by the case drivers.
bool same_variety(const Ideal& a, const Ideal& b);

Ideal ideal_sum(const Ideal& a, const Ideal& b);
Ideal ideal_product(const Ideal& a, const Ideal& b);
Ideal ideal_power(const Ideal& a, int n);
Ideal ideal_intersection(const Ideal& a, const Ideal& b);

/// Reduced-GB equality; the strict form of ideal equality used where a claim
/// says "exactly".
bool same_ideal(const Ideal& a, const Ideal& b);

/// Hilbert series of R/I in the canonical form num(t)/(1-t)^denom_power with
/// num(1) != 0 (zero series has an empty numerator).
struct HilbertSeries {
  std::vector<Integer> num;
  int denom_power = 0;

  bool operator==(const HilbertSeries&) const = default;
  /// Coefficient of t^m of the expanded power series.
  Integer coefficient(int m) const;
};

std::string to_string(const HilbertSeries& hs);
HilbertSeries make_series(std::vector<Integer> raw_num, int denom_power);

/// Requires homogeneous generators; computed from the leading-term monomial
/// ideal of the reduced Groebner basis.
HilbertSeries hilbert_series(const Ideal& ideal);

/// Rank of the symmetric Gram matrix of a quadratic form.
int quadratic_rank(const Polynomial& q);

/// Exact rank over Q of a dense matrix.
int matrix_rank(std::vector<std::vector<Rational>> m);

}  // namespace mfv
