#include "mfv/invariants.h"

#include <algorithm>
#include <functional>

namespace mfv {

std::vector<int> monomial_weight(const TorusWeightSystem& ws, const Monomial& m) {
  std::vector<int> w(static_cast<std::size_t>(ws.rank), 0);
  for (std::size_t i = 0; i < m.e.size(); ++i) {
    if (m.e[i] == 0) continue;
    for (int r = 0; r < ws.rank; ++r)
      w[static_cast<std::size_t>(r)] += m.e[i] * ws.var_weights[i][static_cast<std::size_t>(r)];
  }
  return w;
}

namespace {

void enumerate_monomials(int nvars, int var, int budget, Monomial& cur,
                         const std::function<void(const Monomial&)>& visit) {
  if (var == nvars) {
    visit(cur);
    return;
  }
  for (int e = 0; e <= budget; ++e) {
    cur.e[static_cast<std::size_t>(var)] = e;
    enumerate_monomials(nvars, var + 1, budget - e, cur, visit);
  }
  cur.e[static_cast<std::size_t>(var)] = 0;
}

}  // namespace

std::vector<Monomial> semi_invariant_basis(const TorusWeightSystem& ws, int chi_power,
                                           int degree_cap) {
  if (static_cast<int>(ws.var_weights.size()) != ws.ring->nvars())
    throw DomainError("weight system arity mismatch");
  std::vector<int> target(static_cast<std::size_t>(ws.rank));
  for (int r = 0; r < ws.rank; ++r)
    target[static_cast<std::size_t>(r)] = chi_power * ws.chi[static_cast<std::size_t>(r)];
  std::vector<Monomial> out;
  Monomial cur = Monomial::one(ws.ring->nvars());
  enumerate_monomials(ws.ring->nvars(), 0, degree_cap, cur, [&](const Monomial& m) {
    if (monomial_weight(ws, m) == target) out.push_back(m);
  });
  std::sort(out.begin(), out.end(), [&](const Monomial& a, const Monomial& b) {
    return compare(ws.ring->order(), a, b) < 0;
  });
  return out;
}

std::vector<int> polynomial_weight(const TorusWeightSystem& ws, const Polynomial& f) {
  if (f.is_zero()) throw DomainError("zero polynomial has no weight");
  std::vector<int> w = monomial_weight(ws, f.terms().front().mono);
  for (const Term& t : f.terms())
    if (monomial_weight(ws, t.mono) != w)
      throw DomainError("polynomial is not weight-homogeneous: " + to_string(f));
  return w;
}

namespace {

void enumerate_products(const std::vector<NamedGenerator>& gens, std::size_t idx,
                        int degree_budget, const Polynomial& acc,
                        const std::function<void(const Polynomial&)>& visit) {
  if (idx == gens.size()) {
    visit(acc);
    return;
  }
  int d = static_cast<int>(gens[idx].expr.total_degree());
  enumerate_products(gens, idx + 1, degree_budget, acc, visit);
  Polynomial cur = acc;
  for (int mult = 1; mult * d <= degree_budget; ++mult) {
    cur = cur * gens[idx].expr;
    enumerate_products(gens, idx + 1, degree_budget - mult * d, cur, visit);
  }
}

}  // namespace

bool check_generation(const std::vector<NamedGenerator>& gens, const TorusWeightSystem& ws,
                      int up_to_chi_power, int degree_cap) {
  for (const NamedGenerator& g : gens) {
    require_same_ring(ws.ring, g.expr.ring());
    if (g.expr.is_zero() || !g.expr.is_homogeneous() || g.expr.total_degree() < 1)
      throw DomainError("generators must be homogeneous of positive degree");
    polynomial_weight(ws, g.expr);
  }
  for (int n = 1; n <= up_to_chi_power; ++n) {
    std::vector<Monomial> basis = semi_invariant_basis(ws, n, degree_cap);
    if (basis.empty()) continue;
    std::vector<int> target(static_cast<std::size_t>(ws.rank));
    for (int r = 0; r < ws.rank; ++r)
      target[static_cast<std::size_t>(r)] = n * ws.chi[static_cast<std::size_t>(r)];

    std::vector<std::vector<Rational>> rows;
    enumerate_products(gens, 0, degree_cap, Polynomial::constant(ws.ring, 1),
                       [&](const Polynomial& p) {
                         if (p.is_zero() || monomial_weight(ws, p.terms().front().mono) != target)
                           return;
                         std::vector<Rational> row(basis.size(), Rational(0));
                         for (const Term& t : p.terms()) {
                           auto it = std::lower_bound(
                               basis.begin(), basis.end(), t.mono,
                               [&](const Monomial& a, const Monomial& b) {
                                 return compare(ws.ring->order(), a, b) < 0;
                               });
                           if (it == basis.end() || !(*it == t.mono))
                             throw DomainError("product leaves the enumerated weight space");
                           row[static_cast<std::size_t>(it - basis.begin())] = t.coeff;
                         }
                         rows.push_back(std::move(row));
                       });
    if (rows.empty()) return false;
    if (matrix_rank(std::move(rows)) != static_cast<int>(basis.size())) return false;
  }
  return true;
}

int scalar_equivariance(const Polynomial& f, const GroupFactor& factor) {
  if (f.is_zero()) throw DomainError("zero polynomial has no equivariance weight");
  if (static_cast<int>(factor.var_weights.size()) != f.ring()->nvars())
    throw DomainError("group factor arity mismatch");
  long w = 0;
  bool have = false;
  for (const Term& t : f.terms()) {
    long tw = 0;
    for (std::size_t i = 0; i < t.mono.e.size(); ++i) tw += static_cast<long>(t.mono.e[i]) * factor.var_weights[i];
    if (!have) {
      w = tw;
      have = true;
    } else if (tw != w) {
      throw DomainError("not a semi-invariant for factor " + factor.name + ": " + to_string(f));
    }
  }
  if (factor.probe_divisor != 1 && w % factor.probe_divisor != 0)
    throw DomainError("probe weight not divisible by factor divisor");
  return static_cast<int>(w / factor.probe_divisor);
}

Mat2 Mat2::zero(const Ring& ring) {
  Polynomial z = Polynomial::zero(ring);
  return Mat2{{z, z, z, z}};
}

Mat2 Mat2::identity(const Ring& ring) {
  Polynomial one = Polynomial::constant(ring, 1);
  Polynomial z = Polynomial::zero(ring);
  return Mat2{{one, z, z, one}};
}

Mat2 Mat2::generic(const Ring& ring, int i11, int i12, int i21, int i22) {
  return Mat2{{Polynomial::variable(ring, i11), Polynomial::variable(ring, i12),
               Polynomial::variable(ring, i21), Polynomial::variable(ring, i22)}};
}

Mat2 Mat2::traceless(const Ring& ring, int d, int u, int l) {
  Polynomial pd = Polynomial::variable(ring, d);
  return Mat2{{pd, Polynomial::variable(ring, u), Polynomial::variable(ring, l), -pd}};
}

Mat2 Mat2::scalar(const Polynomial& c) {
  Polynomial z = Polynomial::zero(c.ring());
  return Mat2{{c, z, z, c}};
}

Polynomial Mat2::trace() const { return a[0] + a[3]; }

Polynomial Mat2::det() const { return a[0] * a[3] - a[1] * a[2]; }

Mat2 Mat2::adjugate() const { return Mat2{{a[3], -a[1], -a[2], a[0]}}; }

Mat2 operator*(const Mat2& x, const Mat2& y) {
  return Mat2{{x.a[0] * y.a[0] + x.a[1] * y.a[2], x.a[0] * y.a[1] + x.a[1] * y.a[3],
               x.a[2] * y.a[0] + x.a[3] * y.a[2], x.a[2] * y.a[1] + x.a[3] * y.a[3]}};
}

Mat2 operator+(const Mat2& x, const Mat2& y) {
  return Mat2{{x.a[0] + y.a[0], x.a[1] + y.a[1], x.a[2] + y.a[2], x.a[3] + y.a[3]}};
}

Mat2 operator-(const Mat2& x, const Mat2& y) {
  return Mat2{{x.a[0] - y.a[0], x.a[1] - y.a[1], x.a[2] - y.a[2], x.a[3] - y.a[3]}};
}

Mat2 commutator(const Mat2& x, const Mat2& y) { return x * y - y * x; }

Vec2 operator*(const Mat2& m, const Vec2& v) {
  return Vec2{m.a[0] * v.x + m.a[1] * v.y, m.a[2] * v.x + m.a[3] * v.y};
}

Polynomial det2(const Vec2& c1, const Vec2& c2) { return c1.x * c2.y - c1.y * c2.x; }

std::vector<Polynomial> nilpotent_pair_relations(const Mat2& x, const Mat2& y) {
  std::vector<Polynomial> rel;
  for (const Mat2& m : {x * x, x * y, y * x, y * y, commutator(x, y)})
    for (const Polynomial& p : m.a)
      if (!p.is_zero()) rel.push_back(p);
  return rel;
}

namespace {

int idx(const Ring& ring, const std::string& name) {
  int i = ring->var_index(name);
  if (i < 0) throw RingError("missing variable " + name);
  return i;
}

struct XiParts {
  std::vector<NamedGenerator> gens;
  Mat2 a1, a2;
};

XiParts xi_generators(const Ring& ring) {
  Vec2 v1{Polynomial::variable(ring, idx(ring, "z11")), Polynomial::variable(ring, idx(ring, "z21"))};
  Vec2 v2{Polynomial::variable(ring, idx(ring, "z12")), Polynomial::variable(ring, idx(ring, "z22"))};
  Mat2 a1 = Mat2::traceless(ring, idx(ring, "a1d"), idx(ring, "a1u"), idx(ring, "a1l"));
  Mat2 a2 = Mat2::traceless(ring, idx(ring, "a2d"), idx(ring, "a2u"), idx(ring, "a2l"));
  std::vector<NamedGenerator> gens;
  gens.push_back({"xi0", det2(v1, v2)});
  gens.push_back({"xi1", det2(a1 * v1, v1)});
  gens.push_back({"xi2", det2(a2 * v1, v1)});
  gens.push_back({"xi3", det2(a1 * v1, v2)});
  gens.push_back({"xi4", det2(a2 * v1, v2)});
  gens.push_back({"xi5", det2(a1 * v2, v2)});
  gens.push_back({"xi6", det2(a2 * v2, v2)});
  return {std::move(gens), std::move(a1), std::move(a2)};
}

}  // namespace

ClassicalSystem classical_generators(ClassicalCase which) {
  switch (which) {
    case ClassicalCase::XiHalf: {
      Ring ring = RingSignature::make(
          {"z11", "z21", "z12", "z22", "a1d", "a1u", "a1l", "a2d", "a2u", "a2l"},
          MonomialOrder::grevlex());
      XiParts parts = xi_generators(ring);
      Ideal nil(ring, nilpotent_pair_relations(parts.a1, parts.a2));
      return {ring, std::move(parts.gens), std::move(nil)};
    }
    case ClassicalCase::ZetaFull: {
      Ring ring = RingSignature::make({"b1d", "b1u", "b1l", "b2d", "b2u", "b2l", "z11", "z21",
                                       "z12", "z22", "a1d", "a1u", "a1l", "a2d", "a2u", "a2l"},
                                      MonomialOrder::grevlex());
      XiParts parts = xi_generators(ring);
      const auto& xi = parts.gens;
      Mat2 b1 = Mat2::traceless(ring, idx(ring, "b1d"), idx(ring, "b1u"), idx(ring, "b1l"));
      Mat2 b2 = Mat2::traceless(ring, idx(ring, "b2d"), idx(ring, "b2u"), idx(ring, "b2l"));
      Mat2 x1{{xi[3].expr, xi[5].expr, -xi[1].expr, -xi[3].expr}};
      Mat2 x2{{xi[4].expr, xi[6].expr, -xi[2].expr, -xi[4].expr}};
      std::vector<NamedGenerator> gens;
      gens.push_back({"zeta0", xi[0].expr});
      gens.push_back({"zeta1", (b1 * x1).trace()});
      gens.push_back({"zeta2", (b2 * x1).trace()});
      gens.push_back({"zeta3", (b1 * x2).trace()});
      gens.push_back({"zeta4", (b2 * x2).trace()});
      std::vector<Polynomial> rel = nilpotent_pair_relations(b1, b2);
      for (Polynomial& p : nilpotent_pair_relations(parts.a1, parts.a2)) rel.push_back(std::move(p));
      return {ring, std::move(gens), Ideal(ring, std::move(rel))};
    }
    case ClassicalCase::TraceSl2: {
      Ring ring = RingSignature::make({"z1", "z2", "z3", "z4", "z5", "z6", "z7", "z8", "w1", "w2",
                                       "w3", "w4", "w5", "w6", "w7", "w8"},
                                      MonomialOrder::grevlex());
      auto gen = [&](const char* p, int k) {
        std::string s(p);
        return idx(ring, s + std::to_string(k));
      };
      Mat2 z1m = Mat2::generic(ring, gen("z", 1), gen("z", 3), gen("z", 5), gen("z", 7));
      Mat2 z2m = Mat2::generic(ring, gen("z", 2), gen("z", 4), gen("z", 6), gen("z", 8));
      Mat2 z3m = Mat2::generic(ring, gen("w", 1), gen("w", 3), gen("w", 5), gen("w", 7));
      Mat2 z4m = Mat2::generic(ring, gen("w", 2), gen("w", 4), gen("w", 6), gen("w", 8));
      std::vector<NamedGenerator> gens;
      gens.push_back({"t1", (z1m * z3m).trace()});
      gens.push_back({"t2", (z1m * z4m).trace()});
      gens.push_back({"t3", (z2m * z3m).trace()});
      gens.push_back({"t4", (z2m * z4m).trace()});
      return {ring, std::move(gens), Ideal(ring, {})};
    }
  }
  throw DomainError("unknown classical case");
}

Ideal relation_ideal(const std::vector<NamedGenerator>& gens, const Ideal& ambient_relations,
                     const MonomialOrder& order) {
  if (gens.empty()) throw DomainError("relation_ideal needs at least one generator");
  std::vector<std::string> names;
  std::vector<Polynomial> images;
  for (const NamedGenerator& g : gens) {
    require_same_ring(ambient_relations.ring(), g.expr.ring());
    names.push_back(g.name);
    images.push_back(g.expr);
  }
  Ring source = RingSignature::make(std::move(names), order);
  RingMap map{source, ambient_relations.ring(), std::move(images),
              ambient_relations.generators().empty() ? std::nullopt
                                                     : std::make_optional(ambient_relations)};
  return kernel_of_map(map);
}

}  // namespace mfv
