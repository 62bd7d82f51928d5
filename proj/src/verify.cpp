#include <algorithm>
#include <atomic>
#include <chrono>
#include <functional>
#include <sstream>
#include <thread>

#include "mfv/cases.h"

namespace mfv {

namespace {

class Runner {
 public:
  explicit Runner(std::string id) { cert_.case_id = std::move(id); }

  void run(const std::string& id, const std::string& ref,
           const std::function<std::pair<bool, std::string>()>& body) {
    CheckResult r;
    r.id = id;
    r.paper_ref = ref;
    auto t0 = std::chrono::steady_clock::now();
    try {
      auto [ok, detail] = body();
      r.status = ok ? CheckStatus::Pass : CheckStatus::Fail;
      r.detail = std::move(detail);
    } catch (const std::exception& e) {
      r.status = CheckStatus::Fail;
      r.detail = std::string("error: ") + e.what();
    }
    r.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                       std::chrono::steady_clock::now() - t0)
                       .count();
    cert_.checks.push_back(std::move(r));
  }

  void skip(const std::string& id, const std::string& ref, std::string why) {
    cert_.checks.push_back({id, ref, CheckStatus::Skip, std::move(why), 0});
  }

  Certificate take() { return std::move(cert_); }

 private:
  Certificate cert_;
};

Polynomial var(const Ring& ring, const std::string& name) {
  int i = ring->var_index(name);
  if (i < 0) throw RingError("missing variable " + name);
  return Polynomial::variable(ring, i);
}

std::string poly_list(const std::vector<Polynomial>& v) {
  std::ostringstream os;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) os << "; ";
    os << to_string(v[i]);
  }
  return os.str();
}

std::pair<bool, std::string> expect_poly(const std::string& label, const Polynomial& got,
                                         const Polynomial& want) {
  if (got == want) return {true, label + " = " + to_string(want)};
  return {false, label + ": got " + to_string(got) + ", want " + to_string(want)};
}

/// Ideal equality by generator-wise mutual membership, the comparison the
/// certificates use against fixture ideals.
std::pair<bool, std::string> mutual_membership(const Ideal& computed, const Ideal& fixture) {
  for (const Polynomial& g : fixture.generators())
    if (!computed.contains(g)) return {false, "fixture generator not in computed ideal: " + to_string(g)};
  for (const Polynomial& g : computed.generators())
    if (!fixture.contains(g)) return {false, "computed generator outside fixture ideal: " + to_string(g)};
  std::ostringstream os;
  os << "mutual membership, " << computed.generators().size() << " computed vs "
     << fixture.generators().size() << " fixture generators";
  return {true, os.str()};
}

Ideal fixture_ideal(const std::string& name, const VerifyOptions& opts, const Ring& into) {
  ParsedIdealFile f = load_fixture(name, opts);
  std::vector<Polynomial> gens;
  for (const Polynomial& p : f.polys) gens.push_back(rename_into(p, into));
  return Ideal(into, std::move(gens));
}

std::string weight_row(const std::vector<int>& row) {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < row.size(); ++i) {
    if (i) os << ",";
    os << row[i];
  }
  os << ")";
  return os.str();
}

std::pair<bool, std::string> check_weight_table(const GitCase& gc) {
  std::ostringstream os;
  for (std::size_t i = 0; i < gc.gens.size(); ++i) {
    std::vector<int> row;
    for (const GroupFactor& f : gc.factors) row.push_back(scalar_equivariance(gc.gens[i].expr, f));
    if (row != gc.weight_table[i])
      return {false, gc.gens[i].name + ": computed " + weight_row(row) + ", table says " +
                         weight_row(gc.weight_table[i])};
    if (i) os << " ";
    os << gc.gens[i].name << "=" << weight_row(row);
  }
  std::vector<int> chi;
  for (const GroupFactor& f : gc.factors) chi.push_back(f.chi_component);
  os << " chi=" << weight_row(chi);
  return {true, os.str()};
}

FiberVerification verify_generic(const VerifyOptions&) {
  GitCase gc = build_git_case(TorsionType::Generic);
  const Ring& ring = gc.ambient;
  Runner r(case_id(gc.type));

  r.run("invariant-monomials", "4.1", [&]() -> std::pair<bool, std::string> {
    std::vector<Monomial> basis = semi_invariant_basis(*gc.torus, 1, 4);
    std::vector<std::string> names;
    for (const Monomial& m : basis) names.push_back(to_string(ring, m));
    std::string listed;
    for (const std::string& n : names) listed += (listed.empty() ? "" : ", ") + n;
    bool ok = names.size() == 2 &&
              std::find(names.begin(), names.end(), "z11*z22") != names.end() &&
              std::find(names.begin(), names.end(), "z12*z21") != names.end();
    return {ok, "chi^1 monomials up to degree 4: " + listed};
  });

  r.run("generation", "4.1", [&]() -> std::pair<bool, std::string> {
    bool ok = check_generation(gc.gens, *gc.torus, 3, 8);
    return {ok, "products of xi1, xi2 span every chi^n piece, n <= 3"};
  });

  r.run("piece-dimensions", "4.1", [&]() -> std::pair<bool, std::string> {
    std::ostringstream os;
    for (int n = 1; n <= 5; ++n) {
      std::size_t dim = semi_invariant_basis(*gc.torus, n, 2 * n).size();
      if (dim != static_cast<std::size_t>(n) + 1) {
        os << "chi^" << n << " piece has dimension " << dim << ", want " << n + 1;
        return {false, os.str()};
      }
      if (n > 1) os << ", ";
      os << "dim(chi^" << n << ") = " << n + 1;
    }
    return {true, os.str()};
  });

  r.run("weight-table", "4.1", [&] { return check_weight_table(gc); });

  Ideal relations;
  r.run("relations", "4.1", [&]() -> std::pair<bool, std::string> {
    relations = relation_ideal(gc.gens, gc.nilpotency);
    if (!relations.is_zero()) return {false, "kernel generators: " + poly_list(relations.groebner_basis())};
    return {true, "kernel of Q[xi1,xi2] -> invariants is (0)"};
  });

  const Ring& pring = relations.ring();
  Ideal ss(pring, {var(pring, "xi1") * var(pring, "xi2")});
  r.run("ss-locus", "4.1", [&]() -> std::pair<bool, std::string> {
    Polynomial prod = gc.gens[0].expr * gc.gens[1].expr;
    Polynomial all4 = var(ring, "z11") * var(ring, "z12") * var(ring, "z21") * var(ring, "z22");
    if (prod != all4) return {false, "xi1*xi2 = " + to_string(prod)};
    HilbertSeries hs = hilbert_series(ss);
    if (hs != make_series({1, 0, -1}, 2))
      return {false, "series of V(xi1*xi2) is " + to_string(hs)};
    return {true, "xi1*xi2 = z11*z12*z21*z22; V(xi1*xi2) has series " + to_string(hs) +
                      ", two reduced points"};
  });

  r.run("classification", "1.2", [&]() -> std::pair<bool, std::string> {
    HilbertSeries hs = hilbert_series(relations);
    if (hs != make_series({1}, 2)) return {false, "series " + to_string(hs)};
    return {true, "free on xi1, xi2 with series " + to_string(hs) + ": B is P1"};
  });

  FiberPresentation pres{{"xi1", "xi2"}, relations, hilbert_series(relations), "P1", ss};
  return {std::move(pres), r.take()};
}

struct XiSliceSpec {
  std::string ref;
  std::vector<std::string> slice_vars;                          // kept coefficients
  std::vector<std::pair<std::string, std::string>> kill;        // ambient var -> "" (zero)
  std::vector<std::pair<std::string, std::string>> keep;        // ambient var -> slice var
  std::vector<std::pair<std::string, std::string>> expected;    // gen name -> slice value
  std::string xi1_expansion;
};

FiberVerification verify_xi_case(TorsionType type, const XiSliceSpec& spec,
                                 const VerifyOptions& opts) {
  GitCase gc = build_git_case(type);
  const Ring& ring = gc.ambient;
  Runner r(case_id(type));
  const std::string& ref = spec.ref;

  r.run("generator-expansions", ref, [&]() -> std::pair<bool, std::string> {
    auto [ok0, d0] = expect_poly("xi0", gc.gens[0].expr,
                                 parse_polynomial(ring, "z11*z22 - z21*z12"));
    if (!ok0) return {false, d0};
    auto [ok1, d1] = expect_poly("xi1", gc.gens[1].expr, parse_polynomial(ring, spec.xi1_expansion));
    if (!ok1) return {false, d1};
    return {true, d0 + "; " + d1};
  });

  r.run("weight-table", ref, [&] { return check_weight_table(gc); });

  Ideal relations;
  r.run("relations", ref, [&]() -> std::pair<bool, std::string> {
    relations = relation_ideal(gc.gens, gc.nilpotency, MonomialOrder::lex());
    Ideal fix = fixture_ideal("xi_relations.id", opts, relations.ring());
    auto [ok, detail] = mutual_membership(relations, fix);
    if (!ok) return {false, detail};
    return {ok, "six quadrics; " + detail};
  });

  r.run("normal-forms", ref, [&]() -> std::pair<bool, std::string> {
    const Ring& xr = relations.ring();
    const std::vector<Polynomial>& gb = relations.groebner_basis();
    const char* pairs[4][2] = {{"xi1*xi5", "xi3^2"},
                               {"xi1*xi6", "xi3*xi4"},
                               {"xi2*xi5", "xi3*xi4"},
                               {"xi2*xi6", "xi4^2"}};
    std::string detail;
    for (auto& [from, to] : pairs) {
      Polynomial nf = normal_form(parse_polynomial(xr, from), gb);
      if (nf != parse_polynomial(xr, to))
        return {false, std::string(from) + " reduces to " + to_string(nf)};
      detail += (detail.empty() ? "" : ", ") + std::string(from) + " -> " + to;
    }
    return {true, detail};
  });

  r.run("slice", ref, [&]() -> std::pair<bool, std::string> {
    std::vector<std::string> names = spec.slice_vars;
    for (const char* z : {"z11", "z21", "z12", "z22"}) names.emplace_back(z);
    Ring sring = RingSignature::make(names, MonomialOrder::grevlex());
    std::vector<std::pair<std::string, Polynomial>> images;
    for (const auto& [from, to] : spec.kill) {
      (void)to;
      images.emplace_back(from, Polynomial::zero(sring));
    }
    for (const auto& [from, to] : spec.keep) images.emplace_back(from, var(sring, to));
    RingMap slice = make_map(ring, sring, images);
    std::string detail;
    for (const auto& [name, value] : spec.expected) {
      const NamedGenerator* gen = nullptr;
      for (const NamedGenerator& g : gc.gens)
        if (g.name == name) gen = &g;
      Polynomial got = apply_map(slice, gen->expr);
      Polynomial want = parse_polynomial(sring, value);
      if (got != want)
        return {false, name + " restricts to " + to_string(got) + ", want " + to_string(want)};
      detail += (detail.empty() ? "" : "; ") + name + " = " + value;
    }
    return {true, detail};
  });

  std::vector<NamedGenerator> reduced = {gc.gens[0], gc.gens[3], gc.gens[4]};
  Ideal reduced_rel;
  r.run("reduced-presentation", ref, [&]() -> std::pair<bool, std::string> {
    reduced_rel = relation_ideal(reduced, gc.nilpotency);
    if (!reduced_rel.is_zero())
      return {false, "relations among xi0, xi3, xi4: " + poly_list(reduced_rel.groebner_basis())};
    return {true, "xi0, xi3, xi4 are algebraically independent modulo nilpotency"};
  });

  const Ring& pring = reduced_rel.ring();
  Ideal ss(pring, {var(pring, "xi3"), var(pring, "xi4")});
  r.run("classification", "1.2", [&]() -> std::pair<bool, std::string> {
    HilbertSeries hs = hilbert_series(reduced_rel);
    if (hs != make_series({1}, 3)) return {false, "series " + to_string(hs)};
    HilbertSeries point = hilbert_series(ss);
    if (point != make_series({1}, 1)) return {false, "ss locus series " + to_string(point)};
    return {true, "free on xi0, xi3, xi4, series " + to_string(hs) +
                      ": B is P2; V(xi3, xi4) has series " + to_string(point) + ", one point"};
  });

  FiberPresentation pres{{"xi0", "xi3", "xi4"}, reduced_rel, hilbert_series(reduced_rel), "P2", ss};
  return {std::move(pres), r.take()};
}

FiberVerification verify_p_torsion(const VerifyOptions& opts) {
  XiSliceSpec spec;
  spec.ref = "4.2";
  spec.slice_vars = {"a1", "a2"};
  spec.kill = {{"a1d", ""}, {"a1u", ""}, {"a2d", ""}, {"a2u", ""}};
  spec.keep = {{"a1l", "a1"}, {"a2l", "a2"}};
  spec.expected = {{"xi0", "z11*z22 - z21*z12"}, {"xi1", "-a1*z11^2"},    {"xi2", "-a2*z11^2"},
                   {"xi3", "-a1*z11*z12"},       {"xi4", "-a2*z11*z12"},  {"xi5", "-a1*z12^2"},
                   {"xi6", "-a2*z12^2"}};
  spec.xi1_expansion = "2*z11*z21*a1d + z21^2*a1u - z11^2*a1l";
  return verify_xi_case(TorsionType::PTorsion, spec, opts);
}

FiberVerification verify_l_torsion(const VerifyOptions& opts) {
  XiSliceSpec spec;
  spec.ref = "4.3";
  spec.slice_vars = {"b1", "b2"};
  spec.kill = {{"b1d", ""}, {"b1l", ""}, {"b2d", ""}, {"b2l", ""}};
  spec.keep = {{"b1u", "b1"}, {"b2u", "b2"}};
  spec.expected = {{"xi0", "z11*z22 - z21*z12"}, {"xi1", "-b1*z11^2"},    {"xi2", "-b2*z11^2"},
                   {"xi3", "-b1*z11*z21"},       {"xi4", "-b2*z11*z21"},  {"xi5", "-b1*z21^2"},
                   {"xi6", "-b2*z21^2"}};
  spec.xi1_expansion = "2*z11*z12*b1d + z12^2*b1l - z11^2*b1u";
  return verify_xi_case(TorsionType::LTorsion, spec, opts);
}

FiberVerification verify_both_torsion(const VerifyOptions& opts) {
  GitCase gc = build_git_case(TorsionType::BothTorsion);
  const Ring& ring = gc.ambient;
  Runner r(case_id(gc.type));

  r.run("zeta0-determinant", "4.4", [&] {
    return expect_poly("zeta0", gc.gens[0].expr, parse_polynomial(ring, "z11*z22 - z21*z12"));
  });

  r.run("weight-table", "4.4", [&] { return check_weight_table(gc); });

  Ideal relations;
  r.run("relation", "4.4", [&]() -> std::pair<bool, std::string> {
    relations = relation_ideal(gc.gens, gc.nilpotency);
    Ideal fix = fixture_ideal("zeta_relation.id", opts, relations.ring());
    auto [ok, detail] = mutual_membership(relations, fix);
    if (!ok) return {false, detail};
    return {ok, "kernel is (zeta1*zeta4 - zeta2*zeta3); " + detail};
  });

  r.run("quadric-rank", "4.4", [&]() -> std::pair<bool, std::string> {
    const std::vector<Polynomial>& gb = relations.groebner_basis();
    if (gb.size() != 1) return {false, "kernel has " + std::to_string(gb.size()) + " generators"};
    int rank = quadratic_rank(gb[0]);
    if (rank != 4) return {false, "quadratic rank " + std::to_string(rank)};
    return {true, "quadratic rank 4 in the five zeta coordinates: cone vertex is a single point"};
  });

  r.run("hilbert", "4.4", [&]() -> std::pair<bool, std::string> {
    HilbertSeries hs = hilbert_series(relations);
    if (hs != make_series({1, 0, -1}, 5)) return {false, "series " + to_string(hs)};
    return {true, "series (1-t^2)/(1-t)^5 = " + to_string(hs)};
  });

  r.run("slice", "4.4", [&]() -> std::pair<bool, std::string> {
    Ring sring = RingSignature::make({"a1", "a2", "b1", "b2", "z11", "z21", "z12", "z22"},
                                     MonomialOrder::grevlex());
    std::vector<std::pair<std::string, Polynomial>> images;
    for (const char* dead : {"a1d", "a1u", "a2d", "a2u", "b1d", "b1l", "b2d", "b2l"})
      images.emplace_back(dead, Polynomial::zero(sring));
    images.emplace_back("a1l", var(sring, "a1"));
    images.emplace_back("a2l", var(sring, "a2"));
    images.emplace_back("b1u", var(sring, "b1"));
    images.emplace_back("b2u", var(sring, "b2"));
    RingMap slice = make_map(ring, sring, images);
    const char* expected[5][2] = {{"zeta0", "z11*z22 - z21*z12"},
                                  {"zeta1", "a1*b1*z11^2"},
                                  {"zeta2", "a1*b2*z11^2"},
                                  {"zeta3", "a2*b1*z11^2"},
                                  {"zeta4", "a2*b2*z11^2"}};
    for (std::size_t i = 0; i < 5; ++i) {
      Polynomial got = apply_map(slice, gc.gens[i].expr);
      Polynomial want = parse_polynomial(sring, expected[i][1]);
      if (got != want)
        return {false, std::string(expected[i][0]) + " restricts to " + to_string(got) +
                           ", want " + to_string(want)};
    }
    return {true, "zeta_i = a_i'b_j'*z11^2 on the slice; the display in 4.4 drops the square on "
                  "z11, the verified identity carries z11^2"};
  });

  const Ring& pring = relations.ring();
  Ideal ss(pring, {var(pring, "zeta1"), var(pring, "zeta2"), var(pring, "zeta3"),
                   var(pring, "zeta4")});
  r.run("ss-locus", "4.4", [&]() -> std::pair<bool, std::string> {
    HilbertSeries hs = hilbert_series(ideal_sum(relations, ss));
    if (hs != make_series({1}, 1)) return {false, "series " + to_string(hs)};
    return {true, "V(zeta1..zeta4) has series " + to_string(hs) + ": the vertex, one point"};
  });

  r.run("classification", "1.2", [&]() -> std::pair<bool, std::string> {
    bool ok = hilbert_series(relations) == make_series({1, 0, -1}, 5) &&
              relations.groebner_basis().size() == 1 &&
              quadratic_rank(relations.groebner_basis()[0]) == 4;
    return {ok, "rank-4 quadric hypersurface in P4: cone over a smooth quadric surface"};
  });

  FiberPresentation pres{{"zeta0", "zeta1", "zeta2", "zeta3", "zeta4"},
                         relations,
                         hilbert_series(relations),
                         "quadric-cone-P4",
                         ss};
  return {std::move(pres), r.take()};
}

Ideal variable_ideal(const Ring& ring, const std::vector<std::string>& names) {
  std::vector<Polynomial> gens;
  for (const std::string& n : names) gens.push_back(var(ring, n));
  return Ideal(ring, std::move(gens));
}

Certificate verify_half(const VerifyOptions& opts) {
  Runner r("half");
  ModulePresentation mp = universal_presentation(DeformationCase::Half);
  const Ring& ring = mp.def_ring;
  CommutatorResult com = commutator_syzygies(mp);
  Ideal i2 = support_ideal(mp);
  Ideal i12 = ideal_sum(com.ideal, i2);
  Ideal ifix = fixture_ideal("ideal_5_4.id", opts, ring);

  r.run("commutator-entries", "5.3", [&]() -> std::pair<bool, std::string> {
    Ideal pfix = fixture_ideal("pprime_entries.id", opts, ring);
    if (com.entries.size() != 4)
      return {false, std::to_string(com.entries.size()) + " nonzero entries"};
    auto [ok, detail] = mutual_membership(com.ideal, pfix);
    return {ok, "entries of y(x q) - x(y q): " + detail};
  });

  r.run("deformation-ideal", "5.4", [&]() -> std::pair<bool, std::string> {
    if (!ifix.contains_ideal(i12))
      return {false, "some generator of I1+I2 is not in the 5.4 ideal"};
    if (!same_variety(i12, ifix)) return {false, "variety mismatch between I1+I2 and the 5.4 ideal"};
    std::ostringstream os;
    os << "I1+I2 (" << i12.generators().size() << " generators) is contained in the 5.4 ideal and "
       << "defines the same variety";
    return {true, os.str()};
  });

  Ring tring = RingSignature::make({"t1", "t2", "t3", "t4", "t5", "t6", "t7", "t8"},
                                   MonomialOrder::grevlex());
  RingMap rho = make_map(
      tring, ring,
      {{"t1", var(ring, "z1")},
       {"t2", var(ring, "z2")},
       {"t3", var(ring, "z3") * var(ring, "z5")},
       {"t4", var(ring, "z3") * var(ring, "z6")},
       {"t5", var(ring, "z4") * var(ring, "z5")},
       {"t6", var(ring, "z4") * var(ring, "z6")},
       {"t7", var(ring, "z7")},
       {"t8", var(ring, "z8")}});
  Ideal pfixture = fixture_ideal("rho_preimage_half.id", opts, tring);

  r.run("preimage-pullback", "5.3", [&]() -> std::pair<bool, std::string> {
    for (const Polynomial& g : pfixture.generators()) {
      Polynomial image = apply_map(rho, g);
      if (!ifix.contains(image))
        return {false, "rho(" + to_string(g) + ") = " + to_string(image) + " is not in the ideal"};
    }
    return {true, "all six listed generators pull back into the 5.4 ideal"};
  });

  Ideal pre;
  r.run("rho-preimage", "5.3", [&]() -> std::pair<bool, std::string> {
    pre = preimage_ideal(rho, ifix);
    auto [ok, detail] = mutual_membership(pre, pfixture);
    return {ok, "rho^-1(I): " + detail};
  });

  r.run("residual-free", "5.3", [&]() -> std::pair<bool, std::string> {
    Ideal res = elimination_ideal(pre, {"t7", "t8"});
    if (!res.is_zero()) return {false, "relations survive: " + poly_list(res.groebner_basis())};
    return {true, "rho^-1(I) meets Q[t7,t8] in (0): residual ring free on t7, t8"};
  });

  r.run("j-square", "5.3", [&]() -> std::pair<bool, std::string> {
    Ideal iprime = ideal_intersection(ideal_sum(com.ideal, variable_ideal(ring, {"z3", "z4"})),
                                      ideal_sum(com.ideal, variable_ideal(ring, {"z5", "z6"})));
    Ideal jt = preimage_ideal(rho, ideal_sum(ifix, iprime));
    Ideal jres = elimination_ideal(jt, {"t7", "t8"});
    Ideal expected = fixture_ideal("j_half.id", opts, jres.ring());
    if (!same_ideal(jres, expected))
      return {false, "J = " + poly_list(jres.groebner_basis())};
    return {true, "J = (t7^2, t7*t8, t8^2), the square of the maximal ideal; I' computed as the "
                  "intersection (I1,z3,z4) cap (I1,z5,z6), same radical as the displayed product"};
  });

  return r.take();
}

Certificate verify_mixed(const VerifyOptions&) {
  Runner r("mixed");
  ModulePresentation mp = universal_presentation(DeformationCase::Mixed);
  const Ring& ring = mp.def_ring;
  CommutatorResult com = commutator_syzygies(mp);
  Ideal i2 = support_ideal(mp);

  r.run("commutator-vanishes", "5.5", [&]() -> std::pair<bool, std::string> {
    if (!com.entries.empty() || !com.ideal.is_zero())
      return {false, "I1 generators: " + poly_list(com.entries)};
    return {true, "I1 = (0): the deformation is unobstructed"};
  });

  r.run("support-ideal", "5.5", [&]() -> std::pair<bool, std::string> {
    Ideal expected = variable_ideal(ring, {"z1", "z2", "z5", "z6"});
    if (!same_ideal(i2, expected)) return {false, "I2 = " + poly_list(i2.groebner_basis())};
    return {true, "I2 = (z1, z2, z5, z6): coordinates reduce to C[z3, z4]"};
  });

  Ring r34 = RingSignature::make({"z3", "z4"}, MonomialOrder::grevlex());
  TorusWeightSystem ws{r34, 1, {{2}, {-2}}, {0}};

  r.run("invariant-ring", "5.5", [&]() -> std::pair<bool, std::string> {
    std::vector<Monomial> basis = semi_invariant_basis(ws, 0, 6);
    Polynomial s = parse_polynomial(r34, "z3*z4");
    if (basis.size() != 4)
      return {false, "expected the powers s^0..s^3, found " + std::to_string(basis.size()) +
                         " invariant monomials"};
    for (const Monomial& m : basis) {
      Polynomial f = Polynomial::from_terms(r34, {{m, Rational(1)}});
      bool is_power = false;
      for (int k = 0; k <= 3; ++k)
        if (f == s.pow(k)) is_power = true;
      if (!is_power)
        return {false, "invariant monomial " + to_string(r34, m) + " is not a power of z3*z4"};
    }
    return {true, "weights (+2, -2); the invariant monomials of degree <= 6 are exactly "
                  "s^0, s^1, s^2, s^3 with s = z3*z4"};
  });

  r.run("ss-pullback", "5.5", [&]() -> std::pair<bool, std::string> {
    Ideal branch = ideal_intersection(variable_ideal(r34, {"z3"}), variable_ideal(r34, {"z4"}));
    if (!same_ideal(branch, Ideal(r34, {parse_polynomial(r34, "z3*z4")})))
      return {false, "(z3) cap (z4) = " + poly_list(branch.groebner_basis())};
    Ring sring = RingSignature::make({"s"}, MonomialOrder::grevlex());
    RingMap rho = make_map(sring, r34, {{"s", parse_polynomial(r34, "z3*z4")}});
    Ideal j = preimage_ideal(rho, branch);
    if (!same_ideal(j, Ideal(sring, {var(sring, "s")})))
      return {false, "pullback = " + poly_list(j.groebner_basis())};
    return {true, "pullback of (z3) cap (z4) under s -> z3*z4 is (s), the maximal ideal"};
  });

  return r.take();
}

Certificate verify_full(const VerifyOptions& opts) {
  Runner r("full");
  ModulePresentation mp = universal_presentation(DeformationCase::Full);
  const Ring& ring = mp.def_ring;
  CommutatorResult com = commutator_syzygies(mp);

  ParsedIdealFile base = load_fixture("ideal_5_4.id", opts);
  std::vector<std::pair<std::string, std::string>> to_w;
  for (int i = 1; i <= 8; ++i) to_w.emplace_back("z" + std::to_string(i), "w" + std::to_string(i));
  std::vector<Polynomial> igens;
  for (const Polynomial& p : base.polys) igens.push_back(rename_into(p, ring));
  for (const Polynomial& p : base.polys) igens.push_back(rename_into(p, ring, to_w));
  Ideal ifull(ring, std::move(igens));

  auto zmat = [&](const char* a, const char* b, const char* c, const char* d) {
    Mat2 m = Mat2::zero(ring);
    m.a[0] = var(ring, a);
    m.a[1] = var(ring, b);
    m.a[2] = var(ring, c);
    m.a[3] = var(ring, d);
    return m;
  };
  Mat2 z1 = zmat("z1", "z3", "z5", "z7");
  Mat2 z2 = zmat("z2", "z4", "z6", "z8");
  Mat2 z3 = zmat("w1", "w3", "w5", "w7");
  Mat2 z4 = zmat("w2", "w4", "w6", "w8");

  r.run("trace-membership", "5.6", [&]() -> std::pair<bool, std::string> {
    const Mat2* mats[] = {&z1, &z2, &z3, &z4};
    for (int i = 0; i < 4; ++i) {
      Polynomial tr = mats[i]->trace();
      if (!ifull.contains(tr))
        return {false, "tr(Z" + std::to_string(i + 1) + ") = " + to_string(tr) + " not in I"};
    }
    return {true, "tr(Z1), tr(Z2), tr(Z3), tr(Z4) all lie in I"};
  });

  r.run("square-membership", "5.6", [&]() -> std::pair<bool, std::string> {
    std::pair<const char*, Mat2> products[] = {{"Z1^2", z1 * z1},   {"Z1*Z2", z1 * z2},
                                               {"Z2^2", z2 * z2},   {"Z3^2", z3 * z3},
                                               {"Z3*Z4", z3 * z4},  {"Z4^2", z4 * z4}};
    int count = 0;
    for (const auto& [label, m] : products)
      for (const Polynomial& e : m.a) {
        if (!ifull.contains(e))
          return {false, std::string(label) + " entry " + to_string(e) + " not in I"};
        ++count;
      }
    return {true, "all " + std::to_string(count) + " entries of Z1^2, Z1*Z2, Z2^2, Z3^2, Z3*Z4, "
                                                   "Z4^2 lie in I"};
  });

  r.run("commutator-membership", "5.6", [&]() -> std::pair<bool, std::string> {
    for (const Polynomial& e : com.entries)
      if (!ifull.contains(e)) return {false, "commutator entry " + to_string(e) + " not in I"};
    return {true, "all entries of [Z1,Z2] and [Z3,Z4] lie in I"};
  });

  ClassicalSystem tsys = classical_generators(ClassicalCase::TraceSl2);
  Ring tring = RingSignature::make({"t1", "t2", "t3", "t4"}, MonomialOrder::grevlex());
  std::vector<std::pair<std::string, Polynomial>> images;
  for (const NamedGenerator& g : tsys.gens) images.emplace_back(g.name, rename_into(g.expr, ring));
  RingMap rho = make_map(tring, ring, images);
  Ideal claimed = fixture_ideal("rho_preimage_full.id", opts, tring);

  r.run("preimage-pullback", "5.6", [&]() -> std::pair<bool, std::string> {
    for (const Polynomial& g : claimed.generators())
      if (!ifull.contains(apply_map(rho, g)))
        return {false, "rho(" + to_string(g) + ") is not in I"};
    return {true, "rho(t2*t3 - t1*t4) lies in I, with t_i = tr(Z_i Z_j) mixed traces"};
  });

  if (opts.fast) {
    r.skip("rho-preimage", "5.6", "16-variable elimination skipped under --fast");
  } else {
    r.run("rho-preimage", "5.6", [&]() -> std::pair<bool, std::string> {
      Ideal pre = preimage_ideal(rho, ifull);
      if (!same_ideal(pre, claimed))
        return {false, "rho^-1(I) = " + poly_list(pre.groebner_basis())};
      return {true, "rho^-1(I) = (t2*t3 - t1*t4) exactly"};
    });
  }

  Ideal itot;
  Ideal msquare = ideal_power(variable_ideal(tring, {"t1", "t2", "t3", "t4"}), 2);

  r.run("msquare-pullback", "5.6", [&]() -> std::pair<bool, std::string> {
    Ideal iprime = ideal_intersection(
        ideal_sum(com.ideal, variable_ideal(ring, {"z3", "z4", "w3", "w4"})),
        ideal_sum(com.ideal, variable_ideal(ring, {"z5", "z6", "w5", "w6"})));
    itot = ideal_sum(ifull, iprime);
    for (const Polynomial& g : msquare.generators()) {
      if (!itot.contains(apply_map(rho, g)))
        return {false, "rho(" + to_string(g) + ") is not in I+I'"};
    }
    return {true, "all ten quadratic monomials of (t1..t4)^2 pull back into I+I'; first branch "
                  "of I' reads (I1, z3, z4, w3, w4), correcting the stray z4 in the displayed "
                  "formula"};
  });

  if (opts.fast) {
    r.skip("j-square", "5.6", "20-variable elimination skipped under --fast");
  } else {
    r.run("j-square", "5.6", [&]() -> std::pair<bool, std::string> {
      if (!itot.ring()) return {false, "I+I' was not constructed"};
      Ideal pre = preimage_ideal(rho, itot);
      if (!same_ideal(pre, msquare))
        return {false, "rho^-1(I+I') = " + poly_list(pre.groebner_basis())};
      return {true, "rho^-1(I+I') = (t1, t2, t3, t4)^2 exactly: J is the square of the maximal "
                    "ideal"};
    });
  }

  return r.take();
}

}  // namespace

FiberVerification verify_fiber(TorsionType type, const VerifyOptions& opts) {
  switch (type) {
    case TorsionType::Generic: return verify_generic(opts);
    case TorsionType::PTorsion: return verify_p_torsion(opts);
    case TorsionType::LTorsion: return verify_l_torsion(opts);
    case TorsionType::BothTorsion: return verify_both_torsion(opts);
  }
  throw DomainError("unknown torsion type");
}

Certificate verify_deformation(DeformationCase c, const VerifyOptions& opts) {
  switch (c) {
    case DeformationCase::Half: return verify_half(opts);
    case DeformationCase::Mixed: return verify_mixed(opts);
    case DeformationCase::Full: return verify_full(opts);
  }
  throw DomainError("unknown deformation case");
}

std::vector<Certificate> verify_all(const VerifyOptions& opts, int threads) {
  struct Job {
    std::string id;
    std::function<Certificate()> run;
  };
  std::vector<Job> jobs;
  for (TorsionType t : {TorsionType::Generic, TorsionType::PTorsion, TorsionType::LTorsion,
                        TorsionType::BothTorsion})
    jobs.push_back({case_id(t), [t, &opts] { return verify_fiber(t, opts).certificate; }});
  for (DeformationCase c :
       {DeformationCase::Half, DeformationCase::Mixed, DeformationCase::Full})
    jobs.push_back({case_id(c), [c, &opts] { return verify_deformation(c, opts); }});
  std::sort(jobs.begin(), jobs.end(), [](const Job& a, const Job& b) { return a.id < b.id; });

  int workers = threads;
  if (workers <= 0) {
    unsigned hw = std::thread::hardware_concurrency();
    workers = static_cast<int>(std::min<std::size_t>(hw ? hw : 2, jobs.size()));
  }
  workers = std::max(1, std::min<int>(workers, static_cast<int>(jobs.size())));

  std::vector<Certificate> out(jobs.size());
  auto run_one = [&](std::size_t i) {
    try {
      out[i] = jobs[i].run();
    } catch (const std::exception& e) {
      Certificate c;
      c.case_id = jobs[i].id;
      c.checks.push_back(
          {"driver", "", CheckStatus::Fail, std::string("uncaught: ") + e.what(), 0});
      out[i] = std::move(c);
    }
  };
  if (workers == 1) {
    for (std::size_t i = 0; i < jobs.size(); ++i) run_one(i);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w)
      pool.emplace_back([&] {
        for (;;) {
          std::size_t i = next.fetch_add(1);
          if (i >= jobs.size()) return;
          run_one(i);
        }
      });
    for (std::thread& th : pool) th.join();
  }
  return out;
}

}  // namespace mfv
