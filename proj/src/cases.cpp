#include "mfv/cases.h"

#include <cstdlib>
#include <utility>

namespace mfv {

std::string case_id(TorsionType type) {
  switch (type) {
    case TorsionType::Generic: return "generic";
    case TorsionType::PTorsion: return "p-torsion";
    case TorsionType::LTorsion: return "l-torsion";
    case TorsionType::BothTorsion: return "both-torsion";
  }
  throw DomainError("unknown torsion type");
}

std::string case_id(DeformationCase c) {
  switch (c) {
    case DeformationCase::Half: return "half";
    case DeformationCase::Mixed: return "mixed";
    case DeformationCase::Full: return "full";
  }
  throw DomainError("unknown deformation case");
}

namespace {

Polynomial var(const Ring& ring, const std::string& name) {
  int i = ring->var_index(name);
  if (i < 0) throw RingError("missing variable " + name);
  return Polynomial::variable(ring, i);
}

GroupFactor make_factor(const Ring& ring, std::string name,
                        const std::vector<std::pair<std::string, int>>& weights,
                        int chi_component, int probe_divisor = 1) {
  GroupFactor f;
  f.name = std::move(name);
  f.var_weights.assign(static_cast<std::size_t>(ring->nvars()), 0);
  for (const auto& [v, w] : weights) {
    int i = ring->var_index(v);
    if (i < 0) throw RingError("missing variable " + v);
    f.var_weights[static_cast<std::size_t>(i)] = w;
  }
  f.chi_component = chi_component;
  f.probe_divisor = probe_divisor;
  return f;
}

/// Rank-1 factors assembled into a torus; only valid when every factor is a
/// plain scalar (divisor 1).
TorusWeightSystem assemble_torus(const Ring& ring, const std::vector<GroupFactor>& factors) {
  TorusWeightSystem ws;
  ws.ring = ring;
  ws.rank = static_cast<int>(factors.size());
  ws.var_weights.assign(static_cast<std::size_t>(ring->nvars()),
                        std::vector<int>(factors.size(), 0));
  for (std::size_t k = 0; k < factors.size(); ++k) {
    for (int v = 0; v < ring->nvars(); ++v)
      ws.var_weights[static_cast<std::size_t>(v)][k] =
          factors[k].var_weights[static_cast<std::size_t>(v)];
    ws.chi.push_back(factors[k].chi_component);
  }
  return ws;
}

const std::vector<std::pair<std::string, std::string>>& transpose_renames() {
  static const std::vector<std::pair<std::string, std::string>> r = {
      {"z21", "z12"}, {"z12", "z21"}, {"a1d", "b1d"}, {"a1u", "b1l"}, {"a1l", "b1u"},
      {"a2d", "b2d"}, {"a2u", "b2l"}, {"a2l", "b2u"}};
  return r;
}

}  // namespace

GitCase build_git_case(TorsionType type) {
  GitCase gc;
  gc.type = type;
  switch (type) {
    case TorsionType::Generic: {
      Ring ring = RingSignature::make({"z11", "z12", "z21", "z22"}, MonomialOrder::grevlex());
      gc.ambient = ring;
      gc.gens = {{"xi1", var(ring, "z11") * var(ring, "z22")},
                 {"xi2", var(ring, "z12") * var(ring, "z21")}};
      gc.nilpotency = Ideal(ring, {});
      gc.factors = {make_factor(ring, "t1", {{"z11", -1}, {"z21", -1}}, -1),
                    make_factor(ring, "t2", {{"z12", -1}, {"z22", -1}}, -1),
                    make_factor(ring, "s1", {{"z11", 1}, {"z12", 1}}, 1),
                    make_factor(ring, "s2", {{"z21", 1}, {"z22", 1}}, 1)};
      gc.weight_table = {{-1, -1, 1, 1}, {-1, -1, 1, 1}};
      gc.torus = assemble_torus(ring, gc.factors);
      return gc;
    }
    case TorsionType::PTorsion: {
      ClassicalSystem sys = classical_generators(ClassicalCase::XiHalf);
      gc.ambient = sys.ambient;
      gc.gens = std::move(sys.gens);
      gc.nilpotency = std::move(sys.nilpotency);
      const Ring& ring = gc.ambient;
      gc.factors = {
          make_factor(ring, "v1", {{"z11", -1}, {"z21", -1}}, -1),
          make_factor(ring, "v2", {{"z12", -1}, {"z22", -1}}, -1),
          make_factor(ring, "detQ", {{"z11", 1}, {"z21", 1}, {"z12", 1}, {"z22", 1}}, 1, 2)};
      gc.weight_table = {{-1, -1, 1}, {-2, 0, 1}, {-2, 0, 1}, {-1, -1, 1},
                         {-1, -1, 1}, {0, -2, 1}, {0, -2, 1}};
      return gc;
    }
    case TorsionType::LTorsion: {
      // Transpose of the p-torsion setup: rows of Z become the acted source,
      // the traceless pair acts on the right.
      ClassicalSystem half = classical_generators(ClassicalCase::XiHalf);
      Ring ring = RingSignature::make(
          {"z11", "z21", "z12", "z22", "b1d", "b1u", "b1l", "b2d", "b2u", "b2l"},
          MonomialOrder::grevlex());
      gc.ambient = ring;
      for (const NamedGenerator& g : half.gens)
        gc.gens.push_back({g.name, rename_into(g.expr, ring, transpose_renames())});
      std::vector<Polynomial> nil;
      for (const Polynomial& p : half.nilpotency.generators())
        nil.push_back(rename_into(p, ring, transpose_renames()));
      gc.nilpotency = Ideal(ring, std::move(nil));
      gc.factors = {
          make_factor(ring, "detV", {{"z11", -1}, {"z21", -1}, {"z12", -1}, {"z22", -1}}, -1, 2),
          make_factor(ring, "s1", {{"z11", 1}, {"z12", 1}}, 1),
          make_factor(ring, "s2", {{"z21", 1}, {"z22", 1}}, 1)};
      gc.weight_table = {{-1, 1, 1}, {-1, 2, 0}, {-1, 2, 0}, {-1, 1, 1},
                         {-1, 1, 1}, {-1, 0, 2}, {-1, 0, 2}};
      return gc;
    }
    case TorsionType::BothTorsion: {
      ClassicalSystem sys = classical_generators(ClassicalCase::ZetaFull);
      gc.ambient = sys.ambient;
      gc.gens = std::move(sys.gens);
      gc.nilpotency = std::move(sys.nilpotency);
      const Ring& ring = gc.ambient;
      gc.factors = {
          make_factor(ring, "detV", {{"z11", -1}, {"z21", -1}, {"z12", -1}, {"z22", -1}}, -1, 2),
          make_factor(ring, "detQ", {{"z11", 1}, {"z21", 1}, {"z12", 1}, {"z22", 1}}, 1, 2)};
      gc.weight_table = {{-1, 1}, {-1, 1}, {-1, 1}, {-1, 1}, {-1, 1}};
      return gc;
    }
  }
  throw DomainError("unknown torsion type");
}

namespace {

std::vector<std::vector<Polynomial>> rewrite_matrix(const Ring& ring,
                                                    const std::vector<std::string>& names) {
  std::vector<std::vector<Polynomial>> m;
  std::size_t n = names.empty() ? 0 : 1;
  while (n * n < names.size()) ++n;
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<Polynomial> row;
    for (std::size_t j = 0; j < n; ++j) row.push_back(-var(ring, names[i * n + j]));
    m.push_back(std::move(row));
  }
  return m;
}

}  // namespace

ModulePresentation universal_presentation(DeformationCase c) {
  ModulePresentation mp;
  switch (c) {
    case DeformationCase::Half: {
      Ring ring = RingSignature::make({"z1", "z2", "z3", "z4", "z5", "z6", "z7", "z8"},
                                      MonomialOrder::grevlex());
      mp.def_ring = ring;
      mp.blocks.push_back({{"q1", "q2"},
                           rewrite_matrix(ring, {"z1", "z3", "z5", "z7"}),
                           rewrite_matrix(ring, {"z2", "z4", "z6", "z8"}),
                           2});
      return mp;
    }
    case DeformationCase::Mixed: {
      Ring ring = RingSignature::make({"z1", "z2", "z3", "z4", "z5", "z6"},
                                      MonomialOrder::grevlex());
      mp.def_ring = ring;
      mp.blocks.push_back({{"q1"}, rewrite_matrix(ring, {"z1"}), rewrite_matrix(ring, {"z2"}), 1});
      mp.blocks.push_back({{"q2"}, rewrite_matrix(ring, {"z5"}), rewrite_matrix(ring, {"z6"}), 1});
      return mp;
    }
    case DeformationCase::Full: {
      Ring ring = RingSignature::make({"z1", "z2", "z3", "z4", "z5", "z6", "z7", "z8", "w1", "w2",
                                       "w3", "w4", "w5", "w6", "w7", "w8"},
                                      MonomialOrder::grevlex());
      mp.def_ring = ring;
      mp.blocks.push_back({{"q1", "q2"},
                           rewrite_matrix(ring, {"z1", "z3", "z5", "z7"}),
                           rewrite_matrix(ring, {"z2", "z4", "z6", "z8"}),
                           2});
      mp.blocks.push_back({{"r1", "r2"},
                           rewrite_matrix(ring, {"w1", "w3", "w5", "w7"}),
                           rewrite_matrix(ring, {"w2", "w4", "w6", "w8"}),
                           2});
      return mp;
    }
  }
  throw DomainError("unknown deformation case");
}

namespace {

using PolyMat = std::vector<std::vector<Polynomial>>;

PolyMat mat_mul(const PolyMat& a, const PolyMat& b) {
  std::size_t n = a.size();
  PolyMat c(n, std::vector<Polynomial>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Polynomial s = Polynomial::zero(a[i][j].ring());
      for (std::size_t k = 0; k < n; ++k) s = s + a[i][k] * b[k][j];
      c[i][j] = std::move(s);
    }
  return c;
}

PolyMat mat_identity(const Ring& ring, std::size_t n) {
  PolyMat m(n, std::vector<Polynomial>(n, Polynomial::zero(ring)));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = Polynomial::constant(ring, 1);
  return m;
}

}  // namespace

CommutatorResult commutator_syzygies(const ModulePresentation& mp) {
  CommutatorResult res;
  std::vector<Polynomial> entries;
  for (const RewriteBlock& b : mp.blocks) {
    PolyMat c = mat_mul(b.my, b.mx);
    PolyMat xy = mat_mul(b.mx, b.my);
    std::size_t n = c.size();
    std::vector<std::vector<Polynomial>> cols;
    for (std::size_t j = 0; j < n; ++j) {
      std::vector<Polynomial> col;
      for (std::size_t i = 0; i < n; ++i) {
        Polynomial e = c[i][j] - xy[i][j];
        if (!e.is_zero()) entries.push_back(e);
        col.push_back(std::move(e));
      }
      cols.push_back(std::move(col));
    }
    res.columns.push_back(std::move(cols));
  }
  res.entries = entries;
  res.ideal = Ideal(mp.def_ring, std::move(entries));
  return res;
}

Ideal support_ideal(const ModulePresentation& mp) {
  std::vector<Polynomial> coeffs;
  for (const RewriteBlock& b : mp.blocks) {
    for (int i = b.support_order; i >= 0; --i) {
      int j = b.support_order - i;
      PolyMat m = mat_identity(mp.def_ring, b.gens.size());
      for (int k = 0; k < i; ++k) m = mat_mul(b.mx, m);
      for (int k = 0; k < j; ++k) m = mat_mul(m, b.my);
      for (const auto& row : m)
        for (const Polynomial& e : row)
          if (!e.is_zero()) coeffs.push_back(e);
    }
  }
  return Ideal(mp.def_ring, std::move(coeffs));
}

bool Certificate::overall_pass() const {
  for (const CheckResult& c : checks)
    if (c.status == CheckStatus::Fail) return false;
  return true;
}

std::string fixture_dir(const VerifyOptions& opts) {
  if (!opts.fixture_dir.empty()) return opts.fixture_dir;
  if (const char* env = std::getenv("MFV_FIXTURES"); env && *env) return env;
#ifdef MFV_DEFAULT_FIXTURE_DIR
  return MFV_DEFAULT_FIXTURE_DIR;
#else
  return "fixtures";
#endif
}

ParsedIdealFile load_fixture(const std::string& name, const VerifyOptions& opts) {
  return load_ideal_file(fixture_dir(opts) + "/" + name);
}

}  // namespace mfv
