#pragma once

#include "mfv/invariants.h"

namespace mfv {

enum class TorsionType { Generic, PTorsion, LTorsion, BothTorsion };
enum class DeformationCase { Half, Mixed, Full };

std::string case_id(TorsionType type);
std::string case_id(DeformationCase c);

/// GIT quotient model of one fiber type: ambient coordinates, classical
/// generators, nilpotency relations, and the scalar probe directions of the
/// acting group together with the linearizing character.
struct GitCase {
  TorsionType type;
  Ring ambient;
  std::vector<NamedGenerator> gens;
  Ideal nilpotency;
  std::vector<GroupFactor> factors;
  std::vector<std::vector<int>> weight_table;  // row per generator, column per factor
  std::optional<TorusWeightSystem> torus;      // full torus cases only
};

GitCase build_git_case(TorsionType type);

/// One support block of a module presentation: the rewrite matrices for the
/// two local coordinates (column j of mx lists the coefficients of x * q_j in
/// the q basis) plus the vanishing order imposed at the support point.
struct RewriteBlock {
  std::vector<std::string> gens;
  std::vector<std::vector<Polynomial>> mx, my;
  int support_order = 2;
};

struct ModulePresentation {
  Ring def_ring;
  std::vector<RewriteBlock> blocks;
};

ModulePresentation universal_presentation(DeformationCase c);

struct CommutatorResult {
  /// Column vectors of y(x q_j) - x(y q_j), one list per block.
  std::vector<std::vector<std::vector<Polynomial>>> columns;
  std::vector<Polynomial> entries;
  Ideal ideal;  // the flattening ideal I1
};

CommutatorResult commutator_syzygies(const ModulePresentation& mp);

/// Coefficients of x^i y^j q_k, i + j = block support order: the support
/// ideal I2.
Ideal support_ideal(const ModulePresentation& mp);

enum class CheckStatus { Pass, Fail, Skip };

struct CheckResult {
  std::string id;
  std::string paper_ref;
  CheckStatus status = CheckStatus::Fail;
  std::string detail;
  std::int64_t elapsed_ms = 0;
};

struct Certificate {
  std::string case_id;
  std::vector<CheckResult> checks;
  bool overall_pass() const;
};

struct VerifyOptions {
  bool fast = false;
  std::string fixture_dir;  // empty: MFV_FIXTURES env, then compiled-in default
};

std::string fixture_dir(const VerifyOptions& opts);
ParsedIdealFile load_fixture(const std::string& name, const VerifyOptions& opts);

struct FiberPresentation {
  std::vector<std::string> generator_names;
  Ideal relations;
  HilbertSeries hilbert;
  std::string classification;  // "P1", "P2", "quadric-cone-P4"
  Ideal ss_locus;
};

struct FiberVerification {
  FiberPresentation presentation;
  Certificate certificate;
};

FiberVerification verify_fiber(TorsionType type, const VerifyOptions& opts = {});
Certificate verify_deformation(DeformationCase c, const VerifyOptions& opts = {});

/// All seven cases, certificates sorted by case id; `threads <= 0` picks a
/// default bounded by the case count.
std::vector<Certificate> verify_all(const VerifyOptions& opts = {}, int threads = 0);

}  // namespace mfv
