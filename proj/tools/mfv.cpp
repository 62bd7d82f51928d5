#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "mfv/certificate.h"

namespace {

using namespace mfv;

std::optional<TorsionType> torsion_from_id(const std::string& id) {
  if (id == "generic") return TorsionType::Generic;
  if (id == "p-torsion") return TorsionType::PTorsion;
  if (id == "l-torsion") return TorsionType::LTorsion;
  if (id == "both-torsion") return TorsionType::BothTorsion;
  return std::nullopt;
}

std::optional<DeformationCase> deformation_from_id(const std::string& id) {
  if (id == "half") return DeformationCase::Half;
  if (id == "mixed") return DeformationCase::Mixed;
  if (id == "full") return DeformationCase::Full;
  return std::nullopt;
}

int thread_count() {
  const char* env = std::getenv("MFV_THREADS");
  if (!env || !*env) return 0;
  char* end = nullptr;
  long v = std::strtol(env, &end, 10);
  if (end == env || *end != '\0' || v <= 0)
    throw DomainError("MFV_THREADS must be a positive integer");
  return static_cast<int>(v);
}

void write_json(const std::string& path, const std::string& payload) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw MfvError("cannot open " + path + " for writing");
  out << payload;
}

MonomialOrder order_from_flag(const std::string& name, const MonomialOrder& fallback) {
  if (name.empty()) return fallback;
  if (name == "lex") return MonomialOrder::lex();
  if (name == "grevlex") return MonomialOrder::grevlex();
  throw DomainError("unknown order '" + name + "'");
}

struct MapFile {
  Ring source;
  std::vector<std::pair<std::string, Polynomial>> images;
};

/// `source: t1, t2` then one `t1 -> z1*z5` line per substituted variable;
/// unlisted source variables map to the same-named target variable.
MapFile parse_map_file(const std::string& path, const Ring& target) {
  std::ifstream in(path);
  if (!in) throw MfvError("cannot read " + path);
  std::string line;
  MapFile mf;
  std::vector<std::pair<std::string, std::string>> raw;
  bool have_source = false;
  while (std::getline(in, line)) {
    std::string_view sv(line);
    while (!sv.empty() && (sv.front() == ' ' || sv.front() == '\t')) sv.remove_prefix(1);
    while (!sv.empty() && (sv.back() == ' ' || sv.back() == '\t' || sv.back() == '\r'))
      sv.remove_suffix(1);
    if (sv.empty() || sv.front() == '#') continue;
    if (!have_source) {
      if (!sv.starts_with("source:")) throw ParseError("map file must start with 'source:'", 0);
      sv.remove_prefix(7);
      std::vector<std::string> names;
      std::string cur;
      for (char c : sv) {
        if (c == ',') {
          if (!cur.empty()) names.push_back(std::exchange(cur, {}));
        } else if (c != ' ' && c != '\t') {
          cur += c;
        }
      }
      if (!cur.empty()) names.push_back(cur);
      if (names.empty()) throw ParseError("map file declares no source variables", 0);
      mf.source = RingSignature::make(std::move(names), MonomialOrder::grevlex());
      have_source = true;
      continue;
    }
    auto arrow = sv.find("->");
    if (arrow == std::string_view::npos) throw ParseError("map line without '->'", 0);
    std::string name(sv.substr(0, arrow));
    while (!name.empty() && (name.back() == ' ' || name.back() == '\t')) name.pop_back();
    raw.emplace_back(name, std::string(sv.substr(arrow + 2)));
  }
  if (!have_source) throw ParseError("map file must start with 'source:'", 0);
  for (auto& [name, expr] : raw) {
    if (mf.source->var_index(name) < 0)
      throw ParseError("image for unknown source variable '" + name + "'", 0);
    mf.images.emplace_back(name, parse_polynomial(target, expr));
  }
  return mf;
}

int emit_reports(const std::vector<Certificate>& certs, const std::string& json_path,
                 bool as_array) {
  for (const Certificate& c : certs) print_certificate(std::cout, c);
  if (!json_path.empty())
    write_json(json_path, as_array ? certificate_json(certs) : certificate_json(certs.front()));
  for (const Certificate& c : certs)
    if (!c.overall_pass()) return 1;
  return 0;
}

int run(int argc, char** argv) {
  CLI::App app{"exact verifier for the moduli fiber classification computations"};
  app.require_subcommand(1);

  std::string case_name, json_path, ideal_path, map_path, poly_text, order_name, fixture_dir;
  bool fast = false, radical = false;

  auto add_verify_opts = [&](CLI::App* sub, bool with_case) {
    if (with_case) sub->add_option("--case", case_name, "case id")->required();
    sub->add_option("--json", json_path, "write the certificate as JSON to this path");
    sub->add_flag("--fast", fast, "skip the heaviest eliminations, marking them skipped");
    sub->add_option("--fixtures", fixture_dir, "fixture directory override");
  };

  CLI::App* vf = app.add_subcommand("verify-fiber", "verify one fiber case");
  add_verify_opts(vf, true);
  CLI::App* vd = app.add_subcommand("verify-deformation", "verify one deformation case");
  add_verify_opts(vd, true);
  CLI::App* va = app.add_subcommand("verify-all", "verify all seven cases");
  add_verify_opts(va, false);

  CLI::App* gb = app.add_subcommand("gb", "reduced Groebner basis of an ideal file");
  gb->add_option("--ideal", ideal_path, "ideal file")->required();
  gb->add_option("--order", order_name, "override the file's order: lex or grevlex");

  CLI::App* hb = app.add_subcommand("hilbert", "Hilbert series of a homogeneous ideal file");
  hb->add_option("--ideal", ideal_path, "ideal file")->required();
  hb->add_option("--order", order_name, "override the file's order: lex or grevlex");

  CLI::App* pre = app.add_subcommand("preimage", "preimage of an ideal under a polynomial map");
  pre->add_option("--ideal", ideal_path, "target ideal file")->required();
  pre->add_option("--map", map_path, "map file: 'source: ...' then 'var -> expr' lines")
      ->required();

  CLI::App* mem = app.add_subcommand("membership", "ideal membership of a polynomial");
  mem->add_option("--ideal", ideal_path, "ideal file")->required();
  mem->add_option("--poly", poly_text, "polynomial in the file's ring")->required();
  mem->add_flag("--radical", radical, "test radical membership instead");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    VerifyOptions opts;
    opts.fast = fast;
    opts.fixture_dir = fixture_dir;

    if (vf->parsed()) {
      auto t = torsion_from_id(case_name);
      if (!t) throw DomainError("unknown fiber case '" + case_name + "'");
      return emit_reports({verify_fiber(*t, opts).certificate}, json_path, false);
    }
    if (vd->parsed()) {
      auto c = deformation_from_id(case_name);
      if (!c) throw DomainError("unknown deformation case '" + case_name + "'");
      return emit_reports({verify_deformation(*c, opts)}, json_path, false);
    }
    if (va->parsed()) {
      std::vector<Certificate> certs = verify_all(opts, thread_count());
      return emit_reports(certs, json_path, true);
    }

    if (gb->parsed()) {
      ParsedIdealFile f = load_ideal_file(ideal_path);
      Ideal ideal(f.ring, f.polys);
      if (!order_name.empty())
        ideal = with_order(ideal, order_from_flag(order_name, f.ring->order()));
      for (const Polynomial& p : ideal.groebner_basis()) std::cout << to_string(p) << "\n";
      return 0;
    }
    if (hb->parsed()) {
      ParsedIdealFile f = load_ideal_file(ideal_path);
      Ideal ideal(f.ring, f.polys);
      if (!order_name.empty())
        ideal = with_order(ideal, order_from_flag(order_name, f.ring->order()));
      std::cout << to_string(hilbert_series(ideal)) << "\n";
      return 0;
    }
    if (pre->parsed()) {
      ParsedIdealFile f = load_ideal_file(ideal_path);
      Ideal ideal(f.ring, f.polys);
      MapFile mf = parse_map_file(map_path, f.ring);
      RingMap map = make_map(mf.source, f.ring, mf.images);
      for (const Polynomial& p : preimage_ideal(map, ideal).groebner_basis())
        std::cout << to_string(p) << "\n";
      return 0;
    }
    if (mem->parsed()) {
      ParsedIdealFile f = load_ideal_file(ideal_path);
      Ideal ideal(f.ring, f.polys);
      Polynomial p = parse_polynomial(f.ring, poly_text);
      bool member = radical ? radical_membership(p, ideal) : ideal_membership(p, ideal);
      std::cout << (member ? "true" : "false") << "\n";
      return member ? 0 : 1;
    }
  } catch (const MfvError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

}  // namespace

int main(int argc, char** argv) { return run(argc, argv); }
