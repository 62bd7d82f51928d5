#include "mfv/groebner.h"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <unordered_set>

namespace mfv {

namespace {

Polynomial shift_scale(const Rational& c, const Monomial& m, const Polynomial& g) {
  return add_scaled(Polynomial::zero(g.ring()), c, m, g);
}

std::vector<Term> merge_add(const MonomialOrder& ord, std::span<const Term> a, const Rational& c,
                            const Monomial& m, std::span<const Term> g) {
  std::vector<Term> out;
  out.reserve(a.size() + g.size());
  std::size_t i = 0, j = 0;
  Monomial gm;
  bool gm_fresh = false;
  while (i < a.size() || j < g.size()) {
    if (j == g.size()) {
      out.push_back(a[i++]);
      continue;
    }
    if (!gm_fresh) {
      gm = mono_mul(m, g[j].mono);
      gm_fresh = true;
    }
    int cmp = i == a.size() ? -1 : compare(ord, a[i].mono, gm);
    if (cmp > 0) {
      out.push_back(a[i++]);
    } else if (cmp < 0) {
      out.push_back({std::move(gm), c * g[j].coeff});
      ++j, gm_fresh = false;
    } else {
      Rational s = a[i].coeff + c * g[j].coeff;
      if (s != 0) out.push_back({std::move(gm), std::move(s)});
      ++i, ++j, gm_fresh = false;
    }
  }
  return out;
}

}  // namespace

Polynomial normal_form(const Polynomial& f, std::span<const Polynomial> basis) {
  const Ring& ring = f.ring();
  const MonomialOrder& ord = ring->order();
  std::vector<const Polynomial*> gs;
  gs.reserve(basis.size());
  for (const Polynomial& g : basis) {
    if (g.is_zero()) continue;
    require_same_ring(ring, g.ring());
    gs.push_back(&g);
  }
  std::vector<Term> work(f.terms().begin(), f.terms().end());
  std::vector<Term> rem;
  std::size_t head = 0;
  while (head < work.size()) {
    const Term& lt = work[head];
    const Polynomial* red = nullptr;
    for (const Polynomial* g : gs) {
      if (divides(g->leading_monomial(), lt.mono)) {
        red = g;
        break;
      }
    }
    if (!red) {
      rem.push_back(lt);
      ++head;
      continue;
    }
    Rational c = -lt.coeff / red->leading_coeff();
    Monomial m = mono_div(lt.mono, red->leading_monomial());
    auto tail = std::span<const Term>(work).subspan(head + 1);
    auto gtail = std::span<const Term>(red->terms()).subspan(1);
    work = merge_add(ord, tail, c, m, gtail);
    head = 0;
  }
  return Polynomial::from_terms(ring, std::move(rem));
}

Polynomial normal_form(const Polynomial& f, const std::vector<Polynomial>& basis) {
  return normal_form(f, std::span<const Polynomial>(basis));
}

namespace {

struct Pair {
  int i, j;
  Monomial lcm;
  std::int64_t deg;
};

struct PairCmp {
  const MonomialOrder* ord;
  bool operator()(const Pair& a, const Pair& b) const {
    if (a.deg != b.deg) return a.deg < b.deg;
    if (int c = compare(*ord, a.lcm, b.lcm)) return c < 0;
    if (a.i != b.i) return a.i < b.i;
    return a.j < b.j;
  }
};

std::uint64_t pair_key(int i, int j) {
  return (static_cast<std::uint64_t>(i) << 32) | static_cast<std::uint32_t>(j);
}

std::vector<Polynomial> reduce_basis(const Ring& ring, std::vector<Polynomial> basis) {
  const MonomialOrder& ord = ring->order();
  std::sort(basis.begin(), basis.end(), [&](const Polynomial& a, const Polynomial& b) {
    return compare(ord, a.leading_monomial(), b.leading_monomial()) < 0;
  });
  std::vector<Polynomial> minimal;
  for (Polynomial& g : basis) {
    bool redundant = false;
    for (const Polynomial& h : minimal) {
      if (divides(h.leading_monomial(), g.leading_monomial())) {
        redundant = true;
        break;
      }
    }
    if (!redundant) minimal.push_back(std::move(g));
  }
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t i = 0; i < minimal.size(); ++i) {
      std::vector<Polynomial> others;
      others.reserve(minimal.size() - 1);
      for (std::size_t j = 0; j < minimal.size(); ++j)
        if (j != i) others.push_back(minimal[j]);
      Polynomial r = normal_form(minimal[i], others).monic();
      if (r != minimal[i]) {
        minimal[i] = std::move(r);
        changed = true;
      }
    }
    std::erase_if(minimal, [](const Polynomial& g) { return g.is_zero(); });
  }
  for (Polynomial& g : minimal) g = g.monic();
  std::sort(minimal.begin(), minimal.end(), [&](const Polynomial& a, const Polynomial& b) {
    return compare(ord, a.leading_monomial(), b.leading_monomial()) < 0;
  });
  return minimal;
}

}  // namespace

std::vector<Polynomial> buchberger(const Ring& ring, std::vector<Polynomial> gens,
                                   const BuchbergerOptions& opts) {
  const MonomialOrder& ord = ring->order();
  std::vector<Polynomial> basis;
  std::set<Pair, PairCmp> queue{PairCmp{&ord}};
  std::unordered_set<std::uint64_t> considered;

  auto push_poly = [&](Polynomial g) {
    int idx = static_cast<int>(basis.size());
    for (int k = 0; k < idx; ++k) {
      Monomial l = mono_lcm(basis[static_cast<std::size_t>(k)].leading_monomial(),
                            g.leading_monomial());
      std::int64_t d = l.degree();
      queue.insert(Pair{k, idx, std::move(l), d});
    }
    basis.push_back(std::move(g));
  };

  std::sort(gens.begin(), gens.end(), [&](const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return b.is_zero() && !a.is_zero();
    return compare(ord, a.leading_monomial(), b.leading_monomial()) < 0;
  });
  for (const Polynomial& g : gens) {
    if (g.is_zero()) continue;
    require_same_ring(ring, g.ring());
    Polynomial r = normal_form(g, basis);
    if (!r.is_zero()) push_poly(r.monic());
  }

  while (!queue.empty()) {
    Pair p = *queue.begin();
    queue.erase(queue.begin());
    considered.insert(pair_key(p.i, p.j));

    const Polynomial& gi = basis[static_cast<std::size_t>(p.i)];
    const Polynomial& gj = basis[static_cast<std::size_t>(p.j)];
    if (opts.coprime_criterion && coprime(gi.leading_monomial(), gj.leading_monomial())) continue;
    if (opts.chain_criterion) {
      bool skip = false;
      for (int k = 0; k < static_cast<int>(basis.size()) && !skip; ++k) {
        if (k == p.i || k == p.j) continue;
        if (!divides(basis[static_cast<std::size_t>(k)].leading_monomial(), p.lcm)) continue;
        auto key = [&](int a, int b) { return pair_key(std::min(a, b), std::max(a, b)); };
        if (considered.count(key(p.i, k)) && considered.count(key(p.j, k))) skip = true;
      }
      if (skip) continue;
    }

    Polynomial a = shift_scale(1 / gi.leading_coeff(), mono_div(p.lcm, gi.leading_monomial()), gi);
    Polynomial b = shift_scale(1 / gj.leading_coeff(), mono_div(p.lcm, gj.leading_monomial()), gj);
    Polynomial r = normal_form(a - b, basis);
    if (!r.is_zero()) push_poly(r.monic());
  }

  return reduce_basis(ring, std::move(basis));
}

Ideal::Ideal(Ring ring, std::vector<Polynomial> gens)
    : ring_(std::move(ring)), cache_(std::make_shared<Cache>()) {
  gens_.reserve(gens.size());
  for (Polynomial& g : gens) {
    if (g.is_zero()) continue;
    require_same_ring(ring_, g.ring());
    gens_.push_back(std::move(g));
  }
}

const std::vector<Polynomial>& Ideal::groebner_basis() const& {
  if (!cache_) throw DomainError("ideal is empty-constructed");
  std::call_once(cache_->flag, [this] { cache_->gb = buchberger(ring_, gens_); });
  return cache_->gb;
}

std::vector<Polynomial> Ideal::groebner_basis() const&& { return groebner_basis(); }

bool Ideal::is_unit() const {
  const auto& gb = groebner_basis();
  return gb.size() == 1 && gb[0].is_constant() && !gb[0].is_zero();
}

bool Ideal::contains(const Polynomial& f) const {
  return normal_form(f, groebner_basis()).is_zero();
}

bool Ideal::contains_ideal(const Ideal& other) const {
  for (const Polynomial& g : other.generators())
    if (!contains(g)) return false;
  return true;
}

bool ideal_membership(const Polynomial& f, const Ideal& ideal) { return ideal.contains(f); }

Ideal with_order(const Ideal& ideal, const MonomialOrder& order) {
  Ring ring = RingSignature::make(ideal.ring()->vars(), order);
  std::vector<Polynomial> gens;
  gens.reserve(ideal.generators().size());
  for (const Polynomial& g : ideal.generators()) gens.push_back(rename_into(g, ring));
  return Ideal(ring, std::move(gens));
}

namespace {

/// Map f into `target` by index translation: variable i of f's ring becomes
/// variable shift[i] of target.
Polynomial embed_by_index(const Polynomial& f, const Ring& target, const std::vector<int>& shift) {
  std::vector<Term> out;
  out.reserve(f.terms().size());
  for (const Term& t : f.terms()) {
    Monomial m = Monomial::one(target->nvars());
    for (std::size_t i = 0; i < t.mono.e.size(); ++i)
      if (t.mono.e[i] != 0) m.e[static_cast<std::size_t>(shift[i])] = t.mono.e[i];
    out.push_back({std::move(m), t.coeff});
  }
  return Polynomial::from_terms(target, std::move(out));
}

std::vector<int> identity_shift(int n, int offset) {
  std::vector<int> s(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) s[static_cast<std::size_t>(i)] = i + offset;
  return s;
}

std::string unique_name(std::string base, const std::vector<std::string>& taken) {
  auto used = [&](const std::string& s) {
    return std::find(taken.begin(), taken.end(), s) != taken.end();
  };
  while (used(base)) base += "_";
  return base;
}

/// GB elements supported entirely on the trailing variables, translated into
/// `out_ring` (which lists exactly those variables in the same order).
std::vector<Polynomial> eliminate_leading_block(const Ring& block_ring,
                                                const std::vector<Polynomial>& gb, int cut,
                                                const Ring& out_ring) {
  std::vector<int> shift(static_cast<std::size_t>(block_ring->nvars()), -1);
  for (int i = cut; i < block_ring->nvars(); ++i) shift[static_cast<std::size_t>(i)] = i - cut;
  std::vector<Polynomial> kept;
  for (const Polynomial& g : gb) {
    bool pure = true;
    for (const Term& t : g.terms()) {
      for (int i = 0; i < cut && pure; ++i)
        if (t.mono.e[static_cast<std::size_t>(i)] != 0) pure = false;
      if (!pure) break;
    }
    if (pure) kept.push_back(embed_by_index(g, out_ring, shift));
  }
  return kept;
}

}  // namespace

Ideal elimination_ideal(const Ideal& ideal, const std::vector<std::string>& keep) {
  const Ring& ring = ideal.ring();
  std::vector<bool> keep_mask(static_cast<std::size_t>(ring->nvars()), false);
  for (const std::string& name : keep) {
    int idx = ring->var_index(name);
    if (idx < 0) throw RingError("unknown variable '" + name + "' in elimination");
    keep_mask[static_cast<std::size_t>(idx)] = true;
  }

  std::vector<int> elim_idx, keep_idx;
  for (int i = 0; i < ring->nvars(); ++i)
    (keep_mask[static_cast<std::size_t>(i)] ? keep_idx : elim_idx).push_back(i);

  if (elim_idx.empty()) return Ideal(ring, ideal.groebner_basis());

  std::vector<std::string> names;
  for (int i : elim_idx) names.push_back(ring->var(i));
  for (int i : keep_idx) names.push_back(ring->var(i));
  int cut = static_cast<int>(elim_idx.size());
  MonomialOrder order = keep_idx.empty() ? MonomialOrder::lex() : MonomialOrder::block(cut);
  Ring block_ring = RingSignature::make(names, order);

  std::vector<int> shift(static_cast<std::size_t>(ring->nvars()));
  for (std::size_t pos = 0; pos < elim_idx.size(); ++pos)
    shift[static_cast<std::size_t>(elim_idx[pos])] = static_cast<int>(pos);
  for (std::size_t pos = 0; pos < keep_idx.size(); ++pos)
    shift[static_cast<std::size_t>(keep_idx[pos])] = cut + static_cast<int>(pos);

  std::vector<Polynomial> moved;
  moved.reserve(ideal.generators().size());
  for (const Polynomial& g : ideal.generators()) moved.push_back(embed_by_index(g, block_ring, shift));

  std::vector<Polynomial> gb = buchberger(block_ring, std::move(moved));

  std::vector<std::string> keep_names;
  for (int i : keep_idx) keep_names.push_back(ring->var(i));
  Ring out_ring = RingSignature::make(keep_names, MonomialOrder::grevlex());
  return Ideal(out_ring, eliminate_leading_block(block_ring, gb, cut, out_ring));
}

Polynomial apply_map(const RingMap& map, const Polynomial& f) {
  require_same_ring(map.source, f.ring());
  if (static_cast<int>(map.images.size()) != map.source->nvars())
    throw RingError("ring map image count mismatch");
  std::vector<std::vector<Polynomial>> pow_cache(map.images.size());
  auto power = [&](std::size_t i, std::int32_t e) -> const Polynomial& {
    auto& cache = pow_cache[i];
    if (cache.empty()) cache.push_back(Polynomial::constant(map.target, 1));
    while (static_cast<std::int32_t>(cache.size()) <= e)
      cache.push_back(cache.back() * map.images[i]);
    return cache[static_cast<std::size_t>(e)];
  };
  Polynomial acc = Polynomial::zero(map.target);
  for (const Term& t : f.terms()) {
    Polynomial prod = Polynomial::constant(map.target, t.coeff);
    for (std::size_t i = 0; i < t.mono.e.size(); ++i)
      if (t.mono.e[i] != 0) prod *= power(i, t.mono.e[i]);
    acc += prod;
  }
  return acc;
}

namespace {

/// Joint ring with target variables first (the block to eliminate), then the
/// source variables, renamed on collision. Returns the graph ideal's
/// elimination result mapped back into the source ring.
Ideal graph_preimage(const RingMap& map, const std::vector<Polynomial>& target_ideal_gens) {
  const Ring& src = map.source;
  const Ring& tgt = map.target;
  std::vector<std::string> names = tgt->vars();
  std::vector<std::string> src_names;
  for (const std::string& v : src->vars()) {
    std::string u = unique_name(v, names);
    names.push_back(u);
    src_names.push_back(std::move(u));
  }

  int cut = tgt->nvars();
  Ring joint = RingSignature::make(names, MonomialOrder::block(cut));

  std::vector<Polynomial> gens;
  std::vector<int> tgt_shift = identity_shift(tgt->nvars(), 0);
  for (const Polynomial& g : target_ideal_gens) gens.push_back(embed_by_index(g, joint, tgt_shift));
  if (map.target_relations)
    for (const Polynomial& g : map.target_relations->generators())
      gens.push_back(embed_by_index(g, joint, tgt_shift));
  for (int i = 0; i < src->nvars(); ++i) {
    Polynomial graph = Polynomial::variable(joint, cut + i) -
                       embed_by_index(map.images[static_cast<std::size_t>(i)], joint, tgt_shift);
    gens.push_back(std::move(graph));
  }

  std::vector<Polynomial> gb = buchberger(joint, std::move(gens));
  Ring tmp_src = RingSignature::make(src_names, src->order());
  std::vector<Polynomial> kept = eliminate_leading_block(joint, gb, cut, tmp_src);

  std::vector<Polynomial> out;
  std::vector<int> ident = identity_shift(src->nvars(), 0);
  for (const Polynomial& g : kept) out.push_back(embed_by_index(g, src, ident));
  return Ideal(src, std::move(out));
}

}  // namespace

Ideal kernel_of_map(const RingMap& map) {
  std::vector<Polynomial> rel;
  return graph_preimage(map, rel);
}

Ideal preimage_ideal(const RingMap& map, const Ideal& ideal) {
  require_same_ring(map.target, ideal.ring());
  return graph_preimage(map, ideal.generators());
}

RingMap make_map(Ring source, Ring target,
                 const std::vector<std::pair<std::string, Polynomial>>& images,
                 std::optional<Ideal> target_relations) {
  std::vector<Polynomial> img;
  img.reserve(static_cast<std::size_t>(source->nvars()));
  for (const std::string& v : source->vars()) {
    auto it = std::find_if(images.begin(), images.end(),
                           [&](const auto& p) { return p.first == v; });
    if (it != images.end()) {
      require_same_ring(target, it->second.ring());
      img.push_back(it->second);
    } else {
      int idx = target->var_index(v);
      if (idx < 0) throw RingError("no image given for source variable '" + v + "'");
      img.push_back(Polynomial::variable(target, idx));
    }
  }
  for (const auto& [name, poly] : images)
    if (source->var_index(name) < 0)
      throw RingError("image given for unknown source variable '" + name + "'");
  return RingMap{std::move(source), std::move(target), std::move(img), std::move(target_relations)};
}

bool radical_membership(const Polynomial& f, const Ideal& ideal) {
  const Ring& ring = ideal.ring();
  require_same_ring(ring, f.ring());
  if (f.is_zero()) return true;
  std::vector<std::string> names = ring->vars();
  names.push_back(unique_name("tau", names));
  Ring ext = RingSignature::make(names, MonomialOrder::grevlex());
  std::vector<int> shift = identity_shift(ring->nvars(), 0);
  std::vector<Polynomial> gens;
  for (const Polynomial& g : ideal.generators()) gens.push_back(embed_by_index(g, ext, shift));
  Polynomial tau = Polynomial::variable(ext, ext->nvars() - 1);
  gens.push_back(Polynomial::constant(ext, 1) - tau * embed_by_index(f, ext, shift));
  std::vector<Polynomial> gb = buchberger(ext, std::move(gens));
  return gb.size() == 1 && gb[0].is_constant();
}

bool same_variety(const Ideal& a, const Ideal& b) {
  for (const Polynomial& g : a.generators())
    if (!radical_membership(g, b)) return false;
  for (const Polynomial& g : b.generators())
    if (!radical_membership(g, a)) return false;
  return true;
}

Ideal ideal_sum(const Ideal& a, const Ideal& b) {
  require_same_ring(a.ring(), b.ring());
  std::vector<Polynomial> gens = a.generators();
  gens.insert(gens.end(), b.generators().begin(), b.generators().end());
  return Ideal(a.ring(), std::move(gens));
}

namespace {

std::vector<Polynomial> dedupe(std::vector<Polynomial> polys) {
  std::vector<Polynomial> out;
  for (Polynomial& p : polys) {
    Polynomial q = p.monic();
    bool seen = false;
    for (const Polynomial& r : out)
      if (r == q) {
        seen = true;
        break;
      }
    if (!seen) out.push_back(std::move(q));
  }
  return out;
}

}  // namespace

Ideal ideal_product(const Ideal& a, const Ideal& b) {
  require_same_ring(a.ring(), b.ring());
  std::vector<Polynomial> gens;
  for (const Polynomial& f : a.generators())
    for (const Polynomial& g : b.generators()) gens.push_back(f * g);
  return Ideal(a.ring(), dedupe(std::move(gens)));
}

Ideal ideal_power(const Ideal& a, int n) {
  if (n < 0) throw DomainError("negative ideal power");
  Ideal acc(a.ring(), {Polynomial::constant(a.ring(), 1)});
  for (int i = 0; i < n; ++i) acc = ideal_product(acc, a);
  return acc;
}

Ideal ideal_intersection(const Ideal& a, const Ideal& b) {
  require_same_ring(a.ring(), b.ring());
  const Ring& ring = a.ring();
  std::vector<std::string> names;
  std::string tau = unique_name("tau", ring->vars());
  names.push_back(tau);
  for (const std::string& v : ring->vars()) names.push_back(v);
  Ring ext = RingSignature::make(names, MonomialOrder::block(1));
  std::vector<int> shift = identity_shift(ring->nvars(), 1);
  Polynomial t = Polynomial::variable(ext, 0);
  Polynomial omt = Polynomial::constant(ext, 1) - t;
  std::vector<Polynomial> gens;
  for (const Polynomial& g : a.generators()) gens.push_back(t * embed_by_index(g, ext, shift));
  for (const Polynomial& g : b.generators()) gens.push_back(omt * embed_by_index(g, ext, shift));
  std::vector<Polynomial> gb = buchberger(ext, std::move(gens));
  std::vector<Polynomial> kept = eliminate_leading_block(ext, gb, 1, ring);
  return Ideal(ring, std::move(kept));
}

bool same_ideal(const Ideal& a, const Ideal& b) {
  if (!same_ring(a.ring(), b.ring())) return false;
  return a.groebner_basis() == b.groebner_basis();
}

Integer HilbertSeries::coefficient(int m) const {
  if (m < 0) return 0;
  Integer acc = 0;
  for (std::size_t k = 0; k < num.size(); ++k) {
    int shift = m - static_cast<int>(k);
    if (shift < 0) break;
    if (denom_power == 0) {
      if (shift == 0) acc += num[k];
    } else {
      // binom(shift + denom_power - 1, denom_power - 1)
      Integer binom = 1;
      for (int r = 1; r <= denom_power - 1; ++r) {
        binom *= shift + r;
        binom /= r;
      }
      acc += num[k] * binom;
    }
  }
  return acc;
}

HilbertSeries make_series(std::vector<Integer> raw_num, int denom_power) {
  while (!raw_num.empty() && raw_num.back() == 0) raw_num.pop_back();
  if (raw_num.empty()) return HilbertSeries{{}, 0};
  auto at_one = [&] {
    Integer s = 0;
    for (const Integer& c : raw_num) s += c;
    return s;
  };
  while (at_one() == 0) {
    if (denom_power <= 0) throw DomainError("series numerator divisible by (1-t) with no pole left");
    // divide by (1 - t): q_k = sum_{j<=k} num_j
    std::vector<Integer> q(raw_num.size() - 1);
    Integer run = 0;
    for (std::size_t k = 0; k + 1 < raw_num.size(); ++k) {
      run += raw_num[k];
      q[k] = run;
    }
    raw_num = std::move(q);
    --denom_power;
    while (!raw_num.empty() && raw_num.back() == 0) raw_num.pop_back();
    if (raw_num.empty()) return HilbertSeries{{}, 0};
  }
  return HilbertSeries{std::move(raw_num), denom_power};
}

std::string to_string(const HilbertSeries& hs) {
  std::string num;
  if (hs.num.empty()) {
    num = "0";
  } else {
    bool first = true;
    for (std::size_t k = 0; k < hs.num.size(); ++k) {
      if (hs.num[k] == 0) continue;
      Integer a = hs.num[k];
      bool neg = a < 0;
      if (neg) a = -a;
      num += first ? (neg ? "-" : "") : (neg ? " - " : " + ");
      first = false;
      if (k == 0) {
        num += a.get_str();
      } else {
        if (a != 1) num += a.get_str() + "*";
        num += k == 1 ? "t" : "t^" + std::to_string(k);
      }
    }
    if (first) num = "0";
  }
  if (hs.denom_power == 0) return num;
  std::string denom = "(1 - t)";
  if (hs.denom_power != 1) denom += "^" + std::to_string(hs.denom_power);
  return "(" + num + ") / " + denom;
}

namespace {

std::vector<Monomial> minimalize(std::vector<Monomial> gens) {
  std::sort(gens.begin(), gens.end(), [](const Monomial& a, const Monomial& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    return a.e < b.e;
  });
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  std::vector<Monomial> minimal;
  for (Monomial& m : gens) {
    bool redundant = false;
    for (const Monomial& g : minimal)
      if (divides(g, m)) {
        redundant = true;
        break;
      }
    if (!redundant) minimal.push_back(std::move(m));
  }
  return minimal;
}

void poly_axpy(std::vector<Integer>& acc, const std::vector<Integer>& f, int shift, int sign) {
  if (acc.size() < f.size() + static_cast<std::size_t>(shift))
    acc.resize(f.size() + static_cast<std::size_t>(shift), 0);
  for (std::size_t k = 0; k < f.size(); ++k)
    acc[k + static_cast<std::size_t>(shift)] += sign * f[k];
}

/// Numerator N(t) with Hilb(R/(gens)) = N(t)/(1-t)^nvars; `gens` minimal.
std::vector<Integer> monomial_numerator(std::vector<Monomial> gens) {
  if (gens.empty()) return {Integer(1)};
  for (const Monomial& g : gens)
    if (g.is_one()) return {Integer(0)};
  if (gens.size() == 1) {
    // 1 - t^deg
    std::vector<Integer> n(static_cast<std::size_t>(gens[0].degree()) + 1, 0);
    n[0] = 1;
    n.back() = -1;
    return n;
  }

  // split variable-disjoint components
  std::size_t nv = gens[0].e.size();
  std::vector<int> comp(gens.size());
  for (std::size_t i = 0; i < gens.size(); ++i) comp[i] = static_cast<int>(i);
  std::function<int(int)> find = [&](int x) { return comp[static_cast<std::size_t>(x)] == x ? x : comp[static_cast<std::size_t>(x)] = find(comp[static_cast<std::size_t>(x)]); };
  for (std::size_t v = 0; v < nv; ++v) {
    int first = -1;
    for (std::size_t i = 0; i < gens.size(); ++i) {
      if (gens[i].e[v] == 0) continue;
      if (first == -1)
        first = static_cast<int>(i);
      else
        comp[static_cast<std::size_t>(find(static_cast<int>(i)))] = find(first);
    }
  }
  std::map<int, std::vector<Monomial>> groups;
  for (std::size_t i = 0; i < gens.size(); ++i) groups[find(static_cast<int>(i))].push_back(gens[i]);
  if (groups.size() > 1) {
    std::vector<Integer> acc{Integer(1)};
    for (auto& [root, group] : groups) {
      std::vector<Integer> part = monomial_numerator(std::move(group));
      std::vector<Integer> next(acc.size() + part.size() - 1, 0);
      for (std::size_t a = 0; a < acc.size(); ++a)
        for (std::size_t b = 0; b < part.size(); ++b) next[a + b] += acc[a] * part[b];
      acc = std::move(next);
    }
    return acc;
  }

  Monomial pivot = gens.back();
  std::vector<Monomial> rest(gens.begin(), gens.end() - 1);
  std::vector<Monomial> colon;
  colon.reserve(rest.size());
  for (const Monomial& h : rest) {
    Monomial q = h;
    for (std::size_t v = 0; v < nv; ++v) q.e[v] = std::max(0, h.e[v] - pivot.e[v]);
    colon.push_back(std::move(q));
  }
  std::vector<Integer> n_rest = monomial_numerator(rest);
  std::vector<Integer> n_colon = monomial_numerator(minimalize(std::move(colon)));
  std::vector<Integer> acc = std::move(n_rest);
  poly_axpy(acc, n_colon, static_cast<int>(pivot.degree()), -1);
  while (!acc.empty() && acc.back() == 0) acc.pop_back();
  return acc;
}

}  // namespace

HilbertSeries hilbert_series(const Ideal& ideal) {
  for (const Polynomial& g : ideal.generators())
    if (!g.is_homogeneous())
      throw DomainError("hilbert_series requires homogeneous generators: " + to_string(g));
  const auto& gb = ideal.groebner_basis();
  if (!gb.empty() && gb[0].is_constant()) return HilbertSeries{{}, 0};
  std::vector<Monomial> lts;
  lts.reserve(gb.size());
  for (const Polynomial& g : gb) lts.push_back(g.leading_monomial());
  std::vector<Integer> num = monomial_numerator(minimalize(std::move(lts)));
  return make_series(std::move(num), ideal.ring()->nvars());
}

int matrix_rank(std::vector<std::vector<Rational>> m) {
  if (m.empty()) return 0;
  std::size_t rows = m.size(), cols = m[0].size();
  int rank = 0;
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols && row < rows; ++col) {
    std::size_t sel = row;
    while (sel < rows && m[sel][col] == 0) ++sel;
    if (sel == rows) continue;
    std::swap(m[sel], m[row]);
    for (std::size_t r = row + 1; r < rows; ++r) {
      if (m[r][col] == 0) continue;
      Rational factor = m[r][col] / m[row][col];
      for (std::size_t c = col; c < cols; ++c) m[r][c] -= factor * m[row][c];
    }
    ++row;
    ++rank;
  }
  return rank;
}

int quadratic_rank(const Polynomial& q) {
  if (q.is_zero()) return 0;
  if (!q.is_homogeneous() || q.total_degree() != 2)
    throw DomainError("quadratic_rank requires a homogeneous quadratic");
  int n = q.ring()->nvars();
  std::vector<std::vector<Rational>> gram(static_cast<std::size_t>(n),
                                          std::vector<Rational>(static_cast<std::size_t>(n), 0));
  for (const Term& t : q.terms()) {
    int vi = -1, vj = -1;
    for (int v = 0; v < n; ++v) {
      std::int32_t e = t.mono.e[static_cast<std::size_t>(v)];
      if (e == 2) vi = vj = v;
      else if (e == 1) (vi == -1 ? vi : vj) = v;
    }
    if (vi == vj) {
      gram[static_cast<std::size_t>(vi)][static_cast<std::size_t>(vi)] = t.coeff;
    } else {
      Rational half = t.coeff / 2;
      gram[static_cast<std::size_t>(vi)][static_cast<std::size_t>(vj)] = half;
      gram[static_cast<std::size_t>(vj)][static_cast<std::size_t>(vi)] = half;
    }
  }
  return matrix_rank(std::move(gram));
}

}  // namespace mfv
