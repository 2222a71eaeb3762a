#include "henkin/indep.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <thread>
#include <tuple>

#include "henkin/eval.hpp"

namespace henkin {

namespace {

constexpr std::array<const char*, 7> kKindNames = {
    "NotInjective", "NotTotal", "NotFunction", "NotSupported", "OrderFlip", "NotAntisymmetric", "NotTransitive",
};

using Member = std::function<bool(const Atom&, const Atom&)>;

bool holds(const OrbitPredicate& p, const Atom& u, const Atom& v) {
  std::array<Atom, 2> t{u, v};
  return p.contains(t);
}

void check_sort(const Structure& s, int sort) {
  if (sort < 1 || sort > s.sorts())
    throw SortError("sort " + std::to_string(sort) + " out of range for " + s.name());
}

Refutation refute(RefutationKind k, std::vector<Atom> atoms, std::optional<FinitePermutation> perm = {}) {
  return {k, std::move(atoms), std::move(perm)};
}

// Evaluates a clause about T with the given individual bindings.
bool clause(const char* text, const OrbitPredicate& t, std::initializer_list<std::pair<const char*, Atom>> binds) {
  thread_local std::map<std::string, Formula> cache;
  auto it = cache.find(text);
  if (it == cache.end()) it = cache.emplace(text, parse(text)).first;
  Assignment f;
  f.bind("T", t);
  for (const auto& [x, a] : binds) f.bind(x, a);
  EvalConfig cfg;
  cfg.structure = t.structure();
  cfg.budget = 0;
  return eval(it->second, f, cfg).value;
}

}  // namespace

std::string to_string(RefutationKind k) { return kKindNames[static_cast<std::size_t>(k)]; }

RefutationKind refutation_kind_from_string(const std::string& s) {
  for (std::size_t i = 0; i < kKindNames.size(); ++i)
    if (s == kKindNames[i]) return static_cast<RefutationKind>(i);
  throw Error("unknown refutation kind " + s);
}

std::optional<Refutation> check_injection(const OrbitPredicate& tau, int from_sort, int to_sort) {
  const Structure& s = tau.structure();
  if (s.is_finite()) throw Error("check_injection works on permutation models; use check_injection_finite");
  if (tau.arity() != 2) throw ArityError("check_injection needs a binary predicate");
  check_sort(s, from_sort);
  check_sort(s, to_sort);
  const SupportSet& P = tau.support();

  for (const auto& t : tau.satisfied()) {
    std::vector<Atom> pair = representative(t, P, s);
    if (pair[0].sort != from_sort || pair[1].sort != to_sort)
      return refute(RefutationKind::NotFunction, pair);
  }

  std::vector<Atom> xs = P.of_sort(from_sort);
  xs.push_back(fresh_atom(from_sort, P));
  std::vector<Atom> images;
  for (const auto& xi : xs) {
    SupportSet avoid = P;
    avoid.insert(xi);
    std::vector<Atom> etas = P.of_sort(to_sort);
    if (xi.sort == to_sort && !P.contains(xi)) etas.push_back(xi);
    Atom fresh = fresh_atom(to_sort, avoid);
    std::vector<Atom> hit;
    for (const auto& eta : etas)
      if (holds(tau, xi, eta)) hit.push_back(eta);
    if (holds(tau, xi, fresh)) {
      // Every fresh atom is then an image: move one onto another.
      avoid.insert(fresh);
      Atom other = fresh_atom(to_sort, avoid);
      return refute(RefutationKind::NotFunction, {xi, fresh, other}, transposition(fresh, other));
    }
    if (hit.empty()) return refute(RefutationKind::NotTotal, {xi});
    if (hit.size() > 1) return refute(RefutationKind::NotFunction, {xi, hit[0], hit[1]});
    images.push_back(hit[0]);
  }

  const Atom& x1 = xs.back();
  const Atom& y1 = images.back();
  if (y1 != x1) {
    // A fresh argument with an image in P: its orbit-mates share that image.
    SupportSet avoid = P;
    avoid.insert(x1);
    avoid.insert(y1);
    Atom x2 = fresh_atom(from_sort, avoid);
    return refute(RefutationKind::NotInjective, {x1, x2, y1}, transposition(x1, x2));
  }
  for (std::size_t i = 0; i + 1 < xs.size(); ++i)
    for (std::size_t j = i + 1; j + 1 < xs.size(); ++j)
      if (images[i] == images[j]) return refute(RefutationKind::NotInjective, {xs[i], xs[j], images[i]});
  return std::nullopt;
}

namespace {

// Atoms probed when testing a claimed support: the support itself plus three
// fresh atoms per sort.
std::vector<Atom> probe_pool(const SupportSet& claimed, const Structure& s) {
  std::vector<Atom> pool = claimed.atoms();
  for (int sort = 1; sort <= s.sorts(); ++sort) {
    SupportSet avoid = claimed;
    for (int i = 0; i < 3; ++i) {
      Atom a = fresh_atom(sort, avoid);
      avoid.insert(a);
      pool.push_back(a);
    }
  }
  return pool;
}

std::optional<Refutation> check_support(const SupportSet& claimed, const Member& member, const Structure& s) {
  std::vector<Atom> pool = probe_pool(claimed, s);
  for (std::size_t i = 0; i < pool.size(); ++i)
    for (std::size_t j = i + 1; j < pool.size(); ++j) {
      const Atom& a = pool[i];
      const Atom& b = pool[j];
      if (a.sort != b.sort || claimed.contains(a) || claimed.contains(b)) continue;
      FinitePermutation pi = transposition(a, b);
      for (const auto& u : pool)
        for (const auto& v : pool)
          if (member(u, v) != member(pi(u), pi(v))) return refute(RefutationKind::NotSupported, {u, v}, pi);
    }
  return std::nullopt;
}

}  // namespace

std::optional<Refutation> check_injection(const SupportSet& claimed_support, const Member& member,
                                          const Structure& s, int from_sort, int to_sort) {
  if (s.is_finite()) throw Error("check_injection works on permutation models; use check_injection_finite");
  check_sort(s, from_sort);
  check_sort(s, to_sort);
  for (const auto& a : claimed_support) s.check_atom(a);
  if (auto r = check_support(claimed_support, member, s)) return r;
  OrbitPredicate table = OrbitPredicate::from_membership(
      2, claimed_support, s, [&](const std::vector<Atom>& t) { return member(t[0], t[1]); });
  return check_injection(table, from_sort, to_sort);
}

bool replay_injection(const OrbitPredicate& tau, int from_sort, int to_sort, const Refutation& r) {
  const auto& w = r.witness_atoms;
  const SupportSet& P = tau.support();
  switch (r.kind) {
    case RefutationKind::NotTotal:
      return w.size() == 1 && w[0].sort == from_sort && !clause("exists y. T(x, y)", tau, {{"x", w[0]}});
    case RefutationKind::NotFunction:
      if (w.size() == 2)
        return (w[0].sort != from_sort || w[1].sort != to_sort) && clause("T(x, y)", tau, {{"x", w[0]}, {"y", w[1]}});
      if (w.size() != 3 || !clause("T(x, y1) & T(x, y2) & !(y1 = y2)", tau, {{"x", w[0]}, {"y1", w[1]}, {"y2", w[2]}}))
        return false;
      if (r.witness_perm) {
        const auto& p = *r.witness_perm;
        return fixes_pointwise(p, P) && p(w[0]) == w[0] && p(w[1]) == w[2];
      }
      return true;
    case RefutationKind::NotInjective:
      if (w.size() != 3 || w[0].sort != from_sort ||
          !clause("T(x1, y) & T(x2, y) & !(x1 = x2)", tau, {{"x1", w[0]}, {"x2", w[1]}, {"y", w[2]}}))
        return false;
      if (r.witness_perm) {
        const auto& p = *r.witness_perm;
        return fixes_pointwise(p, P) && p(w[0]) == w[1] && p(w[2]) == w[2];
      }
      return true;
    default:
      return false;
  }
}

bool replay_injection(const SupportSet& claimed_support, const Member& member, const Structure& s, int from_sort,
                      int to_sort, const Refutation& r) {
  if (r.kind == RefutationKind::NotSupported) {
    const auto& w = r.witness_atoms;
    if (w.size() != 2 || !r.witness_perm || !fixes_pointwise(*r.witness_perm, claimed_support)) return false;
    const auto& p = *r.witness_perm;
    return member(w[0], w[1]) != member(p(w[0]), p(w[1]));
  }
  OrbitPredicate table = OrbitPredicate::from_membership(
      2, claimed_support, s, [&](const std::vector<Atom>& t) { return member(t[0], t[1]); });
  return replay_injection(table, from_sort, to_sort, r);
}

std::optional<Refutation> check_well_order(const OrbitPredicate& t) {
  const Structure& s = t.structure();
  if (s.is_finite()) throw Error("check_well_order works on permutation models; use check_well_order_finite");
  if (t.arity() != 2) throw ArityError("an order is a binary predicate");
  const auto& P = t.support().atoms();
  for (std::size_t i = 0; i < P.size(); ++i)
    for (std::size_t j = i; j < P.size(); ++j)
      if (!holds(t, P[i], P[j]) && !holds(t, P[j], P[i])) return refute(RefutationKind::NotTotal, {P[i], P[j]});
  for (std::size_t i = 0; i < P.size(); ++i)
    for (std::size_t j = i + 1; j < P.size(); ++j)
      if (holds(t, P[i], P[j]) && holds(t, P[j], P[i])) return refute(RefutationKind::NotAntisymmetric, {P[i], P[j]});
  for (const auto& u : P)
    for (const auto& v : P)
      for (const auto& w : P)
        if (holds(t, u, v) && holds(t, v, w) && !holds(t, u, w))
          return refute(RefutationKind::NotTransitive, {u, v, w});

  for (int sort = 1; sort <= s.sorts(); ++sort) {
    SupportSet avoid = t.support();
    Atom a = fresh_atom(sort, avoid);
    avoid.insert(a);
    Atom b = fresh_atom(sort, avoid);
    if (holds(t, a, b)) return refute(RefutationKind::OrderFlip, {a, b}, transposition(a, b));
    if (holds(t, b, a)) return refute(RefutationKind::OrderFlip, {b, a}, transposition(a, b));
    return refute(RefutationKind::NotTotal, {a, b});
  }
  return std::nullopt;
}

bool replay_well_order(const OrbitPredicate& t, const Refutation& r) {
  const auto& w = r.witness_atoms;
  switch (r.kind) {
    case RefutationKind::NotTotal:
      return w.size() == 2 && !clause("T(x, y) | T(y, x)", t, {{"x", w[0]}, {"y", w[1]}});
    case RefutationKind::NotAntisymmetric:
      return w.size() == 2 && clause("T(x, y) & T(y, x) & !(x = y)", t, {{"x", w[0]}, {"y", w[1]}});
    case RefutationKind::NotTransitive:
      return w.size() == 3 && clause("T(x, y) & T(y, z) & !T(x, z)", t, {{"x", w[0]}, {"y", w[1]}, {"z", w[2]}});
    case RefutationKind::OrderFlip: {
      if (w.size() != 2 || !r.witness_perm || *r.witness_perm != transposition(w[0], w[1])) return false;
      if (!fixes_pointwise(*r.witness_perm, t.support()) || !(apply_perm(t, *r.witness_perm) == t)) return false;
      return clause("T(x, y) & T(y, x) & !(x = y)", t, {{"x", w[0]}, {"y", w[1]}});
    }
    default:
      return false;
  }
}

std::vector<std::vector<int>> support_patterns(int k, int bound) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur(k, 0);
  auto rec = [&](auto&& self, int j, int left) -> void {
    if (j == k) {
      out.push_back(cur);
      return;
    }
    for (int c = 0; c <= left; ++c) {
      cur[j] = c;
      self(self, j + 1, left - c);
    }
    cur[j] = 0;
  };
  if (k >= 1 && bound >= 0) rec(rec, 0, bound);
  return out;
}

SupportSet pattern_support(const std::vector<int>& counts) {
  SupportSet out;
  for (std::size_t j = 0; j < counts.size(); ++j)
    for (int i = 0; i < counts[j]; ++i) out.insert(Atom{static_cast<int>(j) + 1, i});
  return out;
}

OrbitPredicate RefutationReport::candidate(const CandidateId& id) const {
  SupportSet supp = pattern_support(patterns.at(id.pattern));
  auto types = all_orbit_types(2, supp, structure);
  std::vector<OrbitType> chosen;
  for (std::size_t i = 0; i < types.size(); ++i)
    if (id.mask >> i & 1) chosen.push_back(types[i]);
  return OrbitPredicate::from_sorted_types(2, supp, std::move(chosen), structure);
}

namespace {

struct Direction {
  int from;
  int to;
};

struct Chunk {
  std::map<std::tuple<int, int, int>, RefutationGroup> groups;  // (dir, kind, 0)
  std::vector<FullRefutation> all;
  std::vector<CandidateId> accepted;
  std::uint64_t refutations = 0;
  std::uint64_t replayed = 0;
};

using Checker = std::function<std::optional<Refutation>(const OrbitPredicate&, const Direction&)>;
using Replayer = std::function<bool(const OrbitPredicate&, const Direction&, const Refutation&)>;

// Runs every candidate of every pattern against every direction, splitting
// each pattern's mask range into contiguous chunks so the merged output is in
// canonical (pattern, mask, direction) order whatever the thread count.
void search(RefutationReport& rep, const std::vector<Direction>& dirs, const Checker& check, const Replayer& replay,
            bool keep_all, unsigned threads) {
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  std::map<std::tuple<int, int, int, int>, RefutationGroup> groups;
  for (int pi = 0; pi < static_cast<int>(rep.patterns.size()); ++pi) {
    SupportSet supp = pattern_support(rep.patterns[pi]);
    auto types = all_orbit_types(2, supp, rep.structure);
    if (types.size() > 40) throw Error("too many candidates for support pattern " + std::to_string(pi));
    const std::uint64_t count = std::uint64_t{1} << types.size();
    rep.candidates += count;

    unsigned n = static_cast<unsigned>(std::min<std::uint64_t>(threads, std::max<std::uint64_t>(1, count / 256)));
    std::vector<Chunk> chunks(n);
    auto work = [&](unsigned c) {
      Chunk& out = chunks[c];
      std::uint64_t lo = count * c / n, hi = count * (c + 1) / n;
      std::vector<OrbitType> chosen;
      for (std::uint64_t mask = lo; mask < hi; ++mask) {
        chosen.clear();
        for (std::size_t i = 0; i < types.size(); ++i)
          if (mask >> i & 1) chosen.push_back(types[i]);
        OrbitPredicate cand = OrbitPredicate::from_sorted_types(2, supp, chosen, rep.structure);
        CandidateId id{pi, mask};
        bool accepted = false;
        for (const auto& d : dirs) {
          auto r = check(cand, d);
          if (!r) {
            accepted = true;
            continue;
          }
          ++out.refutations;
          if (replay(cand, d, *r)) ++out.replayed;
          auto key = std::make_tuple(d.from, d.to, static_cast<int>(r->kind));
          auto it = out.groups.find(key);
          if (it == out.groups.end())
            it = out.groups.emplace(key, RefutationGroup{pi, d.from, d.to, r->kind, 0, id, *r}).first;
          ++it->second.count;
          if (keep_all) out.all.push_back({id, d.from, d.to, std::move(*r)});
        }
        if (accepted) out.accepted.push_back(id);
      }
    };
    std::vector<std::thread> pool;
    for (unsigned c = 1; c < n; ++c) pool.emplace_back(work, c);
    work(0);
    for (auto& t : pool) t.join();

    for (auto& ch : chunks) {
      rep.refutation_count += ch.refutations;
      rep.replayed += ch.replayed;
      rep.accepted += ch.accepted.size();
      rep.accepted_candidates.insert(rep.accepted_candidates.end(), ch.accepted.begin(), ch.accepted.end());
      for (auto& fr : ch.all) rep.all.push_back(std::move(fr));
      for (auto& [key, g] : ch.groups) {
        auto gkey = std::make_tuple(pi, std::get<0>(key), std::get<1>(key), std::get<2>(key));
        auto it = groups.find(gkey);
        if (it == groups.end())
          groups.emplace(gkey, std::move(g));
        else
          it->second.count += g.count;
      }
    }
  }
  for (auto& [key, g] : groups) rep.groups.push_back(std::move(g));
}

}  // namespace

RefutationReport refute_tr1(int k, int support_bound, bool keep_all, unsigned threads) {
  if (k < 2) throw Error("TR refutation requires k ≥ 2");
  if (support_bound < 0) throw Error("support bound must be non-negative");
  RefutationReport rep;
  rep.claim = "not_TR1";
  rep.structure = Structure::ksigma0(k);
  rep.support_bound = support_bound;
  rep.patterns = support_patterns(k, support_bound);
  search(
      rep, {{1, 2}, {2, 1}},
      [](const OrbitPredicate& c, const Direction& d) { return check_injection(c, d.from, d.to); },
      [](const OrbitPredicate& c, const Direction& d, const Refutation& r) {
        return replay_injection(c, d.from, d.to, r);
      },
      keep_all, threads);
  return rep;
}

RefutationReport refute_wo1(int support_bound, bool keep_all) {
  if (support_bound < 0) throw Error("support bound must be non-negative");
  RefutationReport rep;
  rep.claim = "not_WO1";
  rep.structure = Structure::sigma0();
  rep.support_bound = support_bound;
  rep.patterns = support_patterns(1, support_bound);
  search(
      rep, {{0, 0}}, [](const OrbitPredicate& c, const Direction&) { return check_well_order(c); },
      [](const OrbitPredicate& c, const Direction&, const Refutation& r) { return replay_well_order(c, r); },
      keep_all, 1);
  return rep;
}

std::optional<Refutation> check_injection_finite(const OrbitPredicate& f, const OrbitPredicate& a,
                                                 const OrbitPredicate& b) {
  const Structure& s = f.structure();
  if (!s.is_finite()) throw Error("check_injection_finite needs a finite structure");
  if (f.arity() != 2 || a.arity() != 1 || b.arity() != 1) throw ArityError("check_injection_finite: arities 2, 1, 1");
  auto in = [](const OrbitPredicate& p, const Atom& u) { return p.contains(std::span<const Atom>(&u, 1)); };
  const auto dom = s.domain();
  for (const auto& u : dom)
    for (const auto& v : dom)
      if (holds(f, u, v) && !(in(a, u) && in(b, v))) return refute(RefutationKind::NotFunction, {u, v});
  for (const auto& u : dom) {
    if (!in(a, u)) continue;
    std::vector<Atom> img;
    for (const auto& v : dom)
      if (holds(f, u, v)) img.push_back(v);
    if (img.empty()) return refute(RefutationKind::NotTotal, {u});
    if (img.size() > 1) return refute(RefutationKind::NotFunction, {u, img[0], img[1]});
  }
  for (const auto& u1 : dom)
    for (const auto& u2 : dom)
      for (const auto& v : dom)
        if (u1 < u2 && holds(f, u1, v) && holds(f, u2, v)) return refute(RefutationKind::NotInjective, {u1, u2, v});
  return std::nullopt;
}

std::optional<Refutation> check_well_order_finite(const OrbitPredicate& t) {
  const Structure& s = t.structure();
  if (!s.is_finite()) throw Error("check_well_order_finite needs a finite structure");
  if (t.arity() != 2) throw ArityError("an order is a binary predicate");
  const auto dom = s.domain();
  for (const auto& u : dom)
    for (const auto& v : dom) {
      if (!holds(t, u, v) && !holds(t, v, u)) return refute(RefutationKind::NotTotal, {u, v});
      if (u != v && holds(t, u, v) && holds(t, v, u)) return refute(RefutationKind::NotAntisymmetric, {u, v});
      for (const auto& w : dom)
        if (holds(t, u, v) && holds(t, v, w) && !holds(t, u, w))
          return refute(RefutationKind::NotTransitive, {u, v, w});
    }
  // Least elements. A total order on a finite set always has them; a subset
  // without one is reported as NotTotal with the subset as witness.
  const std::size_t n = dom.size();
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
    bool found = false;
    for (std::size_t i = 0; i < n && !found; ++i) {
      if (!(mask >> i & 1)) continue;
      bool least = true;
      for (std::size_t j = 0; j < n; ++j)
        if ((mask >> j & 1) && !holds(t, dom[i], dom[j])) least = false;
      found = least;
    }
    if (!found) {
      std::vector<Atom> subset;
      for (std::size_t i = 0; i < n; ++i)
        if (mask >> i & 1) subset.push_back(dom[i]);
      return refute(RefutationKind::NotTotal, subset);
    }
  }
  return std::nullopt;
}

}  // namespace henkin
