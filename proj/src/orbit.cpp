#include "henkin/orbit.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace henkin {

int OrbitType::fresh_classes(int sort) const {
  int n = 0;
  int seen = 0;
  for (const auto& l : labels)
    if (!l.is_named() && l.class_id() > seen) {
      seen = l.class_id();
      if (l.sort() == sort) ++n;
    }
  return n;
}

std::ostream& operator<<(std::ostream& os, const OrbitType& t) {
  os << '[';
  for (std::size_t i = 0; i < t.labels.size(); ++i) {
    if (i) os << ", ";
    const auto& l = t.labels[i];
    if (l.is_named())
      os << "named" << l.atom();
    else
      os << "fresh(c" << l.class_id() << ',' << l.sort() << ')';
  }
  return os << ']';
}

OrbitType orbit_type_of(std::span<const Atom> tuple, const SupportSet& support) {
  OrbitType t;
  t.labels.reserve(tuple.size());
  Atom seen[16];
  std::vector<Atom> overflow;
  int classes = 0;
  for (const auto& a : tuple) {
    if (support.contains(a)) {
      t.labels.push_back(Label::named(a));
      continue;
    }
    int id = 0;
    for (int c = 0; c < classes; ++c) {
      const Atom& prev = c < 16 ? seen[c] : overflow[c - 16];
      if (prev == a) {
        id = c + 1;
        break;
      }
    }
    if (id == 0) {
      if (classes < 16)
        seen[classes] = a;
      else
        overflow.push_back(a);
      id = ++classes;
    }
    t.labels.push_back(Label::fresh(id, a.sort));
  }
  return t;
}

namespace {

// Atoms of the given sort a finite structure has left outside `support`;
// unbounded structures report a large number.
int available_fresh(const Structure& s, const SupportSet& support, int sort) {
  if (!s.is_finite()) return 1 << 20;
  int n = 0;
  for (const auto& a : s.domain())
    if (a.sort == sort && !support.contains(a)) ++n;
  return n;
}

void enumerate_types(int arity, const SupportSet& support, const Structure& s,
                     const std::vector<int>& available, OrbitType& cur, std::vector<int>& class_sorts,
                     std::vector<OrbitType>& out) {
  if (static_cast<int>(cur.labels.size()) == arity) {
    out.push_back(cur);
    return;
  }
  for (const auto& a : support) {
    cur.labels.push_back(Label::named(a));
    enumerate_types(arity, support, s, available, cur, class_sorts, out);
    cur.labels.pop_back();
  }
  for (std::size_t c = 0; c < class_sorts.size(); ++c) {
    cur.labels.push_back(Label::fresh(static_cast<int>(c) + 1, class_sorts[c]));
    enumerate_types(arity, support, s, available, cur, class_sorts, out);
    cur.labels.pop_back();
  }
  for (int sort = 1; sort <= s.sorts(); ++sort) {
    int used = static_cast<int>(std::count(class_sorts.begin(), class_sorts.end(), sort));
    if (used >= available[sort]) continue;
    class_sorts.push_back(sort);
    cur.labels.push_back(Label::fresh(static_cast<int>(class_sorts.size()), sort));
    enumerate_types(arity, support, s, available, cur, class_sorts, out);
    cur.labels.pop_back();
    class_sorts.pop_back();
  }
}

void check_type(const OrbitType& t, int arity, const SupportSet& support, const Structure& s) {
  if (static_cast<int>(t.arity()) != arity)
    throw ArityError("orbit type of length " + std::to_string(t.arity()) + " in predicate of arity " +
                     std::to_string(arity));
  std::vector<int> class_sorts;
  for (const auto& l : t.labels) {
    if (l.is_named()) {
      if (!support.contains(l.atom()))
        throw Error("named atom " + to_string(l.atom()) + " is not in the declared support");
      continue;
    }
    if (l.sort() < 1 || l.sort() > s.sorts()) throw SortError("fresh class of invalid sort");
    int id = l.class_id();
    if (id == static_cast<int>(class_sorts.size()) + 1) {
      class_sorts.push_back(l.sort());
    } else if (id < 1 || id > static_cast<int>(class_sorts.size())) {
      throw Error("fresh class ids are not numbered by first occurrence");
    } else if (class_sorts[id - 1] != l.sort()) {
      throw SortError("fresh class used with two sorts");
    }
  }
}

std::vector<std::vector<Atom>> all_tuples(int arity, const std::vector<Atom>& atoms) {
  std::vector<std::vector<Atom>> out{{}};
  for (int i = 0; i < arity; ++i) {
    std::vector<std::vector<Atom>> next;
    for (const auto& t : out)
      for (const auto& a : atoms) {
        next.push_back(t);
        next.back().push_back(a);
      }
    out = std::move(next);
  }
  return out;
}

}  // namespace

std::vector<OrbitType> all_orbit_types(int arity, const SupportSet& support, const Structure& s) {
  std::vector<int> available(s.sorts() + 1, 0);
  for (int sort = 1; sort <= s.sorts(); ++sort) available[sort] = available_fresh(s, support, sort);
  std::vector<OrbitType> out;
  OrbitType cur;
  std::vector<int> class_sorts;
  enumerate_types(arity, support, s, available, cur, class_sorts, out);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Atom> representative(const OrbitType& t, const SupportSet& avoid, const Structure& s) {
  std::vector<Atom> class_atoms;
  SupportSet used = avoid;
  std::vector<Atom> out;
  out.reserve(t.arity());
  for (const auto& l : t.labels) {
    if (l.is_named()) {
      out.push_back(l.atom());
      continue;
    }
    auto id = static_cast<std::size_t>(l.class_id());
    while (class_atoms.size() < id) {
      // Classes first appear in id order, so the next one is this label's.
      Atom a = fresh_atom(l.sort(), used, s);
      used.insert(a);
      class_atoms.push_back(a);
    }
    out.push_back(class_atoms[id - 1]);
  }
  return out;
}

OrbitPredicate::OrbitPredicate(int arity, SupportSet support, std::vector<OrbitType> satisfied, Structure s)
    : arity_(arity), support_(std::move(support)), structure_(s) {
  if (arity < 1) throw ArityError("predicates have arity >= 1");
  for (const auto& a : support_) s.check_atom(a);
  for (const auto& t : satisfied) check_type(t, arity, support_, s);
  std::sort(satisfied.begin(), satisfied.end());
  satisfied.erase(std::unique(satisfied.begin(), satisfied.end()), satisfied.end());
  satisfied_ = std::move(satisfied);

  if (s.is_finite()) {
    SupportSet dom(s.domain());
    if (support_ != dom) {
      std::vector<OrbitType> full;
      for (const auto& tuple : all_tuples(arity, s.domain())) {
        OrbitType t = orbit_type_of(tuple, support_);
        if (std::binary_search(satisfied_.begin(), satisfied_.end(), t))
          full.push_back(orbit_type_of(tuple, dom));
      }
      std::sort(full.begin(), full.end());
      support_ = dom;
      satisfied_ = std::move(full);
    }
  }
}

OrbitPredicate OrbitPredicate::from_sorted_types(int arity, SupportSet support, std::vector<OrbitType> types,
                                                 Structure s) {
  OrbitPredicate p(arity, std::move(support), s);
  p.satisfied_ = std::move(types);
  return p;
}

OrbitPredicate OrbitPredicate::from_membership(int arity, SupportSet support, Structure s,
                                               const std::function<bool(const std::vector<Atom>&)>& member,
                                               const SupportSet& avoid) {
  if (arity < 1) throw ArityError("predicates have arity >= 1");
  if (s.is_finite()) support = SupportSet(s.domain());
  for (const auto& a : support) s.check_atom(a);
  SupportSet blocked = set_union(support, avoid);
  std::vector<OrbitType> keep;
  for (auto& t : all_orbit_types(arity, support, s))
    if (member(representative(t, blocked, s))) keep.push_back(std::move(t));
  return from_sorted_types(arity, std::move(support), std::move(keep), s);
}

OrbitPredicate OrbitPredicate::empty(int arity, Structure s) {
  return from_membership(arity, {}, s, [](const auto&) { return false; });
}

OrbitPredicate OrbitPredicate::full(int arity, Structure s) {
  return from_membership(arity, {}, s, [](const auto&) { return true; });
}

OrbitPredicate OrbitPredicate::finite_set(const SupportSet& atoms, Structure s) {
  return from_membership(1, atoms, s, [&](const std::vector<Atom>& t) { return atoms.contains(t[0]); });
}

OrbitPredicate OrbitPredicate::cofinite_set(const SupportSet& atoms, Structure s) {
  return from_membership(1, atoms, s, [&](const std::vector<Atom>& t) { return !atoms.contains(t[0]); });
}

bool OrbitPredicate::contains(std::span<const Atom> tuple) const {
  OrbitType t = orbit_type_of(tuple, support_);
  return std::binary_search(satisfied_.begin(), satisfied_.end(), t);
}

bool member(const OrbitPredicate& pred, std::span<const Atom> tuple) {
  if (static_cast<int>(tuple.size()) != pred.arity())
    throw ArityError("tuple of length " + std::to_string(tuple.size()) + " for predicate of arity " +
                     std::to_string(pred.arity()));
  return pred.contains(tuple);
}

OrbitPredicate apply_perm(const OrbitPredicate& pred, const FinitePermutation& p) {
  if (p.is_identity()) return pred;
  const Structure& s = pred.structure();
  for (const auto& [from, to] : p.moved()) {
    if (pred.support().contains(from)) s.check_atom(to);
  }
  std::vector<OrbitType> types;
  types.reserve(pred.satisfied().size());
  for (const auto& t : pred.satisfied()) {
    OrbitType u = t;
    for (auto& l : u.labels)
      if (l.is_named()) l = Label::named(p(l.atom()));
    types.push_back(std::move(u));
  }
  std::sort(types.begin(), types.end());
  return OrbitPredicate::from_sorted_types(pred.arity(), p(pred.support()), std::move(types), s);
}

OrbitPredicate refine(const OrbitPredicate& pred, const SupportSet& larger) {
  if (pred.support() == larger || pred.structure().is_finite()) return pred;
  if (!pred.support().subset_of(larger)) throw Error("refine: target does not contain the support");
  return OrbitPredicate::from_membership(pred.arity(), larger, pred.structure(),
                                         [&](const std::vector<Atom>& t) { return pred.contains(t); });
}

namespace {

void check_compatible(const OrbitPredicate& a, const OrbitPredicate& b) {
  if (a.arity() != b.arity())
    throw ArityError("arity mismatch: " + std::to_string(a.arity()) + " vs " + std::to_string(b.arity()));
  if (!(a.structure() == b.structure())) throw Error("predicates belong to different structures");
}

}  // namespace

OrbitPredicate boolean_op(const OrbitPredicate& a, const OrbitPredicate& b, BoolOp op) {
  if (op == BoolOp::Not) {
    auto all = all_orbit_types(a.arity(), a.support(), a.structure());
    std::vector<OrbitType> out;
    std::set_difference(all.begin(), all.end(), a.satisfied().begin(), a.satisfied().end(),
                        std::back_inserter(out));
    return OrbitPredicate::from_sorted_types(a.arity(), a.support(), std::move(out), a.structure());
  }
  check_compatible(a, b);
  SupportSet u = set_union(a.support(), b.support());
  OrbitPredicate ra = refine(a, u);
  OrbitPredicate rb = refine(b, u);
  const auto& x = ra.satisfied();
  const auto& y = rb.satisfied();
  std::vector<OrbitType> out;
  switch (op) {
    case BoolOp::And:
      std::set_intersection(x.begin(), x.end(), y.begin(), y.end(), std::back_inserter(out));
      break;
    case BoolOp::Or:
      std::set_union(x.begin(), x.end(), y.begin(), y.end(), std::back_inserter(out));
      break;
    case BoolOp::Diff:
      std::set_difference(x.begin(), x.end(), y.begin(), y.end(), std::back_inserter(out));
      break;
    case BoolOp::Not:
      break;
  }
  return OrbitPredicate::from_sorted_types(a.arity(), u, std::move(out), a.structure());
}

OrbitPredicate conjunction(const OrbitPredicate& a, const OrbitPredicate& b) {
  return boolean_op(a, b, BoolOp::And);
}
OrbitPredicate disjunction(const OrbitPredicate& a, const OrbitPredicate& b) {
  return boolean_op(a, b, BoolOp::Or);
}
OrbitPredicate complement(const OrbitPredicate& a) { return boolean_op(a, a, BoolOp::Not); }
OrbitPredicate difference(const OrbitPredicate& a, const OrbitPredicate& b) {
  return boolean_op(a, b, BoolOp::Diff);
}

SupportSet least_support(const OrbitPredicate& pred) {
  if (pred.structure().is_finite()) return pred.support();
  const SupportSet& p = pred.support();
  SupportSet keep = p;
  for (const auto& a : p) {
    Atom c = fresh_atom(a.sort, p);
    if (apply_perm(pred, transposition(a, c)) == pred) keep.erase(a);
  }
  return keep;
}

OrbitPredicate minimize(const OrbitPredicate& pred) {
  SupportSet least = least_support(pred);
  if (least == pred.support()) return pred;
  return OrbitPredicate::from_membership(pred.arity(), least, pred.structure(),
                                         [&](const std::vector<Atom>& t) { return pred.contains(t); },
                                         pred.support());
}

bool equal(const OrbitPredicate& a, const OrbitPredicate& b) {
  check_compatible(a, b);
  if (a.support() == b.support()) return a.satisfied() == b.satisfied();
  SupportSet u = set_union(a.support(), b.support());
  return refine(a, u).satisfied() == refine(b, u).satisfied();
}

std::ostream& operator<<(std::ostream& os, const OrbitPredicate& p) {
  os << "pred/" << p.arity() << " over " << p.support() << " {";
  for (std::size_t i = 0; i < p.satisfied().size(); ++i) {
    if (i) os << "; ";
    os << p.satisfied()[i];
  }
  return os << '}';
}

}  // namespace henkin
