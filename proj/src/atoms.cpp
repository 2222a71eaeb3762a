#include "henkin/atoms.hpp"

#include <algorithm>
#include <sstream>

namespace henkin {

std::ostream& operator<<(std::ostream& os, const Atom& a) {
  return os << '(' << a.sort << ',' << a.index << ')';
}

std::string to_string(const Atom& a) {
  std::ostringstream os;
  os << a;
  return os.str();
}

SupportSet::SupportSet(std::initializer_list<Atom> atoms) : SupportSet(std::vector<Atom>(atoms)) {}

SupportSet::SupportSet(std::vector<Atom> atoms) : atoms_(std::move(atoms)) {
  std::sort(atoms_.begin(), atoms_.end());
  atoms_.erase(std::unique(atoms_.begin(), atoms_.end()), atoms_.end());
}

bool SupportSet::contains(const Atom& a) const {
  return std::binary_search(atoms_.begin(), atoms_.end(), a);
}

void SupportSet::insert(const Atom& a) {
  auto it = std::lower_bound(atoms_.begin(), atoms_.end(), a);
  if (it == atoms_.end() || *it != a) atoms_.insert(it, a);
}

void SupportSet::insert(const SupportSet& other) {
  std::vector<Atom> merged;
  merged.reserve(atoms_.size() + other.atoms_.size());
  std::set_union(atoms_.begin(), atoms_.end(), other.atoms_.begin(), other.atoms_.end(),
                 std::back_inserter(merged));
  atoms_ = std::move(merged);
}

void SupportSet::erase(const Atom& a) {
  auto it = std::lower_bound(atoms_.begin(), atoms_.end(), a);
  if (it != atoms_.end() && *it == a) atoms_.erase(it);
}

std::vector<Atom> SupportSet::of_sort(int sort) const {
  std::vector<Atom> out;
  for (const auto& a : atoms_)
    if (a.sort == sort) out.push_back(a);
  return out;
}

bool SupportSet::subset_of(const SupportSet& other) const {
  return std::includes(other.atoms_.begin(), other.atoms_.end(), atoms_.begin(), atoms_.end());
}

SupportSet set_union(const SupportSet& a, const SupportSet& b) {
  SupportSet out = a;
  out.insert(b);
  return out;
}

std::ostream& operator<<(std::ostream& os, const SupportSet& s) {
  os << '{';
  bool first = true;
  for (const auto& a : s) {
    if (!first) os << ',';
    os << a;
    first = false;
  }
  return os << '}';
}

FinitePermutation::FinitePermutation(const std::map<Atom, Atom>& mapping) {
  std::vector<Atom> images;
  for (const auto& [from, to] : mapping) {
    if (from.sort != to.sort)
      throw SortError("sort-violating permutation: " + to_string(from) + " -> " + to_string(to));
    if (from != to) {
      moved_.emplace(from, to);
      images.push_back(to);
    }
  }
  // A bijection of the moved set maps it onto itself.
  std::sort(images.begin(), images.end());
  if (std::adjacent_find(images.begin(), images.end()) != images.end())
    throw SortError("permutation is not injective");
  for (const auto& img : images)
    if (!moved_.count(img)) throw SortError("permutation does not map its moved set onto itself");
}

Atom FinitePermutation::operator()(const Atom& a) const {
  auto it = moved_.find(a);
  return it == moved_.end() ? a : it->second;
}

std::vector<Atom> FinitePermutation::operator()(const std::vector<Atom>& tuple) const {
  std::vector<Atom> out;
  out.reserve(tuple.size());
  for (const auto& a : tuple) out.push_back((*this)(a));
  return out;
}

SupportSet FinitePermutation::operator()(const SupportSet& s) const {
  std::vector<Atom> out;
  out.reserve(s.size());
  for (const auto& a : s) out.push_back((*this)(a));
  return SupportSet(std::move(out));
}

SupportSet FinitePermutation::moved_atoms() const {
  std::vector<Atom> out;
  for (const auto& [from, to] : moved_) out.push_back(from);
  return SupportSet(std::move(out));
}

FinitePermutation FinitePermutation::inverse() const {
  FinitePermutation inv;
  for (const auto& [from, to] : moved_) inv.moved_.emplace(to, from);
  return inv;
}

FinitePermutation compose(const FinitePermutation& outer, const FinitePermutation& inner) {
  std::map<Atom, Atom> m;
  for (const auto& [from, to] : inner.moved()) m[from] = outer(to);
  for (const auto& [from, to] : outer.moved())
    if (!inner.moved().count(from)) m[from] = to;
  return FinitePermutation(m);
}

FinitePermutation transposition(const Atom& a, const Atom& b) {
  if (a.sort != b.sort)
    throw SortError("sort-violating permutation: cannot swap " + to_string(a) + " and " + to_string(b));
  if (a == b) return {};
  return FinitePermutation({{a, b}, {b, a}});
}

bool fixes_pointwise(const FinitePermutation& p, const SupportSet& s) {
  return std::all_of(s.begin(), s.end(), [&](const Atom& a) { return p(a) == a; });
}

std::ostream& operator<<(std::ostream& os, const FinitePermutation& p) {
  if (p.is_identity()) return os << "id";
  os << '[';
  bool first = true;
  for (const auto& [from, to] : p.moved()) {
    if (!first) os << ' ';
    os << from << "->" << to;
    first = false;
  }
  return os << ']';
}

Structure Structure::ksigma0(int k) {
  if (k < 1) throw Error("ksigma0 requires k >= 1");
  return Structure(Kind::KSigma0, k);
}

Structure Structure::finite(int k) {
  if (k < 1) throw Error("finite structure requires k >= 1");
  return Structure(Kind::FiniteStd, k);
}

Structure Structure::parse(const std::string& spec) {
  if (spec == "sigma0") return sigma0();
  auto colon = spec.find(':');
  if (colon != std::string::npos) {
    std::string head = spec.substr(0, colon);
    std::string tail = spec.substr(colon + 1);
    int k = 0;
    try {
      std::size_t used = 0;
      k = std::stoi(tail, &used);
      if (used != tail.size()) throw std::invalid_argument(tail);
    } catch (const std::exception&) {
      throw Error("bad structure size in '" + spec + "'");
    }
    if (head == "ksigma0") return ksigma0(k);
    if (head == "finite") return finite(k);
  }
  throw Error("unknown structure '" + spec + "' (expected sigma0, ksigma0:<k> or finite:<k>)");
}

bool Structure::valid_atom(const Atom& a) const {
  switch (kind_) {
    case Kind::Sigma0:
      return a.sort == 1 && a.index >= 0;
    case Kind::KSigma0:
      return a.sort >= 1 && a.sort <= k_ && a.index >= 0;
    case Kind::FiniteStd:
      return a.sort == 1 && a.index >= 1 && a.index <= k_;
  }
  return false;
}

void Structure::check_atom(const Atom& a) const {
  if (!valid_atom(a)) throw SortError("atom " + to_string(a) + " is not an individual of " + name());
}

std::vector<Atom> Structure::domain() const {
  std::vector<Atom> out;
  if (kind_ == Kind::FiniteStd)
    for (int i = 1; i <= k_; ++i) out.push_back({1, i});
  return out;
}

std::string Structure::name() const {
  switch (kind_) {
    case Kind::Sigma0:
      return "sigma0";
    case Kind::KSigma0:
      return "ksigma0:" + std::to_string(k_);
    case Kind::FiniteStd:
      return "finite:" + std::to_string(k_);
  }
  return "?";
}

Atom fresh_atom(int sort, const SupportSet& avoid) {
  if (sort < 1) throw SortError("sort must be positive");
  Atom a{sort, 0};
  while (avoid.contains(a)) ++a.index;
  return a;
}

Atom fresh_atom(int sort, const SupportSet& avoid, const Structure& s) {
  if (sort < 1 || sort > s.sorts())
    throw SortError("sort " + std::to_string(sort) + " out of range for " + s.name());
  if (!s.is_finite()) return fresh_atom(sort, avoid);
  for (int i = 1; i <= s.k(); ++i)
    if (!avoid.contains({1, i})) return {1, i};
  throw DomainError("no fresh atom in " + s.name());
}

}  // namespace henkin
