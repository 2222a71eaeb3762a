#include "support.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace henkin::testing {

std::string read_text(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<Formula> corpus(const std::string& name) {
  return parse_corpus(read_text(std::string(HENKIN_CORPUS_DIR) + "/" + name));
}

Assignment h_suite_params(const Structure& s) {
  Assignment f;
  if (s.is_finite()) {
    f.bind("A", OrbitPredicate::finite_set({{1, 1}}, s));
    f.bind("z", Atom{1, 2});
  } else if (s.sorts() == 1) {
    f.bind("A", OrbitPredicate::finite_set({{1, 3}, {1, 4}}, s));
    f.bind("z", Atom{1, 5});
  } else {
    f.bind("A", OrbitPredicate::cofinite_set({{1, 3}, {2, 0}}, s));
    f.bind("z", Atom{2, 1});
  }
  return f;
}

bool first_order(const Formula& f) {
  if (f.is_pred_quantifier()) return false;
  switch (f.op()) {
    case Op::IndEq:
    case Op::PredApp:
      return true;
    case Op::Not:
    case Op::ForallInd:
    case Op::ExistsInd:
      return first_order(f.body());
    default:
      return first_order(f.lhs()) && first_order(f.rhs());
  }
}

bool brute_force_window(const Formula& phi, const Assignment& f, const Structure& s, int n) {
  std::vector<Atom> universe;
  for (int sort = 1; sort <= s.sorts(); ++sort)
    for (int i = 0; i < n; ++i) universe.push_back({sort, i});
  return oracle::evaluate(phi, universe, oracle::to_env(f, universe));
}

int max_index(const Assignment& f) {
  int m = -1;
  for (const auto& [x, a] : f.individuals()) m = std::max(m, a.index);
  for (const auto& [name, p] : f.predicates())
    for (const auto& a : p.support()) m = std::max(m, a.index);
  return m;
}

}  // namespace henkin::testing
