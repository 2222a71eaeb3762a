#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "henkin/atoms.hpp"
#include "henkin/formula.hpp"

// Textbook evaluator over an explicit finite universe: every quantifier loops
// over all atoms, every predicate quantifier over all subsets of universe^m.
// Shares only the formula AST with the library.
namespace henkin::oracle {

using Relation = std::function<bool(const std::vector<Atom>&)>;

struct Env {
  std::map<std::string, Atom> individuals;
  std::map<std::string, Relation> predicates;
};

/// Throws std::runtime_error on unbound variables or when a predicate
/// quantifier would range over more than 2^20 subsets.
bool evaluate(const Formula& phi, const std::vector<Atom>& universe, const Env& env);

/// Universe (1,1)..(1,k) of the finite standard structure.
std::vector<Atom> finite_universe(int k);

}  // namespace henkin::oracle
