#pragma once

#include <random>

#include "henkin/eval.hpp"
#include "naive_eval.hpp"

namespace henkin::oracle {

using Rng = std::mt19937_64;

/// Uniform atom of the structure; permutation models draw indices below
/// `max_index`.
Atom random_atom(const Structure& s, Rng& rng, int max_index = 8);

/// Random support of at most `max_support` atoms and a random subset of the
/// orbit types over it.
OrbitPredicate random_predicate(int arity, const Structure& s, Rng& rng, int max_support = 2, int max_index = 8);

/// Binds every free variable of phi (except `skip`) to a random value.
Assignment random_assignment(const Formula& phi, const Structure& s, Rng& rng, const std::set<std::string>& skip = {},
                             int max_index = 8);

/// A transposition of two same-sort atoms outside `fixed`, or the identity
/// when a finite structure has fewer than two such atoms.
FinitePermutation random_transposition_fixing(const SupportSet& fixed, const Structure& s, Rng& rng,
                                              int max_index = 8);

/// The oracle environment holding the same values as f, with predicates
/// copied into explicit tuple tables over `universe`.
Env to_env(const Assignment& f, const std::vector<Atom>& universe);

}  // namespace henkin::oracle
