#pragma once

#include <nlohmann/json.hpp>

#include "henkin/choice.hpp"
#include "henkin/eval.hpp"
#include "henkin/indep.hpp"

namespace henkin {

using Json = nlohmann::ordered_json;

Json to_json(const Atom& a);
Json to_json(const SupportSet& s);
Json to_json(const Label& l);
Json to_json(const FinitePermutation& p);
/// {"arity": n, "support": [...], "orbits": [[label, ...], ...]}
Json to_json(const OrbitPredicate& p);
Json to_json(const EvalResult& r);
Json to_json(const Refutation& r);
/// {"P", "mu", "blocks": [{"e", "rep", "delta"}], "sigma", "G"}
Json to_json(const ChoiceWitness& w);
/// {"claim", "k", "supportBound", "candidates", "accepted", "refutations", ...}
/// Refutations are grouped by (pattern, direction, kind) unless the report
/// carries the full list.
Json to_json(const RefutationReport& r);

Atom atom_from_json(const Json& j);
SupportSet support_from_json(const Json& j);
OrbitPredicate predicate_from_json(const Json& j, const Structure& s);
/// {"individuals": {"x": [s, i]}, "predicates": {"A": <predicate>}}
Assignment assignment_from_json(const Json& j, const Structure& s);

}  // namespace henkin
