#include "henkin/json_io.hpp"

namespace henkin {

Json to_json(const Atom& a) { return Json::array({a.sort, a.index}); }

Json to_json(const SupportSet& s) {
  Json out = Json::array();
  for (const auto& a : s) out.push_back(to_json(a));
  return out;
}

Json to_json(const Label& l) {
  if (l.is_named()) return Json::array({"named", l.first, l.second});
  return Json::array({"fresh", l.first, l.second});
}

Json to_json(const FinitePermutation& p) {
  Json out = Json::array();
  for (const auto& [from, to] : p.moved()) out.push_back(Json::array({to_json(from), to_json(to)}));
  return out;
}

Json to_json(const OrbitPredicate& p) {
  Json orbits = Json::array();
  for (const auto& t : p.satisfied()) {
    Json labels = Json::array();
    for (const auto& l : t.labels) labels.push_back(to_json(l));
    orbits.push_back(std::move(labels));
  }
  Json out;
  out["arity"] = p.arity();
  out["support"] = to_json(p.support());
  out["orbits"] = std::move(orbits);
  return out;
}

Json to_json(const EvalResult& r) {
  Json out;
  out["value"] = r.value;
  out["budgetLimited"] = r.budget_limited;
  return out;
}

Json to_json(const Refutation& r) {
  Json out;
  out["kind"] = to_string(r.kind);
  Json atoms = Json::array();
  for (const auto& a : r.witness_atoms) atoms.push_back(to_json(a));
  out["witnessAtoms"] = std::move(atoms);
  out["witnessPerm"] = r.witness_perm ? to_json(*r.witness_perm) : Json(nullptr);
  return out;
}

Json to_json(const ChoiceWitness& w) {
  Json blocks = Json::array();
  for (const auto& c : w.choices) {
    Json b;
    b["e"] = Json::array({c.block.sort, c.block.index});
    b["rep"] = to_json(c.block.rep);
    b["delta"] = to_json(c.delta);
    blocks.push_back(std::move(b));
  }
  Json out;
  out["P"] = to_json(w.plan.P);
  out["mu"] = to_json(w.plan.mu);
  out["blocks"] = std::move(blocks);
  out["sigma"] = to_json(w.sigma);
  out["G"] = print(w.certificate);
  return out;
}

namespace {

Json candidate_json(const RefutationReport& r, const CandidateId& id) {
  Json out;
  out["pattern"] = r.patterns.at(id.pattern);
  out["predicate"] = to_json(r.candidate(id));
  return out;
}

}  // namespace

Json to_json(const RefutationReport& r) {
  const bool tr = r.claim == "not_TR1";
  Json out;
  out["claim"] = r.claim;
  out["k"] = r.structure.sorts();
  out["supportBound"] = r.support_bound;
  out["candidates"] = r.candidates;
  out["accepted"] = r.accepted;
  Json refs = Json::array();
  if (!r.all.empty() || r.groups.empty()) {
    for (const auto& fr : r.all) {
      Json e;
      e["candidate"] = candidate_json(r, fr.candidate);
      if (tr) e["direction"] = Json::array({fr.from_sort, fr.to_sort});
      e["refutation"] = to_json(fr.refutation);
      refs.push_back(std::move(e));
    }
  } else {
    for (const auto& g : r.groups) {
      Json e;
      e["pattern"] = r.patterns.at(g.pattern);
      if (tr) e["direction"] = Json::array({g.from_sort, g.to_sort});
      e["kind"] = to_string(g.kind);
      e["count"] = g.count;
      Json ex;
      ex["candidate"] = to_json(r.candidate(g.example_candidate));
      ex["refutation"] = to_json(g.example);
      e["example"] = std::move(ex);
      refs.push_back(std::move(e));
    }
  }
  out["refutations"] = std::move(refs);
  out["grouped"] = r.all.empty() && !r.groups.empty();
  out["refutationCount"] = r.refutation_count;
  out["replayed"] = r.replayed;
  Json acc = Json::array();
  for (const auto& id : r.accepted_candidates) acc.push_back(candidate_json(r, id));
  out["acceptedCandidates"] = std::move(acc);
  return out;
}

Atom atom_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number_integer() || !j[1].is_number_integer())
    throw Error("atom must be [sort, index], got " + j.dump());
  Atom a{j[0].get<int>(), j[1].get<int>()};
  if (a.sort < 1 || a.index < 0) throw Error("bad atom " + j.dump());
  return a;
}

SupportSet support_from_json(const Json& j) {
  if (!j.is_array()) throw Error("support must be an array of atoms");
  std::vector<Atom> atoms;
  for (const auto& e : j) atoms.push_back(atom_from_json(e));
  return SupportSet(std::move(atoms));
}

OrbitPredicate predicate_from_json(const Json& j, const Structure& s) {
  if (!j.is_object() || !j.contains("arity") || !j.contains("support") || !j.contains("orbits"))
    throw Error("predicate needs arity, support and orbits");
  int arity = j.at("arity").get<int>();
  SupportSet support = support_from_json(j.at("support"));
  std::vector<OrbitType> types;
  for (const auto& orbit : j.at("orbits")) {
    OrbitType t;
    for (const auto& l : orbit) {
      if (!l.is_array() || l.size() != 3 || !l[0].is_string()) throw Error("bad orbit label " + l.dump());
      const std::string kind = l[0].get<std::string>();
      if (kind == "named")
        t.labels.push_back(Label::named({l[1].get<int>(), l[2].get<int>()}));
      else if (kind == "fresh")
        t.labels.push_back(Label::fresh(l[1].get<int>(), l[2].get<int>()));
      else
        throw Error("bad orbit label " + l.dump());
    }
    types.push_back(std::move(t));
  }
  return OrbitPredicate(arity, std::move(support), std::move(types), s);
}

Assignment assignment_from_json(const Json& j, const Structure& s) {
  Assignment f;
  if (j.contains("individuals"))
    for (const auto& [x, a] : j.at("individuals").items()) {
      Atom atom = atom_from_json(a);
      s.check_atom(atom);
      f.bind(x, atom);
    }
  if (j.contains("predicates"))
    for (const auto& [name, p] : j.at("predicates").items()) f.bind(name, predicate_from_json(p, s));
  return f;
}

}  // namespace henkin
