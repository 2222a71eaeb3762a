#pragma once

#include <string>
#include <vector>

#include "henkin/choice.hpp"
#include "henkin/eval.hpp"
#include "henkin/formula.hpp"
#include "henkin/indep.hpp"
#include "naive_eval.hpp"
#include "sampling.hpp"

namespace henkin::testing {

std::string read_text(const std::string& path);
/// Formulas of corpus/<name>.
std::vector<Formula> corpus(const std::string& name);

/// Fixed values for the free parameters A and z of the H-suite.
Assignment h_suite_params(const Structure& s);

/// True when f holds no second-order quantifier.
bool first_order(const Formula& f);

/// Brute-force evaluation over atoms of index < n in every sort.
bool brute_force_window(const Formula& phi, const Assignment& f, const Structure& s, int n);

/// Largest index among atoms bound in f (supports included), or -1.
int max_index(const Assignment& f);

}  // namespace henkin::testing
