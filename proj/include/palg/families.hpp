// One-stop builders and cross-checkers binding the three presentation
// families and their derived computations into one named report.
#pragma once

#include "palg/findim.hpp"
#include "palg/ginzburg.hpp"

namespace palg {

struct FamilyReport {
  int k = 0;
  Field field = Field::Q();
  int bound = 0;
  CheckReport checks;
  // payload per check name; values are plain strings (numbers, tables)
  std::vector<std::pair<std::string, std::string>> payloads;

  void payload(const std::string& name, const std::string& value) {
    payloads.emplace_back(name, value);
  }
  std::string str() const;
};

/// Executes, in order: build W_k / A_k / G_k, d^2 checks, the dg-morphism
/// check of e |-> a, f |-> b, the change-of-variables match, H^0 of all
/// three families, dimension equality, the induced H^0 isomorphism, the
/// derived identity (x1-1)(x1^k-1) = 0, the semisimplified order of x1
/// (rationals only), and the cyclic-derivative mode comparison.
/// bound <= 0 selects the default 4k+8.
FamilyReport run_family_suite(int k, Field field, int bound = 0);

int default_family_bound(int k);

}  // namespace palg
