// Check outcomes shared by the verification passes, the family suite and
// the CLI report schema.
#pragma once

#include <string>
#include <vector>

namespace palg {

enum class Outcome { Pass, Fail, Inconclusive };

std::string outcome_str(Outcome o);

struct CheckItem {
  std::string name;
  Outcome outcome = Outcome::Pass;
  std::string detail;  // witness or payload summary, empty when unremarkable
};

struct CheckReport {
  std::vector<CheckItem> items;

  void add(std::string name, Outcome o, std::string detail = "");
  Outcome overall() const;
  bool passed() const { return overall() == Outcome::Pass; }
  std::string str() const;
};

}  // namespace palg
