#include "palg/report.hpp"

#include <sstream>

namespace palg {

std::string outcome_str(Outcome o) {
  switch (o) {
    case Outcome::Pass: return "pass";
    case Outcome::Fail: return "fail";
    case Outcome::Inconclusive: return "inconclusive";
  }
  return "?";
}

void CheckReport::add(std::string name, Outcome o, std::string detail) {
  items.push_back(CheckItem{std::move(name), o, std::move(detail)});
}

Outcome CheckReport::overall() const {
  Outcome r = Outcome::Pass;
  for (const auto& i : items) {
    if (i.outcome == Outcome::Fail) return Outcome::Fail;
    if (i.outcome == Outcome::Inconclusive) r = Outcome::Inconclusive;
  }
  return r;
}

std::string CheckReport::str() const {
  std::ostringstream os;
  for (const auto& i : items) {
    os << i.name << ": " << outcome_str(i.outcome);
    if (!i.detail.empty()) os << " (" << i.detail << ")";
    os << "\n";
  }
  return os.str();
}

}  // namespace palg
