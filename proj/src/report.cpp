#include "rackwork/report.hpp"

namespace rackwork {

const AxiomTally* AxiomReport::find(std::string_view axiom) const noexcept {
  for (const auto& t : axioms)
    if (t.axiom == axiom) return &t;
  return nullptr;
}

bool AxiomReport::passed_axiom(std::string_view axiom) const noexcept {
  const auto* t = find(axiom);
  return t != nullptr && t->passed();
}

std::vector<Witness> AxiomReport::witnesses(std::string_view axiom) const {
  std::vector<Witness> out;
  for (const auto& w : failures)
    if (w.axiom == axiom) out.push_back(w);
  return out;
}

void AxiomReport::merge(const AxiomReport& other) {
  passed = passed && other.passed;
  axioms.insert(axioms.end(), other.axioms.begin(), other.axioms.end());
  failures.insert(failures.end(), other.failures.begin(), other.failures.end());
}

}  // namespace rackwork
