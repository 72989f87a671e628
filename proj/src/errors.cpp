#include "towers/errors.hpp"

namespace towers {

std::string AxiomViolation::describe(PosetAxiom axiom, const std::string& a,
                                     const std::string& b) {
  switch (axiom) {
    case PosetAxiom::Reflexivity:
      return "reflexivity violated: (" + a + ", " + a + ") missing";
    case PosetAxiom::Antisymmetry:
      return "antisymmetry violated: both (" + a + ", " + b + ") and (" + b + ", " + a +
             ") present";
    case PosetAxiom::Transitivity:
      return "transitivity violated: (" + a + ", " + b + ") missing";
  }
  return "axiom violated";
}

std::string CycleDetected::describe(const std::vector<std::string>& cycle) {
  std::string out = "cover relation contains a cycle:";
  for (const auto& label : cycle) {
    out += " " + label;
  }
  return out;
}

}  // namespace towers
