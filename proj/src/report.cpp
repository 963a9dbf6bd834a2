#include "sojourn/report.hpp"

namespace sojourn {

std::string CheckReport::summary() const {
  if (ok()) return name + ": ok (" + std::to_string(checked) + " coefficients)";
  const Mismatch& m = mismatches.front();
  return name + ": " + std::to_string(mismatches.size()) + " mismatch(es); first at n=" +
         std::to_string(m.n) + " k=" + std::to_string(m.k) + " [" + m.which + "] expected " +
         m.expected + " got " + m.actual;
}

}  // namespace sojourn
