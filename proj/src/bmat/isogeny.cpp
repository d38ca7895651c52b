#include "mflab/isogeny.hpp"

namespace mflab {

std::string to_string(IsogenyFormula f) {
  return f == IsogenyFormula::kDerived ? "derived" : "printed";
}

}  // namespace mflab
