#include "rccs/engine.hpp"

namespace rccs {

Construction<IntervalEvent> construct_size3(const IntervalEvent& a, const IntervalEvent& b,
                                            const Rational& lambda) {
  return construct_size3(IntervalAlgebra{}, a, b, lambda);
}

VerificationReport verify_rccs(const IntervalEvent& a, const IntervalEvent& b,
                               const Partition<IntervalEvent>& p) {
  return verify_rccs(IntervalAlgebra{}, a, b, p);
}

VerificationReport verify_common_cause(const IntervalEvent& a, const IntervalEvent& b,
                                       const IntervalEvent& c) {
  return verify_common_cause(IntervalAlgebra{}, a, b, c);
}

}  // namespace rccs
