#include "polyinc/planar.hpp"

#include <stdexcept>

namespace polyinc {

PlanarLine::PlanarLine(Rat a, Rat b, Rat c) : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)) {
  Rat lead = a_ != 0 ? a_ : b_;
  if (lead == 0) throw std::invalid_argument("PlanarLine: zero normal");
  a_ /= lead;
  b_ /= lead;
  c_ /= lead;
}

std::string PlanarLine::to_string() const {
  return polyinc::to_string(a_) + "*x + " + polyinc::to_string(b_) + "*y = " + polyinc::to_string(c_);
}

}  // namespace polyinc
