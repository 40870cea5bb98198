#include "q1d/model.hpp"

#include <cmath>

#include "q1d/special.hpp"

namespace q1d {

double transverse_mode(double z, double epsilon) {
  if (!(epsilon > 0.0))
    throw std::invalid_argument("transverse_mode: epsilon must be > 0");
  return std::pow(epsilon / M_PI, 0.25) * std::exp(-0.5 * epsilon * z * z);
}

double effective_interaction(double x, double epsilon) {
  if (!(epsilon > 0.0))
    throw std::invalid_argument("effective_interaction: epsilon must be > 0");
  const double t = std::sqrt(0.5 * epsilon) * std::abs(x);
  return std::sqrt(0.5 * epsilon * M_PI) * erfcx(t);
}

}  // namespace q1d
