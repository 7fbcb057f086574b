#include "amalgam/rational.hpp"

#include <stdexcept>

namespace amalgam {

std::string to_fraction_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Rational fraction_from_string(const std::string& text) {
  Rational q;
  if (q.set_str(text, 10) != 0)
    throw std::invalid_argument("not a rational: '" + text + "'");
  q.canonicalize();
  return q;
}

}  // namespace amalgam
