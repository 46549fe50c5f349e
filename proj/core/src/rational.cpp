#include "oneshot/rational.hpp"

#include "oneshot/errors.hpp"

namespace oneshot {

Rational make_rational(long num, long den) {
  if (den == 0) throw InputError("rational with zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Rational parse_rational(const std::string& text) {
  if (text.empty()) throw InputError("empty rational literal");
  for (char c : text) {
    if (!(std::isdigit(static_cast<unsigned char>(c)) || c == '/' || c == '-' || c == '+'))
      throw InputError("bad rational literal: " + text);
  }
  try {
    Rational q(text, 10);
    if (q.get_den() == 0) throw InputError("rational with zero denominator: " + text);
    q.canonicalize();
    return q;
  } catch (const std::invalid_argument&) {
    throw InputError("bad rational literal: " + text);
  }
}

std::string to_fraction_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

double to_double(const Rational& q) { return q.get_d(); }

}  // namespace oneshot
