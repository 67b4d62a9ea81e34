#include "patgen/fraction.hpp"

namespace patgen {

std::string to_decimal(const Fraction& value, unsigned digits) {
  using boost::multiprecision::cpp_int;
  const bool negative = value < 0;
  const Fraction magnitude = negative ? Fraction(-value) : value;
  cpp_int scale = 1;
  for (unsigned i = 0; i < digits; ++i) scale *= 10;
  const cpp_int num = boost::multiprecision::numerator(magnitude) * scale;
  const cpp_int den = boost::multiprecision::denominator(magnitude);
  cpp_int q = num / den;
  const cpp_int twice_rest = 2 * (num % den);
  if (twice_rest > den || (twice_rest == den && q % 2 == 1)) ++q;

  std::string text = q.str();
  if (text.size() <= digits) text.insert(0, digits + 1 - text.size(), '0');
  if (digits > 0) text.insert(text.size() - digits, 1, '.');
  if (negative && q != 0) text.insert(0, 1, '-');
  return text;
}

std::string to_exact(const Fraction& value) { return value.str(); }

}  // namespace patgen
