#include "pd/rat.hpp"

#include <stdexcept>

namespace pd {

Rat make_rat(long p, long q) {
  if (q == 0) throw std::invalid_argument("make_rat: zero denominator");
  Rat r(p, q);
  r.canonicalize();
  return r;
}

std::string to_string(const Rat& x) {
  return x.get_num().get_str() + "/" + x.get_den().get_str();
}

Rat parse_rat(const std::string& s) {
  Rat r;
  if (r.set_str(s, 10) != 0) throw std::invalid_argument("parse_rat: bad rational '" + s + "'");
  if (r.get_den() == 0) throw std::invalid_argument("parse_rat: zero denominator");
  r.canonicalize();
  return r;
}

Rat binom_at(const Rat& t, unsigned k) {
  Rat acc(1);
  for (unsigned m = 0; m < k; ++m) {
    acc *= (t - m);
    acc /= (m + 1);
  }
  return acc;
}

Rat factorial(unsigned n) {
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), n);
  return Rat(f);
}

}  // namespace pd
