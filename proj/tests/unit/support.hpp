#pragma once

#include <functional>
#include <ostream>
#include <random>

#include <doctest.h>

#include "core/errors.hpp"
#include "core/poly.hpp"

namespace hilbworst {

inline std::ostream& operator<<(std::ostream& os, const Poly& p) { return os << p.to_string(); }

}  // namespace hilbworst

namespace testing {

inline hilbworst::ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const hilbworst::Error& e) {
    return e.code();
  }
  FAIL("expected a hilbworst::Error");
  return hilbworst::ErrorCode::InvalidArgument;
}

// Random sparse polynomial in x and t with small integer coefficients.
inline hilbworst::Poly random_poly(std::mt19937_64& rng, int n, int terms, int max_deg) {
  using hilbworst::Poly;
  Poly p(n);
  for (int s = 0; s < terms; ++s) {
    hilbworst::Rational c(static_cast<long>(rng() % 7) - 3, 1 + static_cast<long>(rng() % 3));
    c.canonicalize();
    Poly m = Poly::constant(n, c);
    int deg = static_cast<int>(rng() % (max_deg + 1));
    for (int d = 0; d < deg; ++d) {
      if (rng() % 3 == 0) {
        m *= Poly::x(n, 1 + static_cast<int>(rng() % n));
      } else {
        int i = 1 + static_cast<int>(rng() % n), j = 1 + static_cast<int>(rng() % n), k = 1 + static_cast<int>(rng() % n);
        m *= Poly::t(n, i, j, k);
      }
    }
    p += m;
  }
  return p;
}

}  // namespace testing
