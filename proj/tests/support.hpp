#pragma once

#include <gtest/gtest.h>

#include "lagrangia/catalog.hpp"
#include "lagrangia/error.hpp"
#include "lagrangia/groupring.hpp"
#include "oracles.hpp"

// Asserts that `stmt` throws lagrangia::error with the given code.
#define EXPECT_ERRC(stmt, expected)                                               \
  do {                                                                            \
    try {                                                                         \
      (void)(stmt);                                                               \
      ADD_FAILURE() << #stmt " did not throw";                                    \
    } catch (const lagrangia::error& e) {                                         \
      EXPECT_EQ(e.code(), expected) << e.what();                                  \
    }                                                                             \
  } while (0)

namespace testing_support {

using lagrangia::GroupRingElement;
using lagrangia::Integer;
using lagrangia::LaurentPoly;

// c * t^k
inline LaurentPoly t(std::int64_t k, const Integer& c = 1) { return LaurentPoly::monomial(c, k); }
inline LaurentPoly c(const Integer& v) { return LaurentPoly::constant(v); }

// c * t_name^k on `basis`
inline GroupRingElement tg(const GroupRingElement::Basis& basis, const std::string& name,
                           std::int64_t k, const Integer& c = 1) {
  return c * GroupRingElement::generator(basis, name, k);
}

// Converts an oracle polynomial a_0 + a_1 t + ... shifted by t^lowest.
inline LaurentPoly from_oracle(const oracle::Poly& p, std::int64_t lowest) {
  return LaurentPoly::from_ascending(p, lowest);
}

}  // namespace testing_support
