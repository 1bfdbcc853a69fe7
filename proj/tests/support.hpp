#pragma once

#include <random>
#include <string>

#include "lsa/laurent.hpp"

namespace lsa::test {

inline HalfLaurent s(int doubled) { return HalfLaurent::monomial(1, doubled); }
inline HalfLaurent t(int k) { return HalfLaurent::t_pow(k); }

inline std::string dataset(const std::string& file) { return std::string(LSA_DATASET_DIR) + "/" + file; }

// Sparse random element with exponents in [-6, 6] (doubled) and small
// coefficients; zero now and then.
inline HalfLaurent random_poly(std::mt19937& rng, int max_terms = 4) {
  std::uniform_int_distribution<int> count(0, max_terms);
  std::uniform_int_distribution<int> exponent(-6, 6);
  std::uniform_int_distribution<int> coeff(-5, 5);
  HalfLaurent f;
  for (int i = count(rng); i > 0; --i) f += HalfLaurent::monomial(coeff(rng), exponent(rng));
  return f;
}

}  // namespace lsa::test
