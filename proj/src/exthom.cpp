#include "lsa/exthom.hpp"

namespace lsa {

namespace {

// Coefficients of u^0..u^max_k of a polynomial with nonnegative even keys.
std::vector<BigInt> truncated(const HalfLaurent& f, int max_k) {
  std::vector<BigInt> out(static_cast<std::size_t>(max_k + 1), BigInt(0));
  for (const auto& [e, v] : f.terms()) {
    if (e % 2 != 0 || e < 0) throw Error(ErrorKind::InconsistentInput, "series needs nonnegative integer powers");
    if (e / 2 <= max_k) out[static_cast<std::size_t>(e / 2)] = v;
  }
  return out;
}

BigInt binomial(int n, int k) {
  BigInt b = 1;
  for (int i = 1; i <= k; ++i) b = b * (n - k + i) / i;
  return b;
}

}  // namespace

std::vector<BigInt> power_series(const RationalHL& r, int max_k) {
  const RationalHL reduced = rational_reduce(r);
  const std::vector<BigInt> num = truncated(reduced.numerator(), max_k);
  const std::vector<BigInt> den = truncated(reduced.denominator(), max_k);
  const BigInt& lead = den[0];  // nonzero: reduced denominators have valuation zero
  std::vector<BigInt> out(static_cast<std::size_t>(max_k + 1));
  for (std::size_t k = 0; k < out.size(); ++k) {
    BigInt acc = num[k];
    for (std::size_t j = 1; j <= k; ++j) acc -= den[j] * out[k - j];
    BigInt q, rem;
    boost::multiprecision::divide_qr(acc, lead, q, rem);
    if (rem != 0) throw Error(ErrorKind::NonExactDivision, "series coefficient of u^" + std::to_string(k) + " is not an integer");
    out[k] = std::move(q);
  }
  return out;
}

GradedDims graded_hom_dims(const CharTable& table, std::string_view chi, std::string_view psi, int max_k) {
  const RationalHL series = molien_sum(table, table.char_index(chi), table.char_index(psi));
  GradedDims out{power_series(series, max_k), max_k};
  for (const auto& d : out.dims)
    if (d < 0) throw Error(ErrorKind::InconsistentInput, "negative graded dimension");
  return out;
}

GradedDims lusztig_sheaf_endo_dims(const CharTable& table, int rank, int max_k) {
  if (rank < 1) throw Error(ErrorKind::InconsistentInput, "torus rank must be positive");
  GradedDims out{{}, max_k};
  for (int k = 0; k <= max_k; ++k) out.dims.push_back(table.group_order * binomial(k + rank - 1, rank - 1));
  return out;
}

bool series_consistency(const CharTable& table, std::string_view chi, std::string_view psi, int max_k) {
  const GradedDims dims = graded_hom_dims(table, chi, psi, max_k);
  const std::vector<BigInt> product = truncated(invariant_degree_product(table), max_k);
  const std::vector<BigInt> pairing = truncated(coinvariant_pairing(table, chi, psi), max_k);
  for (int k = 0; k <= max_k; ++k) {
    BigInt c = 0;
    for (int j = 0; j <= k; ++j) c += product[static_cast<std::size_t>(j)] * dims.dims[static_cast<std::size_t>(k - j)];
    if (c != pairing[static_cast<std::size_t>(k)]) return false;
  }
  return true;
}

}  // namespace lsa
