#include "lsa/weyl.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <utility>

namespace lsa {

namespace {

BigInt factorial(int n) {
  BigInt f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

// z_ρ = Π_i i^{m_i} m_i!
BigInt centralizer_order(const Partition& rho) {
  std::map<int, int> mult;
  for (int p : rho.parts()) ++mult[p];
  BigInt z = 1;
  for (const auto& [i, m] : mult) z *= boost::multiprecision::pow(BigInt(i), static_cast<unsigned>(m)) * factorial(m);
  return z;
}

// Beta numbers β_i = λ_i + (ℓ - 1 - i) of a partition with ℓ parts.
std::vector<int> beta_set(const std::vector<int>& parts) {
  const int len = static_cast<int>(parts.size());
  std::vector<int> beta(parts.size());
  for (int i = 0; i < len; ++i) beta[static_cast<std::size_t>(i)] = parts[static_cast<std::size_t>(i)] + (len - 1 - i);
  return beta;
}

std::vector<int> from_beta_set(std::vector<int> beta) {
  std::sort(beta.begin(), beta.end(), std::greater<>());
  const int len = static_cast<int>(beta.size());
  std::vector<int> parts;
  for (int i = 0; i < len; ++i) {
    const int p = beta[static_cast<std::size_t>(i)] - (len - 1 - i);
    if (p > 0) parts.push_back(p);
  }
  return parts;
}

class MurnaghanNakayama {
 public:
  explicit MurnaghanNakayama(const std::vector<int>& rho) : rho_(rho) {}

  // χ_λ on the cycle type rho_[k..].
  std::int64_t value(const std::vector<int>& lambda, std::size_t k) {
    if (k == rho_.size()) return lambda.empty() ? 1 : 0;
    auto key = std::make_pair(lambda, k);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;

    const int r = rho_[k];
    const std::vector<int> beta = beta_set(lambda);
    const std::set<int> members(beta.begin(), beta.end());
    std::int64_t total = 0;
    for (std::size_t i = 0; i < beta.size(); ++i) {
      const int b = beta[i];
      if (b - r < 0 || members.contains(b - r)) continue;
      // Leg length: beads strictly between the old and new positions.
      int between = 0;
      for (int x : beta)
        if (x > b - r && x < b) ++between;
      std::vector<int> moved = beta;
      moved[i] = b - r;
      const std::int64_t sub = value(from_beta_set(std::move(moved)), k + 1);
      total += (between % 2 == 0) ? sub : -sub;
    }
    memo_.emplace(std::move(key), total);
    return total;
  }

 private:
  std::vector<int> rho_;
  std::map<std::pair<std::vector<int>, std::size_t>, std::int64_t> memo_;
};

// Common denominator for the Molien sum: L = lcm of all class determinants,
// with cofactors L / det_c.
struct MolienBasis {
  HalfLaurent common;
  std::vector<HalfLaurent> cofactors;
};

MolienBasis molien_basis(const CharTable& table) {
  MolienBasis basis;
  basis.common = HalfLaurent(1);
  for (const auto& c : table.classes) {
    const HalfLaurent g = gcd(basis.common, c.molien_det);
    basis.common = exact_div(basis.common * c.molien_det, g);
  }
  basis.cofactors.reserve(table.classes.size());
  for (const auto& c : table.classes) basis.cofactors.push_back(exact_div(basis.common, c.molien_det));
  return basis;
}

RationalHL molien_sum_with(const CharTable& table, const MolienBasis& basis, std::size_t chi, std::size_t psi) {
  const auto& x = table.irreducibles[chi].values;
  const auto& y = table.irreducibles[psi].values;
  HalfLaurent num;
  for (std::size_t c = 0; c < table.classes.size(); ++c) {
    const BigInt w = table.classes[c].size * x[c] * y[c];
    if (w != 0) num += HalfLaurent(w) * basis.cofactors[c];
  }
  return rational_reduce(RationalHL(num, HalfLaurent(table.group_order) * basis.common));
}

HalfLaurent degree_product_with(const CharTable& table, const MolienBasis& basis) {
  HalfLaurent num;
  for (std::size_t c = 0; c < table.classes.size(); ++c) num += HalfLaurent(table.classes[c].size) * basis.cofactors[c];
  const RationalHL invariants = rational_reduce(RationalHL(num, HalfLaurent(table.group_order) * basis.common));
  if (invariants.numerator() != HalfLaurent(1))
    throw Error(ErrorKind::InvalidTable, "Molien series of the invariants is not 1/Π(1 - q^d)");
  return invariants.denominator();
}

}  // namespace

std::vector<ConjugacyClass> conjugacy_classes(int n) {
  const BigInt order = factorial(n);
  std::vector<ConjugacyClass> out;
  for (auto& rho : partitions_of(n)) {
    BigInt size = order / centralizer_order(rho);
    out.push_back({std::move(rho), std::move(size)});
  }
  // Identity class first: (1^n) is last in reverse lexicographic order.
  std::reverse(out.begin(), out.end());
  return out;
}

std::int64_t mn_character(const Partition& lambda, const Partition& rho) {
  if (lambda.size() != rho.size())
    throw Error(ErrorKind::SizeMismatch, "χ_" + lambda.id() + " evaluated on cycle type " + rho.id());
  MurnaghanNakayama mn(rho.parts());
  return mn.value(lambda.parts(), 0);
}

HalfLaurent perm_molien_det(const Partition& rho) {
  HalfLaurent det(1);
  for (int len : rho.parts()) det *= HalfLaurent(1) - HalfLaurent::t_pow(len);
  return det;
}

std::size_t CharTable::char_index(std::string_view id) const {
  for (std::size_t i = 0; i < irreducibles.size(); ++i)
    if (irreducibles[i].id == id) return i;
  throw Error(ErrorKind::UnknownLabel, "no character \"" + std::string(id) + "\" in table");
}

int CharTable::rank() const {
  if (classes.empty()) throw Error(ErrorKind::InvalidTable, "table has no classes");
  return classes.front().molien_det.max_exponent2() / 2;
}

std::size_t CharTable::identity_class() const {
  HalfLaurent id_det(1);
  for (int i = 0; i < rank(); ++i) id_det *= HalfLaurent(1) - HalfLaurent::t_pow(1);
  for (std::size_t c = 0; c < classes.size(); ++c)
    if (classes[c].size == 1 && classes[c].molien_det == id_det) return c;
  throw Error(ErrorKind::InvalidTable, "no identity class (size 1, det (1-q)^rank)");
}

std::int64_t CharTable::degree(std::size_t char_idx) const { return irreducibles.at(char_idx).values.at(identity_class()); }

std::vector<std::string> validate_table(const CharTable& table) {
  std::vector<std::string> issues;
  if (table.classes.empty()) {
    issues.emplace_back("table has no classes");
    return issues;
  }
  BigInt total = 0;
  for (const auto& c : table.classes) total += c.size;
  if (total != table.group_order) issues.emplace_back("class sizes do not sum to the group order");

  const int rank = table.classes.front().molien_det.is_zero() ? -1 : table.rank();
  for (const auto& c : table.classes) {
    if (c.molien_det.is_zero()) {
      issues.push_back("class " + c.id + ": Molien determinant is zero");
      continue;
    }
    if (c.molien_det.coeff(0) != 1 || c.molien_det.min_exponent2() != 0)
      issues.push_back("class " + c.id + ": Molien determinant must have constant term 1");
    if (!c.molien_det.has_integer_exponents())
      issues.push_back("class " + c.id + ": Molien determinant must have integer exponents");
    if (c.molien_det.max_exponent2() != 2 * rank)
      issues.push_back("class " + c.id + ": Molien determinant degree differs from the rank");
  }
  for (const auto& ch : table.irreducibles)
    if (ch.values.size() != table.classes.size())
      issues.push_back("character " + ch.id + ": wrong number of values");
  if (!issues.empty()) return issues;

  for (std::size_t a = 0; a < table.irreducibles.size(); ++a) {
    for (std::size_t b = a; b < table.irreducibles.size(); ++b) {
      BigInt s = 0;
      for (std::size_t c = 0; c < table.classes.size(); ++c)
        s += table.classes[c].size * table.irreducibles[a].values[c] * table.irreducibles[b].values[c];
      const BigInt expected = (a == b) ? table.group_order : BigInt(0);
      if (s != expected)
        issues.push_back("orthogonality fails for " + table.irreducibles[a].id + ", " + table.irreducibles[b].id);
    }
  }
  return issues;
}

CharTable char_table_sn(int n) {
  if (n < 1) throw Error(ErrorKind::InvalidTable, "S_n requires n >= 1");
  CharTable table;
  table.group_order = factorial(n);
  const auto classes = conjugacy_classes(n);
  for (const auto& c : classes) table.classes.push_back({c.cycle_type.id(), c.size, perm_molien_det(c.cycle_type)});
  for (const auto& lambda : partitions_of(n)) {
    CharTable::Character ch{lambda.id(), {}};
    for (const auto& c : classes) ch.values.push_back(mn_character(lambda, c.cycle_type));
    table.irreducibles.push_back(std::move(ch));
  }
  return table;
}

RationalHL molien_sum(const CharTable& table, std::size_t chi, std::size_t psi) {
  return molien_sum_with(table, molien_basis(table), chi, psi);
}

HalfLaurent invariant_degree_product(const CharTable& table) {
  return degree_product_with(table, molien_basis(table));
}

HalfLaurent coinvariant_pairing(const CharTable& table, std::string_view chi, std::string_view psi) {
  const MolienBasis basis = molien_basis(table);
  const RationalHL sum = molien_sum_with(table, basis, table.char_index(chi), table.char_index(psi));
  return (sum * RationalHL(degree_product_with(table, basis))).to_polynomial();
}

DenseMatrix<HalfLaurent> coinvariant_pairing_matrix(const CharTable& table) {
  const MolienBasis basis = molien_basis(table);
  const RationalHL product(degree_product_with(table, basis));
  const auto k = static_cast<Eigen::Index>(table.irreducibles.size());
  DenseMatrix<HalfLaurent> out(k, k);
  for (Eigen::Index i = 0; i < k; ++i) {
    for (Eigen::Index j = i; j < k; ++j) {
      out(i, j) = (molien_sum_with(table, basis, static_cast<std::size_t>(i), static_cast<std::size_t>(j)) * product)
                      .to_polynomial();
      out(j, i) = out(i, j);
    }
  }
  return out;
}

}  // namespace lsa
