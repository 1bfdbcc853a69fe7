#include "lsa/blockdata.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>

#include "lsa/weyl.hpp"

namespace lsa {

std::optional<std::size_t> BlockData::label_index(std::string_view id) const {
  for (std::size_t i = 0; i < labels.size(); ++i)
    if (labels[i].id == id) return i;
  return std::nullopt;
}

std::optional<std::size_t> BlockData::orbit_index(std::string_view id) const {
  for (std::size_t i = 0; i < orbits.size(); ++i)
    if (orbits[i].id == id) return i;
  return std::nullopt;
}

PolyMatrix own_omega(const BlockData& block) {
  const auto n = static_cast<Eigen::Index>(block.labels.size());
  std::vector<Eigen::Index> pos;
  pos.reserve(block.labels.size());
  for (const auto& label : block.labels) {
    auto it = std::find(block.omega_order.begin(), block.omega_order.end(), label.id);
    if (it == block.omega_order.end())
      throw Error(ErrorKind::ShapeMismatch, "label " + label.id + " missing from omega order");
    pos.push_back(it - block.omega_order.begin());
  }
  if (block.omega.rows() != static_cast<Eigen::Index>(block.omega_order.size()) ||
      block.omega.cols() != block.omega.rows())
    throw Error(ErrorKind::ShapeMismatch, "omega does not match its order");
  PolyMatrix out(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) out(i, j) = block.omega(pos[static_cast<std::size_t>(i)], pos[static_cast<std::size_t>(j)]);
  return out;
}

std::string_view to_string(ViolationKind kind) {
  switch (kind) {
    case ViolationKind::EmptyBlock: return "EmptyBlock";
    case ViolationKind::DuplicateId: return "DuplicateId";
    case ViolationKind::UnknownOrbit: return "UnknownOrbit";
    case ViolationKind::UnknownLabel: return "UnknownLabel";
    case ViolationKind::UnknownCover: return "UnknownCover";
    case ViolationKind::CoverCycle: return "CoverCycle";
    case ViolationKind::DimNotMonotone: return "DimNotMonotone";
    case ViolationKind::NegativeDim: return "NegativeDim";
    case ViolationKind::DualNotInvolution: return "DualNotInvolution";
    case ViolationKind::DualChangesOrbit: return "DualChangesOrbit";
    case ViolationKind::ShapeMismatch: return "ShapeMismatch";
    case ViolationKind::SymmetryViolation: return "SymmetryViolation";
    case ViolationKind::DualInvarianceViolation: return "DualInvarianceViolation";
    case ViolationKind::CrossBlockNonzero: return "CrossBlockNonzero";
  }
  return "Unknown";
}

OrbitPoset::OrbitPoset(const BlockData& block) {
  const std::size_t m = block.orbits.size();
  dims_.reserve(m);
  for (const auto& o : block.orbits) dims_.push_back(o.dim);

  std::vector<std::vector<std::size_t>> lower(m);
  for (std::size_t b = 0; b < m; ++b) {
    for (const auto& c : block.orbits[b].covers) {
      auto a = block.orbit_index(c);
      if (!a) throw Error(ErrorKind::InvalidBlock, "orbit " + block.orbits[b].id + " covers unknown orbit " + c);
      lower[b].push_back(*a);
    }
  }

  // Reachability by depth-first search from each orbit along cover edges.
  less_.assign(m * m, 0);
  for (std::size_t b = 0; b < m; ++b) {
    std::vector<std::size_t> stack = lower[b];
    while (!stack.empty()) {
      const std::size_t a = stack.back();
      stack.pop_back();
      if (a == b) throw Error(ErrorKind::InvalidBlock, "closure order has a cycle through " + block.orbits[b].id);
      if (less_[a * m + b]) continue;
      less_[a * m + b] = 1;
      stack.insert(stack.end(), lower[a].begin(), lower[a].end());
    }
  }
}

std::vector<std::size_t> OrbitPoset::linear_extension(std::optional<std::uint64_t> seed) const {
  const std::size_t m = size();
  std::vector<std::size_t> pending(m, 0);
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b)
      if (below(a, b)) ++pending[b];

  std::optional<std::mt19937_64> rng;
  if (seed) rng.emplace(*seed);

  std::vector<std::size_t> order;
  std::vector<char> done(m, 0);
  order.reserve(m);
  while (order.size() < m) {
    std::vector<std::size_t> ready;
    for (std::size_t a = 0; a < m; ++a)
      if (!done[a] && pending[a] == 0) ready.push_back(a);
    std::size_t pick = ready.front();
    if (rng) pick = ready[std::uniform_int_distribution<std::size_t>(0, ready.size() - 1)(*rng)];
    done[pick] = 1;
    order.push_back(pick);
    for (std::size_t b = 0; b < m; ++b)
      if (below(pick, b)) --pending[b];
  }
  return order;
}

namespace {

void check_block(const BlockData& block, const std::map<std::string, std::size_t>& owner, std::size_t self,
                 std::vector<Violation>& out) {
  auto report = [&](ViolationKind kind, std::string detail) { out.push_back({kind, block.name, std::move(detail)}); };

  if (block.labels.empty()) report(ViolationKind::EmptyBlock, "block has no labels");

  std::set<std::string> seen;
  for (const auto& o : block.orbits) {
    if (!seen.insert(o.id).second) report(ViolationKind::DuplicateId, "orbit " + o.id);
    if (o.dim < 0) report(ViolationKind::NegativeDim, "orbit " + o.id);
  }
  seen.clear();
  for (const auto& l : block.labels)
    if (!seen.insert(l.id).second) report(ViolationKind::DuplicateId, "label " + l.id);

  bool covers_ok = true;
  for (const auto& o : block.orbits) {
    for (const auto& c : o.covers) {
      auto a = block.orbit_index(c);
      if (!a) {
        report(ViolationKind::UnknownCover, "orbit " + o.id + " covers " + c);
        covers_ok = false;
      } else if (block.orbits[*a].dim >= o.dim) {
        report(ViolationKind::DimNotMonotone,
               "dim " + c + " = " + std::to_string(block.orbits[*a].dim) + " is not below dim " + o.id + " = " +
                   std::to_string(o.dim));
      }
    }
  }
  if (covers_ok) {
    try {
      OrbitPoset poset(block);
    } catch (const Error& e) {
      report(ViolationKind::CoverCycle, e.what());
    }
  }

  bool duality_ok = true;
  for (const auto& l : block.labels) {
    auto orbit = block.orbit_index(l.orbit);
    if (!orbit) report(ViolationKind::UnknownOrbit, "label " + l.id + " sits on " + l.orbit);
    auto dual = block.label_index(l.dual);
    if (!dual) {
      report(ViolationKind::UnknownLabel, "dual of " + l.id + " is " + l.dual);
      duality_ok = false;
      continue;
    }
    const auto& d = block.labels[*dual];
    if (d.dual != l.id) {
      report(ViolationKind::DualNotInvolution, l.id + " -> " + d.id + " -> " + d.dual);
      duality_ok = false;
    }
    if (d.orbit != l.orbit) {
      report(ViolationKind::DualChangesOrbit, l.id + " and its dual " + d.id + " lie on different orbits");
      duality_ok = false;
    }
  }

  const auto k = static_cast<Eigen::Index>(block.omega_order.size());
  if (block.omega.rows() != k || block.omega.cols() != k) {
    report(ViolationKind::ShapeMismatch, "omega is " + std::to_string(block.omega.rows()) + "x" +
                                             std::to_string(block.omega.cols()) + " but its order names " +
                                             std::to_string(k) + " labels");
    return;
  }
  seen.clear();
  for (const auto& id : block.omega_order)
    if (!seen.insert(id).second) report(ViolationKind::DuplicateId, "omega order repeats " + id);
  for (const auto& l : block.labels)
    if (!seen.contains(l.id)) report(ViolationKind::ShapeMismatch, "label " + l.id + " missing from omega order");

  // Classify each omega row as own, foreign (another block), or unknown.
  std::vector<char> own(static_cast<std::size_t>(k), 0);
  for (Eigen::Index i = 0; i < k; ++i) {
    const auto& id = block.omega_order[static_cast<std::size_t>(i)];
    if (block.label_index(id)) {
      own[static_cast<std::size_t>(i)] = 1;
      continue;
    }
    auto it = owner.find(id);
    if (it == owner.end() || it->second == self) report(ViolationKind::UnknownLabel, "omega order names " + id);
  }

  for (Eigen::Index i = 0; i < k; ++i) {
    for (Eigen::Index j = i + 1; j < k; ++j) {
      if (block.omega(i, j) != block.omega(j, i))
        report(ViolationKind::SymmetryViolation, "omega(" + block.omega_order[static_cast<std::size_t>(i)] + ", " +
                                                     block.omega_order[static_cast<std::size_t>(j)] + ") = " +
                                                     to_string(block.omega(i, j)) + " but the transpose entry is " +
                                                     to_string(block.omega(j, i)));
    }
  }
  for (Eigen::Index i = 0; i < k; ++i) {
    if (!own[static_cast<std::size_t>(i)]) continue;
    for (Eigen::Index j = 0; j < k; ++j) {
      if (own[static_cast<std::size_t>(j)]) continue;
      if (!block.omega(i, j).is_zero() || !block.omega(j, i).is_zero())
        report(ViolationKind::CrossBlockNonzero, "omega(" + block.omega_order[static_cast<std::size_t>(i)] + ", " +
                                                     block.omega_order[static_cast<std::size_t>(j)] +
                                                     ") pairs labels of different blocks");
    }
  }

  if (!duality_ok || out.size() > 0) return;
  const PolyMatrix w = own_omega(block);
  const auto n = static_cast<Eigen::Index>(block.labels.size());
  std::vector<Eigen::Index> dual(block.labels.size());
  for (std::size_t i = 0; i < block.labels.size(); ++i) dual[i] = static_cast<Eigen::Index>(*block.label_index(block.labels[i].dual));
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j)
      if (w(i, j) != w(dual[static_cast<std::size_t>(i)], dual[static_cast<std::size_t>(j)]))
        report(ViolationKind::DualInvarianceViolation,
               "omega(" + block.labels[static_cast<std::size_t>(i)].id + ", " + block.labels[static_cast<std::size_t>(j)].id +
                   ") changes under duality");
}

}  // namespace

std::vector<Violation> validate_dataset(std::span<const BlockData> blocks) {
  std::vector<Violation> out;
  std::map<std::string, std::size_t> owner;
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    for (const auto& l : blocks[b].labels) {
      auto [it, inserted] = owner.emplace(l.id, b);
      if (!inserted && it->second != b)
        out.push_back({ViolationKind::DuplicateId, blocks[b].name, "label " + l.id + " also belongs to block " +
                                                                       blocks[it->second].name});
    }
  }
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    std::vector<Violation> local;
    check_block(blocks[b], owner, b, local);
    out.insert(out.end(), local.begin(), local.end());
  }
  return out;
}

std::vector<Violation> validate_block(const BlockData& block) {
  return validate_dataset(std::span<const BlockData>(&block, 1));
}

int orbit_dim_type_a(const Partition& lambda, int n) {
  if (lambda.size() != n) throw Error(ErrorKind::SizeMismatch, "partition " + lambda.id() + " is not of " + std::to_string(n));
  int sum = 0;
  const Partition columns = lambda.transpose();
  for (int c : columns.parts()) sum += c * c;
  return n * n - sum;
}

bool dominates(const Partition& lambda, const Partition& mu) {
  if (lambda.size() != mu.size())
    throw Error(ErrorKind::SizeMismatch, "dominance between " + lambda.id() + " and " + mu.id());
  int a = 0;
  int b = 0;
  for (int i = 0; i < std::max(lambda.length(), mu.length()); ++i) {
    a += lambda.part(i);
    b += mu.part(i);
    if (a < b) return false;
  }
  return true;
}

BlockData build_springer_block_a(int n) {
  if (n < 1 || n > kSpringerBlockMaxN)
    throw Error(ErrorKind::InconsistentInput,
                "springer-a supports 1 <= n <= " + std::to_string(kSpringerBlockMaxN) + ", got " + std::to_string(n));
  const auto parts = partitions_of(n);
  const std::size_t m = parts.size();

  BlockData block;
  block.name = "springer-a-" + std::to_string(n);
  block.provenance = {{"type", "springer-a"},
                      {"group", "GL_" + std::to_string(n)},
                      {"n", n},
                      {"cuspidal_datum", "(T, pt, const)"},
                      {"omega_model", "coinvariant pairing at q = t^-1"}};

  auto strictly = [&](std::size_t a, std::size_t b) { return a != b && dominates(parts[a], parts[b]); };
  for (std::size_t a = 0; a < m; ++a) {
    OrbitInfo orbit{parts[a].id(), orbit_dim_type_a(parts[a], n), {}};
    for (std::size_t b = 0; b < m; ++b) {
      if (!strictly(a, b)) continue;
      bool cover = true;
      for (std::size_t c = 0; c < m && cover; ++c)
        if (strictly(a, c) && strictly(c, b)) cover = false;
      if (cover) orbit.covers.push_back(parts[b].id());
    }
    block.orbits.push_back(std::move(orbit));
    block.labels.push_back({parts[a].id(), parts[a].id(), "trivial", parts[a].id()});
    block.omega_order.push_back(parts[a].id());
  }
  block.omega = bar(coinvariant_pairing_matrix(char_table_sn(n)));
  return block;
}

BlockData singleton_cuspidal_block(std::string name, int orbit_dim, const HalfLaurent& omega) {
  BlockData block;
  block.name = std::move(name);
  block.provenance = {{"type", "cuspidal"}, {"levi", "G"}};
  block.orbits.push_back({"O", orbit_dim, {}});
  block.labels.push_back({"cusp", "O", "cuspidal", "cusp"});
  block.omega_order = {"cusp"};
  block.omega = PolyMatrix::Constant(1, 1, omega);
  return block;
}

}  // namespace lsa
