#pragma once

// Kostka–Foulkes polynomials by brute force: enumerate semistandard tableaux
// and sum q^charge. Independent of the solver; used only to check it.

#include <vector>

#include "lsa/laurent.hpp"
#include "lsa/partition.hpp"

namespace lsa {

struct Tableau {
  std::vector<std::vector<int>> rows;  // English notation, entries from 1
  Partition shape;
  Partition content;
};

/// Rows weakly increase, columns strictly increase, entries match content.
bool is_semistandard(const Tableau& t);

/// All SSYT of the given shape and content, in a deterministic order.
/// Throws SizeMismatch when |shape| != |content|.
std::vector<Tableau> ssyt_enumerate(const Partition& shape, const Partition& content);

/// Row reading word, bottom row first.
std::vector<int> reading_word(const Tableau& t);

/// Lascoux–Schützenberger charge of a word whose content is a partition.
int charge(const std::vector<int>& word);
int charge(const Tableau& t);

/// K_{shape, content}(q) = Σ_T q^{charge(T)}, with q^k stored under key 2k.
HalfLaurent kostka_foulkes(const Partition& shape, const Partition& content);

}  // namespace lsa
