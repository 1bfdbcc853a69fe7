#include "lsa/oracle.hpp"

#include <algorithm>
#include <map>

namespace lsa {

namespace {

class SsytEnumerator {
 public:
  SsytEnumerator(const Partition& shape, const Partition& content)
      : shape_(shape), content_(content), rows_(static_cast<std::size_t>(shape.length())) {}

  std::vector<Tableau> run() {
    fill_value(1);
    return std::move(out_);
  }

 private:
  // Value v occupies a horizontal strip: in row r its cells end at most where
  // row r-1 ended before v was placed.
  void fill_value(int value) {
    if (value > content_.length()) {
      out_.push_back({rows_, shape_, content_});
      return;
    }
    std::vector<int> before;
    for (const auto& r : rows_) before.push_back(static_cast<int>(r.size()));
    fill_row(value, content_.part(value - 1), 0, before);
  }

  void fill_row(int value, int remaining, std::size_t row, const std::vector<int>& before) {
    if (remaining == 0) {
      fill_value(value + 1);
      return;
    }
    if (row >= rows_.size()) return;
    int bound = shape_.part(static_cast<int>(row));
    if (row > 0) bound = std::min(bound, before[row - 1]);
    const int room = std::max(0, bound - before[row]);
    for (int take = std::min(room, remaining); take >= 0; --take) {
      rows_[row].insert(rows_[row].end(), static_cast<std::size_t>(take), value);
      fill_row(value, remaining - take, row + 1, before);
      rows_[row].resize(static_cast<std::size_t>(before[row]));
    }
  }

  const Partition& shape_;
  const Partition& content_;
  std::vector<std::vector<int>> rows_;
  std::vector<Tableau> out_;
};

}  // namespace

bool is_semistandard(const Tableau& t) {
  if (static_cast<int>(t.rows.size()) != t.shape.length()) return false;
  std::map<int, int> counts;
  for (std::size_t r = 0; r < t.rows.size(); ++r) {
    if (static_cast<int>(t.rows[r].size()) != t.shape.part(static_cast<int>(r))) return false;
    for (std::size_t c = 0; c < t.rows[r].size(); ++c) {
      const int v = t.rows[r][c];
      ++counts[v];
      if (c > 0 && t.rows[r][c - 1] > v) return false;
      if (r > 0 && t.rows[r - 1][c] >= v) return false;
    }
  }
  for (int i = 0; i < t.content.length(); ++i)
    if (counts[i + 1] != t.content.part(i)) return false;
  return static_cast<int>(counts.size()) == t.content.length();
}

std::vector<Tableau> ssyt_enumerate(const Partition& shape, const Partition& content) {
  if (shape.size() != content.size())
    throw Error(ErrorKind::SizeMismatch, "shape " + shape.id() + " with content " + content.id());
  return SsytEnumerator(shape, content).run();
}

std::vector<int> reading_word(const Tableau& t) {
  std::vector<int> word;
  for (auto it = t.rows.rbegin(); it != t.rows.rend(); ++it) word.insert(word.end(), it->begin(), it->end());
  return word;
}

int charge(const std::vector<int>& word) {
  // Repeatedly extract a standard subword: from the right end, scan leftwards
  // cyclically for 1, then 2, ... The index grows by one each time the scan
  // wraps around; charge sums the indices over all subwords.
  std::vector<char> used(word.size(), 0);
  std::size_t left = word.size();
  int total = 0;
  while (left > 0) {
    int top = 0;
    for (std::size_t i = 0; i < word.size(); ++i)
      if (!used[i]) top = std::max(top, word[i]);
    std::size_t pos = word.size();  // scan starts just past the right end
    int index = 0;
    for (int letter = 1; letter <= top; ++letter) {
      bool found = false;
      for (std::size_t step = 1; step <= word.size(); ++step) {
        const std::size_t i = (pos + word.size() - step) % word.size();
        const bool wrapped = letter > 1 && i >= pos;
        if (!used[i] && word[i] == letter) {
          if (wrapped) ++index;
          total += index;
          used[i] = 1;
          pos = i;
          found = true;
          break;
        }
      }
      if (!found) throw Error(ErrorKind::InconsistentInput, "charge requires partition content");
      --left;
    }
  }
  return total;
}

int charge(const Tableau& t) { return charge(reading_word(t)); }

HalfLaurent kostka_foulkes(const Partition& shape, const Partition& content) {
  HalfLaurent k;
  for (const auto& t : ssyt_enumerate(shape, content)) k += HalfLaurent::t_pow(charge(t));
  return k;
}

}  // namespace lsa
