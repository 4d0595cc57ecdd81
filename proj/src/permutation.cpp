#include "okada/permutation.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace okada {

Permutation::Permutation(std::vector<int> one_line) : one_line_(std::move(one_line)) {
  std::vector<char> seen(one_line_.size() + 1, 0);
  for (int v : one_line_) {
    if (v < 1 || v > size() || seen[v]) throw std::invalid_argument("not a permutation: " + to_string());
    seen[v] = 1;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> v(n);
  std::iota(v.begin(), v.end(), 1);
  return Permutation(std::move(v));
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(one_line_.size());
  for (int i = 0; i < size(); ++i) inv[one_line_[i] - 1] = i + 1;
  return Permutation(std::move(inv));
}

Permutation Permutation::operator*(const Permutation& other) const {
  if (size() != other.size()) throw std::invalid_argument("permutation size mismatch");
  std::vector<int> out(one_line_.size());
  for (int i = 1; i <= size(); ++i) out[i - 1] = (*this)(other(i));
  return Permutation(std::move(out));
}

int Permutation::length() const {
  int count = 0;
  for (int i = 0; i < size(); ++i)
    for (int j = i + 1; j < size(); ++j) count += one_line_[i] > one_line_[j];
  return count;
}

bool Permutation::is_involution() const {
  for (int i = 1; i <= size(); ++i)
    if ((*this)((*this)(i)) != i) return false;
  return true;
}

std::string Permutation::to_string() const {
  std::string out = "[";
  for (std::size_t i = 0; i < one_line_.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(one_line_[i]);
  }
  return out + "]";
}

std::vector<int> code(const Permutation& sigma) {
  const Permutation pos = sigma.inverse();
  std::vector<int> c(sigma.size(), 0);
  for (int i = 1; i <= sigma.size(); ++i)
    for (int j = 1; j < i; ++j) c[i - 1] += pos(j) > pos(i);
  return c;
}

Permutation from_code(std::span<const int> c) {
  std::vector<int> line;
  for (int i = 1; i <= static_cast<int>(c.size()); ++i) {
    const int ci = c[i - 1];
    if (ci < 0 || ci >= i) throw std::invalid_argument("code entry out of range at " + std::to_string(i));
    line.insert(line.begin() + (i - 1 - ci), i);
  }
  return Permutation(std::move(line));
}

Word word_from_code(const Permutation& sigma) {
  Word w;
  const auto c = code(sigma);
  for (int i = 1; i <= sigma.size(); ++i)
    for (int k = 1; k <= c[i - 1]; ++k) w.push_back(i - k);
  return w;
}

Permutation permutation_of_word(std::span<const int> word, int n) {
  std::vector<int> line(n);
  std::iota(line.begin(), line.end(), 1);
  for (int letter : word) {
    if (letter < 1 || letter >= n) throw std::out_of_range("letter " + std::to_string(letter) + " outside [1, n-1]");
    std::swap(line[letter - 1], line[letter]);
  }
  return Permutation(std::move(line));
}

std::vector<Permutation> all_permutations(int n) {
  std::vector<int> line(n);
  std::iota(line.begin(), line.end(), 1);
  std::vector<Permutation> out;
  do out.emplace_back(line);
  while (std::next_permutation(line.begin(), line.end()));
  return out;
}

}  // namespace okada
