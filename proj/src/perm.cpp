#include "modkalt/perm.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "modkalt/errors.hpp"

namespace modkalt {

Perm::Perm(std::vector<int> word) : word_(std::move(word)) {
  const int n = static_cast<int>(word_.size());
  std::vector<bool> seen(static_cast<size_t>(n) + 1, false);
  for (int v : word_) {
    if (v < 1 || v > n || seen[static_cast<size_t>(v)])
      throw InvalidSpecError("word is not a permutation of 1..n");
    seen[static_cast<size_t>(v)] = true;
  }
}

Perm Perm::identity(int n) {
  std::vector<int> w(static_cast<size_t>(n));
  std::iota(w.begin(), w.end(), 1);
  return Perm(std::move(w));
}

int exc(const Perm& p) {
  int count = 0;
  for (int i = 1; i < p.size(); ++i)  // position n can never exceed
    if (p.at(i) > i) ++count;
  return count;
}

namespace {

long long merge_count(std::vector<int>& a, std::vector<int>& buf, size_t lo, size_t hi) {
  if (hi - lo <= 1) return 0;
  const size_t mid = lo + (hi - lo) / 2;
  long long inversions = merge_count(a, buf, lo, mid) + merge_count(a, buf, mid, hi);
  size_t i = lo, j = mid, out = lo;
  while (i < mid && j < hi) {
    if (a[i] <= a[j]) {
      buf[out++] = a[i++];
    } else {
      inversions += static_cast<long long>(mid - i);
      buf[out++] = a[j++];
    }
  }
  while (i < mid) buf[out++] = a[i++];
  while (j < hi) buf[out++] = a[j++];
  std::copy(buf.begin() + static_cast<long>(lo), buf.begin() + static_cast<long>(hi),
            a.begin() + static_cast<long>(lo));
  return inversions;
}

}  // namespace

long long inv(const Perm& p) {
  std::vector<int> a = p.word();
  std::vector<int> buf(a.size());
  return merge_count(a, buf, 0, a.size());
}

int sgn(const Perm& p) { return inv(p) % 2 == 0 ? 1 : -1; }

int des(const Perm& p) {
  int count = 0;
  for (int i = 1; i < p.size(); ++i)
    if (p.at(i) > p.at(i + 1)) ++count;
  return count;
}

std::vector<int> fixed_points(const Perm& p) {
  std::vector<int> fixed;
  for (int i = 1; i <= p.size(); ++i)
    if (p.at(i) == i) fixed.push_back(i);
  return fixed;
}

bool is_derangement(const Perm& p) {
  for (int i = 1; i <= p.size(); ++i)
    if (p.at(i) == i) return false;
  return true;
}

Perm compose(const Perm& a, const Perm& b) {
  if (a.size() != b.size()) throw SizeMismatchError("composing permutations of different sizes");
  std::vector<int> w(static_cast<size_t>(a.size()));
  for (int i = 1; i <= a.size(); ++i) w[static_cast<size_t>(i) - 1] = a.at(b.at(i));
  return Perm(std::move(w));
}

Perm inverse(const Perm& p) {
  std::vector<int> w(static_cast<size_t>(p.size()));
  for (int i = 1; i <= p.size(); ++i) w[static_cast<size_t>(p.at(i)) - 1] = i;
  return Perm(std::move(w));
}

std::string to_string(const Perm& p) {
  std::ostringstream os;
  if (p.size() <= 9) {
    for (int v : p.word()) os << v;
  } else {
    for (int i = 0; i < p.size(); ++i) {
      if (i > 0) os << ',';
      os << p.word()[static_cast<size_t>(i)];
    }
  }
  return os.str();
}

Perm parse_perm(const std::string& text) {
  std::vector<int> w;
  if (text.find(',') != std::string::npos) {
    std::istringstream is(text);
    std::string item;
    while (std::getline(is, item, ',')) {
      try {
        w.push_back(std::stoi(item));
      } catch (const std::exception&) {
        throw InvalidSpecError("bad permutation entry: " + item);
      }
    }
  } else {
    for (char c : text) {
      if (c < '1' || c > '9') throw InvalidSpecError("bad permutation digit");
      w.push_back(c - '0');
    }
  }
  return Perm(std::move(w));
}

}  // namespace modkalt
