#include "antipal/composition.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <numeric>
#include <set>
#include <stdexcept>

namespace antipal {

Composition::Composition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (int p : parts_) {
    if (p < 1) {
      throw std::invalid_argument("composition part must be positive, got " +
                                  std::to_string(p));
    }
  }
}

int Composition::sum() const noexcept {
  return std::accumulate(parts_.begin(), parts_.end(), 0);
}

Composition Composition::reversed() const {
  Composition r;
  r.parts_.assign(parts_.rbegin(), parts_.rend());
  return r;
}

std::string to_string(const Composition& c) {
  std::string out = "(";
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(c[i]);
  }
  out += ')';
  return out;
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
    s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
    s.remove_suffix(1);
  return s;
}

}  // namespace

Composition parse_composition(std::string_view text) {
  const std::string_view original = text;
  auto fail = [&](const std::string& why) {
    return std::invalid_argument("malformed composition \"" +
                                 std::string(original) + "\": " + why);
  };
  text = trim(text);
  if (text.size() < 2 || text.front() != '(' || text.back() != ')') {
    throw fail("expected parenthesized, comma-separated parts");
  }
  text = trim(text.substr(1, text.size() - 2));
  std::vector<int> parts;
  if (text.empty()) return Composition{};
  while (true) {
    const auto comma = text.find(',');
    const std::string_view token = trim(text.substr(0, comma));
    int value = 0;
    const auto [ptr, ec] =
        std::from_chars(token.data(), token.data() + token.size(), value);
    if (token.empty() || ec != std::errc{} ||
        ptr != token.data() + token.size()) {
      throw fail("bad part \"" + std::string(token) + "\"");
    }
    if (value < 1) throw fail("parts must be positive");
    parts.push_back(value);
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  return Composition(std::move(parts));
}

CompositionRange::CompositionRange(int n) : n_(n) {
  if (n < 0) {
    throw std::invalid_argument("enumerate_compositions: n must be >= 0");
  }
}

CompositionRange::iterator::iterator(int n) : done_(false) {
  current_.parts_.assign(static_cast<std::size_t>(n), 1);
}

// Lexicographic successor: drop the last part L, bump the new last part,
// then append L-1 ones. The single-part composition (n) is the final one.
CompositionRange::iterator& CompositionRange::iterator::operator++() {
  auto& parts = current_.parts_;
  if (parts.size() <= 1) {
    done_ = true;
    return *this;
  }
  const int last = parts.back();
  parts.pop_back();
  ++parts.back();
  parts.insert(parts.end(), static_cast<std::size_t>(last - 1), 1);
  return *this;
}

bool is_palindromic(const Composition& c) noexcept {
  const auto p = c.parts();
  return std::equal(p.begin(), p.begin() + p.size() / 2, p.rbegin());
}

bool is_antipalindromic(const Composition& c) noexcept {
  const auto p = c.parts();
  const std::size_t s = p.size();
  for (std::size_t i = 0; i < s / 2; ++i) {
    if (p[i] == p[s - 1 - i]) return false;
  }
  return true;
}

Composition flip_canonical(const Composition& c) {
  if (!is_antipalindromic(c)) {
    throw std::invalid_argument("flip_canonical: " + to_string(c) +
                                " is not anti-palindromic");
  }
  std::vector<int> parts(c.begin(), c.end());
  const std::size_t s = parts.size();
  for (std::size_t i = 0; i < s / 2; ++i) {
    if (parts[i] > parts[s - 1 - i]) std::swap(parts[i], parts[s - 1 - i]);
  }
  return Composition(std::move(parts));
}

CountTable brute_counts(int n, std::optional<int> max_length) {
  if (n < 0) throw std::invalid_argument("brute_counts: n must be >= 0");
  const std::size_t lengths = static_cast<std::size_t>(n) + 1;
  std::vector<unsigned long> ac_by_len(lengths, 0);
  std::vector<std::set<Composition>> classes(lengths);

  for (const Composition& c : enumerate_compositions(n)) {
    if (!is_antipalindromic(c)) continue;
    ++ac_by_len[c.size()];
    classes[c.size()].insert(flip_canonical(c));
  }

  CountTable table;
  table.n = n;
  for (std::size_t s = 0; s < lengths; ++s) {
    const BigCount ac = ac_by_len[s];
    const BigCount rac = static_cast<unsigned long>(classes[s].size());
    (s % 2 == 0 ? table.ac0 : table.ac1) += ac;
    (s % 2 == 0 ? table.rac0 : table.rac1) += rac;
  }
  table.ac = table.ac0 + table.ac1;
  table.rac = table.rac0 + table.rac1;

  const int last = max_length ? *max_length : n;
  for (int s = 0; s <= last; ++s) {
    const auto idx = static_cast<std::size_t>(s);
    if (s <= n) {
      table.by_length[s] = {BigCount(ac_by_len[idx]),
                            BigCount(static_cast<unsigned long>(
                                classes[idx].size()))};
    } else {
      table.by_length[s] = {0, 0};
    }
  }
  return table;
}

}  // namespace antipal
