#pragma once

#include <compare>
#include <cstddef>
#include <iterator>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "antipal/bigint.hpp"

namespace antipal {

/**
 * An ordered sequence of positive parts. The empty composition is the
 * unique composition of 0.
 */
class Composition {
 public:
  Composition() = default;
  /// Throws std::invalid_argument if any part is < 1.
  explicit Composition(std::vector<int> parts);
  Composition(std::initializer_list<int> parts)
      : Composition(std::vector<int>(parts)) {}

  std::span<const int> parts() const noexcept { return parts_; }
  std::size_t size() const noexcept { return parts_.size(); }
  bool empty() const noexcept { return parts_.empty(); }
  int operator[](std::size_t i) const { return parts_[i]; }
  int front() const { return parts_.front(); }
  int back() const { return parts_.back(); }
  auto begin() const noexcept { return parts_.begin(); }
  auto end() const noexcept { return parts_.end(); }

  /// Sum of the parts.
  int sum() const noexcept;

  Composition reversed() const;

  friend bool operator==(const Composition&, const Composition&) = default;
  friend auto operator<=>(const Composition&, const Composition&) = default;

 private:
  friend class CompositionRange;
  std::vector<int> parts_;
};

/// Renders "(p1,p2,...)"; the empty composition prints as "()".
std::string to_string(const Composition& c);

/// Parses the format produced by to_string. Whitespace around tokens is
/// ignored. Throws std::invalid_argument on malformed text.
Composition parse_composition(std::string_view text);

/**
 * Lazy stream of all compositions of n in lexicographic order of parts,
 * starting at (1,...,1) and ending at (n). For n = 0 the stream holds only
 * the empty composition; otherwise it has 2^(n-1) elements, so anything
 * beyond n ~ 30 is impractical.
 */
class CompositionRange {
 public:
  class iterator {
   public:
    using iterator_category = std::input_iterator_tag;
    using value_type = Composition;
    using difference_type = std::ptrdiff_t;
    using pointer = const Composition*;
    using reference = const Composition&;

    iterator() = default;

    reference operator*() const { return current_; }
    pointer operator->() const { return &current_; }
    iterator& operator++();
    void operator++(int) { ++*this; }

    friend bool operator==(const iterator& it, std::default_sentinel_t) {
      return it.done_;
    }

   private:
    friend class CompositionRange;
    explicit iterator(int n);

    Composition current_;
    bool done_ = true;
  };

  explicit CompositionRange(int n);

  iterator begin() const { return iterator(n_); }
  std::default_sentinel_t end() const { return {}; }

 private:
  int n_;
};

inline CompositionRange enumerate_compositions(int n) {
  return CompositionRange(n);
}

bool is_palindromic(const Composition& c) noexcept;

/// Every symmetric pair (i, s-i+1) with i != (s+1)/2 holds distinct parts.
bool is_antipalindromic(const Composition& c) noexcept;

/// Flip-class representative: within each symmetric pair the smaller part
/// comes first. Throws std::invalid_argument for input that is not
/// anti-palindromic.
Composition flip_canonical(const Composition& c);

struct LengthCounts {
  BigCount ac;
  BigCount rac;
  friend bool operator==(const LengthCounts&, const LengthCounts&) = default;
};

struct CountTable {
  int n = 0;
  BigCount ac0, ac1, ac;
  BigCount rac0, rac1, rac;
  /// Keyed by length s; covers every s in [0, n] (or [0, max_length]).
  std::map<int, LengthCounts> by_length;
};

/**
 * Exhaustive oracle: enumerates every composition of n, keeps the
 * anti-palindromic ones, and counts them by length and by distinct
 * flip-canonical form. Cost is 2^(n-1) compositions; n <= 24 is the
 * practical envelope.
 *
 * When `max_length` is given, `by_length` only lists lengths up to it; the
 * totals always cover every length.
 */
CountTable brute_counts(int n, std::optional<int> max_length = std::nullopt);

}  // namespace antipal
