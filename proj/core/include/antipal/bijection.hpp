#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "antipal/composition.hpp"

namespace antipal {

/// Separator between consecutive {1,2}-partitions in a {1,2,3}-composition.
enum class Separator { kThree, kOneTwo };

/// +3 or -3.
enum class Sign : int { kPlus = 3, kMinus = -3 };

constexpr Sign opposite(Sign s) noexcept {
  return s == Sign::kPlus ? Sign::kMinus : Sign::kPlus;
}

std::string to_string(Sign s);
/// Accepts "+3", "3", "-3". Throws std::invalid_argument otherwise.
Sign parse_sign(const std::string& text);

/**
 * c = lambdas[0] + (sep[0]) + lambdas[1] + ... + (sep[r-2]) + lambdas[r-1]
 * where each lambda is a non-increasing sequence of 1s and 2s (possibly
 * empty) and each separator is (3) or (1,2). There is always exactly one
 * more lambda than separators.
 */
struct SegmentDecomposition {
  std::vector<std::vector<int>> lambdas;
  std::vector<Separator> separators;

  /// Concatenates the pieces back into a composition.
  Composition reassemble() const;

  friend bool operator==(const SegmentDecomposition&,
                         const SegmentDecomposition&) = default;
};

struct SignedPair {
  Sign sign;
  std::vector<int> lambda;
  friend bool operator==(const SignedPair&, const SignedPair&) = default;
};

using SignedPairs = std::vector<SignedPair>;

/// Thrown by inverse() for input outside the image of forward().
class NotInImageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Unique decomposition of a composition with parts in {1,2,3}. Throws
/// std::invalid_argument on any larger part.
SegmentDecomposition decompose(const Composition& c);

/// Sign sequence for a decomposition: the first entry is `lead`, later
/// entries are +3 for (3) and -3 for (1,2), all negated when lead is -3.
SignedPairs signed_pairs(const SegmentDecomposition& d, Sign lead);

/**
 * Embeds a {1,2,3}-composition of n into the even-length anti-palindromic
 * compositions of n + 3. Lead +3 gives an image with first part larger than
 * last; lead -3 gives the reversal of that image.
 */
Composition forward(const Composition& c, Sign lead);

struct InverseResult {
  Composition source;
  Sign lead;
  friend bool operator==(const InverseResult&, const InverseResult&) = default;
};

/// Recovers (c, lead) with forward(c, lead) == t. Throws NotInImageError if
/// t is empty, odd-length or not anti-palindromic, or fails the round trip.
InverseResult inverse(const Composition& t);

/// All compositions of n with parts <= max_part, lexicographic order, from
/// a direct recursive generator.
std::vector<Composition> bounded_part_compositions(int n, int max_part);

struct BijectionSweep {
  int n = 0;
  std::size_t sources = 0;  // {1,2,3}-compositions of n - 3
  std::size_t images = 0;   // distinct images over both signs
  std::size_t targets = 0;  // even-length anti-palindromic compositions of n
  bool passed = true;
  std::string failure;      // first failure, empty when passed
};

/// Exhaustive check at size n >= 3: both embeddings of every
/// {1,2,3}-composition of n - 3 land on distinct even-length
/// anti-palindromic compositions of n, invert exactly, and together cover
/// every such composition (found by enumeration), 2 f_3(n-2) in total.
BijectionSweep sweep_bijection(int n);

}  // namespace antipal
