#include "antipal/bijection.hpp"

#include "antipal/sequences.hpp"

#include <algorithm>
#include <set>
#include <utility>

namespace antipal {

std::string to_string(Sign s) { return s == Sign::kPlus ? "+3" : "-3"; }

Sign parse_sign(const std::string& text) {
  if (text == "+3" || text == "3") return Sign::kPlus;
  if (text == "-3") return Sign::kMinus;
  throw std::invalid_argument("sign must be +3 or -3, got \"" + text + "\"");
}

Composition SegmentDecomposition::reassemble() const {
  std::vector<int> parts;
  for (std::size_t j = 0; j < lambdas.size(); ++j) {
    if (j > 0) {
      if (separators[j - 1] == Separator::kThree) {
        parts.push_back(3);
      } else {
        parts.push_back(1);
        parts.push_back(2);
      }
    }
    parts.insert(parts.end(), lambdas[j].begin(), lambdas[j].end());
  }
  return Composition(std::move(parts));
}

SegmentDecomposition decompose(const Composition& c) {
  SegmentDecomposition d;
  std::vector<int> current;
  for (int part : c) {
    if (part == 3) {
      d.lambdas.push_back(std::exchange(current, {}));
      d.separators.push_back(Separator::kThree);
    } else if (part == 2 && !current.empty() && current.back() == 1) {
      // A 2 after a 1 would break non-increasing order: that 1 and this 2
      // form the (1,2) separator.
      current.pop_back();
      d.lambdas.push_back(std::exchange(current, {}));
      d.separators.push_back(Separator::kOneTwo);
    } else if (part == 1 || part == 2) {
      current.push_back(part);
    } else {
      throw std::invalid_argument("decompose: part " + std::to_string(part) +
                                  " exceeds 3 in " + to_string(c));
    }
  }
  d.lambdas.push_back(std::move(current));
  return d;
}

SignedPairs signed_pairs(const SegmentDecomposition& d, Sign lead) {
  SignedPairs pairs;
  pairs.reserve(d.lambdas.size());
  pairs.push_back({lead, d.lambdas.front()});
  for (std::size_t j = 1; j < d.lambdas.size(); ++j) {
    const Sign base =
        d.separators[j - 1] == Separator::kThree ? Sign::kPlus : Sign::kMinus;
    pairs.push_back({lead == Sign::kPlus ? base : opposite(base),
                     d.lambdas[j]});
  }
  return pairs;
}

Composition forward(const Composition& c, Sign lead) {
  const SignedPairs pairs = signed_pairs(decompose(c), lead);
  const std::size_t r = pairs.size();
  std::vector<int> tau(2 * r);
  for (std::size_t j = 0; j < r; ++j) {
    int b = 2;
    int small = 1;
    for (int part : pairs[j].lambda) {
      ++b;
      if (part == 2) ++small;
    }
    if (pairs[j].sign == Sign::kMinus) std::swap(b, small);
    tau[j] = b;
    tau[2 * r - 1 - j] = small;
  }
  return Composition(std::move(tau));
}

InverseResult inverse(const Composition& t) {
  if (t.empty() || t.size() % 2 != 0 || !is_antipalindromic(t)) {
    throw NotInImageError("NOT_IN_IMAGE: " + to_string(t) +
                          " is not a nonempty even-length anti-palindromic "
                          "composition");
  }
  const std::size_t r = t.size() / 2;
  const Sign lead = t[0] > t[2 * r - 1] ? Sign::kPlus : Sign::kMinus;

  SegmentDecomposition d;
  for (std::size_t j = 0; j < r; ++j) {
    const int first = t[j];
    const int second = t[2 * r - 1 - j];
    const Sign sign = first > second ? Sign::kPlus : Sign::kMinus;
    const int big = std::max(first, second);
    const int small = std::min(first, second);
    // big = 2 + twos + ones and small = 1 + twos.
    const int twos = small - 1;
    const int ones = big - small - 1;
    if (ones < 0) {
      throw NotInImageError("NOT_IN_IMAGE: pair (" + std::to_string(first) +
                            "," + std::to_string(second) + ") in " +
                            to_string(t) + " has no preimage");
    }
    std::vector<int> lambda(static_cast<std::size_t>(twos), 2);
    lambda.insert(lambda.end(), static_cast<std::size_t>(ones), 1);
    d.lambdas.push_back(std::move(lambda));
    if (j > 0) {
      d.separators.push_back(sign == lead ? Separator::kThree
                                          : Separator::kOneTwo);
    }
  }

  InverseResult result{d.reassemble(), lead};
  if (forward(result.source, lead) != t) {
    throw NotInImageError("NOT_IN_IMAGE: " + to_string(t) +
                          " does not survive the round trip");
  }
  return result;
}

namespace {

void extend(int remaining, int max_part, std::vector<int>& prefix,
            std::vector<Composition>& out) {
  if (remaining == 0) {
    out.emplace_back(prefix);
    return;
  }
  for (int p = 1; p <= std::min(max_part, remaining); ++p) {
    prefix.push_back(p);
    extend(remaining - p, max_part, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<Composition> bounded_part_compositions(int n, int max_part) {
  if (n < 0 || max_part < 1) {
    throw std::invalid_argument(
        "bounded_part_compositions: need n >= 0 and max_part >= 1");
  }
  std::vector<Composition> out;
  std::vector<int> prefix;
  extend(n, max_part, prefix, out);
  return out;
}

BijectionSweep sweep_bijection(int n) {
  if (n < 3) throw std::invalid_argument("sweep_bijection: n must be >= 3");
  BijectionSweep sweep;
  sweep.n = n;
  auto fail = [&](std::string why) {
    if (sweep.passed) {
      sweep.passed = false;
      sweep.failure = std::move(why);
    }
  };

  const std::vector<Composition> sources = bounded_part_compositions(n - 3, 3);
  sweep.sources = sources.size();
  std::set<Composition> images;
  for (const Composition& c : sources) {
    for (Sign lead : {Sign::kPlus, Sign::kMinus}) {
      const Composition t = forward(c, lead);
      const std::string label =
          "forward(" + to_string(c) + ", " + to_string(lead) + ") = " +
          to_string(t);
      if (t.sum() != n || t.size() % 2 != 0 || !is_antipalindromic(t)) {
        fail(label + " is not an even-length anti-palindromic composition of " +
             std::to_string(n));
      }
      if ((lead == Sign::kPlus) != (t.front() > t.back())) {
        fail(label + " has the wrong end ordering");
      }
      if (!images.insert(t).second) fail(label + " is a duplicate image");
      try {
        if (inverse(t) != InverseResult{c, lead}) {
          fail(label + " does not invert to its source");
        }
      } catch (const NotInImageError& e) {
        fail(label + ": " + e.what());
      }
    }
  }
  sweep.images = images.size();

  std::set<Composition> targets;
  for (const Composition& c : enumerate_compositions(n)) {
    if (c.size() % 2 == 0 && is_antipalindromic(c)) targets.insert(c);
  }
  sweep.targets = targets.size();
  if (images != targets) {
    fail("image set (" + std::to_string(images.size()) +
         ") differs from the even-length anti-palindromic set (" +
         std::to_string(targets.size()) + ")");
  }
  if (BigCount(static_cast<unsigned long>(images.size())) !=
      2 * tribonacci(n - 2)) {
    fail("image count " + std::to_string(images.size()) +
         " != 2*f3(n-2) = " + BigCount(2 * tribonacci(n - 2)).get_str());
  }
  return sweep;
}

}  // namespace antipal
