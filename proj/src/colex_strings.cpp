#include "colex/colex_strings.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace colex {

SuffixKey suffix_key(const EventuallyPeriodicString& x, std::size_t length) {
  SuffixKey key(length, static_cast<char>(kPadSymbol));
  std::size_t i = 0;  // distance from the end of the denoted string
  for (; i < length && i < x.alpha.size(); ++i) {
    key[length - 1 - i] = x.alpha[x.alpha.size() - 1 - i];
  }
  if (!x.beta.empty()) {
    const std::size_t b = x.beta.size();
    for (; i < length; ++i) {
      std::size_t off = (i - x.alpha.size()) % b;
      key[length - 1 - i] = x.beta[b - 1 - off];
    }
  }
  return key;
}

std::strong_ordering compare_keys(const SuffixKey& a, const SuffixKey& b) {
  assert(a.size() == b.size());
  for (std::size_t i = a.size(); i-- > 0;) {
    unsigned char ca = static_cast<unsigned char>(a[i]);
    unsigned char cb = static_cast<unsigned char>(b[i]);
    if (ca != cb) return ca <=> cb;
  }
  return std::strong_ordering::equal;
}

std::strong_ordering colex_compare(const EventuallyPeriodicString& x,
                                   const EventuallyPeriodicString& y) {
  // Sufficient comparison length: |β_x| + |β_y| + max(|α_x|, |α_y|). For
  // finite operands the padded keys decide exactly; for two infinite ones
  // this is the periodic-string bound.
  const std::size_t length =
      x.beta.size() + y.beta.size() + std::max(x.alpha.size(), y.alpha.size());
  if (length == 0) return std::strong_ordering::equal;
  return compare_keys(suffix_key(x, length), suffix_key(y, length));
}

EventuallyPeriodicString from_suffix_key(const SuffixKey& key, StateId n_states) {
  const std::size_t length = key.size();
  std::size_t pad = 0;
  while (pad < length && key[pad] == static_cast<char>(kPadSymbol)) ++pad;
  if (pad > 0 || length == 0) {
    return {key.substr(pad), {}};
  }
  // No padding: the underlying string is infinite, so some β^ω·α with
  // |α| + |β| < n matches the whole key.
  for (std::size_t total = 1; total < n_states; ++total) {
    for (std::size_t a = 0; a < total; ++a) {
      const std::size_t b = total - a;
      if (a + b > length) continue;
      bool periodic = true;
      for (std::size_t i = 0; i + b < length - a && periodic; ++i) {
        periodic = key[i] == key[i + b];
      }
      if (periodic) {
        return {key.substr(length - a), key.substr(length - a - b, b)};
      }
    }
  }
  throw std::invalid_argument(
      "from_suffix_key: key is not the suffix of an inf/sup string of an n-state DFA");
}

std::string display(const EventuallyPeriodicString& x) {
  std::string alpha;
  for (char c : x.alpha) alpha += render_symbol(static_cast<Symbol>(c));
  if (!x.infinite()) return alpha;
  std::string beta;
  for (char c : x.beta) beta += render_symbol(static_cast<Symbol>(c));
  std::string out = "(" + beta + ")^w";
  if (!alpha.empty()) out += " " + alpha;
  return out;
}

std::string display_key(const SuffixKey& key) {
  std::string out;
  for (char c : key) {
    Symbol s = static_cast<Symbol>(c);
    out += (s == kPadSymbol) ? "#" : render_symbol(s);
  }
  return out;
}

}  // namespace colex
