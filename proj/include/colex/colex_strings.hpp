#pragma once

#include <compare>
#include <cstddef>
#include <string>

#include "colex/automaton.hpp"

namespace colex {

// Fixed-length padded suffix of an inf/sup string: exactly L symbols in
// natural (left-to-right) order, left-padded with kPadSymbol when the
// underlying string is shorter than L.
using SuffixKey = std::string;

// β^ω·α when beta is nonempty, else the finite string alpha. Symbols are
// stored as raw bytes in natural order.
struct EventuallyPeriodicString {
  std::string alpha;
  std::string beta;

  bool infinite() const { return !beta.empty(); }

  friend bool operator==(const EventuallyPeriodicString&,
                         const EventuallyPeriodicString&) = default;
};

// Last L symbols of the denoted string, left-padded with '#'.
SuffixKey suffix_key(const EventuallyPeriodicString& x, std::size_t length);

// Co-lex order of two equal-length keys (right-to-left comparison).
std::strong_ordering compare_keys(const SuffixKey& a, const SuffixKey& b);

// Co-lex order of the denoted (possibly infinite) strings. Equal is returned
// exactly when the strings are equal, regardless of representation.
std::strong_ordering colex_compare(const EventuallyPeriodicString& x,
                                   const EventuallyPeriodicString& y);

// Recovers an eventually-periodic form from the length-L suffix key of an
// inf/sup string of an n-state DFA (L >= 2n required for exactness). Finite
// strings come back with empty beta; infinite ones satisfy
// |alpha| + |beta| < n.
EventuallyPeriodicString from_suffix_key(const SuffixKey& key,
                                         StateId n_states);

// "(β)^w α" for infinite strings, the raw string otherwise.
std::string display(const EventuallyPeriodicString& x);

// Key rendered with '#' for padding and \xNN escapes for non-printable bytes.
std::string display_key(const SuffixKey& key);

}  // namespace colex
