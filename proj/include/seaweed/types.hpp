#pragma once

#include <compare>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace seaweed {

// Base class of every error thrown by this library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Rejections of malformed type symbols.
class ParseError : public Error {
 public:
  enum class Kind { Syntax, ZeroPart, SumMismatch, LimitExceeded };

  ParseError(Kind kind, const std::string& what) : Error(what), kind_(kind) {}
  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

// An operation that needs a single-path meander was given something else.
class NotFrobeniusError : public Error {
 public:
  using Error::Error;
};

// A stated precondition of an operation does not hold; the message names it.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

// Vertex or block index outside the meander.
class RangeError : public Error {
 public:
  using Error::Error;
};

class EmptySpectrumError : public Error {
 public:
  using Error::Error;
};

// A broken internal invariant, never bad input.
class InternalError : public Error {
 public:
  using Error::Error;
};

// The simple-eigenvalue propagation failed to determine every value.
class PropagationError : public InternalError {
 public:
  using InternalError::InternalError;
};

// The solved principal element has support outside the diagonal.
class NonDiagonalError : public InternalError {
 public:
  using InternalError::InternalError;
};

// A sequence of positive integers together with their sum n.
class Composition {
 public:
  explicit Composition(std::vector<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  int n() const { return n_; }
  // Number of parts.
  int size() const { return static_cast<int>(parts_.size()); }
  // k is 0-based.
  int operator[](int k) const { return parts_[static_cast<size_t>(k)]; }

  bool operator==(const Composition& other) const { return parts_ == other.parts_; }
  auto operator<=>(const Composition& other) const { return parts_ <=> other.parts_; }

 private:
  std::vector<int> parts_;
  int n_ = 0;
};

// The type symbol a1|...|am / b1|...|bt of a seaweed subalgebra of sl(n):
// the top composition cuts the rows below the diagonal, the bottom one the
// columns above it. Both must sum to the same n.
class SeaweedType {
 public:
  // The one-vertex type 1/1.
  SeaweedType() : top_(Composition({1})), bottom_(Composition({1})) {}
  SeaweedType(Composition top, Composition bottom);

  const Composition& top() const { return top_; }
  const Composition& bottom() const { return bottom_; }
  int n() const { return top_.n(); }

  SeaweedType flipped() const { return SeaweedType(bottom_, top_); }

  bool operator==(const SeaweedType& other) const {
    return top_ == other.top_ && bottom_ == other.bottom_;
  }
  auto operator<=>(const SeaweedType& other) const {
    if (auto c = n() <=> other.n(); c != 0) return c;
    if (auto c = top_ <=> other.top_; c != 0) return c;
    return bottom_ <=> other.bottom_;
  }

 private:
  Composition top_;
  Composition bottom_;
};

inline constexpr int kDefaultMaxN = 64;

// Cap on n accepted by parse_type; SEAWEED_MAX_N overrides the default.
int max_n_limit();

// Grammar: INT ("|" INT)* "/" INT ("|" INT)*, ASCII whitespace allowed around
// tokens, every INT a positive decimal with no sign.
SeaweedType parse_type(std::string_view text, int max_n);
SeaweedType parse_type(std::string_view text);

// Canonical symbol with no whitespace; parse_type(format_type(t)) == t.
std::string format_type(const SeaweedType& t);

// Composition of n selected by an (n-1)-bit cut mask: bit k set means a part
// boundary after position k+1. Mask 0 is (n), the all-ones mask is (1,...,1).
Composition composition_from_mask(int n, unsigned long long mask);

// All 2^(n-1) compositions of n in cut-mask order.
std::vector<Composition> all_compositions(int n);

}  // namespace seaweed
