#include "seaweed/types.hpp"

#include <cctype>
#include <cstdlib>
#include <numeric>

namespace seaweed {

Composition::Composition(std::vector<int> parts) : parts_(std::move(parts)) {
  if (parts_.empty()) {
    throw ParseError(ParseError::Kind::Syntax, "composition must have at least one part");
  }
  for (int p : parts_) {
    if (p < 1) {
      throw ParseError(ParseError::Kind::ZeroPart, "composition parts must be positive");
    }
  }
  n_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

SeaweedType::SeaweedType(Composition top, Composition bottom)
    : top_(std::move(top)), bottom_(std::move(bottom)) {
  if (top_.n() != bottom_.n()) {
    throw ParseError(ParseError::Kind::SumMismatch,
                     "top sums to " + std::to_string(top_.n()) + " but bottom sums to " +
                         std::to_string(bottom_.n()));
  }
}

int max_n_limit() {
  static const int limit = [] {
    if (const char* env = std::getenv("SEAWEED_MAX_N")) {
      char* end = nullptr;
      long v = std::strtol(env, &end, 10);
      if (end && *end == '\0' && v >= 1) return static_cast<int>(v);
    }
    return kDefaultMaxN;
  }();
  return limit;
}

namespace {

// One side of the symbol: INT ("|" INT)*. Leaves pos at the first character
// that is neither part of an integer, whitespace, nor '|'.
std::vector<int> parse_parts(std::string_view text, size_t& pos, int max_n) {
  std::vector<int> parts;
  bool expect_int = true;
  while (pos < text.size()) {
    char c = text[pos];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++pos;
      continue;
    }
    if (expect_int) {
      if (!std::isdigit(static_cast<unsigned char>(c))) {
        throw ParseError(ParseError::Kind::Syntax,
                         "expected an integer at offset " + std::to_string(pos));
      }
      long long value = 0;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
        value = value * 10 + (text[pos] - '0');
        if (value > max_n) {
          throw ParseError(ParseError::Kind::LimitExceeded,
                           "part exceeds the n cap of " + std::to_string(max_n));
        }
        ++pos;
      }
      if (value == 0) {
        throw ParseError(ParseError::Kind::ZeroPart, "parts must be at least 1");
      }
      parts.push_back(static_cast<int>(value));
      expect_int = false;
    } else if (c == '|') {
      ++pos;
      expect_int = true;
    } else {
      break;
    }
  }
  if (expect_int) {
    throw ParseError(ParseError::Kind::Syntax, "dangling separator or empty composition");
  }
  return parts;
}

}  // namespace

SeaweedType parse_type(std::string_view text, int max_n) {
  size_t pos = 0;
  std::vector<int> top = parse_parts(text, pos, max_n);
  if (pos >= text.size() || text[pos] != '/') {
    throw ParseError(ParseError::Kind::Syntax, "expected '/' between the two compositions");
  }
  ++pos;
  std::vector<int> bottom = parse_parts(text, pos, max_n);
  if (pos != text.size()) {
    throw ParseError(ParseError::Kind::Syntax,
                     "trailing characters at offset " + std::to_string(pos));
  }
  Composition t(std::move(top));
  Composition b(std::move(bottom));
  if (t.n() > max_n) {
    throw ParseError(ParseError::Kind::LimitExceeded,
                     "n = " + std::to_string(t.n()) + " exceeds the cap of " +
                         std::to_string(max_n));
  }
  return SeaweedType(std::move(t), std::move(b));
}

SeaweedType parse_type(std::string_view text) { return parse_type(text, max_n_limit()); }

std::string format_type(const SeaweedType& t) {
  std::string out;
  auto append = [&out](const Composition& c) {
    for (int k = 0; k < c.size(); ++k) {
      if (k > 0) out += '|';
      out += std::to_string(c[k]);
    }
  };
  append(t.top());
  out += '/';
  append(t.bottom());
  return out;
}

Composition composition_from_mask(int n, unsigned long long mask) {
  std::vector<int> parts;
  int run = 0;
  for (int k = 0; k < n; ++k) {
    ++run;
    bool cut = k + 1 < n && (mask >> k) & 1ULL;
    if (cut || k + 1 == n) {
      parts.push_back(run);
      run = 0;
    }
  }
  return Composition(std::move(parts));
}

std::vector<Composition> all_compositions(int n) {
  if (n < 1) throw RangeError("compositions need n >= 1");
  std::vector<Composition> out;
  unsigned long long count = 1ULL << (n - 1);
  out.reserve(count);
  for (unsigned long long mask = 0; mask < count; ++mask) {
    out.push_back(composition_from_mask(n, mask));
  }
  return out;
}

}  // namespace seaweed
