#pragma once

#include <cstdint>
#include <string>
#include <vector>

// String-level operations shared by the command-line tool and the python
// bindings: parse, compute, print canonically.  Exact throughout; domain
// failures raise sinv::DomainError and malformed input sinv::ParseError.

namespace sinv::api {

struct Config {
  std::string field = "rational";  // "rational" or "fp:<odd prime>"
  unsigned window_cap = 48;        // truncation-oracle escalation cap
  std::uint64_t seed = 1;          // randomized helpers (reserved)
};

struct FactorResult {
  std::string scalar;
  long theta_power = 0;
  std::vector<std::string> word1, word2;  // serialized letters
  std::string detbar1, detbar2;
};

// Canonical normal form of an expression.
std::string nf(const Config& cfg, const std::string& expr);

// Apply the element to a basis monomial x1^a*x2^b of the polynomial module;
// the result is a polynomial, printed as an element.
std::string act(const Config& cfg, const std::string& expr,
                const std::string& monomial);

// Fredholm index with detection: pure one-factor elements go through the
// scalar symbol, scalar-plus-block elements through the block symbol.
// `method` (if non-null) receives "scalar" or "block:<factor>".
long index_auto(const Config& cfg, const std::string& expr,
                std::string* method = nullptr);

// Component index of a unit congruent to 1 modulo the ideal sum.
long ind(const Config& cfg, int i, const std::string& expr);

// Determinant of a 1 + finite-block unit.
std::string det(const Config& cfg, const std::string& expr);

// Symbol determinant scalar of a unit of 1 + (factor-i block ideal).
std::string detbar(const Config& cfg, int i, const std::string& expr);

// Exact inverse of a unit, via the full factorization.
std::string invert(const Config& cfg, const std::string& expr);

// Full unit factorization certificate.
FactorResult factor(const Config& cfg, const std::string& expr);

// The x <-> y anti-automorphism.
std::string eta(const Config& cfg, const std::string& expr);

// Apply an automorphism word (S / T l1 l2 / W <unit> lines) to an element.
std::string auto_apply(const Config& cfg, const std::string& word_text,
                       const std::string& expr);

}  // namespace sinv::api
