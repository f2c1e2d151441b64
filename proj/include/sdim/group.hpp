#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "sdim/error.hpp"
#include "sdim/group_spec.hpp"

namespace sdim {

using Element = std::uint32_t;

// Groups up to this order are checked for associativity on construction.
inline constexpr std::size_t kAssociativityCheckLimit = 128;

enum class AssociativityCheck {
  Auto,     // full triple loop when n <= kAssociativityCheckLimit, otherwise refuse
  Trusted,  // caller vouches for associativity (built-in families, closures)
};

// Finite group as a multiplication table over element indices 0..n-1.
// Immutable after construction.
class Group {
 public:
  Group(std::size_t n, std::vector<Element> table, GroupSpec spec,
        AssociativityCheck check = AssociativityCheck::Auto)
      : n_(n), table_(std::move(table)), spec_(std::move(spec)) {
    if (n_ == 0) throw Error(ErrorKind::NotAGroup, "group must have at least one element");
    if (table_.size() != n_ * n_) throw Error(ErrorKind::NotAGroup, "table size does not match order");
    check_latin_square();
    find_identity();
    if (check == AssociativityCheck::Auto || n_ <= kAssociativityCheckLimit) {
      if (n_ > kAssociativityCheckLimit)
        throw Error(ErrorKind::InvalidSpec, "order " + std::to_string(n_) +
                                                " exceeds the associativity check limit; pass the trust flag");
      check_associativity();
    }
    inverse_.assign(n_, 0);
    for (Element x = 0; x < n_; ++x)
      for (Element y = 0; y < n_; ++y)
        if (op(x, y) == identity_) inverse_[x] = y;
  }

  std::size_t order() const noexcept { return n_; }
  Element identity() const noexcept { return identity_; }
  Element op(Element x, Element y) const noexcept { return table_[static_cast<std::size_t>(x) * n_ + y]; }
  Element inverse(Element x) const noexcept { return inverse_[x]; }
  std::span<const Element> row(Element x) const noexcept {
    return {table_.data() + static_cast<std::size_t>(x) * n_, n_};
  }
  const GroupSpec& spec() const noexcept { return spec_; }

  Element power(Element x, std::uint64_t k) const noexcept {
    Element r = identity_;
    while (k-- > 0) r = op(r, x);
    return r;
  }

 private:
  void check_latin_square() const {
    std::vector<std::uint8_t> seen(n_);
    for (std::size_t i = 0; i < n_; ++i) {
      std::fill(seen.begin(), seen.end(), 0);
      for (std::size_t j = 0; j < n_; ++j) {
        Element v = table_[i * n_ + j];
        if (v >= n_ || seen[v]) throw Error(ErrorKind::NotAGroup, "row " + std::to_string(i) + " is not a permutation");
        seen[v] = 1;
      }
    }
    for (std::size_t j = 0; j < n_; ++j) {
      std::fill(seen.begin(), seen.end(), 0);
      for (std::size_t i = 0; i < n_; ++i) {
        Element v = table_[i * n_ + j];
        if (seen[v]) throw Error(ErrorKind::NotAGroup, "column " + std::to_string(j) + " is not a permutation");
        seen[v] = 1;
      }
    }
  }

  void find_identity() {
    for (Element e = 0; e < n_; ++e) {
      bool ok = true;
      for (Element x = 0; x < n_ && ok; ++x) ok = op(e, x) == x && op(x, e) == x;
      if (ok) {
        identity_ = e;
        return;
      }
    }
    throw Error(ErrorKind::NotAGroup, "no identity element");
  }

  void check_associativity() const {
    for (Element a = 0; a < n_; ++a)
      for (Element b = 0; b < n_; ++b) {
        Element ab = op(a, b);
        for (Element c = 0; c < n_; ++c)
          if (op(ab, c) != op(a, op(b, c)))
            throw Error(ErrorKind::NotAGroup, "associativity fails for (" + std::to_string(a) + "," +
                                                  std::to_string(b) + "," + std::to_string(c) + ")");
      }
  }

  std::size_t n_;
  std::vector<Element> table_;
  GroupSpec spec_;
  Element identity_ = 0;
  std::vector<Element> inverse_;
};

// Least k >= 1 with x^k = e.
inline std::uint64_t element_order(const Group& g, Element x) {
  std::uint64_t k = 1;
  for (Element y = x; y != g.identity(); y = g.op(y, x)) ++k;
  return k;
}

inline std::vector<std::uint64_t> element_orders(const Group& g) {
  std::vector<std::uint64_t> out(g.order());
  for (Element x = 0; x < g.order(); ++x) out[x] = element_order(g, x);
  return out;
}

// Scans for an element of order n rather than trusting the spec, so that
// Cayley and permutation inputs are classified correctly.
inline bool is_cyclic(const Group& g) {
  for (Element x = 0; x < g.order(); ++x)
    if (element_order(g, x) == g.order()) return true;
  return false;
}

// True iff every element order is 1 or a prime power.
inline bool is_cp_group(const Group& g) {
  for (Element x = 0; x < g.order(); ++x)
    if (!is_prime_power_or_one(element_order(g, x))) return false;
  return true;
}

}  // namespace sdim
