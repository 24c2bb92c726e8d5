#pragma once

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "dilates/bitvec.hpp"
#include "dilates/errors.hpp"

namespace dilates {

bool is_prime(std::int64_t n);

/// A finite subset of Z/pZ, p prime. Immutable after construction;
/// elements are kept strictly sorted in [0, p) and mirrored in a bit
/// vector for the sumset kernels.
class ResidueSet {
  public:
    // Reduces mod p, dedupes, sorts. Throws CompositeModulus unless p is prime.
    ResidueSet(std::int64_t p, std::vector<std::int64_t> elems);

    std::int64_t modulus() const { return p_; }
    const std::vector<std::int64_t>& elements() const { return elems_; }
    const BitVec& bits() const { return bits_; }
    std::int64_t size() const { return static_cast<std::int64_t>(elems_.size()); }
    bool empty() const { return elems_.empty(); }
    bool contains(std::int64_t r) const { return bits_.test(r); }

    /// c = |A| / p, the density of the set in the group.
    double density() const { return static_cast<double>(size()) / static_cast<double>(p_); }

    bool operator==(const ResidueSet& o) const {
        return p_ == o.p_ && elems_ == o.elems_;
    }

  private:
    std::int64_t p_;
    std::vector<std::int64_t> elems_;
    BitVec bits_;
};

/// A finite set of integers, strictly sorted.
class IntegerSet {
  public:
    IntegerSet() = default;
    explicit IntegerSet(std::vector<std::int64_t> elems);

    const std::vector<std::int64_t>& elements() const { return elems_; }
    std::int64_t size() const { return static_cast<std::int64_t>(elems_.size()); }
    bool empty() const { return elems_.empty(); }

    bool operator==(const IntegerSet&) const = default;

  private:
    std::vector<std::int64_t> elems_;
};

ResidueSet make_residue_set(std::int64_t p, const std::vector<std::int64_t>& elems);

/// t·A = { t·a mod p : a in A }.
ResidueSet dilate(const ResidueSet& a, std::int64_t t);

/// A + t·A over Z/pZ. Throws EmptyInput on an empty set.
ResidueSet sum_of_dilates(const ResidueSet& a, std::int64_t t);

/// A + t·A over Z.
IntegerSet integer_sum_of_dilates(const IntegerSet& a, std::int64_t t);

/// min(|A| + |B| - 1, p).
std::int64_t cauchy_davenport_bound(std::int64_t size_a, std::int64_t size_b, std::int64_t p);

/// Lexicographically smallest image of A under x -> ux + v with u a unit.
/// Idempotent; constant on affine orbits.
ResidueSet canonical_form(const ResidueSet& a);

// --- single-word kernel, p <= 63 -----------------------------------------
//
// Subsets represented as bit masks; used by the exhaustive searches where
// per-set object construction would dominate.

std::uint64_t dilate_mask(std::uint64_t mask, std::int64_t t, std::int64_t p);
std::uint64_t sum_of_dilates_mask(std::uint64_t mask, std::int64_t t, std::int64_t p);
std::vector<std::int64_t> mask_to_elements(std::uint64_t mask);

/// Canonical form of a subset-mask under the affine action; same orbit
/// representative as canonical_form on the equivalent ResidueSet.
std::uint64_t canonical_mask(std::uint64_t mask, std::int64_t p);

// --- set literal text format ----------------------------------------------
//
// Residue sets read as "p=11;{0,1,2}", integer sets as "{0,1,3}".
// Whitespace-tolerant. Throws ParseError on malformed input.

ResidueSet parse_residue_set(const std::string& text);
IntegerSet parse_integer_set(const std::string& text);
std::variant<ResidueSet, IntegerSet> parse_set_literal(const std::string& text);

std::string to_literal(const ResidueSet& a);
std::string to_literal(const IntegerSet& a);

}  // namespace dilates
