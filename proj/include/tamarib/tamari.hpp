#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tamarib/poset.hpp"

namespace tamarib {

/// Largest n accepted by the enumerators.
inline constexpr int kMaxEnumerationN = 10;

/// One entry of a type-B tuple: a finite integer or infinity.
///
/// Infinity compares above every finite value and absorbs subtraction, so
/// rule checks never need a special case for it. Finite values are not range
/// checked here; validation does that against a concrete n.
class TBSymbol {
public:
    constexpr TBSymbol() = default;
    static constexpr TBSymbol finite(int v) { return TBSymbol(v, false); }
    static constexpr TBSymbol inf() { return TBSymbol(0, true); }

    constexpr bool is_inf() const { return inf_; }
    constexpr bool is_finite() const { return !inf_; }
    /// Only meaningful for finite symbols.
    constexpr int value() const { return value_; }

    /// Integer weight with infinity counted as `n`.
    constexpr int weight(int n) const { return inf_ ? n : value_; }

    friend constexpr TBSymbol operator-(TBSymbol s, int m) { return s.inf_ ? s : finite(s.value_ - m); }

    friend constexpr bool operator==(TBSymbol a, TBSymbol b) {
        return a.inf_ == b.inf_ && (a.inf_ || a.value_ == b.value_);
    }
    friend constexpr std::strong_ordering operator<=>(TBSymbol a, TBSymbol b) {
        if (a.inf_ || b.inf_) return static_cast<int>(a.inf_) <=> static_cast<int>(b.inf_);
        return a.value_ <=> b.value_;
    }

private:
    constexpr TBSymbol(int v, bool inf) : value_(v), inf_(inf) {}
    int value_ = 0;
    bool inf_ = false;
};

/// Candidate element of the type-B Tamari lattice; may be invalid until checked.
class TBVector {
public:
    TBVector() = default;
    explicit TBVector(std::vector<TBSymbol> entries) : entries_(std::move(entries)) {}

    int n() const { return static_cast<int>(entries_.size()); }
    const std::vector<TBSymbol>& entries() const { return entries_; }
    /// 0-based access.
    TBSymbol operator[](std::size_t i) const { return entries_[i]; }
    TBSymbol& operator[](std::size_t i) { return entries_[i]; }

    friend bool operator==(const TBVector&, const TBVector&) = default;
    /// Lexicographic, infinity greatest. This is the enumeration order.
    friend auto operator<=>(const TBVector& a, const TBVector& b) { return a.entries_ <=> b.entries_; }

private:
    std::vector<TBSymbol> entries_;
};

/// Candidate element of the classical Tamari lattice (entries in 1..n).
class TAVector {
public:
    TAVector() = default;
    explicit TAVector(std::vector<int> entries) : entries_(std::move(entries)) {}

    int n() const { return static_cast<int>(entries_.size()); }
    const std::vector<int>& entries() const { return entries_; }
    int operator[](std::size_t i) const { return entries_[i]; }

    friend bool operator==(const TAVector&, const TAVector&) = default;
    friend auto operator<=>(const TAVector& a, const TAVector& b) { return a.entries_ <=> b.entries_; }

private:
    std::vector<int> entries_;
};

/// Entry out of range for its n. Distinct from a rule violation.
class MalformedVector : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Outcome of a membership check. Indices are 1-based; `j` is 0 when the
/// violated rule involves a single position.
struct Validation {
    bool valid = true;
    int rule = 0;  // 1 or 2 when invalid
    int i = 0;
    int j = 0;

    explicit operator bool() const { return valid; }
    std::string describe() const;
};

/// Checks both type-B membership rules:
///   (i)  for i < j with r_j - (j - i) >= 0, r_i <= r_j - (j - i);
///   (ii) if r_i is finite and r_i >= i, then r_{n+i-r_i} is infinite.
/// Throws MalformedVector if a finite entry lies outside [0, n-1] or n = 0.
Validation validate_type_b(const TBVector& v);

/// Checks both type-A rules: v_i >= i, and i <= j <= v_i implies v_j <= v_i.
/// Throws MalformedVector if an entry lies outside [1, n] or n = 0.
Validation validate_type_a(const TAVector& v);

/// Every element of T_n^B exactly once, in lexicographic order.
/// Throws std::invalid_argument for n outside [1, kMaxEnumerationN].
std::vector<TBVector> enumerate_type_b(int n);

/// Every element of T_n exactly once, in lexicographic order.
std::vector<TAVector> enumerate_type_a(int n);

/// Componentwise order. Throws std::invalid_argument on a length mismatch.
bool leq_componentwise(const TBVector& a, const TBVector& b);
bool leq_componentwise(const TAVector& a, const TAVector& b);

/// Sum of entries with each infinity counted as n.
int entry_sum(const TBVector& v);

/// Text form "(0,0,3,inf)".
std::string to_string(TBSymbol s);
std::string to_string(const TBVector& v);
std::string to_string(const TAVector& v);

/// Parses the text form. Accepts "inf" or "∞" for infinity and tolerates
/// surrounding whitespace. Throws std::invalid_argument on syntax errors.
TBVector parse_tb_vector(std::string_view text);
TAVector parse_ta_vector(std::string_view text);

/// The enumerated lattice together with its poset (indices agree).
struct TypeBLattice {
    int n = 0;
    std::vector<TBVector> elements;
    Poset poset;

    /// Index of `v`, if it is an element.
    std::optional<Index> index_of(const TBVector& v) const;
};

struct TypeALattice {
    int n = 0;
    std::vector<TAVector> elements;
    Poset poset;
};

TypeBLattice build_type_b_lattice(int n);
TypeALattice build_type_a_lattice(int n);

}  // namespace tamarib
