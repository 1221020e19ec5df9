#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace mvp {

using Symbol = std::string;
using Power = std::int64_t;

// True if name matches [A-Za-z][A-Za-z0-9_]*.
bool is_valid_symbol(std::string_view name) noexcept;

/// A monomial's exponent signature: symbol -> nonzero power, kept sorted by
/// symbol name. The empty term is the constant term.
///
/// Terms compare lexicographically on their (symbol, power) sequences, which
/// is the canonical storage and display order of polynomial terms.
class Term {
public:
    using Entry = std::pair<Symbol, Power>;
    using const_iterator = std::vector<Entry>::const_iterator;

    Term() = default;

    /// Merge repeated symbols by adding powers and drop zero powers.
    /// Throws DomainError on an invalid symbol name or power overflow.
    static Term from_pairs(std::vector<Entry> raw);
    static Term from_pairs(std::initializer_list<Entry> raw) { return from_pairs(std::vector<Entry>(raw)); }

    static Term variable(std::string_view name, Power power = 1);

    bool empty() const noexcept { return entries_.empty(); }
    std::size_t size() const noexcept { return entries_.size(); }
    const_iterator begin() const noexcept { return entries_.begin(); }
    const_iterator end() const noexcept { return entries_.end(); }
    const std::vector<Entry>& entries() const noexcept { return entries_; }

    // 0 when the symbol is absent.
    Power power_of(std::string_view name) const noexcept;
    bool contains(std::string_view name) const noexcept { return power_of(name) != 0; }

    // Sum of all powers, negatives included.
    Power total_degree() const;

    // Copy with `name` removed.
    Term without(std::string_view name) const;
    // Copy with the power of `name` replaced (removed when power == 0).
    Term with_power(std::string_view name, Power power) const;
    // Every power negated.
    Term inverted() const;

    friend Term operator*(const Term& lhs, const Term& rhs);

    friend bool operator==(const Term&, const Term&) = default;
    friend auto operator<=>(const Term& lhs, const Term& rhs) { return lhs.entries_ <=> rhs.entries_; }

private:
    std::vector<Entry> entries_;
};

struct TermHash {
    std::size_t operator()(const Term& t) const noexcept;
};

// Overflow-checked power arithmetic; throws DomainError.
Power checked_add(Power a, Power b);
Power checked_negate(Power a);

}  // namespace mvp
