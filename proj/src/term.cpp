#include "mvp/term.hpp"

#include <algorithm>
#include <functional>
#include <limits>

#include "mvp/errors.hpp"

namespace mvp {

namespace {

bool is_alpha(char c) { return (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z'); }
bool is_digit(char c) { return c >= '0' && c <= '9'; }

}  // namespace

bool is_valid_symbol(std::string_view name) noexcept {
    if (name.empty() || !is_alpha(name.front())) return false;
    return std::all_of(name.begin() + 1, name.end(), [](char c) { return is_alpha(c) || is_digit(c) || c == '_'; });
}

Power checked_add(Power a, Power b) {
    Power out;
    if (__builtin_add_overflow(a, b, &out)) throw DomainError("power overflow");
    return out;
}

Power checked_negate(Power a) {
    if (a == std::numeric_limits<Power>::min()) throw DomainError("power overflow");
    return -a;
}

Term Term::from_pairs(std::vector<Entry> raw) {
    for (const auto& [name, power] : raw) {
        if (!is_valid_symbol(name)) throw DomainError("invalid symbol name '" + name + "'");
    }
    std::stable_sort(raw.begin(), raw.end(), [](const Entry& a, const Entry& b) { return a.first < b.first; });

    Term t;
    t.entries_.reserve(raw.size());
    for (auto& entry : raw) {
        if (!t.entries_.empty() && t.entries_.back().first == entry.first) {
            t.entries_.back().second = checked_add(t.entries_.back().second, entry.second);
        } else {
            t.entries_.push_back(std::move(entry));
        }
    }
    std::erase_if(t.entries_, [](const Entry& e) { return e.second == 0; });
    return t;
}

Term Term::variable(std::string_view name, Power power) {
    return from_pairs({Entry{Symbol(name), power}});
}

Power Term::power_of(std::string_view name) const noexcept {
    auto it = std::lower_bound(entries_.begin(), entries_.end(), name,
                               [](const Entry& e, std::string_view n) { return e.first < n; });
    return (it != entries_.end() && it->first == name) ? it->second : 0;
}

Power Term::total_degree() const {
    Power sum = 0;
    for (const auto& e : entries_) sum = checked_add(sum, e.second);
    return sum;
}

Term Term::without(std::string_view name) const {
    Term t;
    t.entries_.reserve(entries_.size());
    for (const auto& e : entries_) {
        if (e.first != name) t.entries_.push_back(e);
    }
    return t;
}

Term Term::with_power(std::string_view name, Power power) const {
    Term t = without(name);
    if (power != 0) {
        if (!is_valid_symbol(name)) throw DomainError("invalid symbol name '" + std::string(name) + "'");
        auto it = std::lower_bound(t.entries_.begin(), t.entries_.end(), name,
                                   [](const Entry& e, std::string_view n) { return e.first < n; });
        t.entries_.insert(it, Entry{Symbol(name), power});
    }
    return t;
}

Term Term::inverted() const {
    Term t = *this;
    for (auto& e : t.entries_) e.second = checked_negate(e.second);
    return t;
}

std::size_t TermHash::operator()(const Term& t) const noexcept {
    std::size_t h = 0x9e3779b97f4a7c15ull;
    for (const auto& [name, power] : t) {
        h ^= std::hash<std::string>{}(name) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
        h ^= std::hash<Power>{}(power) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    }
    return h;
}

Term operator*(const Term& lhs, const Term& rhs) {
    Term out;
    out.entries_.reserve(lhs.entries_.size() + rhs.entries_.size());
    auto a = lhs.entries_.begin();
    auto b = rhs.entries_.begin();
    while (a != lhs.entries_.end() && b != rhs.entries_.end()) {
        if (a->first < b->first) {
            out.entries_.push_back(*a++);
        } else if (b->first < a->first) {
            out.entries_.push_back(*b++);
        } else {
            Power p = checked_add(a->second, b->second);
            if (p != 0) out.entries_.emplace_back(a->first, p);
            ++a;
            ++b;
        }
    }
    out.entries_.insert(out.entries_.end(), a, lhs.entries_.end());
    out.entries_.insert(out.entries_.end(), b, rhs.entries_.end());
    return out;
}

}  // namespace mvp
