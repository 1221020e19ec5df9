#pragma once

// Values extracted from a polynomial come back in storage order, which
// carries no meaning outside the polynomial they came from. Disord tags such
// a sequence with a provenance hash and refuses elementwise work between
// sequences of different provenance.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <functional>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "mvp/errors.hpp"
#include "mvp/mvp.hpp"

namespace mvp {

template <typename V>
class Disord {
public:
    using value_type = V;

    Disord(std::vector<V> values, std::string hash) : values_(std::move(values)), hash_(std::move(hash)) {}

    const std::vector<V>& values() const noexcept { return values_; }
    const std::string& hash() const noexcept { return hash_; }
    std::size_t size() const noexcept { return values_.size(); }
    bool empty() const noexcept { return values_.empty(); }
    auto begin() const noexcept { return values_.begin(); }
    auto end() const noexcept { return values_.end(); }

    // Elementwise f; the hash is kept.
    template <typename F>
    auto map(F&& f) const {
        using W = std::decay_t<std::invoke_result_t<F&, const V&>>;
        std::vector<W> out;
        out.reserve(values_.size());
        for (const V& v : values_) out.push_back(f(v));
        return Disord<W>(std::move(out), hash_);
    }

    // Elements where mask is true. The result is a new object with a fresh hash.
    Disord filter(const Disord<bool>& mask) const;

    // Replace masked elements with a scalar; the hash is kept.
    Disord assign(const Disord<bool>& mask, const V& replacement) const;

    // Replace masked elements from `replacement`, which must carry either this
    // object's hash (full length, masked positions are taken) or the hash of
    // filter(mask) (one value per masked element, in order).
    Disord assign(const Disord<bool>& mask, const Disord<V>& replacement) const;

    friend bool operator==(const Disord&, const Disord&) = default;

private:
    std::vector<V> values_;
    std::string hash_;
};

// Hash of the object obtained by filtering an object with hash `parent` by `mask`.
std::string filtered_hash(const std::string& parent, const std::vector<bool>& mask);

inline void require_same_hash(const std::string& a, const std::string& b) {
    if (a != b) throw HashMismatch(a, b);
}

// Elementwise f over two objects of the same provenance; the hash is kept.
template <typename V, typename W, typename F>
auto zip(const Disord<V>& a, const Disord<W>& b, F&& f) {
    require_same_hash(a.hash(), b.hash());
    using U = std::decay_t<std::invoke_result_t<F&, const V&, const W&>>;
    std::vector<U> out;
    out.reserve(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out.push_back(f(a.values()[i], b.values()[i]));
    return Disord<U>(std::move(out), a.hash());
}

template <typename V>
Disord<V> Disord<V>::filter(const Disord<bool>& mask) const {
    require_same_hash(hash_, mask.hash());
    std::vector<V> out;
    for (std::size_t i = 0; i < values_.size(); ++i) {
        if (mask.values()[i]) out.push_back(values_[i]);
    }
    return Disord(std::move(out), filtered_hash(hash_, mask.values()));
}

template <typename V>
Disord<V> Disord<V>::assign(const Disord<bool>& mask, const V& replacement) const {
    require_same_hash(hash_, mask.hash());
    std::vector<V> out = values_;
    for (std::size_t i = 0; i < out.size(); ++i) {
        if (mask.values()[i]) out[i] = replacement;
    }
    return Disord(std::move(out), hash_);
}

template <typename V>
Disord<V> Disord<V>::assign(const Disord<bool>& mask, const Disord<V>& replacement) const {
    require_same_hash(hash_, mask.hash());
    std::vector<V> out = values_;
    if (replacement.hash() == hash_) {
        for (std::size_t i = 0; i < out.size(); ++i) {
            if (mask.values()[i]) out[i] = replacement.values()[i];
        }
        return Disord(std::move(out), hash_);
    }
    require_same_hash(filtered_hash(hash_, mask.values()), replacement.hash());
    std::size_t next = 0;
    for (std::size_t i = 0; i < out.size(); ++i) {
        if (mask.values()[i]) out[i] = replacement.values()[next++];
    }
    return Disord(std::move(out), hash_);
}

// Arithmetic and comparison sugar for numeric disords, mirroring vector idiom.
template <typename V>
    requires std::is_arithmetic_v<V>
Disord<V> operator+(const Disord<V>& a, const Disord<V>& b) { return zip(a, b, std::plus<V>{}); }
template <typename V>
    requires std::is_arithmetic_v<V>
Disord<V> operator-(const Disord<V>& a, const Disord<V>& b) { return zip(a, b, std::minus<V>{}); }
template <typename V>
    requires std::is_arithmetic_v<V>
Disord<V> operator*(const Disord<V>& a, const Disord<V>& b) { return zip(a, b, std::multiplies<V>{}); }

inline Disord<double> operator+(const Disord<double>& a, double c) { return a.map([c](double v) { return v + c; }); }
inline Disord<double> operator-(const Disord<double>& a, double c) { return a.map([c](double v) { return v - c; }); }
inline Disord<double> operator*(const Disord<double>& a, double c) { return a.map([c](double v) { return v * c; }); }
inline Disord<bool> operator>(const Disord<double>& a, double c) { return a.map([c](double v) { return v > c; }); }
inline Disord<bool> operator<(const Disord<double>& a, double c) { return a.map([c](double v) { return v < c; }); }
inline Disord<double> abs(const Disord<double>& a) { return a.map([](double v) { return std::abs(v); }); }
inline Disord<double> pow(const Disord<double>& a, double e) { return a.map([e](double v) { return std::pow(v, e); }); }
inline double sum(const Disord<double>& a) {
    double s = 0.0;
    for (double v : a) s += v;
    return s;
}

// One term's exponent signature as parallel arrays.
struct PowerRow {
    std::vector<Symbol> symbols;
    std::vector<Power> powers;

    friend bool operator==(const PowerRow&, const PowerRow&) = default;
};

// Extractions in storage order, all carrying content_hash(p), so they can be
// combined with each other but not with extractions from another polynomial.
Disord<double> coeffs(const Mvp& p);
Disord<PowerRow> powers(const Mvp& p);
Disord<std::vector<Symbol>> vars(const Mvp& p);

/// Replace the coefficients of p positionally. d must carry p's hash and one
/// value per term; zero values delete their terms.
Mvp set_coeffs(const Mvp& p, const Disord<double>& d);

// "A disord object with hash <hex> and elements\n[1] ...\n(in some order)"
std::string to_string(const Disord<double>& d);
std::string to_string(const Disord<bool>& d);
std::string to_string(const Disord<PowerRow>& d);
std::string to_string(const Disord<std::vector<Symbol>>& d);

}  // namespace mvp
