#pragma once

#include <cstddef>
#include <map>
#include <set>
#include <string_view>
#include <vector>

#include "mvp/term.hpp"

namespace mvp {

/// Sparse multivariate Laurent polynomial: a map from Term to nonzero
/// double coefficient. The empty map is the zero polynomial and the empty
/// Term carries the constant.
///
/// Values are immutable once shared; every library operation returns a new
/// polynomial. accumulate() is the single insertion primitive and is the only
/// place where coefficients are created, summed, or deleted.
class Mvp {
public:
    using Map = std::map<Term, double>;
    using const_iterator = Map::const_iterator;

    Mvp() = default;
    explicit Mvp(double constant);

    static Mvp monomial(Term term, double coeff = 1.0);
    static Mvp variable(std::string_view name);

    // Adds c to the coefficient of t, erasing the entry if the sum is exactly 0.
    void accumulate(const Term& t, double c);
    void accumulate(Term&& t, double c);

    // Union of polynomials with pairwise disjoint term sets, reusing their
    // nodes. Linear in the total size for a fixed number of parts.
    static Mvp merge_disjoint(std::vector<Mvp>&& parts);

    double coefficient(const Term& t) const;
    double constant() const;

    bool is_zero() const noexcept { return terms_.empty(); }
    bool is_constant() const noexcept { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty()); }
    std::size_t size() const noexcept { return terms_.size(); }

    const_iterator begin() const noexcept { return terms_.begin(); }
    const_iterator end() const noexcept { return terms_.end(); }
    const Map& terms() const noexcept { return terms_; }

    std::set<Symbol> symbols() const;

    friend bool operator==(const Mvp&, const Mvp&) = default;

private:
    Map terms_;
};

// Functional form of Mvp::accumulate.
Mvp accumulate(Mvp p, const Term& t, double c);

// Coefficient of the empty term, or 0.
inline double constant(const Mvp& p) { return p.constant(); }

/// Same term set, and every coefficient pair within rel_tol relative to the
/// larger magnitude (or abs_tol absolutely, for values near zero).
bool approx_equal(const Mvp& p, const Mvp& q, double rel_tol = 1e-12, double abs_tol = 0.0);

}  // namespace mvp
