#include "mvp/mvp.hpp"

#include <algorithm>
#include <cmath>

namespace mvp {

Mvp::Mvp(double constant) {
    accumulate(Term{}, constant);
}

Mvp Mvp::monomial(Term term, double coeff) {
    Mvp p;
    p.accumulate(term, coeff);
    return p;
}

Mvp Mvp::variable(std::string_view name) {
    return monomial(Term::variable(name));
}

void Mvp::accumulate(const Term& t, double c) {
    if (c == 0.0) return;
    auto [it, inserted] = terms_.try_emplace(t, c);
    if (inserted) return;
    it->second += c;
    if (it->second == 0.0) terms_.erase(it);
}

void Mvp::accumulate(Term&& t, double c) {
    if (c == 0.0) return;
    auto [it, inserted] = terms_.try_emplace(std::move(t), c);
    if (inserted) return;
    it->second += c;
    if (it->second == 0.0) terms_.erase(it);
}

Mvp Mvp::merge_disjoint(std::vector<Mvp>&& parts) {
    Mvp out;
    while (true) {
        Mvp* next = nullptr;
        for (auto& part : parts) {
            if (part.terms_.empty()) continue;
            if (!next || part.terms_.begin()->first < next->terms_.begin()->first) next = &part;
        }
        if (!next) break;
        out.terms_.insert(out.terms_.end(), next->terms_.extract(next->terms_.begin()));
    }
    return out;
}

double Mvp::coefficient(const Term& t) const {
    auto it = terms_.find(t);
    return it == terms_.end() ? 0.0 : it->second;
}

double Mvp::constant() const {
    if (terms_.empty() || !terms_.begin()->first.empty()) return 0.0;
    return terms_.begin()->second;
}

std::set<Symbol> Mvp::symbols() const {
    std::set<Symbol> out;
    for (const auto& [term, coeff] : terms_) {
        for (const auto& [name, power] : term) out.insert(name);
    }
    return out;
}

Mvp accumulate(Mvp p, const Term& t, double c) {
    p.accumulate(t, c);
    return p;
}

bool approx_equal(const Mvp& p, const Mvp& q, double rel_tol, double abs_tol) {
    if (p.size() != q.size()) return false;
    return std::equal(p.begin(), p.end(), q.begin(), [&](const auto& a, const auto& b) {
        if (a.first != b.first) return false;
        double diff = std::abs(a.second - b.second);
        double scale = std::max(std::abs(a.second), std::abs(b.second));
        return diff <= abs_tol || diff <= rel_tol * scale;
    });
}

}  // namespace mvp
