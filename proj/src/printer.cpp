#include "mvp/printer.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <map>

#include "mvp/errors.hpp"

namespace mvp {

namespace {

std::string fixed(double value, int decimals) {
    const int n = std::snprintf(nullptr, 0, "%.*f", decimals, value);
    std::string s(static_cast<std::size_t>(n) + 1, '\0');
    std::snprintf(s.data(), s.size(), "%.*f", decimals, value);
    s.resize(static_cast<std::size_t>(n));
    return s;
}

void strip_zeros(std::string& s) {
    if (s.find('.') == std::string::npos) return;
    while (s.back() == '0') s.pop_back();
    if (s.back() == '.') s.pop_back();
}

std::string format_entry(const Term::Entry& e) {
    return e.second == 1 ? e.first : e.first + "^" + std::to_string(e.second);
}

void append_term(std::string& out, bool first, double coeff, const std::vector<const Term::Entry*>& entries,
                 int digits) {
    if (first) {
        if (coeff < 0) out += '-';
    } else {
        out += coeff < 0 ? " - " : " + ";
    }
    const double magnitude = std::abs(coeff);
    bool need_space = false;
    if (magnitude != 1.0 || entries.empty()) {
        out += format_number(magnitude, digits);
        need_space = true;
    }
    for (const auto* e : entries) {
        if (need_space) out += ' ';
        out += format_entry(*e);
        need_space = true;
    }
}

}  // namespace

std::string format_number(double value, int digits) {
    if (!std::isfinite(value)) return std::isnan(value) ? "NaN" : (value > 0 ? "Inf" : "-Inf");
    if (value == 0.0) return "0";
    if (value == std::trunc(value)) return fixed(value, 0);
    if (digits <= 0) {
        std::array<char, 1100> buf{};
        auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), value, std::chars_format::fixed);
        return std::string(buf.data(), ptr);
    }
    const int exponent = static_cast<int>(std::floor(std::log10(std::abs(value))));
    std::string s = fixed(value, std::max(0, digits - 1 - exponent));
    strip_zeros(s);
    return s;
}

std::string render(const Mvp& p, const RenderOptions& options) {
    if (p.is_zero()) return "0";
    std::string out;

    if (options.order == Order::canonical) {
        bool first = true;
        std::vector<const Term::Entry*> entries;
        for (const auto& [term, coeff] : p) {
            entries.clear();
            for (const auto& e : term) entries.push_back(&e);
            append_term(out, first, coeff, entries, options.digits);
            first = false;
        }
        return out;
    }

    std::vector<Symbol> varorder = options.varorder;
    if (varorder.empty()) {
        const auto symbols = p.symbols();
        varorder.assign(symbols.begin(), symbols.end());
    }
    std::map<Symbol, std::size_t> rank;
    for (std::size_t i = 0; i < varorder.size(); ++i) rank.emplace(varorder[i], i);
    for (const auto& name : p.symbols()) {
        if (!rank.contains(name)) throw DomainError("varorder does not mention '" + name + "'");
    }

    struct Row {
        std::vector<Power> key;
        std::vector<const Term::Entry*> entries;
        double coeff;
    };
    std::vector<Row> rows;
    rows.reserve(p.size());
    for (const auto& [term, coeff] : p) {
        Row row{std::vector<Power>(varorder.size(), 0), {}, coeff};
        for (const auto& e : term) {
            row.key[rank.at(e.first)] = e.second;
            row.entries.push_back(&e);
        }
        std::sort(row.entries.begin(), row.entries.end(),
                  [&](const auto* a, const auto* b) { return rank.at(a->first) < rank.at(b->first); });
        rows.push_back(std::move(row));
    }
    std::sort(rows.begin(), rows.end(), [](const Row& a, const Row& b) { return a.key > b.key; });

    bool first = true;
    for (const auto& row : rows) {
        append_term(out, first, row.coeff, row.entries, options.digits);
        first = false;
    }
    return out;
}

std::string render_series(const SeriesDecomposition& s, const RenderOptions& options) {
    if (s.components.empty()) return "0";
    std::string out;
    for (const auto& [k, coefficient] : s.components) {
        if (!out.empty()) out += " + ";
        out += s.head() + "^" + std::to_string(k) + "(" + render(coefficient, options) + ")";
    }
    return out;
}

}  // namespace mvp
