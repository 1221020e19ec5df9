#include "mvp/disord.hpp"

#include "mvp/printer.hpp"
#include "mvp/serialize.hpp"

namespace mvp {

std::string filtered_hash(const std::string& parent, const std::vector<bool>& mask) {
    std::string key = "filter:" + parent + ":";
    for (bool m : mask) key += m ? '1' : '0';
    return sha1_hex(key);
}

Disord<double> coeffs(const Mvp& p) {
    std::vector<double> out;
    out.reserve(p.size());
    for (const auto& [term, coeff] : p) out.push_back(coeff);
    return {std::move(out), content_hash(p)};
}

Disord<PowerRow> powers(const Mvp& p) {
    std::vector<PowerRow> out;
    out.reserve(p.size());
    for (const auto& [term, coeff] : p) {
        PowerRow row;
        for (const auto& [name, power] : term) {
            row.symbols.push_back(name);
            row.powers.push_back(power);
        }
        out.push_back(std::move(row));
    }
    return {std::move(out), content_hash(p)};
}

Disord<std::vector<Symbol>> vars(const Mvp& p) {
    std::vector<std::vector<Symbol>> out;
    out.reserve(p.size());
    for (const auto& [term, coeff] : p) {
        std::vector<Symbol> names;
        for (const auto& [name, power] : term) names.push_back(name);
        out.push_back(std::move(names));
    }
    return {std::move(out), content_hash(p)};
}

Mvp set_coeffs(const Mvp& p, const Disord<double>& d) {
    require_same_hash(content_hash(p), d.hash());
    if (d.size() != p.size()) throw DomainError("coefficient count does not match the number of terms");
    Mvp out;
    std::size_t i = 0;
    for (const auto& [term, coeff] : p) out.accumulate(term, d.values()[i++]);
    return out;
}

namespace {

template <typename V, typename F>
std::string describe(const Disord<V>& d, F&& element) {
    std::string s = "A disord object with hash " + d.hash() + " and elements\n[1]";
    for (const auto& v : d) s += " " + element(v);
    s += "\n(in some order)";
    return s;
}

}  // namespace

std::string to_string(const Disord<double>& d) {
    return describe(d, [](double v) { return format_number(v); });
}

std::string to_string(const Disord<bool>& d) {
    return describe(d, [](bool v) { return std::string(v ? "TRUE" : "FALSE"); });
}

std::string to_string(const Disord<PowerRow>& d) {
    return describe(d, [](const PowerRow& row) {
        std::string s = "(";
        for (std::size_t i = 0; i < row.symbols.size(); ++i) {
            if (i) s += ",";
            s += row.symbols[i] + "=" + std::to_string(row.powers[i]);
        }
        return s + ")";
    });
}

std::string to_string(const Disord<std::vector<Symbol>>& d) {
    return describe(d, [](const std::vector<Symbol>& names) {
        std::string s = "(";
        for (std::size_t i = 0; i < names.size(); ++i) s += (i ? "," : "") + names[i];
        return s + ")";
    });
}

}  // namespace mvp
