#include "mvp/serialize.hpp"

#include <openssl/evp.h>

#include <array>
#include <cstdio>
#include <memory>

#include "json.hpp"
#include "mvp/errors.hpp"

namespace mvp {

using ordered_json = nlohmann::ordered_json;

std::string to_json(const Mvp& p) {
    ordered_json terms = ordered_json::array();
    for (const auto& [term, coeff] : p) {
        ordered_json powers = ordered_json::object();
        for (const auto& [name, power] : term) powers[name] = power;
        ordered_json entry;
        entry["powers"] = std::move(powers);
        entry["coeff"] = coeff;
        terms.push_back(std::move(entry));
    }
    ordered_json doc;
    doc["terms"] = std::move(terms);
    return doc.dump();
}

Mvp from_json(std::string_view text) {
    ordered_json doc;
    try {
        doc = ordered_json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(e.byte == 0 ? 0 : e.byte - 1, e.what());
    }
    if (!doc.is_object() || !doc.contains("terms") || !doc["terms"].is_array()) {
        throw ParseError(0, "expected an object with a \"terms\" array");
    }
    Mvp p;
    for (const auto& entry : doc["terms"]) {
        if (!entry.is_object() || !entry.contains("coeff") || !entry["coeff"].is_number()) {
            throw ParseError(0, "term entry needs a numeric \"coeff\"");
        }
        std::vector<Term::Entry> raw;
        if (entry.contains("powers")) {
            const auto& powers = entry["powers"];
            if (!powers.is_object()) throw ParseError(0, "\"powers\" must be an object");
            for (const auto& [name, power] : powers.items()) {
                if (!power.is_number_integer()) throw ParseError(0, "power of '" + name + "' must be an integer");
                raw.emplace_back(name, power.get<Power>());
            }
        }
        p.accumulate(Term::from_pairs(std::move(raw)), entry["coeff"].get<double>());
    }
    return p;
}

std::string sha1_hex(std::string_view bytes) {
    std::array<unsigned char, EVP_MAX_MD_SIZE> md{};
    unsigned int len = 0;
    std::unique_ptr<EVP_MD_CTX, decltype(&EVP_MD_CTX_free)> ctx(EVP_MD_CTX_new(), EVP_MD_CTX_free);
    if (!ctx || EVP_DigestInit_ex(ctx.get(), EVP_sha1(), nullptr) != 1 ||
        EVP_DigestUpdate(ctx.get(), bytes.data(), bytes.size()) != 1 ||
        EVP_DigestFinal_ex(ctx.get(), md.data(), &len) != 1) {
        throw Error("SHA-1 digest failed");
    }
    std::string hex;
    hex.reserve(2 * len);
    for (unsigned int i = 0; i < len; ++i) {
        char buf[3];
        std::snprintf(buf, sizeof buf, "%02x", md[i]);
        hex += buf;
    }
    return hex;
}

std::string content_hash(const Mvp& p) {
    return sha1_hex(to_json(p));
}

}  // namespace mvp
