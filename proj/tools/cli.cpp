#include "cli.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <iostream>
#include <istream>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "mvp/all.hpp"
#include "mvp/kernels.hpp"

namespace mvp::cli {

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> parts;
    std::string cur;
    std::istringstream is(s);
    while (std::getline(is, cur, sep)) parts.push_back(cur);
    if (!s.empty() && s.back() == sep) parts.emplace_back();
    return parts;
}

std::string trim(const std::string& s) {
    const auto first = s.find_first_not_of(" \t\r\n");
    if (first == std::string::npos) return {};
    return s.substr(first, s.find_last_not_of(" \t\r\n") - first + 1);
}

// "3", "-0.5", "1/6", "-1/120"
double parse_real(const std::string& text) {
    const std::string s = trim(text);
    const auto slash = s.find('/');
    if (slash != std::string::npos) return parse_real(s.substr(0, slash)) / parse_real(s.substr(slash + 1));
    double value = 0.0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (s.empty() || ec != std::errc() || ptr != s.data() + s.size()) throw DomainError("not a number: '" + text + "'");
    return value;
}

std::int64_t parse_integer(const std::string& text) {
    const std::string s = trim(text);
    std::int64_t value = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (s.empty() || ec != std::errc() || ptr != s.data() + s.size()) throw DomainError("not an integer: '" + text + "'");
    return value;
}

std::pair<std::string, std::string> split_binding(const std::string& arg) {
    const auto eq = arg.find('=');
    if (eq == std::string::npos) throw DomainError("expected name=value, got '" + arg + "'");
    std::string name = trim(arg.substr(0, eq));
    if (!is_valid_symbol(name)) throw DomainError("invalid symbol name '" + name + "'");
    return {name, arg.substr(eq + 1)};
}

// name=k pairs, possibly comma-joined: "a=1,b=2" or separate arguments.
std::map<Symbol, Power> integer_bindings(const std::vector<std::string>& args) {
    std::map<Symbol, Power> out;
    for (const auto& arg : args) {
        for (const auto& piece : split(arg, ',')) {
            auto [name, value] = split_binding(piece);
            out[name] = parse_integer(value);
        }
    }
    return out;
}

struct OutputOptions {
    bool json = false;
    bool banner = false;
    std::string order = "canonical";
    std::string varorder;
    int digits = 7;

    void attach(CLI::App* app) {
        app->add_flag("--json", json, "Emit canonical JSON");
        app->add_flag("--banner", banner, "Prefix polynomial output with a description line");
        app->add_option("--order", order, "Term order: canonical or lex")->check(CLI::IsMember({"canonical", "lex"}));
        app->add_option("--varorder", varorder, "Comma-separated symbol precedence for lex order");
        app->add_option("--digits", digits, "Significant digits for non-integers (0 = exact)");
    }

    RenderOptions render_options() const {
        RenderOptions o;
        o.order = order == "lex" ? Order::lex : Order::canonical;
        if (!varorder.empty()) o.varorder = split(varorder, ',');
        o.digits = digits;
        return o;
    }

    void print(std::ostream& out, const Mvp& p) const {
        if (json) {
            out << to_json(p) << '\n';
            return;
        }
        if (banner) out << "mvp object algebraically equal to\n";
        out << render(p, render_options()) << '\n';
    }
};

class Session {
public:
    Session(std::istream& in, std::ostream& out) : in_(in), out_(out) {}

    void run(const std::vector<std::string>& args) {
        CLI::App app{"Sparse multivariate Laurent polynomials", "mvp"};
        app.require_subcommand(1);
        app.set_help_all_flag("--help-all");

        OutputOptions output;
        std::string expr;
        std::vector<std::string> rest;

        auto add_expr = [&](CLI::App* sub) {
            sub->add_option("expr", expr, "Polynomial expression, or - to read from stdin")->required();
            output.attach(sub);
        };

        auto* eval = app.add_subcommand("eval", "Parse, normalise and print (- reads one expression per line)");
        std::int64_t power = 1;
        add_expr(eval);
        eval->add_option("--pow", power, "Raise to a nonnegative integer power");

        auto* subs_cmd = app.add_subcommand("subs", "Substitute name=expr bindings, applied left to right");
        bool keep = false;
        add_expr(subs_cmd);
        subs_cmd->add_option("bindings", rest, "name=expr pairs")->required();
        subs_cmd->add_flag("--keep", keep, "Print a constant result as a polynomial");

        auto* subvec_cmd = app.add_subcommand("subvec", "Evaluate at points given as name=v1,v2,...");
        add_expr(subvec_cmd);
        subvec_cmd->add_option("bindings", rest, "name=v1,v2,... vectors")->required();

        auto* deriv_cmd = app.add_subcommand("deriv", "Successive partial derivatives");
        add_expr(deriv_cmd);
        deriv_cmd->add_option("vars", rest, "Symbols, differentiated left to right")->required();

        auto* aderiv_cmd = app.add_subcommand("aderiv", "Mixed partial derivative from name=order pairs");
        add_expr(aderiv_cmd);
        aderiv_cmd->add_option("orders", rest, "name=order pairs")->required();

        auto* horner_cmd = app.add_subcommand("horner", "sum c_i * expr^i by Horner's scheme");
        std::string coeff_list;
        add_expr(horner_cmd);
        horner_cmd->add_option("coeffs", coeff_list, "c0,c1,... (fractions like -1/6 allowed)")->required();

        auto* trunc_cmd = app.add_subcommand("trunc", "Keep terms of total degree <= N");
        std::int64_t degree = 0;
        add_expr(trunc_cmd);
        trunc_cmd->add_option("n", degree, "Degree bound")->required();

        auto* trunc1_cmd = app.add_subcommand("trunc1", "Keep terms whose listed powers are <= limits");
        add_expr(trunc1_cmd);
        trunc1_cmd->add_option("limits", rest, "name=limit pairs")->required();

        auto* onevarpow_cmd = app.add_subcommand("onevarpow", "Coefficient of an exact power pattern");
        add_expr(onevarpow_cmd);
        onevarpow_cmd->add_option("targets", rest, "name=power pairs")->required();

        auto* series_cmd = app.add_subcommand("series", "Decompose as a power series in one variable");
        std::string variable;
        add_expr(series_cmd);
        series_cmd->add_option("var", variable, "Series variable")->required();

        auto* taylor_cmd = app.add_subcommand("taylor", "Expand in powers of (var - about)");
        std::string about;
        add_expr(taylor_cmd);
        taylor_cmd->add_option("var", variable, "Expansion variable")->required();
        taylor_cmd->add_option("about", about, "Symbol to expand about")->required();

        auto* invert_cmd = app.add_subcommand("invert", "Negate every power");
        add_expr(invert_cmd);

        auto* coeffs_cmd = app.add_subcommand("coeffs", "Coefficients as a disord object");
        std::string other;
        add_expr(coeffs_cmd);
        coeffs_cmd->add_option("--add", other, "Add the coefficients of another expression elementwise");

        auto* powers_cmd = app.add_subcommand("powers", "Power rows as a disord object");
        add_expr(powers_cmd);

        auto* knight_cmd = app.add_subcommand("knight", "Knight generating function on a D-dimensional board");
        int dimension = 2;
        std::int64_t knight_pow = 1;
        bool want_constant = false;
        bool want_distance = false;
        std::string knight_targets;
        knight_cmd->add_option("d", dimension, "Board dimension")->required();
        knight_cmd->add_option("--pow", knight_pow, "Number of moves");
        auto* constant_flag = knight_cmd->add_flag("--constant", want_constant, "Print the constant term");
        auto* onevarpow_opt = knight_cmd->add_option("--onevarpow", knight_targets, "Extract a=1,b=2,...");
        knight_cmd->add_flag("--expected-distance", want_distance, "Expected Euclidean distance from the origin");
        constant_flag->excludes(onevarpow_opt);
        output.attach(knight_cmd);

        auto* rmvp_cmd = app.add_subcommand("rmvp", "Seeded random polynomial");
        RandomSpec spec;
        int pool = 0;
        std::string alphabet;
        rmvp_cmd->add_option("terms", spec.terms, "Number of term draws")->required();
        rmvp_cmd->add_option("symbols", spec.symbols_per_term, "Symbols per term")->required();
        rmvp_cmd->add_option("max_power", spec.max_power, "Largest power per draw")->required();
        auto* pool_opt = rmvp_cmd->add_option("--pool", pool, "Use the first K letters as the alphabet");
        rmvp_cmd->add_option("--alphabet", alphabet, "Comma-separated symbols")->excludes(pool_opt);
        rmvp_cmd->add_option("--seed", spec.seed, "RNG seed");
        output.attach(rmvp_cmd);

        auto* bench_cmd = app.add_subcommand("bench", "Time multiply and pow; CSV op,terms,symbols,trials,mean_ns");
        int bench_terms = 100;
        int bench_symbols = 4;
        int trials = 5;
        std::string kernel = "auto";
        bench_cmd->add_option("--terms", bench_terms, "Terms per random operand")->check(CLI::PositiveNumber);
        bench_cmd->add_option("--symbols", bench_symbols, "Symbol pool size")->check(CLI::Range(1, 26));
        bench_cmd->add_option("--trials", trials, "Repetitions per operation")->check(CLI::PositiveNumber);
        bench_cmd->add_option("--kernel", kernel, "auto, serial, parallel or both")
            ->check(CLI::IsMember({"auto", "serial", "parallel", "both"}));

        std::vector<std::string> reversed(args.rbegin(), args.rend());
        try {
            app.parse(reversed);
        } catch (const CLI::CallForHelp&) {
            out_ << app.help();
            return;
        } catch (const CLI::CallForAllHelp&) {
            out_ << app.help("", CLI::AppFormatMode::All);
            return;
        } catch (const CLI::ParseError& e) {
            throw UsageError(e.what());
        }

        if (eval->parsed()) {
            if (expr == "-") {
                std::string line;
                while (std::getline(in_, line)) {
                    if (trim(line).empty()) continue;
                    output.print(out_, pow(parse(line), power));
                }
                return;
            }
            output.print(out_, pow(parse(expr), power));
        } else if (subs_cmd->parsed()) {
            std::vector<Binding> bindings;
            for (const auto& arg : rest) {
                auto [name, value] = split_binding(arg);
                bindings.emplace_back(name, parse(value));
            }
            auto result = subs(input(expr), bindings, !keep);
            if (const double* scalar = std::get_if<double>(&result)) {
                out_ << format_number(*scalar, output.digits) << '\n';
            } else {
                output.print(out_, std::get<Mvp>(result));
            }
        } else if (subvec_cmd->parsed()) {
            std::map<Symbol, std::vector<double>> bindings;
            for (const auto& arg : rest) {
                auto [name, values] = split_binding(arg);
                auto& column = bindings[name];
                for (const auto& v : split(values, ',')) column.push_back(parse_real(v));
            }
            const auto values = subvec(input(expr), bindings);
            for (std::size_t i = 0; i < values.size(); ++i) out_ << (i ? " " : "") << format_number(values[i], output.digits);
            out_ << '\n';
        } else if (deriv_cmd->parsed()) {
            output.print(out_, deriv(input(expr), rest));
        } else if (aderiv_cmd->parsed()) {
            std::map<Symbol, std::int64_t> orders;
            for (const auto& [name, k] : integer_bindings(rest)) orders[name] = k;
            output.print(out_, aderiv(input(expr), orders));
        } else if (horner_cmd->parsed()) {
            std::vector<double> coeffs;
            for (const auto& c : split(coeff_list, ',')) coeffs.push_back(parse_real(c));
            output.print(out_, horner(input(expr), coeffs));
        } else if (trunc_cmd->parsed()) {
            output.print(out_, trunc(input(expr), degree));
        } else if (trunc1_cmd->parsed()) {
            output.print(out_, trunc1(input(expr), integer_bindings(rest)));
        } else if (onevarpow_cmd->parsed()) {
            output.print(out_, onevarpow(input(expr), integer_bindings(rest)));
        } else if (series_cmd->parsed()) {
            out_ << render_series(series(input(expr), variable), output.render_options()) << '\n';
        } else if (taylor_cmd->parsed()) {
            out_ << render_series(taylor(input(expr), variable, about), output.render_options()) << '\n';
        } else if (invert_cmd->parsed()) {
            output.print(out_, invert(input(expr)));
        } else if (coeffs_cmd->parsed()) {
            auto c = coeffs(input(expr));
            if (!other.empty()) c = c + coeffs(parse(other));
            out_ << to_string(c) << '\n';
        } else if (powers_cmd->parsed()) {
            out_ << to_string(powers(input(expr))) << '\n';
        } else if (knight_cmd->parsed()) {
            const Mvp k = pow(knight(dimension), knight_pow);
            if (want_constant) {
                out_ << format_number(k.constant(), output.digits) << '\n';
            } else if (!knight_targets.empty()) {
                output.print(out_, onevarpow(k, integer_bindings({knight_targets})));
            } else if (!want_distance) {
                output.print(out_, k);
            }
            if (want_distance) out_ << format_number(expected_distance(k), output.digits) << '\n';
        } else if (rmvp_cmd->parsed()) {
            if (pool > 0) spec.alphabet = letters(pool);
            if (!alphabet.empty()) spec.alphabet = split(alphabet, ',');
            output.print(out_, rmvp(spec));
        } else if (bench_cmd->parsed()) {
            bench(bench_terms, bench_symbols, trials, kernel);
        }
    }

    struct UsageError : Error {
        using Error::Error;
    };

private:
    Mvp input(const std::string& expr) {
        if (expr != "-") return parse(expr);
        std::string line;
        while (std::getline(in_, line)) {
            if (!trim(line).empty()) return parse(line);
        }
        throw ParseError(0, "empty expression on stdin");
    }

    template <typename F>
    double mean_ns(int trials, F&& op) {
        using clock = std::chrono::steady_clock;
        double total = 0.0;
        for (int t = 0; t < trials; ++t) {
            auto start = clock::now();
            op();
            total += std::chrono::duration<double, std::nano>(clock::now() - start).count();
        }
        return total / trials;
    }

    void bench(int terms, int symbols, int trials, const std::string& kernel) {
        RandomSpec spec{terms, symbols, 8, letters(symbols), 1};
        const Mvp p = rmvp(spec);
        spec.seed = 2;
        const Mvp q = rmvp(spec);

        auto row = [&](const std::string& op, double ns) {
            out_ << op << ',' << terms << ',' << symbols << ',' << trials << ',' << static_cast<long long>(ns) << '\n';
        };
        out_ << "op,terms,symbols,trials,mean_ns\n";
        if (kernel == "auto") {
            row("multiply", mean_ns(trials, [&] { return multiply(p, q); }));
            row("pow3", mean_ns(trials, [&] { return pow(p, 3); }));
            return;
        }
        if (kernel == "serial" || kernel == "both") {
            row("multiply_serial", mean_ns(trials, [&] { return kernels::multiply_serial(p, q); }));
        }
        if (kernel == "parallel" || kernel == "both") {
            row("multiply_parallel", mean_ns(trials, [&] { return kernels::multiply_parallel(p, q); }));
        }
    }

    std::istream& in_;
    std::ostream& out_;
};

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
    try {
        Session(in, out).run(args);
        return 0;
    } catch (const HashMismatch& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }
}

}  // namespace mvp::cli
