#pragma once

#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "quotient.hpp"

namespace ocijac {

// Raw contents of a configuration file. Line-oriented `key = value` with
// whole-line or trailing `#` comments; values are an integer (n), a quoted
// string (field) or a bracketed list of quoted strings (F, G). Variables are
// implicitly X0..Xn; r, s and all degrees are inferred from the polynomials.
struct ConfigFile {
    int n = -1;
    FieldSpec field;
    std::vector<std::string> f_texts;
    std::vector<std::string> g_texts;
    std::string digest;  // FNV-1a of the file bytes
};

inline FieldSpec parse_field_spec(const std::string& text) {
    if (text == "q" || text == "Q") return FieldSpec::rationals();
    if (text.rfind("fp:", 0) == 0) {
        const std::string num = text.substr(3);
        if (num.empty() || num.find_first_not_of("0123456789") != std::string::npos)
            throw std::invalid_argument("field must be \"q\" or \"fp:<prime>\", got \"" + text +
                                        "\"");
        return FieldSpec::prime_field(std::stoull(num));
    }
    throw std::invalid_argument("field must be \"q\" or \"fp:<prime>\", got \"" + text + "\"");
}

namespace detail {

inline std::string strip_comment(const std::string& line) {
    bool in_quotes = false;
    for (size_t i = 0; i < line.size(); ++i) {
        if (line[i] == '"') in_quotes = !in_quotes;
        if (line[i] == '#' && !in_quotes) return line.substr(0, i);
    }
    return line;
}

inline std::string trim(const std::string& s) {
    size_t a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos) return "";
    size_t b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
}

inline std::string parse_quoted(const std::string& v, size_t& pos, int line_no) {
    if (pos >= v.size() || v[pos] != '"')
        throw std::invalid_argument("line " + std::to_string(line_no) + ": expected '\"'");
    size_t end = v.find('"', pos + 1);
    if (end == std::string::npos)
        throw std::invalid_argument("line " + std::to_string(line_no) + ": unterminated string");
    std::string out = v.substr(pos + 1, end - pos - 1);
    pos = end + 1;
    return out;
}

inline std::vector<std::string> parse_string_list(const std::string& v, int line_no) {
    std::vector<std::string> out;
    size_t pos = 0;
    auto skip_ws = [&] {
        while (pos < v.size() && std::isspace((unsigned char)v[pos])) ++pos;
    };
    skip_ws();
    if (pos >= v.size() || v[pos] != '[')
        throw std::invalid_argument("line " + std::to_string(line_no) + ": expected '['");
    ++pos;
    skip_ws();
    if (pos < v.size() && v[pos] == ']') {
        ++pos;
    } else {
        while (true) {
            skip_ws();
            out.push_back(parse_quoted(v, pos, line_no));
            skip_ws();
            if (pos < v.size() && v[pos] == ',') {
                ++pos;
                continue;
            }
            if (pos < v.size() && v[pos] == ']') {
                ++pos;
                break;
            }
            throw std::invalid_argument("line " + std::to_string(line_no) +
                                        ": expected ',' or ']'");
        }
    }
    skip_ws();
    if (pos != v.size())
        throw std::invalid_argument("line " + std::to_string(line_no) + ": trailing characters");
    return out;
}

}  // namespace detail

inline ConfigFile parse_config(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::invalid_argument("cannot open config file: " + path);
    std::stringstream buffer;
    buffer << in.rdbuf();
    const std::string bytes = buffer.str();

    ConfigFile cf;
    cf.digest = fnv1a_hex(bytes);
    bool have_n = false, have_field = false, have_f = false, have_g = false;

    std::istringstream lines(bytes);
    std::string raw;
    int line_no = 0;
    while (std::getline(lines, raw)) {
        ++line_no;
        std::string line = detail::trim(detail::strip_comment(raw));
        if (line.empty()) continue;
        size_t eq = line.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument("line " + std::to_string(line_no) + ": expected key = value");
        std::string key = detail::trim(line.substr(0, eq));
        std::string value = detail::trim(line.substr(eq + 1));
        if (key == "n") {
            if (value.empty() ||
                value.find_first_not_of("0123456789") != std::string::npos)
                throw std::invalid_argument("line " + std::to_string(line_no) +
                                            ": n must be a non-negative integer");
            cf.n = std::stoi(value);
            have_n = true;
        } else if (key == "field") {
            size_t pos = 0;
            std::string text = detail::parse_quoted(value, pos, line_no);
            if (detail::trim(value.substr(pos)) != "")
                throw std::invalid_argument("line " + std::to_string(line_no) +
                                            ": trailing characters");
            cf.field = parse_field_spec(text);
            have_field = true;
        } else if (key == "F") {
            cf.f_texts = detail::parse_string_list(value, line_no);
            have_f = true;
        } else if (key == "G") {
            cf.g_texts = detail::parse_string_list(value, line_no);
            have_g = true;
        } else {
            throw std::invalid_argument("line " + std::to_string(line_no) + ": unknown key '" +
                                        key + "'");
        }
    }
    if (!have_n) throw std::invalid_argument("missing key: n");
    if (!have_field) throw std::invalid_argument("missing key: field");
    if (!have_f && !have_g) throw std::invalid_argument("missing keys: F and G (need r+s >= 1)");
    if (cf.f_texts.empty() && cf.g_texts.empty())
        throw std::invalid_argument("F and G are both empty (need r+s >= 1)");
    return cf;
}

template <class F>
Configuration<F> configuration_from_file(const ConfigFile& cf, F field) {
    std::vector<Polynomial<F>> fs, gs;
    for (const auto& text : cf.f_texts)
        fs.push_back(Polynomial<F>::parse(text, cf.n + 1, field));
    for (const auto& text : cf.g_texts)
        gs.push_back(Polynomial<F>::parse(text, cf.n + 1, field));
    return make_configuration(field, cf.n, std::move(fs), std::move(gs));
}

// Applies fn to a JacobianRing over the field named in the config file.
template <class Fn>
auto with_ring(const ConfigFile& cf, Fn&& fn) {
    if (cf.field.kind == FieldSpec::Kind::rationals) {
        JacobianRing<RationalField> ring(configuration_from_file(cf, RationalField{}));
        return fn(ring);
    }
    JacobianRing<PrimeField> ring(configuration_from_file(cf, PrimeField(cf.field.prime)));
    return fn(ring);
}

}  // namespace ocijac
