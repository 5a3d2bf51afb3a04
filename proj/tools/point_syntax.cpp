#include "point_syntax.hpp"

#include <cstdio>
#include <cstdlib>
#include <stdexcept>

namespace omega::cli {

namespace {

[[noreturn]] void bad_token(const std::string& token) {
    throw std::invalid_argument("bad complex token '" + token + "' (expected re, re+imi or inf)");
}

}  // namespace

ExtendedComplex parse_extended(const std::string& token) {
    if (token == "inf" || token == "+inf") return ExtendedComplex::infinity();
    const char* s = token.c_str();
    char* end = nullptr;
    double re = std::strtod(s, &end);
    if (end == s) bad_token(token);
    if (*end == '\0') return ExtendedComplex{Complex{re, 0.0}};
    // imaginary part: sign digits ... 'i'
    char* end2 = nullptr;
    double im = std::strtod(end, &end2);
    if (end2 == end || *end2 != 'i' || *(end2 + 1) != '\0') bad_token(token);
    return ExtendedComplex{Complex{re, im}};
}

Complex parse_complex(const std::string& token) {
    ExtendedComplex e = parse_extended(token);
    if (e.inf) throw std::invalid_argument("finite complex value required, got 'inf'");
    return e.v;
}

OmegaPoint parse_point(const std::string& token) {
    size_t comma = token.find(',');
    if (comma == std::string::npos)
        throw std::invalid_argument("bad point '" + token + "' (expected z,w)");
    return {parse_extended(token.substr(0, comma)), parse_extended(token.substr(comma + 1))};
}

std::vector<ExtendedComplex> parse_extended_list(const std::string& token) {
    std::vector<ExtendedComplex> out;
    size_t start = 0;
    while (start <= token.size()) {
        size_t comma = token.find(',', start);
        std::string piece =
            comma == std::string::npos ? token.substr(start) : token.substr(start, comma - start);
        out.push_back(parse_extended(piece));
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    return out;
}

std::string format_extended(const ExtendedComplex& v) {
    if (v.inf) return "inf";
    char buf[80];
    std::snprintf(buf, sizeof(buf), "%.17g%+.17gi", v.v.real(), v.v.imag());
    return buf;
}

}  // namespace omega::cli
