#include "report.hpp"

#include <cstdio>

namespace hypercount::cli {

namespace {

std::string shortest(double v)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

} // namespace

Json char_value_json(const CharValue& value)
{
    if (const auto* c = std::get_if<std::complex<double>>(&value))
        return Json{{"re", c->real()}, {"im", c->imag()}};
    const auto& r = std::get<Residue>(value);
    return Json{{"residue", r.value}, {"modulus", r.modulus}};
}

std::string char_value_text(const CharValue& value)
{
    if (const auto* c = std::get_if<std::complex<double>>(&value))
        return shortest(c->real()) + (c->imag() < 0 ? "" : "+") + shortest(c->imag()) + "i";
    const auto& r = std::get<Residue>(value);
    return std::to_string(r.value) + " mod " + std::to_string(r.modulus);
}

std::string csv_field(const std::string& s)
{
    if (s.find_first_of(",\"\n") == std::string::npos)
        return s;
    std::string out = "\"";
    for (char ch : s) {
        if (ch == '"')
            out += '"';
        out += ch;
    }
    return out + "\"";
}

} // namespace hypercount::cli
