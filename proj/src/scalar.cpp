#include "tenskit/scalar.hpp"

#include "tenskit/error.hpp"

#include <cctype>

namespace tenskit {

namespace {

bool parse_int(const std::string& text, Integer& out)
{
    std::size_t i = 0;
    if (i < text.size() && text[i] == '-')
        ++i;
    if (i >= text.size())
        return false;
    for (std::size_t k = i; k < text.size(); ++k)
        if (!std::isdigit(static_cast<unsigned char>(text[k])))
            return false;
    out = Integer(text);
    return true;
}

} // namespace

Scalar scalar_from_string(const std::string& text)
{
    const auto slash = text.find('/');
    Integer num, den = 1;
    bool ok = false;
    if (slash == std::string::npos) {
        ok = parse_int(text, num);
    } else {
        ok = parse_int(text.substr(0, slash), num) && parse_int(text.substr(slash + 1), den);
    }
    if (!ok)
        fail_domain("bad rational literal '" + text + "'");
    if (den == 0)
        fail_domain("zero denominator in '" + text + "'");
    return Scalar(num, den); // normalizes sign and reduces
}

std::string scalar_to_string(const Scalar& s)
{
    const Integer num = numerator(s);
    const Integer den = denominator(s);
    if (den == 1)
        return num.str();
    return num.str() + "/" + den.str();
}

} // namespace tenskit
