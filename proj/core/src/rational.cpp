#include "gk/rational.hpp"

#include "gk/errors.hpp"

#include <cctype>

namespace gk {

std::string to_string(const Rational& q)
{
    return q.get_str(10);
}

namespace {

bool valid_integer(std::string_view s)
{
    if (!s.empty() && (s.front() == '-' || s.front() == '+'))
        s.remove_prefix(1);
    if (s.empty())
        return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c)))
            return false;
    return true;
}

} // namespace

Rational parse_rational(std::string_view text)
{
    const auto slash = text.find('/');
    const std::string_view num = text.substr(0, slash);
    const std::string_view den = slash == std::string_view::npos ? std::string_view{"1"} : text.substr(slash + 1);
    if (!valid_integer(num) || !valid_integer(den) || den.front() == '-' || den.front() == '+')
        throw InputError("invalid rational '" + std::string(text) + "'");
    Integer p(std::string(num.front() == '+' ? num.substr(1) : num), 10);
    Integer q(std::string(den), 10);
    if (q == 0)
        throw InputError("zero denominator in '" + std::string(text) + "'");
    Rational r(p, q);
    r.canonicalize();
    return r;
}

Rational factorial(int k)
{
    Integer f = 1;
    for (int i = 2; i <= k; ++i)
        f *= i;
    return Rational(f);
}

} // namespace gk
