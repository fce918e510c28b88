#include "gk/novikov.hpp"

#include "gk/errors.hpp"

#include <charconv>

namespace gk {

bool CurveClass::is_zero() const
{
    if (nu != 0)
        return false;
    for (int x : d)
        if (x != 0)
            return false;
    return true;
}

bool CurveClass::leq(const CurveClass& o) const
{
    if (d.size() != o.d.size())
        throw Error("curve classes of different rank");
    if (nu > o.nu)
        return false;
    for (std::size_t j = 0; j < d.size(); ++j)
        if (d[j] > o.d[j])
            return false;
    return true;
}

CurveClass operator+(const CurveClass& a, const CurveClass& b)
{
    if (a.d.size() != b.d.size())
        throw Error("curve classes of different rank");
    CurveClass c{a.nu + b.nu, a.d};
    for (std::size_t j = 0; j < c.d.size(); ++j)
        c.d[j] += b.d[j];
    return c;
}

CurveClass operator-(const CurveClass& a, const CurveClass& b)
{
    if (!b.leq(a))
        throw Error("curve class subtraction outside the effective cone");
    CurveClass c{a.nu - b.nu, a.d};
    for (std::size_t j = 0; j < c.d.size(); ++j)
        c.d[j] -= b.d[j];
    return c;
}

std::string to_string(const CurveClass& c)
{
    std::string s = "(" + std::to_string(c.nu) + "; ";
    for (std::size_t j = 0; j < c.d.size(); ++j) {
        if (j)
            s += ",";
        s += std::to_string(c.d[j]);
    }
    return s + ")";
}

namespace {

int parse_int(std::string_view s, std::string_view whole)
{
    while (!s.empty() && s.front() == ' ')
        s.remove_prefix(1);
    while (!s.empty() && s.back() == ' ')
        s.remove_suffix(1);
    int v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || ec != std::errc() || ptr != s.data() + s.size() || v < 0)
        throw InputError("invalid curve class '" + std::string(whole) + "'");
    return v;
}

} // namespace

CurveClass parse_curve_class(std::string_view text)
{
    if (text.size() < 3 || text.front() != '(' || text.back() != ')')
        throw InputError("invalid curve class '" + std::string(text) + "'");
    const std::string_view body = text.substr(1, text.size() - 2);
    const auto semi = body.find(';');
    if (semi == std::string_view::npos)
        throw InputError("invalid curve class '" + std::string(text) + "'");
    CurveClass c;
    c.nu = parse_int(body.substr(0, semi), text);
    std::string_view rest = body.substr(semi + 1);
    if (rest.find_first_not_of(' ') == std::string_view::npos)
        return c;
    while (true) {
        const auto comma = rest.find(',');
        c.d.push_back(parse_int(rest.substr(0, comma), text));
        if (comma == std::string_view::npos)
            break;
        rest.remove_prefix(comma + 1);
    }
    return c;
}

bool Box::contains(const CurveClass& c) const
{
    if (c.d.size() != d_max.size() || c.nu < 0 || c.nu > nu_max)
        return false;
    for (std::size_t j = 0; j < d_max.size(); ++j)
        if (c.d[j] < 0 || c.d[j] > d_max[j])
            return false;
    return true;
}

std::size_t Box::size() const
{
    std::size_t s = static_cast<std::size_t>(nu_max + 1);
    for (int m : d_max)
        s *= static_cast<std::size_t>(m + 1);
    return s;
}

std::vector<CurveClass> Box::classes() const
{
    std::vector<CurveClass> out;
    CurveClass c{0, std::vector<int>(d_max.size(), 0)};
    while (true) {
        out.push_back(c);
        // odometer, last coordinate fastest
        int j = static_cast<int>(d_max.size()) - 1;
        while (j >= 0 && c.d[j] == d_max[j]) {
            c.d[j] = 0;
            --j;
        }
        if (j >= 0) {
            ++c.d[j];
            continue;
        }
        if (c.nu == nu_max)
            break;
        ++c.nu;
    }
    return out;
}

std::string to_string(const Box& b)
{
    std::string s = std::to_string(b.nu_max);
    for (int m : b.d_max)
        s += "," + std::to_string(m);
    return s;
}

int GradingData::v(std::size_t i, const CurveClass& c) const
{
    int s = 0;
    for (std::size_t j = 0; j < c.d.size(); ++j)
        s += c.d[j] * v_pairings.at(i).at(j);
    return s;
}

int GradingData::kx(const CurveClass& c) const
{
    int s = 0;
    for (std::size_t j = 0; j < c.d.size(); ++j)
        s += c.d[j] * kx_pairings.at(j);
    return s;
}

int GradingData::c1v(const CurveClass& c) const
{
    int s = 0;
    for (int i = 0; i <= n; ++i)
        s += v(static_cast<std::size_t>(i), c);
    return s;
}

int class_degree(const CurveClass& c, const GradingData& g)
{
    if (c.d.size() != g.k())
        throw Error("curve class rank does not match grading data");
    return (g.n + 1) * c.nu - g.kx(c) - g.c1v(c);
}

std::vector<CurveClass> positivity_violations(const Box& box, const GradingData& g)
{
    std::vector<CurveClass> out;
    for (const auto& c : box.classes())
        if (!c.is_zero() && class_degree(c, g) <= 0)
            out.push_back(c);
    return out;
}

NovikovSeries::NovikovSeries(AlgebraPtr algebra, Box box) : alg_(std::move(algebra)), box_(std::move(box)) {}

NovikovSeries NovikovSeries::one(AlgebraPtr algebra, Box box)
{
    NovikovSeries s(algebra, box);
    s.set(CurveClass{0, std::vector<int>(s.box_.d_max.size(), 0)}, HLaurent::one(algebra));
    return s;
}

HLaurent NovikovSeries::coeff(const CurveClass& c) const
{
    auto it = coeffs_.find(c);
    return it == coeffs_.end() ? HLaurent::zero(alg_) : it->second;
}

void NovikovSeries::set(const CurveClass& c, HLaurent value)
{
    if (!box_.contains(c))
        throw Error("class " + to_string(c) + " outside truncation box " + to_string(box_));
    if (!same_algebra(alg_, value.algebra()))
        throw Error("algebra mismatch");
    if (value.is_zero())
        coeffs_.erase(c);
    else
        coeffs_.insert_or_assign(c, std::move(value));
}

void NovikovSeries::add(const CurveClass& c, const HLaurent& value)
{
    set(c, coeff(c) + value);
}

void NovikovSeries::require_compatible(const NovikovSeries& o) const
{
    if (!(box_ == o.box_))
        throw Error("truncation box mismatch: " + to_string(box_) + " vs " + to_string(o.box_));
    if (!same_algebra(alg_, o.alg_))
        throw Error("algebra mismatch");
}

NovikovSeries& NovikovSeries::operator+=(const NovikovSeries& o)
{
    require_compatible(o);
    for (const auto& [c, v] : o.coeffs_)
        add(c, v);
    return *this;
}

bool operator==(const NovikovSeries& a, const NovikovSeries& b)
{
    a.require_compatible(b);
    if (a.coeffs_.size() != b.coeffs_.size())
        return false;
    for (const auto& [c, v] : a.coeffs_) {
        auto it = b.coeffs_.find(c);
        if (it == b.coeffs_.end() || it->second != v)
            return false;
    }
    return true;
}

NovikovSeries nov_mul(const NovikovSeries& a, const NovikovSeries& b)
{
    a.require_compatible(b);
    NovikovSeries out(a.alg_, a.box_);
    for (const auto& [ca, va] : a.coeffs_) {
        for (const auto& [cb, vb] : b.coeffs_) {
            CurveClass c = ca + cb;
            if (out.box_.contains(c))
                out.add(c, va * vb);
        }
    }
    return out;
}

} // namespace gk
