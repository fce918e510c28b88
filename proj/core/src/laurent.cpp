#include "gk/laurent.hpp"

#include "gk/errors.hpp"

namespace gk {

HLaurent::HLaurent(AlgebraPtr algebra) : alg_(std::move(algebra)) {}

HLaurent::HLaurent(const AlgElement& coeff, int exponent) : alg_(coeff.algebra())
{
    add_term(exponent, coeff);
}

HLaurent HLaurent::one(AlgebraPtr algebra)
{
    return HLaurent(AlgElement::one(std::move(algebra)), 0);
}

HLaurent HLaurent::monomial(AlgebraPtr algebra, const Rational& c, int e)
{
    return HLaurent(AlgElement::scalar(std::move(algebra), c), e);
}

HLaurent HLaurent::shifted(const AlgElement& x, const Rational& m)
{
    HLaurent out(x);
    out.add_term(1, AlgElement::scalar(x.algebra(), m));
    return out;
}

void HLaurent::add_term(int e, const AlgElement& c)
{
    if (!same_algebra(alg_, c.algebra()))
        throw Error("algebra mismatch");
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        if (!c.is_zero())
            terms_.emplace(e, c);
        return;
    }
    it->second += c;
    if (it->second.is_zero())
        terms_.erase(it);
}

AlgElement HLaurent::coeff(int e) const
{
    auto it = terms_.find(e);
    return it == terms_.end() ? AlgElement::zero(alg_) : it->second;
}

int HLaurent::max_exponent() const
{
    if (terms_.empty())
        throw Error("max_exponent of zero");
    return terms_.rbegin()->first;
}

int HLaurent::min_exponent() const
{
    if (terms_.empty())
        throw Error("min_exponent of zero");
    return terms_.begin()->first;
}

HLaurent HLaurent::times_hbar(int k) const
{
    HLaurent out(alg_);
    for (const auto& [e, c] : terms_)
        out.terms_.emplace(e + k, c);
    return out;
}

HLaurent& HLaurent::operator+=(const HLaurent& o)
{
    if (!same_algebra(alg_, o.alg_))
        throw Error("algebra mismatch");
    for (const auto& [e, c] : o.terms_)
        add_term(e, c);
    return *this;
}

HLaurent& HLaurent::operator-=(const HLaurent& o)
{
    if (!same_algebra(alg_, o.alg_))
        throw Error("algebra mismatch");
    for (const auto& [e, c] : o.terms_)
        add_term(e, -c);
    return *this;
}

HLaurent& HLaurent::operator*=(const Rational& q)
{
    if (gk::is_zero(q)) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, c] : terms_)
        c *= q;
    return *this;
}

HLaurent HLaurent::operator-() const
{
    HLaurent out = *this;
    for (auto& [e, c] : out.terms_)
        c = -c;
    return out;
}

HLaurent operator*(const HLaurent& a, const HLaurent& b)
{
    if (!same_algebra(a.alg_, b.alg_))
        throw Error("algebra mismatch");
    HLaurent out(a.alg_);
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_)
            out.add_term(ea + eb, ca * cb);
    return out;
}

HLaurent operator*(const HLaurent& a, const AlgElement& b)
{
    HLaurent out(a.alg_);
    for (const auto& [e, c] : a.terms_)
        out.add_term(e, c * b);
    return out;
}

bool operator==(const HLaurent& a, const HLaurent& b)
{
    if (!same_algebra(a.alg_, b.alg_))
        throw Error("algebra mismatch");
    if (a.terms_.size() != b.terms_.size())
        return false;
    for (auto ia = a.terms_.begin(), ib = b.terms_.begin(); ia != a.terms_.end(); ++ia, ++ib)
        if (ia->first != ib->first || ia->second != ib->second)
            return false;
    return true;
}

HLaurent hl_invert(const HLaurent& x)
{
    const AlgebraPtr& alg = x.algebra();
    const std::size_t one = alg->one_index();
    int s = 0;
    Rational m;
    int scalar_terms = 0;
    for (const auto& [e, c] : x.terms()) {
        for (std::size_t i = 0; i < alg->dim(); ++i) {
            if (alg->degree(i) == 0 && i != one && !is_zero(c[i]))
                throw Error("non-invertible element");
        }
        if (!is_zero(c[one])) {
            ++scalar_terms;
            s = e;
            m = c[one];
        }
    }
    if (scalar_terms != 1)
        throw Error("non-invertible element");

    // y = r / (m hbar^s) is nilpotent: every coefficient has positive degree.
    HLaurent y = x - HLaurent::monomial(alg, m, s);
    y = y.times_hbar(-s) * Rational(1 / m);

    HLaurent sum = HLaurent::one(alg);
    HLaurent power = HLaurent::one(alg);
    const HLaurent neg_y = -y;
    for (int j = 1; j <= alg->top_degree(); ++j) {
        power = power * neg_y;
        if (power.is_zero())
            break;
        sum += power;
    }
    return sum.times_hbar(-s) * Rational(1 / m);
}

HLaurent pow(const HLaurent& x, int k)
{
    HLaurent r = HLaurent::one(x.algebra());
    for (int i = 0; i < k; ++i)
        r = r * x;
    return r;
}

std::string to_string(const HLaurent& x)
{
    if (x.is_zero())
        return "0";
    std::string out;
    for (auto it = x.terms().rbegin(); it != x.terms().rend(); ++it) {
        if (!out.empty())
            out += " + ";
        out += "(" + to_string(it->second) + ")";
        if (it->first != 0)
            out += "*hbar^" + std::to_string(it->first);
    }
    return out;
}

} // namespace gk
