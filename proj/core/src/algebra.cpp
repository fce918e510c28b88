#include "gk/algebra.hpp"

#include "gk/errors.hpp"

#include <algorithm>
#include <map>
#include <mutex>

namespace gk {

Combination normalized(Combination c)
{
    std::sort(c.begin(), c.end(), [](const Term& a, const Term& b) { return a.index < b.index; });
    Combination out;
    for (auto& t : c) {
        if (!out.empty() && out.back().index == t.index)
            out.back().coeff += t.coeff;
        else
            out.push_back(std::move(t));
    }
    std::erase_if(out, [](const Term& t) { return is_zero(t.coeff); });
    return out;
}

StructAlgebra::StructAlgebra(std::string name, std::vector<BasisElement> basis, std::vector<Combination> table,
                             std::size_t one_index)
    : name_(std::move(name)), basis_(std::move(basis)), table_(std::move(table)), one_(one_index)
{
    if (table_.size() != basis_.size() * basis_.size())
        throw InputError("algebra '" + name_ + "': table has " + std::to_string(table_.size()) + " entries, expected " +
                         std::to_string(basis_.size() * basis_.size()));
    if (one_ >= basis_.size())
        throw InputError("algebra '" + name_ + "': unit index out of range");
    for (auto& c : table_) {
        c = normalized(std::move(c));
        for (const auto& t : c)
            if (t.index >= basis_.size())
                throw InputError("algebra '" + name_ + "': table references basis index out of range");
    }
    for (const auto& b : basis_)
        top_degree_ = std::max(top_degree_, b.degree);
}

std::optional<std::size_t> StructAlgebra::find(std::string_view label) const
{
    for (std::size_t i = 0; i < basis_.size(); ++i)
        if (basis_[i].label == label)
            return i;
    return std::nullopt;
}

std::size_t StructAlgebra::index_of(std::string_view label) const
{
    if (auto i = find(label))
        return *i;
    throw InputError("algebra '" + name_ + "' has no basis element '" + std::string(label) + "'");
}

namespace {

bool equal_combination(const Combination& a, const Combination& b)
{
    if (a.size() != b.size())
        return false;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i].index != b[i].index || a[i].coeff != b[i].coeff)
            return false;
    return true;
}

} // namespace

bool StructAlgebra::operator==(const StructAlgebra& other) const
{
    if (dim() != other.dim() || one_ != other.one_)
        return false;
    for (std::size_t i = 0; i < dim(); ++i)
        if (basis_[i].label != other.basis_[i].label || basis_[i].degree != other.basis_[i].degree)
            return false;
    for (std::size_t i = 0; i < table_.size(); ++i)
        if (!equal_combination(table_[i], other.table_[i]))
            return false;
    return true;
}

bool same_algebra(const AlgebraPtr& a, const AlgebraPtr& b)
{
    return a == b || (a && b && *a == *b);
}

ValidationReport check_algebra(const StructAlgebra& a)
{
    ValidationReport r;
    auto fail = [&r](std::string msg) {
        r.ok = false;
        r.failures.push_back(std::move(msg));
    };
    const std::size_t n = a.dim();
    const std::size_t one = a.one_index();

    for (std::size_t i = 0; i < n; ++i) {
        if (a.degree(i) < 0)
            fail("negative degree at (" + a.label(i) + ")");
        if (a.degree(i) == 0 && i != one)
            fail("connectedness failed at (" + a.label(i) + ")");
    }
    if (a.degree(one) != 0)
        fail("unit has nonzero degree");

    bool unit_ok = true;
    for (std::size_t i = 0; i < n; ++i) {
        const Combination expect{Term{i, Rational(1)}};
        if (!equal_combination(a.product(one, i), expect) || !equal_combination(a.product(i, one), expect)) {
            fail("unit law failed at (" + a.label(i) + ")");
            unit_ok = false;
        }
    }

    bool graded = true;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (j > i && !equal_combination(a.product(i, j), a.product(j, i)))
                fail("commutativity failed at (" + a.label(i) + "," + a.label(j) + ")");
            for (const auto& t : a.product(i, j)) {
                if (a.degree(t.index) != a.degree(i) + a.degree(j)) {
                    fail("grading failed at (" + a.label(i) + "," + a.label(j) + ")");
                    graded = false;
                    break;
                }
            }
        }
    }

    // With grading additivity established, triples above the top degree vanish on
    // both sides; with the unit law established, triples through the unit agree.
    std::vector<Rational> lhs(n), rhs(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            for (std::size_t k = 0; k < n; ++k) {
                if (graded && a.degree(i) + a.degree(j) + a.degree(k) > a.top_degree())
                    continue;
                if (unit_ok && (i == one || j == one || k == one))
                    continue;
                for (auto& x : lhs)
                    x = 0;
                for (auto& x : rhs)
                    x = 0;
                for (const auto& t : a.product(i, j))
                    for (const auto& u : a.product(t.index, k))
                        lhs[u.index] += t.coeff * u.coeff;
                for (const auto& t : a.product(j, k))
                    for (const auto& u : a.product(i, t.index))
                        rhs[u.index] += t.coeff * u.coeff;
                if (lhs != rhs)
                    fail("associativity failed at (" + a.label(i) + "," + a.label(j) + "," + a.label(k) + ")");
            }
        }
    }
    return r;
}

AlgebraPtr make_algebra(std::string name, std::vector<BasisElement> basis, std::vector<Combination> table,
                        std::size_t one_index)
{
    auto alg = std::make_shared<const StructAlgebra>(std::move(name), std::move(basis), std::move(table), one_index);
    const auto report = check_algebra(*alg);
    if (!report.ok)
        throw InputError("algebra '" + alg->name() + "': " + report.failures.front());
    return alg;
}

AlgebraPtr truncated_polynomial_algebra(const std::string& label, int n)
{
    static std::mutex mu;
    static std::map<std::pair<std::string, int>, AlgebraPtr> cache;
    std::lock_guard lock(mu);
    auto& slot = cache[{label, n}];
    if (slot)
        return slot;
    std::vector<BasisElement> basis;
    for (int t = 0; t <= n; ++t)
        basis.push_back({t == 0 ? "1" : t == 1 ? label : label + "^" + std::to_string(t), t});
    const std::size_t dim = basis.size();
    std::vector<Combination> table(dim * dim);
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = 0; j < dim; ++j)
            if (i + j < dim)
                table[i * dim + j] = {Term{i + j, Rational(1)}};
    slot = make_algebra("Q[" + label + "]/(" + label + "^" + std::to_string(n + 1) + ")", std::move(basis),
                        std::move(table), 0);
    return slot;
}

AlgElement::AlgElement(AlgebraPtr algebra) : alg_(std::move(algebra)), coords_(alg_->dim()) {}

AlgElement::AlgElement(AlgebraPtr algebra, std::vector<Rational> coords)
    : alg_(std::move(algebra)), coords_(std::move(coords))
{
    if (coords_.size() != alg_->dim())
        throw InputError("coordinate vector of length " + std::to_string(coords_.size()) + " for algebra of dimension " +
                         std::to_string(alg_->dim()));
}

AlgElement AlgElement::one(AlgebraPtr algebra)
{
    return scalar(std::move(algebra), 1);
}

AlgElement AlgElement::scalar(AlgebraPtr algebra, const Rational& q)
{
    AlgElement e(std::move(algebra));
    e.coords_[e.alg_->one_index()] = q;
    return e;
}

AlgElement AlgElement::basis(AlgebraPtr algebra, std::size_t i)
{
    AlgElement e(std::move(algebra));
    e.coords_.at(i) = 1;
    return e;
}

AlgElement AlgElement::basis(AlgebraPtr algebra, std::string_view label)
{
    const std::size_t i = algebra->index_of(label);
    return basis(std::move(algebra), i);
}

const Rational& AlgElement::coeff(std::string_view label) const
{
    return coords_[alg_->index_of(label)];
}

bool AlgElement::is_zero() const
{
    return std::all_of(coords_.begin(), coords_.end(), [](const Rational& q) { return gk::is_zero(q); });
}

AlgElement AlgElement::homogeneous_part(int degree) const
{
    AlgElement e(alg_);
    for (std::size_t i = 0; i < coords_.size(); ++i)
        if (alg_->degree(i) == degree)
            e.coords_[i] = coords_[i];
    return e;
}

std::vector<int> AlgElement::degrees_present() const
{
    std::vector<int> out;
    for (std::size_t i = 0; i < coords_.size(); ++i)
        if (!gk::is_zero(coords_[i]))
            out.push_back(alg_->degree(i));
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::optional<int> AlgElement::homogeneous_degree() const
{
    const auto d = degrees_present();
    if (d.size() != 1)
        return std::nullopt;
    return d.front();
}

void AlgElement::require_same(const AlgElement& o) const
{
    if (!same_algebra(alg_, o.alg_))
        throw Error("algebra mismatch");
}

AlgElement& AlgElement::operator+=(const AlgElement& o)
{
    require_same(o);
    for (std::size_t i = 0; i < coords_.size(); ++i)
        coords_[i] += o.coords_[i];
    return *this;
}

AlgElement& AlgElement::operator-=(const AlgElement& o)
{
    require_same(o);
    for (std::size_t i = 0; i < coords_.size(); ++i)
        coords_[i] -= o.coords_[i];
    return *this;
}

AlgElement& AlgElement::operator*=(const Rational& q)
{
    for (auto& c : coords_)
        c *= q;
    return *this;
}

AlgElement AlgElement::operator-() const
{
    AlgElement e = *this;
    for (auto& c : e.coords_)
        c = -c;
    return e;
}

bool operator==(const AlgElement& a, const AlgElement& b)
{
    a.require_same(b);
    return a.coords_ == b.coords_;
}

AlgElement alg_mul(const AlgElement& a, const AlgElement& b)
{
    if (!same_algebra(a.algebra(), b.algebra()))
        throw Error("algebra mismatch");
    const auto& alg = *a.algebra();
    const std::size_t n = alg.dim();
    std::vector<std::size_t> nz_a, nz_b;
    for (std::size_t i = 0; i < n; ++i) {
        if (!is_zero(a[i]))
            nz_a.push_back(i);
        if (!is_zero(b[i]))
            nz_b.push_back(i);
    }
    std::vector<Rational> out(n);
    Rational ab;
    for (std::size_t i : nz_a) {
        for (std::size_t j : nz_b) {
            const auto& prod = alg.product(i, j);
            if (prod.empty())
                continue;
            ab = a[i] * b[j];
            for (const auto& t : prod)
                out[t.index] += ab * t.coeff;
        }
    }
    return AlgElement(a.algebra(), std::move(out));
}

AlgElement pow(const AlgElement& a, int k)
{
    AlgElement r = AlgElement::one(a.algebra());
    for (int i = 0; i < k; ++i)
        r = r * a;
    return r;
}

std::string to_string(const AlgElement& a)
{
    std::string out;
    const auto& alg = *a.algebra();
    for (std::size_t i = 0; i < alg.dim(); ++i) {
        const Rational& c = a[i];
        if (is_zero(c))
            continue;
        const bool neg = sgn(c) < 0;
        const Rational mag = neg ? Rational(-c) : c;
        if (out.empty())
            out += neg ? "-" : "";
        else
            out += neg ? " - " : " + ";
        const bool unit = i == alg.one_index();
        if (unit)
            out += to_string(mag);
        else if (mag == 1)
            out += alg.label(i);
        else
            out += to_string(mag) + "*" + alg.label(i);
    }
    return out.empty() ? "0" : out;
}

} // namespace gk
