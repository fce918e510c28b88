#include "gk/base_j.hpp"

#include "gk/errors.hpp"
#include "gk/factorial.hpp"

#include <mutex>

namespace gk {

struct BaseJData::Memo {
    std::mutex mu;
    std::map<std::vector<int>, HLaurent> values;
};

BaseJData::BaseJData(Kind kind, AlgebraPtr algebra, std::size_t rank)
    : kind_(kind), alg_(std::move(algebra)), rank_(rank), memo_(std::make_shared<Memo>())
{
}

BaseJData BaseJData::point(AlgebraPtr algebra)
{
    return BaseJData(Kind::point, std::move(algebra), 0);
}

BaseJData BaseJData::projective(int n)
{
    BaseJData j(Kind::projective_space, truncated_polynomial_algebra("H", n), 1);
    j.projective_n_ = n;
    return j;
}

BaseJData BaseJData::toric(AlgebraPtr algebra, std::vector<AlgElement> ray_classes,
                           std::vector<std::vector<int>> ray_pairings)
{
    if (ray_classes.size() != ray_pairings.size())
        throw InputError("toric J data: ray classes and pairings differ in length");
    const std::size_t rank = ray_pairings.empty() ? 0 : ray_pairings.front().size();
    BaseJData j(Kind::toric_fano, std::move(algebra), rank);
    j.ray_classes_ = std::move(ray_classes);
    j.ray_pairings_ = std::move(ray_pairings);
    return j;
}

BaseJData BaseJData::explicit_data(AlgebraPtr algebra, std::size_t rank, std::map<std::vector<int>, HLaurent> values)
{
    BaseJData j(Kind::explicit_data, std::move(algebra), rank);
    const std::vector<int> zero(rank, 0);
    for (auto& [d, v] : values) {
        if (d.size() != rank)
            throw InputError("explicit J data: class of wrong rank");
        if (!same_algebra(v.algebra(), j.alg_))
            throw InputError("explicit J data: coefficient in the wrong algebra");
        if (d == zero && v != HLaurent::one(j.alg_))
            throw InputError("explicit J data: J_0 must be 1");
    }
    j.memo_->values = std::move(values);
    return j;
}

std::vector<int> BaseJData::ray_degrees(const std::vector<int>& d) const
{
    std::vector<int> out(ray_pairings_.size(), 0);
    for (std::size_t r = 0; r < ray_pairings_.size(); ++r)
        for (std::size_t j = 0; j < d.size(); ++j)
            out[r] += ray_pairings_[r][j] * d[j];
    return out;
}

HLaurent BaseJData::compute(const std::vector<int>& d) const
{
    switch (kind_) {
    case Kind::point:
        break;
    case Kind::projective_space: {
        const AlgElement h = AlgElement::basis(alg_, "H");
        HLaurent den = HLaurent::one(alg_);
        for (int m = 1; m <= d[0]; ++m)
            den = den * pow(HLaurent::shifted(h, m), projective_n_ + 1);
        return hl_invert(den);
    }
    case Kind::toric_fano: {
        const auto deg = ray_degrees(d);
        HLaurent out = HLaurent::one(alg_);
        for (std::size_t r = 0; r < ray_classes_.size(); ++r)
            out = out * factorial_ratio(ray_classes_[r], deg[r]);
        return out;
    }
    case Kind::explicit_data:
        break;
    }
    std::string name = "(";
    for (std::size_t j = 0; j < d.size(); ++j)
        name += (j ? "," : "") + std::to_string(d[j]);
    throw Error("missing base J data for class " + name + ")");
}

HLaurent BaseJData::coefficient(const std::vector<int>& d) const
{
    if (d.size() != rank_)
        throw Error("base class of wrong rank");
    bool zero = true;
    for (int x : d) {
        if (x < 0)
            throw Error("base class with negative coordinate");
        zero = zero && x == 0;
    }
    if (zero)
        return HLaurent::one(alg_);
    {
        std::lock_guard lock(memo_->mu);
        auto it = memo_->values.find(d);
        if (it != memo_->values.end())
            return it->second;
    }
    // Computed outside the lock; a concurrent duplicate computes the same value.
    HLaurent v = compute(d);
    std::lock_guard lock(memo_->mu);
    return memo_->values.try_emplace(d, std::move(v)).first->second;
}

BaseJData base_j_projective(int n, const Box& box)
{
    BaseJData j = BaseJData::projective(n);
    for (int nu = 1; nu <= box.nu_max; ++nu)
        j.coefficient({nu});
    return j;
}

} // namespace gk
