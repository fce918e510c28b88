#pragma once

#include "gk/rational.hpp"

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace gk {

struct Term {
    std::size_t index = 0;
    Rational coeff;
};

/// Sparse Q-linear combination of basis elements, sorted by index, no zero entries.
using Combination = std::vector<Term>;

Combination normalized(Combination c);

struct BasisElement {
    std::string label;
    int degree = 0; ///< complex codimension
};

/// Finite-dimensional graded commutative Q-algebra given by structure constants.
///
/// The constructor stores the table as given (after normalizing each entry) and
/// performs no algebraic validation, so that check_algebra can report on
/// arbitrary tables. Use make_algebra for a validated instance.
class StructAlgebra {
public:
    /// table[i * dim + j] is the product of basis elements i and j.
    StructAlgebra(std::string name, std::vector<BasisElement> basis, std::vector<Combination> table,
                  std::size_t one_index);

    const std::string& name() const { return name_; }
    std::size_t dim() const { return basis_.size(); }
    const std::vector<BasisElement>& basis() const { return basis_; }
    const std::string& label(std::size_t i) const { return basis_[i].label; }
    int degree(std::size_t i) const { return basis_[i].degree; }
    int top_degree() const { return top_degree_; }
    std::size_t one_index() const { return one_; }
    const Combination& product(std::size_t i, std::size_t j) const { return table_[i * dim() + j]; }

    std::optional<std::size_t> find(std::string_view label) const;
    /// Like find, but throws InputError for unknown labels.
    std::size_t index_of(std::string_view label) const;

    /// Same basis (labels and degrees), unit and structure constants.
    bool operator==(const StructAlgebra& other) const;

private:
    std::string name_;
    std::vector<BasisElement> basis_;
    std::vector<Combination> table_;
    std::size_t one_ = 0;
    int top_degree_ = 0;
};

using AlgebraPtr = std::shared_ptr<const StructAlgebra>;

struct ValidationReport {
    bool ok = true;
    std::vector<std::string> failures;
};

/// Table shape, connectedness (degree 0 spanned by the unit), unit law,
/// commutativity, grading additivity and associativity on all basis triples.
/// Failure messages name the offending basis labels, e.g.
/// "associativity failed at (a,b,b)".
ValidationReport check_algebra(const StructAlgebra& a);

/// Constructs and validates; throws InputError carrying the first failure.
AlgebraPtr make_algebra(std::string name, std::vector<BasisElement> basis, std::vector<Combination> table,
                        std::size_t one_index);

bool same_algebra(const AlgebraPtr& a, const AlgebraPtr& b);

/// Shared instance of Q[label]/(label^{n+1}) with basis 1, label, label^2, ...
AlgebraPtr truncated_polynomial_algebra(const std::string& label, int n);

/// Element of a StructAlgebra as a dense coordinate vector.
class AlgElement {
public:
    explicit AlgElement(AlgebraPtr algebra);
    AlgElement(AlgebraPtr algebra, std::vector<Rational> coords);

    static AlgElement zero(AlgebraPtr algebra) { return AlgElement(std::move(algebra)); }
    static AlgElement one(AlgebraPtr algebra);
    static AlgElement scalar(AlgebraPtr algebra, const Rational& q);
    static AlgElement basis(AlgebraPtr algebra, std::size_t i);
    static AlgElement basis(AlgebraPtr algebra, std::string_view label);

    const AlgebraPtr& algebra() const { return alg_; }
    const std::vector<Rational>& coords() const { return coords_; }
    const Rational& operator[](std::size_t i) const { return coords_[i]; }
    const Rational& coeff(std::string_view label) const;

    bool is_zero() const;
    Rational scalar_part() const { return coords_[alg_->one_index()]; }

    AlgElement homogeneous_part(int degree) const;
    /// Degrees carrying a nonzero component, ascending.
    std::vector<int> degrees_present() const;
    /// The degree when the element is nonzero and homogeneous.
    std::optional<int> homogeneous_degree() const;

    AlgElement& operator+=(const AlgElement& o);
    AlgElement& operator-=(const AlgElement& o);
    AlgElement& operator*=(const Rational& q);
    AlgElement operator-() const;

    friend AlgElement operator+(AlgElement a, const AlgElement& b) { return a += b; }
    friend AlgElement operator-(AlgElement a, const AlgElement& b) { return a -= b; }
    friend AlgElement operator*(AlgElement a, const Rational& q) { return a *= q; }
    friend AlgElement operator*(const Rational& q, AlgElement a) { return a *= q; }
    friend bool operator==(const AlgElement& a, const AlgElement& b);
    friend bool operator!=(const AlgElement& a, const AlgElement& b) { return !(a == b); }

private:
    void require_same(const AlgElement& o) const;

    AlgebraPtr alg_;
    std::vector<Rational> coords_;
};

/// Bilinear extension of the structure constants. Throws Error("algebra mismatch").
AlgElement alg_mul(const AlgElement& a, const AlgElement& b);
inline AlgElement operator*(const AlgElement& a, const AlgElement& b) { return alg_mul(a, b); }

AlgElement pow(const AlgElement& a, int k);

/// Human-readable form, e.g. "2*z - 1/2*p*z"; "0" for zero.
std::string to_string(const AlgElement& a);

} // namespace gk
