#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "howe/exactnum.hpp"
#include "howe/random.hpp"

namespace howe {

class InvalidParams : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class NotWeightVector : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Parameters of the degree-1 module N(a1, a2) of sl_{2n}.
///
/// The anchor tuple is (-1, ..., -1, a1, a2, 0, ..., 0) with n-1 entries -1
/// and n-1 entries 0. Positions are 1-based throughout, matching E_{i,j}.
class ModuleParams {
public:
    /// Throws InvalidParams unless n >= 2 and a1, a2 are non-integers.
    static ModuleParams make(int n, const Scalar& a1, const Scalar& a2);

    int n() const { return n_; }
    int m() const { return 2 * n_; }
    const Scalar& a1() const { return a1_; }
    const Scalar& a2() const { return a2_; }

    /// a1 - a2 not an integer.
    bool generic() const { return !(a1_ - a2_).is_integer(); }

    /// Anchor entry at 1-based position `pos`.
    Scalar anchor(int pos) const;

private:
    ModuleParams(int n, Scalar a1, Scalar a2) : n_(n), a1_(std::move(a1)), a2_(std::move(a2)) {}

    int n_;
    Scalar a1_;
    Scalar a2_;
};

/// Integer offsets b - a from the anchor; labels the basis vector x(b).
class BasisIndex {
public:
    BasisIndex() = default;
    explicit BasisIndex(std::vector<std::int64_t> offsets) : offsets_(std::move(offsets)) {}

    /// The anchor itself (all offsets zero) for sl_{2n}.
    static BasisIndex anchor(int n) { return BasisIndex(std::vector<std::int64_t>(2 * n, 0)); }

    int size() const { return static_cast<int>(offsets_.size()); }
    int n() const { return size() / 2; }

    /// 1-based offset access.
    std::int64_t at(int pos) const { return offsets_.at(pos - 1); }
    std::int64_t& at(int pos) { return offsets_.at(pos - 1); }

    std::span<const std::int64_t> offsets() const { return offsets_; }

    BasisIndex shifted(int pos, std::int64_t delta) const {
        BasisIndex out = *this;
        out.at(pos) += delta;
        return out;
    }

    std::string to_string() const;

    auto operator<=>(const BasisIndex&) const = default;
    bool operator==(const BasisIndex&) const = default;

private:
    std::vector<std::int64_t> offsets_;
};

/// Sign conditions on the integer coordinates: offsets[i] <= 0 for i < n and
/// offsets[i] >= 0 for i > n + 1. The two non-integer coordinates are free.
bool satisfies_sign_constraints(const BasisIndex& idx);

/// Sign conditions plus the zero coordinate sum.
bool is_admissible(const BasisIndex& idx);

/// b_pos = a_pos + offset_pos.
Scalar coordinate(const ModuleParams& params, const BasisIndex& idx, int pos);

/// Finitely supported combination of basis vectors with no zero coefficients.
/// Iteration follows the lexicographic order of the offsets.
class WeightVector {
public:
    using Terms = std::map<BasisIndex, Scalar>;

    WeightVector() = default;
    static WeightVector basis(const BasisIndex& idx, const Scalar& coeff = Scalar(1));

    void add(const BasisIndex& idx, const Scalar& coeff);

    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    const Terms& terms() const { return terms_; }
    Terms::const_iterator begin() const { return terms_.begin(); }
    Terms::const_iterator end() const { return terms_.end(); }

    /// Zero when `idx` is absent.
    Scalar coefficient(const BasisIndex& idx) const;

    WeightVector& operator+=(const WeightVector& rhs);
    WeightVector& operator-=(const WeightVector& rhs);
    WeightVector& operator*=(const Scalar& s);

    friend WeightVector operator+(WeightVector a, const WeightVector& b) { return a += b; }
    friend WeightVector operator-(WeightVector a, const WeightVector& b) { return a -= b; }
    friend WeightVector operator*(const Scalar& s, WeightVector v) { return v *= s; }
    friend bool operator==(const WeightVector& a, const WeightVector& b) { return a.terms_ == b.terms_; }

    std::string to_string() const;

private:
    Terms terms_;
};

/// Multiplication q_i acting on W(a).
WeightVector apply_q(const ModuleParams& params, int i, const WeightVector& v);
/// Differentiation p_j acting on W(a).
WeightVector apply_p(const ModuleParams& params, int j, const WeightVector& v);
/// E_{i,j} = q_i p_j.
WeightVector apply_E(const ModuleParams& params, int i, int j, const WeightVector& v);

/// (b_i - b_{i+1}) for i = 1 .. 2n-1, common to all terms.
/// Throws NotWeightVector for the zero vector or mixed weights.
std::vector<Scalar> h_weight(const ModuleParams& params, const WeightVector& v);

/// One Weyl-algebra generator.
struct Atom {
    enum class Kind : std::uint8_t { q, p };
    Kind kind;
    int pos;

    auto operator<=>(const Atom&) const = default;
    bool operator==(const Atom&) const = default;
};

/// Product of atoms; the rightmost atom acts first.
using Word = std::vector<Atom>;

/// Formal finite sum of coefficient * word in the Weyl algebra W_{2n}.
///
/// Words are not normal-ordered, so two operators that agree in W_{2n} may
/// have different representations; compare operators through their action.
class Operator {
public:
    using Terms = std::map<Word, Scalar>;

    Operator() = default;

    static Operator zero() { return {}; }
    static Operator identity();
    static Operator q(int i);
    static Operator p(int j);
    /// Elementary matrix E_{i,j} realized as q_i p_j.
    static Operator E(int i, int j);

    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    const Terms& terms() const { return terms_; }

    void add(const Word& w, const Scalar& coeff);

    Operator& operator+=(const Operator& rhs);
    Operator& operator-=(const Operator& rhs);
    Operator& operator*=(const Scalar& s);

    friend Operator operator+(Operator a, const Operator& b) { return a += b; }
    friend Operator operator-(Operator a, const Operator& b) { return a -= b; }
    friend Operator operator*(const Scalar& s, Operator a) { return a *= s; }
    /// Composition: (A * B) v = A (B v).
    friend Operator operator*(const Operator& a, const Operator& b);
    friend bool operator==(const Operator& a, const Operator& b) { return a.terms_ == b.terms_; }

private:
    Terms terms_;
};

Operator op_sum(const Operator& a, const Operator& b);
Operator op_scale(const Scalar& s, const Operator& a);
Operator op_compose(const Operator& a, const Operator& b);
/// [A, B] = AB - BA.
Operator op_commutator(const Operator& a, const Operator& b);

WeightVector op_apply(const ModuleParams& params, const Operator& op, const WeightVector& v);

/// Uniformly drawn admissible index with every offset bounded by `box`.
BasisIndex random_admissible_index(int n, int box, Rng& rng);

/// Every admissible index whose offsets all lie in [-box, box], in
/// lexicographic order.
std::vector<BasisIndex> admissible_in_box(int n, int box);

}  // namespace howe
