#include "howe/weylmodule.hpp"

#include <numeric>
#include <sstream>

namespace howe {

ModuleParams ModuleParams::make(int n, const Scalar& a1, const Scalar& a2) {
    if (n < 2) {
        throw InvalidParams("n must be at least 2");
    }
    if (a1.is_integer() || a2.is_integer()) {
        throw InvalidParams("parameter must be a non-integer rational");
    }
    return ModuleParams(n, a1, a2);
}

Scalar ModuleParams::anchor(int pos) const {
    if (pos < 1 || pos > m()) {
        throw std::out_of_range("anchor position out of range");
    }
    if (pos < n_) {
        return Scalar(-1);
    }
    if (pos == n_) {
        return a1_;
    }
    if (pos == n_ + 1) {
        return a2_;
    }
    return Scalar(0);
}

std::string BasisIndex::to_string() const {
    std::ostringstream out;
    out << '(';
    for (std::size_t i = 0; i < offsets_.size(); ++i) {
        out << (i ? "," : "") << offsets_[i];
    }
    out << ')';
    return out.str();
}

bool satisfies_sign_constraints(const BasisIndex& idx) {
    const int n = idx.n();
    for (int pos = 1; pos < n; ++pos) {
        if (idx.at(pos) > 0) {
            return false;
        }
    }
    for (int pos = n + 2; pos <= 2 * n; ++pos) {
        if (idx.at(pos) < 0) {
            return false;
        }
    }
    return true;
}

bool is_admissible(const BasisIndex& idx) {
    const auto off = idx.offsets();
    return satisfies_sign_constraints(idx) && std::accumulate(off.begin(), off.end(), std::int64_t{0}) == 0;
}

Scalar coordinate(const ModuleParams& params, const BasisIndex& idx, int pos) {
    return params.anchor(pos) + Scalar(idx.at(pos));
}

WeightVector WeightVector::basis(const BasisIndex& idx, const Scalar& coeff) {
    WeightVector v;
    v.add(idx, coeff);
    return v;
}

void WeightVector::add(const BasisIndex& idx, const Scalar& coeff) {
    if (coeff.is_zero()) {
        return;
    }
    auto [it, inserted] = terms_.try_emplace(idx, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second.is_zero()) {
            terms_.erase(it);
        }
    }
}

Scalar WeightVector::coefficient(const BasisIndex& idx) const {
    auto it = terms_.find(idx);
    return it == terms_.end() ? Scalar(0) : it->second;
}

WeightVector& WeightVector::operator+=(const WeightVector& rhs) {
    for (const auto& [idx, c] : rhs.terms_) {
        add(idx, c);
    }
    return *this;
}

WeightVector& WeightVector::operator-=(const WeightVector& rhs) {
    for (const auto& [idx, c] : rhs.terms_) {
        add(idx, -c);
    }
    return *this;
}

WeightVector& WeightVector::operator*=(const Scalar& s) {
    if (s.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [idx, c] : terms_) {
        c *= s;
    }
    return *this;
}

std::string WeightVector::to_string() const {
    if (terms_.empty()) {
        return "0";
    }
    std::ostringstream out;
    bool first = true;
    for (const auto& [idx, c] : terms_) {
        out << (first ? "" : " + ") << c.to_string() << "*x" << idx.to_string();
        first = false;
    }
    return out.str();
}

namespace {

void check_position(const ModuleParams& params, int pos) {
    if (pos < 1 || pos > params.m()) {
        throw std::out_of_range("generator index " + std::to_string(pos) + " out of range 1.." +
                                std::to_string(params.m()));
    }
}

// Applies one atom to coeff * x(idx) in place. Returns false when the result
// vanishes.
bool act(const ModuleParams& params, const Atom& atom, BasisIndex& idx, Scalar& coeff) {
    const int n = params.n();
    const int pos = atom.pos;
    const std::int64_t off = idx.at(pos);
    const bool integral = pos != n && pos != n + 1;
    const std::int64_t int_value = pos < n ? off - 1 : off;  // valid when integral
    const bool negative_integer = integral && int_value < 0;

    if (atom.kind == Atom::Kind::q) {
        if (negative_integer) {
            if (int_value + 1 == 0) {
                return false;
            }
            coeff *= Scalar(int_value + 1);
        }
        idx.at(pos) = off + 1;
        return true;
    }
    if (!negative_integer) {
        if (integral) {
            if (int_value == 0) {
                return false;
            }
            coeff *= Scalar(int_value);
        } else {
            coeff *= (pos == n ? params.a1() : params.a2()) + Scalar(off);
        }
    }
    idx.at(pos) = off - 1;
    return true;
}

WeightVector apply_atom(const ModuleParams& params, const Atom& atom, const WeightVector& v) {
    check_position(params, atom.pos);
    WeightVector out;
    for (const auto& [idx, c] : v) {
        BasisIndex target = idx;
        Scalar coeff = c;
        if (act(params, atom, target, coeff)) {
            out.add(target, coeff);
        }
    }
    return out;
}

}  // namespace

WeightVector apply_q(const ModuleParams& params, int i, const WeightVector& v) {
    return apply_atom(params, Atom{Atom::Kind::q, i}, v);
}

WeightVector apply_p(const ModuleParams& params, int j, const WeightVector& v) {
    return apply_atom(params, Atom{Atom::Kind::p, j}, v);
}

WeightVector apply_E(const ModuleParams& params, int i, int j, const WeightVector& v) {
    return apply_q(params, i, apply_p(params, j, v));
}

std::vector<Scalar> h_weight(const ModuleParams& params, const WeightVector& v) {
    if (v.is_zero()) {
        throw NotWeightVector("h_weight: zero vector");
    }
    std::vector<Scalar> weight;
    bool first = true;
    for (const auto& [idx, c] : v) {
        std::vector<Scalar> w;
        w.reserve(params.m() - 1);
        for (int i = 1; i < params.m(); ++i) {
            w.push_back(coordinate(params, idx, i) - coordinate(params, idx, i + 1));
        }
        if (first) {
            weight = std::move(w);
            first = false;
        } else if (w != weight) {
            throw NotWeightVector("not a weight vector");
        }
    }
    return weight;
}

Operator Operator::identity() {
    Operator op;
    op.add(Word{}, Scalar(1));
    return op;
}

Operator Operator::q(int i) {
    Operator op;
    op.add(Word{Atom{Atom::Kind::q, i}}, Scalar(1));
    return op;
}

Operator Operator::p(int j) {
    Operator op;
    op.add(Word{Atom{Atom::Kind::p, j}}, Scalar(1));
    return op;
}

Operator Operator::E(int i, int j) {
    Operator op;
    op.add(Word{Atom{Atom::Kind::q, i}, Atom{Atom::Kind::p, j}}, Scalar(1));
    return op;
}

void Operator::add(const Word& w, const Scalar& coeff) {
    if (coeff.is_zero()) {
        return;
    }
    auto [it, inserted] = terms_.try_emplace(w, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second.is_zero()) {
            terms_.erase(it);
        }
    }
}

Operator& Operator::operator+=(const Operator& rhs) {
    for (const auto& [w, c] : rhs.terms_) {
        add(w, c);
    }
    return *this;
}

Operator& Operator::operator-=(const Operator& rhs) {
    for (const auto& [w, c] : rhs.terms_) {
        add(w, -c);
    }
    return *this;
}

Operator& Operator::operator*=(const Scalar& s) {
    if (s.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [w, c] : terms_) {
        c *= s;
    }
    return *this;
}

Operator operator*(const Operator& a, const Operator& b) {
    Operator out;
    for (const auto& [wa, ca] : a.terms_) {
        for (const auto& [wb, cb] : b.terms_) {
            Word w = wa;
            w.insert(w.end(), wb.begin(), wb.end());
            out.add(w, ca * cb);
        }
    }
    return out;
}

Operator op_sum(const Operator& a, const Operator& b) { return a + b; }
Operator op_scale(const Scalar& s, const Operator& a) { return s * a; }
Operator op_compose(const Operator& a, const Operator& b) { return a * b; }
Operator op_commutator(const Operator& a, const Operator& b) { return a * b - b * a; }

WeightVector op_apply(const ModuleParams& params, const Operator& op, const WeightVector& v) {
    for (const auto& [w, c] : op.terms()) {
        for (const auto& atom : w) {
            check_position(params, atom.pos);
        }
    }
    WeightVector out;
    for (const auto& [idx, vc] : v) {
        for (const auto& [word, oc] : op.terms()) {
            BasisIndex target = idx;
            Scalar coeff = vc * oc;
            bool alive = true;
            for (auto it = word.rbegin(); it != word.rend() && alive; ++it) {
                alive = act(params, *it, target, coeff);
            }
            if (alive) {
                out.add(target, coeff);
            }
        }
    }
    return out;
}

BasisIndex random_admissible_index(int n, int box, Rng& rng) {
    const int m = 2 * n;
    for (;;) {
        std::vector<std::int64_t> off(m, 0);
        std::int64_t sum = 0;
        for (int pos = 1; pos <= m; ++pos) {
            if (pos == n + 1) {
                continue;
            }
            std::int64_t lo = -box;
            std::int64_t hi = box;
            if (pos < n) {
                hi = 0;
            } else if (pos > n + 1) {
                lo = 0;
            }
            off[pos - 1] = rng.uniform(lo, hi);
            sum += off[pos - 1];
        }
        if (-sum >= -box && -sum <= box) {
            off[n] = -sum;
            return BasisIndex(std::move(off));
        }
    }
}

std::vector<BasisIndex> admissible_in_box(int n, int box) {
    const int m = 2 * n;
    std::vector<std::int64_t> lo(m), hi(m);
    for (int pos = 1; pos <= m; ++pos) {
        lo[pos - 1] = pos > n + 1 ? 0 : -box;
        hi[pos - 1] = pos < n ? 0 : box;
    }
    std::vector<BasisIndex> out;
    std::vector<std::int64_t> cur(lo);
    for (;;) {
        if (std::accumulate(cur.begin(), cur.end(), std::int64_t{0}) == 0) {
            out.emplace_back(cur);
        }
        int k = m - 1;
        while (k >= 0 && cur[k] == hi[k]) {
            cur[k] = lo[k];
            --k;
        }
        if (k < 0) {
            break;
        }
        ++cur[k];
    }
    return out;
}

}  // namespace howe
