#include "doctest.h"

#include "howe/singular.hpp"
#include "support.hpp"

using namespace howe;
using howe::test::generic_params;
using howe::test::idx;
using howe::test::nongeneric_params;

TEST_CASE("k_tuples and weight spaces") {
    CHECK(k_tuples(3, 2).size() == 6);
    CHECK(k_tuples(2, 0) == std::vector<KTuple>{{0}});
    CHECK(k_tuples(2, 3) == std::vector<KTuple>{{0}, {1}, {2}, {3}});
    CHECK(k_tuples(3, 1) == std::vector<KTuple>{{0, 0}, {0, 1}, {1, 0}});
    CHECK_THROWS(k_tuples(2, -1));
    const auto p = generic_params(3);
    CHECK(weight_space_basis(p, {0, 2}).size() == 6);
    CHECK(weight_space_basis(generic_params(2), {0, 0}).size() == 1);
    CHECK(weight_space_basis(generic_params(4), {1, 4}).size() == 35);
}

TEST_CASE("k_index round trip") {
    CHECK(k_index(2, {0, 1}, {1}) == idx({-1, 1, 0, 0}));
    CHECK(k_index(2, {0, 1}, {0}) == idx({0, 0, -1, 1}));
    CHECK(k_index(3, {-1, 2}, {1, 1}) == idx({-1, -1, 1, 0, 1, 0}));
    for (const auto& k : k_tuples(4, 3)) {
        const HwvLabel label{2, 3};
        CHECK(k_of_index(4, label, k_index(4, label, k)) == k);
    }
    CHECK(k_of_index(2, {0, 1}, BasisIndex::anchor(2)).empty());
}

TEST_CASE("kappa examples") {
    const auto p2 = generic_params(2);
    CHECK(kappa(p2, {0, 1}, {0}) == Scalar(1));
    CHECK(kappa(p2, {0, 1}, {1}) == scalar(2, 3));
    const auto p3 = generic_params(3);
    CHECK(kappa(p3, {0, 2}, {1, 0}) == scalar(4, 3));
    CHECK(kappa(p3, {0, 2}, {0, 2}) == scalar(4, 15));
    CHECK_THROWS(kappa(p3, {0, 1}, {1, 1}));
}

TEST_CASE("closed form examples") {
    const auto p2 = generic_params(2);
    CHECK(hwv_closed_form(p2, {0, 0}) == WeightVector::basis(BasisIndex::anchor(2)));
    WeightVector expected = WeightVector::basis(idx({0, 0, -1, 1}));
    expected.add(idx({-1, 1, 0, 0}), scalar(2, 3));
    CHECK(hwv_closed_form(p2, {0, 1}) == expected);
}

TEST_CASE("frozen oracle values, n = 3, b = 0, c = 2") {
    const auto p = generic_params(3);
    const WeightVector x = hwv_bruteforce(p, {0, 2});
    const std::vector<std::pair<KTuple, Scalar>> frozen = {
        {{0, 0}, Scalar(1)},      {{0, 1}, scalar(4, 3)},  {{0, 2}, scalar(4, 15)},
        {{1, 0}, scalar(4, 3)},   {{1, 1}, scalar(8, 15)}, {{2, 0}, scalar(4, 15)}};
    CHECK(x.size() == frozen.size());
    for (const auto& [k, c] : frozen) {
        CHECK(x.coefficient(k_index(3, {0, 2}, k)) == c);
    }
    CHECK(x == hwv_closed_form(p, {0, 2}));
}

TEST_CASE("bruteforce oracle agrees with the closed form") {
    for (int n : {2, 3}) {
        for (const auto& p : {generic_params(n), nongeneric_params(n)}) {
            const auto g = build_dual_pair(p);
            for (std::int64_t b = -2; b <= 2; ++b) {
                for (std::int64_t c = 0; c <= 3; ++c) {
                    const auto k = singular_kernel(p, g, {b, c});
                    CHECK(k.kernel_dimension == 1);
                    CHECK(k.weight_space_dimension == static_cast<std::size_t>(c + 1 + (n == 3 ? c * (c + 1) / 2 : 0)));
                    CHECK(hwv_bruteforce(p, {b, c}) == hwv_closed_form(p, {b, c}));
                }
            }
        }
    }
    CHECK(singular_kernel(generic_params(3), build_dual_pair(3), {-1, 2}).kernel_dimension == 1);
}

TEST_CASE("closed form is b-singular with the predicted weights") {
    const auto p = generic_params(4);
    const auto g = build_dual_pair(p);
    for (std::int64_t c = 0; c <= 2; ++c) {
        const auto x = hwv_closed_form(p, {1, c});
        for (const auto& r : g.raise_b) {
            CHECK(op_apply(p, r, x).is_zero());
        }
        const auto w = sub_weight(p, g, x);
        CHECK(w.theta_weight == p.a1() - p.a2() + Scalar(2 - 3));
        CHECK(w.b_weight == std::vector<Scalar>{p.a2() - Scalar(1 + c), Scalar(0), Scalar(-1) - p.a1() - Scalar(1 + c)});
    }
}

TEST_CASE("lower annihilation") {
    CHECK(check_lower_annihilation(generic_params(4), build_dual_pair(4), {0, 2}));
    CHECK(check_lower_annihilation(generic_params(5), build_dual_pair(5), {-1, 3}));
    CHECK(check_lower_annihilation(generic_params(2), build_dual_pair(2), {3, 1}));
}
