#include "circsolve/errors.hpp"
#include "circsolve/oracle.hpp"
#include "reference.hpp"

#include <doctest.h>

#include <algorithm>

using namespace circsolve;
using namespace circsolve::oracle;

TEST_SUITE("oracle") {

TEST_CASE("materialize")
{
    const auto m = materialize(make_spec(std::vector<double>{4, 1, 0, 1}));
    CHECK(m == DenseMatrix(4, {4, 1, 0, 1, 1, 4, 1, 0, 0, 1, 4, 1, 1, 0, 1, 4}));

    const auto id = materialize(make_spec(std::vector<double>{1, 0, 0}));
    CHECK(id == DenseMatrix(3, {1, 0, 0, 0, 1, 0, 0, 0, 1}));

    const auto m3 = materialize(make_spec(std::vector<double>{2, 1, 1}));
    CHECK(m3 == DenseMatrix(3, {2, 1, 1, 1, 2, 1, 1, 1, 2}));

    CHECK_THROWS_AS((void)materialize(random_spec(10, 1), 9), AllocationLimit);
    CHECK_NOTHROW((void)materialize(random_spec(9, 1), 9));
}

TEST_CASE("materialize is exactly symmetric and circulant")
{
    for (std::size_t n = 1; n <= 40; ++n) {
        const auto spec = random_spec(n, 100 + n);
        const auto m = materialize(spec);
        CHECK(m.is_symmetric());
        for (std::size_t k = 1; k < n; ++k) {
            for (std::size_t j = 0; j < n; ++j) {
                CHECK(m(k, (j + 1) % n) == m(k - 1, j));
            }
        }
        for (std::size_t j = 0; j < n; ++j) {
            CHECK(m(0, j) == spec[j]);
        }
    }
}

TEST_CASE("dense_solve")
{
    const DenseMatrix id(3, {1, 0, 0, 0, 1, 0, 0, 0, 1});
    CHECK(dense_solve(id, RealVector({1, -2, 3})).vec() == std::vector<double>{1, -2, 3});

    const DenseMatrix diag(2, {2, 0, 0, 4});
    CHECK(dense_solve(diag, RealVector({2, 8})).vec() == std::vector<double>{1, 2});

    const auto x = dense_solve(materialize(make_spec(std::vector<double>{4, 1, 0, 1})), RealVector({6, 6, 6, 6}));
    for (double v : x.entries()) {
        CHECK(std::abs(v - 1.0) <= 1e-15);
    }

    // Needs a row swap.
    const DenseMatrix swap(2, {0, 1, 1, 0});
    CHECK(dense_solve(swap, RealVector({3, 4})).vec() == std::vector<double>{4, 3});

    CHECK_THROWS_AS((void)dense_solve(materialize(make_spec(std::vector<double>{2, 1, 0, 1})), RealVector({1, 2, 3, 4})),
                    NumericallySingular);
    CHECK_THROWS_AS((void)dense_solve(DenseMatrix(2), RealVector({1, 2})), NumericallySingular);
    CHECK_THROWS_AS((void)dense_solve(id, RealVector({1, 2})), DimensionMismatch);
}

TEST_CASE("dense_solve residual bound on general matrices")
{
    reference::Gen gen(55);
    for (int trial = 0; trial < 30; ++trial) {
        const std::size_t n = gen.size(1, 30);
        std::vector<double> entries(n * n);
        for (auto& e : entries) {
            e = gen.uniform(-1, 1);
        }
        for (std::size_t i = 0; i < n; ++i) {
            entries[i * n + i] += static_cast<double>(n);
        }
        const DenseMatrix m(n, entries);
        const auto b = gen.vec(n);
        const auto x = dense_solve(m, RealVector(b));
        const auto mx = m.multiply(x.vec());
        CHECK(reference::max_abs_diff(mx, b) <= 1e-10 * static_cast<double>(n) * m.inf_norm() * x.inf_norm());
    }
}

TEST_CASE("dense_eigenvalues")
{
    const DenseMatrix id(4, {1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 1});
    CHECK(dense_eigenvalues(id) == std::vector<double>{1, 1, 1, 1});

    const DenseMatrix diag(2, {2, 0, 0, 5});
    CHECK(dense_eigenvalues(diag) == std::vector<double>{2, 5});

    const auto eig = dense_eigenvalues(materialize(make_spec(std::vector<double>{4, 1, 0, 1})));
    const std::vector<double> expected{2, 4, 4, 6};
    CHECK(reference::max_abs_diff(eig, expected) <= 1e-10);

    // 2x2 [[1,2],[2,1]] has eigenvalues -1, 3.
    const DenseMatrix sym(2, {1, 2, 2, 1});
    CHECK(reference::max_abs_diff(dense_eigenvalues(sym), {-1, 3}) <= 1e-14);
}

TEST_CASE("dense_eigenvalues gives up after the sweep cap")
{
    reference::Gen gen(9);
    const std::size_t n = 12;
    std::vector<double> entries(n * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i; j < n; ++j) {
            entries[i * n + j] = entries[j * n + i] = gen.uniform(-1, 1);
        }
    }
    CHECK_THROWS_AS((void)dense_eigenvalues(DenseMatrix(n, entries), 0), NoConvergence);
    CHECK_NOTHROW((void)dense_eigenvalues(DenseMatrix(n, entries)));
}

TEST_CASE("Jacobi eigenvalues match the closed-form spectrum")
{
    for (std::size_t n = 1; n <= 64; n += (n < 12 ? 1 : 7)) {
        const auto spec = random_spec(n, 3 * n + 1);
        auto psi = spectrum(spec);
        std::vector<double> sorted(psi.values().begin(), psi.values().end());
        std::sort(sorted.begin(), sorted.end());
        const auto eig = dense_eigenvalues(materialize(spec));
        CHECK_MESSAGE(reference::max_abs_diff(sorted, eig) <= 1e-9 * psi.max_abs(), "n=" << n);
    }
}

TEST_CASE("random_spec")
{
    for (std::size_t n : {1u, 2u, 3u, 8u, 31u, 64u}) {
        const auto a = random_spec(n, 42);
        const auto b = random_spec(n, 42);
        CHECK(a == b);
        CHECK(random_vector(n, 42) == random_vector(n, 42));
        if (n > 1) {
            CHECK_FALSE(a == random_spec(n, 43));
        }
        // Symmetric under the exact constructor.
        CHECK(make_spec(a.first_row()) == a);
        double off = 0.0;
        for (std::size_t m = 1; m < n; ++m) {
            off += std::abs(a[m]);
            CHECK(a[m] >= -1.0);
            CHECK(a[m] <= 1.0);
        }
        CHECK(a[0] == doctest::Approx(1.0 + off).epsilon(1e-15));
        const auto psi = spectrum(a);
        CHECK_FALSE(is_singular(psi).singular);
        CHECK(psi.min_abs() >= 1.0 - 1e-12);
    }
}

} // TEST_SUITE
