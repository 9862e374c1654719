#include <doctest.h>

#include <random>

#include "pgroup/snf.hpp"

using namespace pgroup;

namespace {

bool is_diagonal(const IntMat& d) {
    for (int i = 0; i < d.rows; ++i)
        for (int j = 0; j < d.cols; ++j)
            if (i != j && d.at(i, j) != 0) return false;
    return true;
}

long long det3(const IntMat& m) {
    REQUIRE(m.rows == m.cols);
    if (m.rows == 1) return m.at(0, 0);
    if (m.rows == 2) return m.at(0, 0) * m.at(1, 1) - m.at(0, 1) * m.at(1, 0);
    long long d = 0;
    for (int c = 0; c < m.cols; ++c) {
        IntMat minor(m.rows - 1, m.cols - 1);
        for (int i = 1; i < m.rows; ++i) {
            int cc = 0;
            for (int j = 0; j < m.cols; ++j) {
                if (j == c) continue;
                minor.at(i - 1, cc++) = m.at(i, j);
            }
        }
        long long term = m.at(0, c) * det3(minor);
        d += (c % 2 == 0) ? term : -term;
    }
    return d;
}

void check_decomposition(const IntMat& a) {
    SmithResult r = smith_normal_form(a);
    CHECK(is_diagonal(r.d));
    IntMat lhs = r.u * a * r.v;
    for (int i = 0; i < a.rows; ++i)
        for (int j = 0; j < a.cols; ++j) CHECK(lhs.at(i, j) == r.d.at(i, j));
    int nmin = a.rows < a.cols ? a.rows : a.cols;
    for (int i = 0; i + 1 < nmin; ++i) {
        CHECK(r.d.at(i, i) >= 0);
        if (r.d.at(i, i) != 0) CHECK(r.d.at(i + 1, i + 1) % r.d.at(i, i) == 0);
        else CHECK(r.d.at(i + 1, i + 1) == 0);
    }
    IntMat prod = r.u * r.uinv;
    for (int i = 0; i < a.rows; ++i)
        for (int j = 0; j < a.rows; ++j) CHECK(prod.at(i, j) == (i == j ? 1 : 0));
    CHECK(std::llabs(det3(r.u)) == 1);
    CHECK(std::llabs(det3(r.v)) == 1);
}

}  // namespace

TEST_CASE("known invariant factors") {
    IntMat a(2, 2);
    a.at(0, 0) = 2; a.at(0, 1) = 4;
    a.at(1, 0) = 6; a.at(1, 1) = 8;
    SmithResult r = smith_normal_form(a);
    CHECK(r.d.at(0, 0) == 2);
    CHECK(r.d.at(1, 1) == 4);
    check_decomposition(a);
}

TEST_CASE("identity and zero matrices") {
    IntMat id = IntMat::identity(3);
    SmithResult r = smith_normal_form(id);
    for (int i = 0; i < 3; ++i) CHECK(r.d.at(i, i) == 1);

    IntMat z(2, 3);
    SmithResult rz = smith_normal_form(z);
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 3; ++j) CHECK(rz.d.at(i, j) == 0);
}

TEST_CASE("decomposition properties on random matrices") {
    std::mt19937 rng(4242);
    std::uniform_int_distribution<int> entry(-9, 9);
    std::uniform_int_distribution<int> dim(1, 4);
    for (int trial = 0; trial < 200; ++trial) {
        IntMat a(dim(rng), dim(rng));
        for (int i = 0; i < a.rows; ++i)
            for (int j = 0; j < a.cols; ++j) a.at(i, j) = entry(rng);
        check_decomposition(a);
    }
}

TEST_CASE("multiplication by z-1 on the cyclotomic integers of Q(zeta_3)") {
    // basis 1, z with z^2 = -1 - z; (z-1)^4 is multiplication by 9 z^2,
    // so the cokernel must be C9 x C9
    IntMat zmat(2, 2);
    zmat.at(1, 0) = 1;
    zmat.at(0, 1) = -1;
    zmat.at(1, 1) = -1;
    IntMat lam = zmat;
    lam.at(0, 0) -= 1;
    lam.at(1, 1) -= 1;
    IntMat l4 = lam * lam * lam * lam;
    SmithResult r = smith_normal_form(l4);
    CHECK(r.d.at(0, 0) == 9);
    CHECK(r.d.at(1, 1) == 9);
    check_decomposition(l4);

    IntMat l3 = lam * lam * lam;
    SmithResult r3 = smith_normal_form(l3);
    CHECK(r3.d.at(0, 0) == 3);
    CHECK(r3.d.at(1, 1) == 9);
}
