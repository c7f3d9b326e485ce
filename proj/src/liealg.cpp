#include "mq/liealg.hpp"
#include <sstream>

namespace mq {

RatMat build_phi(int h) {
    int n = 2 * h + 2;
    RatMat phi(n, n);
    phi.at(0, n - 1) = -1;
    phi.at(n - 1, 0) = 1;
    for (int i = 1; i <= h; ++i) {
        phi.at(i, h + i) = 1;
        phi.at(h + i, i) = -1;
    }
    return phi;
}

int block_of(int index, int h) {
    if (index == 0) return 0;
    if (index <= h) return 1;
    if (index <= 2 * h) return 2;
    return 3;
}

long lie_dim(int h) { return (3L * h * h + 5L * h + 4) / 2; }

std::vector<LieBasisElement> canonical_basis(int h) {
    int n = 2 * h + 2;
    std::vector<LieBasisElement> basis;
    auto name2 = [](const char* stem, int a, int b) {
        std::ostringstream os;
        os << stem << "[" << a << "][" << b << "]";
        return os.str();
    };
    auto name1 = [](const char* stem, int a) {
        std::ostringstream os;
        os << stem << "[" << a << "]";
        return os.str();
    };
    // t_ab, a <= b: symmetric block in rows h+1..2h, cols 1..h
    for (int a = 1; a <= h; ++a)
        for (int b = a; b <= h; ++b) {
            RatMat m(n, n);
            m.at(h + a, b) += rat(1, 2);
            m.at(h + b, a) += rat(1, 2);
            basis.push_back({name2("t_ab", a, b), m});
        }
    // t_a
    for (int a = 1; a <= h; ++a) {
        RatMat m(n, n);
        m.at(h + a, 0) = -1;
        m.at(n - 1, a) = 1;
        basis.push_back({name1("t_a", a), m});
    }
    // t
    {
        RatMat m(n, n);
        m.at(n - 1, 0) = -1;
        basis.push_back({"t", m});
    }
    // k_a
    for (int a = 1; a <= h; ++a) {
        RatMat m(n, n);
        m.at(a, 0) = 1;
        m.at(n - 1, h + a) = 1;
        basis.push_back({name1("k_a", a), m});
    }
    // g^a_b
    for (int a = 1; a <= h; ++a)
        for (int b = 1; b <= h; ++b) {
            RatMat m(n, n);
            m.at(a, b) = -1;
            m.at(h + b, h + a) = 1;
            basis.push_back({name2("g", a, b), m});
        }
    // g_0
    {
        RatMat m(n, n);
        m.at(0, 0) = -1;
        m.at(n - 1, n - 1) = 1;
        basis.push_back({"g0", m});
    }
    return basis;
}

bool is_in_lie(const RatMat& m, int h) {
    int n = 2 * h + 2;
    if (m.rows() != n || m.cols() != n) return false;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (block_of(i, h) < block_of(j, h) && m.at(i, j) != 0) return false;
    RatMat phi = build_phi(h);
    RatMat cond = m.transpose() * phi + phi * m;
    return cond.is_zero();
}

std::optional<std::vector<Rat>> decompose_in_basis(const RatMat& m, int h) {
    auto basis = canonical_basis(h);
    int n = 2 * h + 2;
    RatMat sys(n * n, static_cast<int>(basis.size()));
    std::vector<Rat> rhs(static_cast<size_t>(n) * n);
    for (size_t k = 0; k < basis.size(); ++k)
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) sys.at(i * n + j, static_cast<int>(k)) = basis[k].mat.at(i, j);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) rhs[static_cast<size_t>(i) * n + j] = m.at(i, j);
    auto sol = sys.solve(rhs);
    if (!sol) return std::nullopt;
    // verify residual exactly
    RatMat rec(n, n);
    for (size_t k = 0; k < basis.size(); ++k)
        if ((*sol)[k] != 0) rec = rec + basis[k].mat * (*sol)[k];
    if (!(rec == m)) return std::nullopt;
    return sol;
}

ClosureReport closure_report(int h) {
    ClosureReport rep;
    auto basis = canonical_basis(h);
    for (size_t i = 0; i < basis.size(); ++i)
        for (size_t j = 0; j < basis.size(); ++j) {
            RatMat br = RatMat::bracket(basis[i].mat, basis[j].mat);
            ++rep.pairs_checked;
            if (!is_in_lie(br, h)) {
                rep.closed = false;
                rep.failures.push_back("[" + basis[i].name + "," + basis[j].name + "] not in Lie(G)");
                continue;
            }
            if (!decompose_in_basis(br, h)) {
                rep.closed = false;
                rep.failures.push_back("[" + basis[i].name + "," + basis[j].name + "] does not decompose");
            }
        }
    return rep;
}

} // namespace mq
