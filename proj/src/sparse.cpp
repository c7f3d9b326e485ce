#include "mq/sparse.hpp"
#include <algorithm>
#include <cstdint>
#include <stdexcept>

namespace mq {

void SparseSystem::add(int r, int c, const Rat& v) {
    if (v == 0) return;
    auto& row = a_[r];
    auto it = row.find(c);
    if (it == row.end()) {
        row.emplace(c, v);
    } else {
        it->second += v;
        if (it->second == 0) row.erase(it);
    }
}

void SparseSystem::set_rhs(int r, const Rat& v) {
    if (v == 0) b_.erase(r);
    else b_[r] = v;
}

SparseSystem::Solution SparseSystem::solve_rational() const {
    // working copy with attached rhs
    std::vector<std::map<int, Rat>> m = a_;
    std::vector<Rat> rhs(rows_);
    for (const auto& [r, v] : b_) rhs[r] = v;

    std::vector<int> pivot_col_of_row(rows_, -1);
    std::vector<int> pivot_row_of_col(cols_, -1);
    std::vector<bool> row_done(rows_, false);

    for (;;) {
        // Markowitz: among active nonzero entries pick the one minimizing
        // (row_nnz-1)*(col_nnz-1); ties by (row, col) index
        std::vector<int> col_count(cols_, 0);
        for (int r = 0; r < rows_; ++r) {
            if (row_done[r]) continue;
            for (const auto& [c, v] : m[r])
                if (pivot_row_of_col[c] < 0) ++col_count[c];
        }
        long best_score = -1;
        int br = -1, bc = -1;
        for (int r = 0; r < rows_; ++r) {
            if (row_done[r] || m[r].empty()) continue;
            long rn = 0;
            for (const auto& [c, v] : m[r])
                if (pivot_row_of_col[c] < 0) ++rn;
            if (rn == 0) continue;
            for (const auto& [c, v] : m[r]) {
                if (pivot_row_of_col[c] >= 0) continue;
                long score = (rn - 1) * static_cast<long>(col_count[c] - 1);
                if (best_score < 0 || score < best_score ||
                    (score == best_score && (r < br || (r == br && c < bc)))) {
                    best_score = score;
                    br = r;
                    bc = c;
                }
            }
        }
        if (br < 0) break;
        // eliminate column bc using row br
        Rat piv = m[br][bc];
        for (int r = 0; r < rows_; ++r) {
            if (r == br || row_done[r]) continue;
            auto it = m[r].find(bc);
            if (it == m[r].end()) continue;
            Rat f = it->second / piv;
            for (const auto& [c, v] : m[br]) {
                auto jt = m[r].find(c);
                if (jt == m[r].end()) {
                    m[r].emplace(c, -f * v);
                } else {
                    jt->second -= f * v;
                    if (jt->second == 0) m[r].erase(jt);
                }
            }
            rhs[r] -= f * rhs[br];
        }
        pivot_col_of_row[br] = bc;
        pivot_row_of_col[bc] = br;
        row_done[br] = true;
    }

    Solution sol;
    // inconsistency: empty active row with nonzero rhs
    for (int r = 0; r < rows_; ++r) {
        if (pivot_col_of_row[r] >= 0) continue;
        if (!m[r].empty()) continue; // unreachable after full elimination
        if (rhs[r] != 0) {
            sol.consistent = false;
            sol.offending_row = r;
            sol.offending_residual = rhs[r];
            return sol;
        }
    }
    sol.consistent = true;
    // back substitution: pivot rows are fully reduced against each other?
    // no -- elimination above clears the pivot column in all other active
    // rows including already-done ones? It does not. Re-solve pivots in
    // reverse dependency order instead: process pivot rows so that each
    // pivot variable is expressed through free variables.
    // Simpler: full reduction pass.
    // Order pivot rows by elimination sequence (they are mutually reduced
    // only partially); perform substitution iteratively.
    sol.particular.assign(cols_, Rat(0));
    // Solve pivot variables by iterating rows until stable (acyclic system:
    // one pass in reverse order of elimination works because each pivot row
    // may still contain other pivot columns eliminated later).
    // Build list in elimination order:
    std::vector<std::pair<int, int>> pivots; // (row, col) in order found
    for (int c = 0; c < cols_; ++c)
        if (pivot_row_of_col[c] >= 0) pivots.emplace_back(pivot_row_of_col[c], c);
    // particular: free vars = 0; solve by Gauss-Seidel-style sweeps
    // (elimination guarantees triangularity w.r.t. some order; iterate until
    // fixed point, at most pivots.size() sweeps)
    {
        bool changed = true;
        int guard = static_cast<int>(pivots.size()) + 2;
        std::vector<bool> solved(cols_, false);
        while (changed && guard-- > 0) {
            changed = false;
            for (auto& [r, c] : pivots) {
                Rat acc = rhs[r];
                bool ready = true;
                for (const auto& [cc, v] : m[r]) {
                    if (cc == c) continue;
                    if (pivot_row_of_col[cc] >= 0 && !solved[cc]) { ready = false; break; }
                    acc -= v * sol.particular[cc];
                }
                if (!ready) { changed = true; continue; }
                Rat nv = acc / m[r].at(c);
                if (!solved[c] || nv != sol.particular[c]) {
                    sol.particular[c] = nv;
                    solved[c] = true;
                    changed = true;
                }
            }
        }
        if (changed) throw std::logic_error("sparse solve: substitution did not converge");
    }
    // kernel basis: one vector per free column
    for (int fc = 0; fc < cols_; ++fc) {
        if (pivot_row_of_col[fc] >= 0) continue;
        std::vector<Rat> v(cols_);
        v[fc] = 1;
        std::vector<bool> solved(cols_, false);
        bool changed = true;
        int guard = static_cast<int>(pivots.size()) + 2;
        while (changed && guard-- > 0) {
            changed = false;
            for (auto& [r, c] : pivots) {
                Rat acc;
                bool ready = true;
                for (const auto& [cc, vv] : m[r]) {
                    if (cc == c) continue;
                    if (pivot_row_of_col[cc] >= 0 && !solved[cc]) { ready = false; break; }
                    acc -= vv * v[cc];
                }
                if (!ready) { changed = true; continue; }
                Rat nv = acc / m[r].at(c);
                if (!solved[c] || nv != v[c]) {
                    v[c] = nv;
                    solved[c] = true;
                    changed = true;
                }
            }
        }
        if (changed) throw std::logic_error("sparse solve: kernel substitution did not converge");
        sol.kernel.push_back(std::move(v));
    }
    return sol;
}

namespace {

// modular arithmetic helpers (primes < 2^62)
uint64_t mod_mul(uint64_t a, uint64_t b, uint64_t p) {
    return static_cast<uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
}

uint64_t mod_pow(uint64_t a, uint64_t e, uint64_t p) {
    uint64_t r = 1;
    a %= p;
    while (e) {
        if (e & 1) r = mod_mul(r, a, p);
        a = mod_mul(a, a, p);
        e >>= 1;
    }
    return r;
}

uint64_t mod_inv(uint64_t a, uint64_t p) { return mod_pow(a, p - 2, p); }

uint64_t rat_mod(const Rat& x, uint64_t p) {
    mpz_class num = x.get_num(), den = x.get_den();
    mpz_class pz(static_cast<unsigned long>(p));
    mpz_class nm = num % pz;
    if (nm < 0) nm += pz;
    mpz_class dm = den % pz;
    if (dm == 0) throw std::domain_error("rat_mod: denominator divisible by prime");
    uint64_t n = nm.get_ui();
    uint64_t d = dm.get_ui();
    return mod_mul(n, mod_inv(d, p), p);
}

// rational reconstruction from x mod m (Wang's algorithm)
std::optional<Rat> rational_reconstruct(const mpz_class& x, const mpz_class& m) {
    mpz_class bound;
    mpz_class two(2);
    mpz_sqrt(bound.get_mpz_t(), mpz_class(m / 2).get_mpz_t());
    mpz_class r0 = m, r1 = x % m;
    if (r1 < 0) r1 += m;
    mpz_class s0 = 0, s1 = 1;
    while (r1 > bound) {
        mpz_class q = r0 / r1;
        mpz_class r2 = r0 - q * r1;
        mpz_class s2 = s0 - q * s1;
        r0 = r1; r1 = r2;
        s0 = s1; s1 = s2;
    }
    if (s1 == 0) return std::nullopt;
    mpz_class den = s1 < 0 ? mpz_class(-s1) : s1;
    mpz_class num = s1 < 0 ? mpz_class(-r1) : r1;
    if (den > bound) return std::nullopt;
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    if (g != 1 && g != -1) {
        num /= g;
        den /= g;
    }
    Rat out(num, den);
    out.canonicalize();
    return out;
}

} // namespace

SparseSystem::Solution SparseSystem::solve_modular() const {
    // elimination mod several primes with CRT + rational reconstruction;
    // pivot structure is taken from the first prime and validated exactly
    static const uint64_t primes[] = {4611686018427388039ULL, 4611686018427387847ULL,
                                      4611686018427387787ULL, 4611686018427387631ULL};
    Solution ref; // structure from rational path would defeat the purpose;
    // instead: run modular elimination, reconstruct, then verify exactly.
    std::vector<std::vector<Rat>> kernel_candidates;
    std::vector<Rat> particular_candidate;
    std::vector<mpz_class> part_res;      // CRT accumulators
    std::vector<std::vector<mpz_class>> ker_res;
    mpz_class modulus = 1;
    int kdim = -1;
    bool consistent = true;

    for (uint64_t p : primes) {
        // dense-ish modular elimination (maps keep sparsity)
        std::vector<std::map<int, uint64_t>> m(rows_);
        std::vector<uint64_t> rhs(rows_, 0);
        for (int r = 0; r < rows_; ++r)
            for (const auto& [c, v] : a_[r]) {
                uint64_t mv = rat_mod(v, p);
                if (mv) m[r][c] = mv;
            }
        for (const auto& [r, v] : b_) rhs[r] = rat_mod(v, p);

        std::vector<int> pivot_row_of_col(cols_, -1);
        std::vector<bool> row_done(rows_, false);
        std::vector<std::pair<int, int>> pivots;
        for (;;) {
            int br = -1, bc = -1;
            for (int r = 0; r < rows_ && br < 0; ++r) {
                if (row_done[r]) continue;
                for (const auto& [c, v] : m[r])
                    if (pivot_row_of_col[c] < 0) { br = r; bc = c; break; }
            }
            if (br < 0) break;
            uint64_t inv = mod_inv(m[br][bc], p);
            for (int r = 0; r < rows_; ++r) {
                if (r == br || row_done[r]) continue;
                auto it = m[r].find(bc);
                if (it == m[r].end()) continue;
                uint64_t f = mod_mul(it->second, inv, p);
                for (const auto& [c, v] : m[br]) {
                    uint64_t sub = mod_mul(f, v, p);
                    auto jt = m[r].find(c);
                    uint64_t cur = (jt == m[r].end()) ? 0 : jt->second;
                    uint64_t nv = (cur + p - sub) % p;
                    if (nv == 0) {
                        if (jt != m[r].end()) m[r].erase(jt);
                    } else {
                        m[r][c] = nv;
                    }
                }
                rhs[r] = (rhs[r] + p - mod_mul(f, rhs[br], p)) % p;
            }
            pivot_row_of_col[bc] = br;
            row_done[br] = true;
            pivots.emplace_back(br, bc);
        }
        for (int r = 0; r < rows_; ++r)
            if (!row_done[r] && m[r].empty() && rhs[r] % p != 0) consistent = false;
        if (!consistent) break;

        // solve pivot variables (free = 0) by sweeps
        auto sweep_solve = [&](std::vector<uint64_t>& x, const std::vector<uint64_t>& r0) {
            std::vector<bool> solved(cols_, false);
            bool changed = true;
            int guard = static_cast<int>(pivots.size()) + 2;
            while (changed && guard-- > 0) {
                changed = false;
                for (auto& [r, c] : pivots) {
                    unsigned __int128 acc = r0[r] % p;
                    bool ready = true;
                    for (const auto& [cc, v] : m[r]) {
                        if (cc == c) continue;
                        if (pivot_row_of_col[cc] >= 0 && !solved[cc]) { ready = false; break; }
                        acc = (acc + static_cast<unsigned __int128>(p) * p -
                               static_cast<unsigned __int128>(mod_mul(v, x[cc], p))) %
                              p;
                    }
                    if (!ready) { changed = true; continue; }
                    uint64_t nv = mod_mul(static_cast<uint64_t>(acc), mod_inv(m[r].at(c), p), p);
                    if (!solved[c] || nv != x[c]) {
                        x[c] = nv;
                        solved[c] = true;
                        changed = true;
                    }
                }
            }
        };
        std::vector<uint64_t> xp(cols_, 0);
        sweep_solve(xp, rhs);
        std::vector<std::vector<uint64_t>> kerp;
        for (int fc = 0; fc < cols_; ++fc) {
            if (pivot_row_of_col[fc] >= 0) continue;
            std::vector<uint64_t> v(cols_, 0);
            v[fc] = 1;
            std::vector<uint64_t> zero(rows_, 0);
            // kernel: solve with rhs replaced by -A_col fc ... same sweeps with
            // rhs 0 but fc fixed at 1: reuse sweep with adjusted rhs
            std::vector<uint64_t> r0(rows_, 0);
            for (int r = 0; r < rows_; ++r) {
                auto it = m[r].find(fc);
                if (it != m[r].end()) r0[r] = p - it->second;
            }
            // temporarily remove column fc from rows for the sweep
            sweep_solve(v, r0);
            v[fc] = 1;
            kerp.push_back(std::move(v));
        }
        if (kdim < 0) {
            kdim = static_cast<int>(kerp.size());
            part_res.assign(cols_, 0);
            ker_res.assign(kerp.size(), std::vector<mpz_class>(cols_, 0));
        } else if (kdim != static_cast<int>(kerp.size())) {
            throw std::domain_error("modular solve: kernel dimension differs between primes");
        }
        // CRT accumulate
        mpz_class pz(static_cast<unsigned long>(p));
        auto crt = [&](mpz_class& acc, uint64_t val) {
            // acc mod modulus known; combine with val mod p
            mpz_class vz(static_cast<unsigned long>(val));
            if (modulus == 1) {
                acc = vz;
                return;
            }
            mpz_class minv;
            if (mpz_invert(minv.get_mpz_t(), modulus.get_mpz_t(), pz.get_mpz_t()) == 0)
                throw std::domain_error("modular solve: CRT failure");
            mpz_class diff = ((vz - acc) % pz + pz) % pz;
            acc = acc + modulus * ((diff * minv) % pz);
        };
        for (int c = 0; c < cols_; ++c) crt(part_res[c], xp[c]);
        for (size_t k = 0; k < kerp.size(); ++k)
            for (int c = 0; c < cols_; ++c) crt(ker_res[k][c], kerp[k][c]);
        modulus *= pz;
    }

    Solution sol;
    if (!consistent) {
        // fall back to the exact path for a faithful offending residual
        return solve_rational();
    }
    sol.consistent = true;
    sol.particular.assign(cols_, Rat(0));
    for (int c = 0; c < cols_; ++c) {
        auto rec = rational_reconstruct(part_res[c], modulus);
        if (!rec) throw std::domain_error("modular solve: rational reconstruction failed");
        sol.particular[c] = *rec;
    }
    for (auto& kv : ker_res) {
        std::vector<Rat> v(cols_);
        for (int c = 0; c < cols_; ++c) {
            auto rec = rational_reconstruct(kv[c], modulus);
            if (!rec) throw std::domain_error("modular solve: rational reconstruction failed");
            v[c] = *rec;
        }
        sol.kernel.push_back(std::move(v));
    }
    if (!verify(sol.particular))
        throw std::domain_error("modular solve: reconstructed solution fails exact verification");
    return sol;
}

SparseSystem::Solution SparseSystem::solve(Mode mode) const {
    return mode == Mode::Rational ? solve_rational() : solve_modular();
}

bool SparseSystem::verify(const std::vector<Rat>& x) const {
    for (int r = 0; r < rows_; ++r) {
        Rat acc;
        for (const auto& [c, v] : a_[r]) acc += v * x[c];
        auto it = b_.find(r);
        Rat rhs = (it == b_.end()) ? Rat(0) : it->second;
        if (acc != rhs) return false;
    }
    return true;
}

} // namespace mq
