#include "hmt/smith.hpp"

#include <algorithm>
#include <cstdint>
#include <cstdlib>

#include "hmt/errors.hpp"

namespace hmt::topo {

namespace {

struct Overflow {};

// 64-bit ring with growth guards: every stored value stays strictly below
// 2^62 in magnitude, so negation, doubling, and abs never wrap.
struct Int64Ops {
    using Value = std::int64_t;
    static constexpr std::int64_t kLimit = std::int64_t(1) << 62;

    static Value from_i64(std::int64_t v) {
        if (v >= kLimit || v <= -kLimit) throw Overflow{};
        return v;
    }
    static bool is_zero(Value v) { return v == 0; }
    static bool abs_less(Value a, Value b) { return std::llabs(a) < std::llabs(b); }
    static bool is_unit(Value v) { return v == 1 || v == -1; }

    // a - q*b with overflow checks.
    static Value sub_mul(Value a, Value q, Value b) {
        Value p, r;
        if (__builtin_mul_overflow(q, b, &p)) throw Overflow{};
        if (__builtin_sub_overflow(a, p, &r)) throw Overflow{};
        if (r >= kLimit || r <= -kLimit) throw Overflow{};
        return r;
    }
    // Round-to-nearest quotient, so remainders shrink to at most |b|/2.
    static Value nearest_quotient(Value a, Value b) {
        Value q = a / b;
        const Value r = a - q * b;
        if (2 * std::llabs(r) > std::llabs(b)) q += ((r < 0) == (b < 0)) ? 1 : -1;
        return q;
    }
};

struct MpzOps {
    using Value = BigInt;

    static Value from_i64(std::int64_t v) { return BigInt(static_cast<long>(v)); }
    static bool is_zero(const Value& v) { return sgn(v) == 0; }
    static bool abs_less(const Value& a, const Value& b) {
        return mpz_cmpabs(a.get_mpz_t(), b.get_mpz_t()) < 0;
    }
    static bool is_unit(const Value& v) { return mpz_cmpabs_ui(v.get_mpz_t(), 1) == 0; }

    static Value sub_mul(const Value& a, const Value& q, const Value& b) { return a - q * b; }
    static Value nearest_quotient(const Value& a, const Value& b) {
        Value q, r;
        mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
        Value r2 = r * 2;
        if (mpz_cmpabs(r2.get_mpz_t(), b.get_mpz_t()) > 0) q += (sgn(r) == sgn(b)) ? 1 : -1;
        return q;
    }
};

// Diagonalization by row/column elimination.  Divisibility is not enforced
// here; the caller normalizes the diagonal afterwards.
template <class Ops>
class Eliminator {
    using V = typename Ops::Value;

public:
    explicit Eliminator(const IntMatrix& m) : rows_(m.rows), cols_(m.cols), a_(m.a.size()) {
        for (std::size_t i = 0; i < m.a.size(); ++i) a_[i] = Ops::from_i64(m.a[i]);
    }

    std::vector<V> diagonal() {
        const long long lim = std::min(rows_, cols_);
        long long k = 0;
        for (; k < lim; ++k) {
            if (!place_pivot(k)) break;  // submatrix is all zero
            // Clearing the column can re-dirty the row and vice versa; each
            // re-pick strictly shrinks the pivot, so this terminates.
            for (;;) {
                clear_column(k);
                clear_row(k);
                if (column_clean(k) && row_clean(k)) break;
                place_pivot(k);
            }
        }
        std::vector<V> d;
        d.reserve(k);
        for (long long i = 0; i < k; ++i) d.push_back(at(i, i));
        return d;
    }

private:
    V& at(long long r, long long c) { return a_[static_cast<std::size_t>(r * cols_ + c)]; }

    // Moves the submatrix entry of minimal nonzero magnitude to (k,k).
    // Returns false when the submatrix is zero.
    bool place_pivot(long long k) {
        long long pr = -1, pc = -1;
        for (long long i = k; i < rows_; ++i) {
            for (long long j = k; j < cols_; ++j) {
                const V& v = at(i, j);
                if (Ops::is_zero(v)) continue;
                if (pr < 0 || Ops::abs_less(v, at(pr, pc))) {
                    pr = i;
                    pc = j;
                    if (Ops::is_unit(v)) goto found;
                }
            }
        }
        if (pr < 0) return false;
    found:
        if (pr != k)
            for (long long j = k; j < cols_; ++j) std::swap(at(k, j), at(pr, j));
        if (pc != k)
            for (long long i = k; i < rows_; ++i) std::swap(at(i, k), at(i, pc));
        return true;
    }

    void clear_column(long long k) {
        for (long long i = k + 1; i < rows_; ++i) {
            if (Ops::is_zero(at(i, k))) continue;
            const V q = Ops::nearest_quotient(at(i, k), at(k, k));
            if (Ops::is_zero(q)) continue;
            for (long long j = k; j < cols_; ++j) at(i, j) = Ops::sub_mul(at(i, j), q, at(k, j));
        }
    }

    void clear_row(long long k) {
        for (long long j = k + 1; j < cols_; ++j) {
            if (Ops::is_zero(at(k, j))) continue;
            const V q = Ops::nearest_quotient(at(k, j), at(k, k));
            if (Ops::is_zero(q)) continue;
            for (long long i = k; i < rows_; ++i) at(i, j) = Ops::sub_mul(at(i, j), q, at(i, k));
        }
    }

    bool column_clean(long long k) {
        for (long long i = k + 1; i < rows_; ++i)
            if (!Ops::is_zero(at(i, k))) return false;
        return true;
    }
    bool row_clean(long long k) {
        for (long long j = k + 1; j < cols_; ++j)
            if (!Ops::is_zero(at(k, j))) return false;
        return true;
    }

    long long rows_, cols_;
    std::vector<V> a_;
};

template <class Ops>
SmithResult run(const IntMatrix& m) {
    Eliminator<Ops> e(m);
    const auto diag = e.diagonal();

    SmithResult out;
    for (const auto& v : diag) {
        if (Ops::is_zero(v)) throw InternalError("zero pivot on the diagonal");
        ++out.rank;
    }
    out.invariant_factors.reserve(diag.size());
    for (const auto& v : diag) out.invariant_factors.push_back(abs(BigInt(v)));

    // A diagonal matrix is unimodularly equivalent to the one with each pair
    // (d_i, d_j) replaced by (gcd, lcm); repeated passes yield the
    // divisibility chain.
    auto& f = out.invariant_factors;
    for (bool changed = true; changed;) {
        changed = false;
        for (std::size_t i = 0; i + 1 < f.size(); ++i) {
            for (std::size_t j = i + 1; j < f.size(); ++j) {
                if (f[j] % f[i] == 0) continue;
                BigInt g;
                mpz_gcd(g.get_mpz_t(), f[i].get_mpz_t(), f[j].get_mpz_t());
                f[j] = f[i] / g * f[j];
                f[i] = g;
                changed = true;
            }
        }
    }
    return out;
}

}  // namespace

SmithResult smith_normal_form(const IntMatrix& m) {
    if (m.rows < 0 || m.cols < 0) throw ConfigError("matrix dimensions must be nonnegative");
    if (m.rows == 0 || m.cols == 0) return {};
    try {
        return run<Int64Ops>(m);
    } catch (const Overflow&) {
        return run<MpzOps>(m);
    }
}

}  // namespace hmt::topo
