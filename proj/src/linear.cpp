#include "containerkit/linear.hpp"
#include "containerkit/errors.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>

namespace containerkit {

namespace {

long long mod_norm(long long value, long long mod) {
    long long m = value % mod;
    return m < 0 ? m + mod : m;
}

bool is_prime(long long p) {
    if (p < 2) return false;
    for (long long d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

long long pow_mod(long long base, long long exp, long long mod) {
    long long result = 1 % mod;
    base = mod_norm(base, mod);
    while (exp > 0) {
        if (exp & 1) result = result * base % mod;
        base = base * base % mod;
        exp >>= 1;
    }
    return result;
}

long long inv_mod(long long a, long long p) { return pow_mod(a, p - 2, p); }

std::vector<std::vector<long long>> delete_columns(
    const std::vector<std::vector<long long>>& m, const std::vector<int>& cols) {
    std::vector<char> drop(m.empty() ? 0 : m[0].size(), 0);
    for (int c : cols) drop[static_cast<std::size_t>(c)] = 1;
    std::vector<std::vector<long long>> out;
    out.reserve(m.size());
    for (const auto& row : m) {
        std::vector<long long> r;
        for (std::size_t c = 0; c < row.size(); ++c)
            if (!drop[c]) r.push_back(row[c]);
        out.push_back(std::move(r));
    }
    return out;
}

// Surjectivity of x -> Ax over an abelian group, by brute force over the
// domain. Desk scale only.
bool surjective_over_group(const FieldSpec& f, const std::vector<std::vector<long long>>& a,
                           long long max_enum) {
    const int k = static_cast<int>(a.size());
    const int cols = a.empty() ? 0 : static_cast<int>(a[0].size());
    const long long fsize = f.size();
    const int t = f.arity();
    double domain = 1;
    for (int c = 0; c < cols; ++c) domain *= static_cast<double>(fsize);
    if (domain > static_cast<double>(max_enum))
        throw ResourceLimitError("abelian surjectivity check exceeds enumeration limit");

    std::set<std::vector<long long>> image;
    std::function<void(int, std::vector<long long>)> rec =
        [&](int depth, std::vector<long long> acc) {
            if (depth == cols) {
                image.insert(std::move(acc));
                return;
            }
            for (long long v = 0; v < fsize; ++v) {
                Elem e = index_to_elem(f, v);
                std::vector<long long> next = acc;
                for (int row = 0; row < k; ++row)
                    for (int comp = 0; comp < t; ++comp) {
                        auto& cell = next[static_cast<std::size_t>(row * t + comp)];
                        cell = mod_norm(cell + a[static_cast<std::size_t>(row)]
                                                [static_cast<std::size_t>(depth)] *
                                                   e[static_cast<std::size_t>(comp)],
                                        f.orders[static_cast<std::size_t>(comp)]);
                    }
                rec(depth + 1, std::move(next));
            }
        };
    rec(0, std::vector<long long>(static_cast<std::size_t>(k) * static_cast<std::size_t>(t), 0));

    BigInt target = 1;
    for (int i = 0; i < k; ++i) target *= f.size();
    return BigInt(static_cast<long long>(image.size())) == target;
}

} // namespace

long long FieldSpec::size() const {
    switch (kind) {
    case Kind::Zp:
        return p;
    case Kind::Interval:
        return N;
    case Kind::Abelian: {
        long long total = 1;
        for (long long o : orders) total *= o;
        return total;
    }
    }
    return 0;
}

FieldSpec FieldSpec::zp(long long p) {
    if (!is_prime(p)) throw std::invalid_argument("p must be prime");
    FieldSpec f;
    f.kind = Kind::Zp;
    f.p = p;
    return f;
}

FieldSpec FieldSpec::interval(long long N) {
    if (N < 1) throw std::invalid_argument("N must be >= 1");
    FieldSpec f;
    f.kind = Kind::Interval;
    f.N = N;
    return f;
}

FieldSpec FieldSpec::abelian(std::vector<long long> orders) {
    if (orders.empty()) throw std::invalid_argument("orders must be nonempty");
    for (long long o : orders)
        if (o < 1) throw std::invalid_argument("cyclic orders must be >= 1");
    FieldSpec f;
    f.kind = Kind::Abelian;
    f.orders = std::move(orders);
    return f;
}

void validate_system(const LinearSystem& sys) {
    if (sys.A.empty()) throw std::invalid_argument("A must have k >= 1 rows");
    const std::size_t r = sys.A[0].size();
    if (r == 0) throw std::invalid_argument("A must have r >= 1 columns");
    for (const auto& row : sys.A)
        if (row.size() != r) throw std::invalid_argument("A rows differ in length");
    if (sys.b.size() != sys.A.size())
        throw std::invalid_argument("b length must equal k");
    const int t = sys.field.arity();
    for (const auto& e : sys.b)
        if (static_cast<int>(e.size()) != t)
            throw std::invalid_argument("b entry arity mismatch");
    for (const auto& z : sys.explicit_z) {
        if (z.size() != r) throw std::invalid_argument("Z tuple length must equal r");
        for (const auto& e : z)
            if (static_cast<int>(e.size()) != t)
                throw std::invalid_argument("Z entry arity mismatch");
    }
}

Elem index_to_elem(const FieldSpec& f, long long index) {
    switch (f.kind) {
    case FieldSpec::Kind::Zp:
        return {index};
    case FieldSpec::Kind::Interval:
        return {index + 1};
    case FieldSpec::Kind::Abelian: {
        Elem e(f.orders.size());
        for (std::size_t i = f.orders.size(); i-- > 0;) {
            e[i] = index % f.orders[i];
            index /= f.orders[i];
        }
        return e;
    }
    }
    return {};
}

long long elem_to_index(const FieldSpec& f, const Elem& e) {
    switch (f.kind) {
    case FieldSpec::Kind::Zp:
        return e.at(0);
    case FieldSpec::Kind::Interval:
        return e.at(0) - 1;
    case FieldSpec::Kind::Abelian: {
        long long idx = 0;
        for (std::size_t i = 0; i < f.orders.size(); ++i)
            idx = idx * f.orders[i] + e.at(i);
        return idx;
    }
    }
    return 0;
}

int rank_mod_p(std::vector<std::vector<long long>> m, long long p) {
    if (m.empty() || m[0].empty()) return 0;
    const std::size_t rows = m.size(), cols = m[0].size();
    for (auto& row : m)
        for (auto& x : row) x = mod_norm(x, p);
    std::size_t rank = 0;
    for (std::size_t c = 0; c < cols && rank < rows; ++c) {
        std::size_t pivot = rank;
        while (pivot < rows && m[pivot][c] == 0) ++pivot;
        if (pivot == rows) continue;
        std::swap(m[pivot], m[rank]);
        const long long inv = inv_mod(m[rank][c], p);
        for (std::size_t cc = c; cc < cols; ++cc) m[rank][cc] = m[rank][cc] * inv % p;
        for (std::size_t rr = 0; rr < rows; ++rr) {
            if (rr == rank || m[rr][c] == 0) continue;
            const long long f = m[rr][c];
            for (std::size_t cc = c; cc < cols; ++cc)
                m[rr][cc] = mod_norm(m[rr][cc] - f * m[rank][cc], p);
        }
        ++rank;
    }
    return static_cast<int>(rank);
}

int rank_rational(const std::vector<std::vector<long long>>& m) {
    if (m.empty() || m[0].empty()) return 0;
    const std::size_t rows = m.size(), cols = m[0].size();
    std::vector<std::vector<Rational>> a(rows, std::vector<Rational>(cols));
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) a[i][j] = m[i][j];
    std::size_t rank = 0;
    for (std::size_t c = 0; c < cols && rank < rows; ++c) {
        std::size_t pivot = rank;
        while (pivot < rows && a[pivot][c] == 0) ++pivot;
        if (pivot == rows) continue;
        std::swap(a[pivot], a[rank]);
        const Rational inv = Rational(1) / a[rank][c];
        for (std::size_t cc = c; cc < cols; ++cc) a[rank][cc] *= inv;
        for (std::size_t rr = 0; rr < rows; ++rr) {
            if (rr == rank || a[rr][c] == 0) continue;
            const Rational f = a[rr][c];
            for (std::size_t cc = c; cc < cols; ++cc) a[rr][cc] -= f * a[rank][cc];
        }
        ++rank;
    }
    return static_cast<int>(rank);
}

bool has_full_rank(const LinearSystem& sys) {
    validate_system(sys);
    const int k = sys.k();
    switch (sys.field.kind) {
    case FieldSpec::Kind::Zp:
        return rank_mod_p(sys.A, sys.field.p) == k;
    case FieldSpec::Kind::Interval:
        return rank_rational(sys.A) == k;
    case FieldSpec::Kind::Abelian:
        return surjective_over_group(sys.field, sys.A, 50000000);
    }
    return false;
}

bool is_abundant(const LinearSystem& sys) {
    validate_system(sys);
    if (!has_full_rank(sys)) return false;
    const int r = sys.r();
    if (r < 2) return false;
    for (int i = 0; i < r; ++i)
        for (int j = i + 1; j < r; ++j) {
            auto sub = delete_columns(sys.A, {i, j});
            switch (sys.field.kind) {
            case FieldSpec::Kind::Zp:
                if (rank_mod_p(sub, sys.field.p) != sys.k()) return false;
                break;
            case FieldSpec::Kind::Interval:
                if (rank_rational(sub) != sys.k()) return false;
                break;
            case FieldSpec::Kind::Abelian:
                if (!surjective_over_group(sys.field, sub, 50000000)) return false;
                break;
            }
        }
    return true;
}

Rational m_F_A(const LinearSystem& sys) {
    if (!is_abundant(sys))
        throw std::invalid_argument("m_F(A) requires an abundant matrix");
    const int k = sys.k();
    const int r = sys.r();
    if (sys.field.kind == FieldSpec::Kind::Abelian) {
        // t = max j such that every j-column deletion keeps full rank.
        int t = 0;
        for (int j = 1; j <= r; ++j) {
            bool all_full = true;
            std::vector<int> cols(static_cast<std::size_t>(j));
            std::function<bool(int, int)> rec = [&](int start, int depth) -> bool {
                if (depth == j) {
                    auto sub = delete_columns(sys.A, cols);
                    return surjective_over_group(sys.field, sub, 50000000);
                }
                for (int c = start; c < r; ++c) {
                    cols[static_cast<std::size_t>(depth)] = c;
                    if (!rec(c + 1, depth + 1)) return false;
                }
                return true;
            };
            all_full = rec(0, 0);
            if (all_full)
                t = j;
            else
                break;
        }
        if (t < 2) throw InternalError("abundant matrix with t < 2");
        return Rational(k + t - 1, t - 1);
    }
    // Fields and [N]: exhaust J.
    Rational best(0);
    bool found = false;
    std::vector<int> cols;
    std::function<void(int)> rec = [&](int start) {
        if (static_cast<int>(cols.size()) >= 2) {
            auto sub = delete_columns(sys.A, cols);
            const int rank = sys.field.kind == FieldSpec::Kind::Zp
                                 ? rank_mod_p(sub, sys.field.p)
                                 : rank_rational(sub);
            const long jsz = static_cast<long>(cols.size());
            const long denom = jsz - 1 + rank - k;
            if (denom <= 0)
                throw InternalError("m_F(A): nonpositive denominator for abundant A");
            Rational ratio(jsz - 1, denom);
            if (!found || ratio > best) {
                best = ratio;
                found = true;
            }
        }
        for (int c = start; c < r; ++c) {
            cols.push_back(c);
            rec(c + 1);
            cols.pop_back();
        }
    };
    rec(0);
    return best;
}

bool in_discount_set(const LinearSystem& sys, const std::vector<Elem>& x) {
    if (sys.forbid_repeats) {
        for (std::size_t i = 0; i < x.size(); ++i)
            for (std::size_t j = i + 1; j < x.size(); ++j)
                if (x[i] == x[j]) return true;
    }
    for (const auto& z : sys.explicit_z)
        if (z == x) return true;
    return false;
}

std::vector<std::vector<long long>> enumerate_solutions(const LinearSystem& sys,
                                                        bool include_discounted,
                                                        const SolveLimits& limits) {
    validate_system(sys);
    const int k = sys.k();
    const int r = sys.r();
    const long long fsize = sys.field.size();
    std::vector<std::vector<long long>> out;

    if (sys.field.kind == FieldSpec::Kind::Zp) {
        // Parametrize by reducing [A|b] mod p; enumerate free columns.
        const long long p = sys.field.p;
        std::vector<std::vector<long long>> aug(static_cast<std::size_t>(k));
        for (int i = 0; i < k; ++i) {
            aug[static_cast<std::size_t>(i)].resize(static_cast<std::size_t>(r) + 1);
            for (int j = 0; j < r; ++j)
                aug[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                    mod_norm(sys.A[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)], p);
            aug[static_cast<std::size_t>(i)][static_cast<std::size_t>(r)] =
                mod_norm(sys.b[static_cast<std::size_t>(i)][0], p);
        }
        std::vector<int> pivot_col;
        int rank = 0;
        for (int c = 0; c < r && rank < k; ++c) {
            int pivot = rank;
            while (pivot < k && aug[static_cast<std::size_t>(pivot)][static_cast<std::size_t>(c)] == 0)
                ++pivot;
            if (pivot == k) continue;
            std::swap(aug[static_cast<std::size_t>(pivot)], aug[static_cast<std::size_t>(rank)]);
            const long long inv =
                inv_mod(aug[static_cast<std::size_t>(rank)][static_cast<std::size_t>(c)], p);
            for (int cc = c; cc <= r; ++cc)
                aug[static_cast<std::size_t>(rank)][static_cast<std::size_t>(cc)] =
                    aug[static_cast<std::size_t>(rank)][static_cast<std::size_t>(cc)] * inv % p;
            for (int rr = 0; rr < k; ++rr) {
                if (rr == rank) continue;
                const long long f =
                    aug[static_cast<std::size_t>(rr)][static_cast<std::size_t>(c)];
                if (f == 0) continue;
                for (int cc = c; cc <= r; ++cc)
                    aug[static_cast<std::size_t>(rr)][static_cast<std::size_t>(cc)] = mod_norm(
                        aug[static_cast<std::size_t>(rr)][static_cast<std::size_t>(cc)] -
                            f * aug[static_cast<std::size_t>(rank)][static_cast<std::size_t>(cc)],
                        p);
            }
            pivot_col.push_back(c);
            ++rank;
        }
        for (int i = rank; i < k; ++i)
            if (aug[static_cast<std::size_t>(i)][static_cast<std::size_t>(r)] != 0)
                return out; // inconsistent
        std::vector<int> free_cols;
        {
            std::vector<char> is_pivot(static_cast<std::size_t>(r), 0);
            for (int c : pivot_col) is_pivot[static_cast<std::size_t>(c)] = 1;
            for (int c = 0; c < r; ++c)
                if (!is_pivot[static_cast<std::size_t>(c)]) free_cols.push_back(c);
        }
        double total = 1;
        for (std::size_t i = 0; i < free_cols.size(); ++i) total *= static_cast<double>(p);
        if (total > static_cast<double>(limits.max_enumeration))
            throw ResourceLimitError("solution enumeration exceeds limit");
        std::vector<long long> x(static_cast<std::size_t>(r), 0);
        std::function<void(std::size_t)> fill = [&](std::size_t fi) {
            if (fi == free_cols.size()) {
                for (int i = 0; i < rank; ++i) {
                    long long val =
                        aug[static_cast<std::size_t>(i)][static_cast<std::size_t>(r)];
                    for (int c : free_cols)
                        val = mod_norm(
                            val - aug[static_cast<std::size_t>(i)][static_cast<std::size_t>(c)] *
                                      x[static_cast<std::size_t>(c)],
                            p);
                    x[static_cast<std::size_t>(pivot_col[static_cast<std::size_t>(i)])] = val;
                }
                if (!include_discounted) {
                    std::vector<Elem> vals;
                    vals.reserve(static_cast<std::size_t>(r));
                    for (int c = 0; c < r; ++c)
                        vals.push_back(index_to_elem(sys.field, x[static_cast<std::size_t>(c)]));
                    if (in_discount_set(sys, vals)) return;
                }
                out.push_back(x);
                return;
            }
            for (long long v = 0; v < p; ++v) {
                x[static_cast<std::size_t>(free_cols[fi])] = v;
                fill(fi + 1);
            }
        };
        fill(0);
        std::sort(out.begin(), out.end());
        return out;
    }

    // Interval and abelian: recursive enumeration. For intervals, residual
    // bounds per row prune the search.
    double total = 1;
    for (int c = 0; c < r; ++c) total *= static_cast<double>(fsize);
    if (sys.field.kind == FieldSpec::Kind::Abelian &&
        total > static_cast<double>(limits.max_enumeration))
        throw ResourceLimitError("solution enumeration exceeds limit");

    std::vector<Elem> vals(static_cast<std::size_t>(r));
    std::vector<long long> idx(static_cast<std::size_t>(r));
    long long explored = 0;

    if (sys.field.kind == FieldSpec::Kind::Interval) {
        const long long N = sys.field.N;
        // suffix min/max contribution per row
        std::vector<std::vector<long long>> smin(static_cast<std::size_t>(k)),
            smax(static_cast<std::size_t>(k));
        for (int i = 0; i < k; ++i) {
            smin[static_cast<std::size_t>(i)].assign(static_cast<std::size_t>(r) + 1, 0);
            smax[static_cast<std::size_t>(i)].assign(static_cast<std::size_t>(r) + 1, 0);
            for (int c = r - 1; c >= 0; --c) {
                const long long a = sys.A[static_cast<std::size_t>(i)][static_cast<std::size_t>(c)];
                const long long lo = a >= 0 ? a * 1 : a * N;
                const long long hi = a >= 0 ? a * N : a * 1;
                smin[static_cast<std::size_t>(i)][static_cast<std::size_t>(c)] =
                    smin[static_cast<std::size_t>(i)][static_cast<std::size_t>(c) + 1] + lo;
                smax[static_cast<std::size_t>(i)][static_cast<std::size_t>(c)] =
                    smax[static_cast<std::size_t>(i)][static_cast<std::size_t>(c) + 1] + hi;
            }
        }
        std::vector<long long> partial(static_cast<std::size_t>(k), 0);
        std::function<void(int)> rec = [&](int depth) {
            if (++explored > limits.max_enumeration)
                throw ResourceLimitError("solution enumeration exceeds limit");
            if (depth == r) {
                for (int i = 0; i < k; ++i)
                    if (partial[static_cast<std::size_t>(i)] != sys.b[static_cast<std::size_t>(i)][0])
                        return;
                for (int c = 0; c < r; ++c)
                    vals[static_cast<std::size_t>(c)] = {idx[static_cast<std::size_t>(c)] + 1};
                if (!include_discounted && in_discount_set(sys, vals)) return;
                out.push_back(idx);
                return;
            }
            for (int i = 0; i < k; ++i) {
                const long long need =
                    sys.b[static_cast<std::size_t>(i)][0] - partial[static_cast<std::size_t>(i)];
                if (need < smin[static_cast<std::size_t>(i)][static_cast<std::size_t>(depth)] ||
                    need > smax[static_cast<std::size_t>(i)][static_cast<std::size_t>(depth)])
                    return;
            }
            for (long long v = 1; v <= N; ++v) {
                idx[static_cast<std::size_t>(depth)] = v - 1;
                for (int i = 0; i < k; ++i)
                    partial[static_cast<std::size_t>(i)] +=
                        sys.A[static_cast<std::size_t>(i)][static_cast<std::size_t>(depth)] * v;
                rec(depth + 1);
                for (int i = 0; i < k; ++i)
                    partial[static_cast<std::size_t>(i)] -=
                        sys.A[static_cast<std::size_t>(i)][static_cast<std::size_t>(depth)] * v;
            }
        };
        rec(0);
        std::sort(out.begin(), out.end());
        return out;
    }

    // Abelian brute force.
    const int t = sys.field.arity();
    std::function<void(int)> rec = [&](int depth) {
        if (depth == r) {
            for (int i = 0; i < k; ++i)
                for (int comp = 0; comp < t; ++comp) {
                    long long acc = 0;
                    for (int c = 0; c < r; ++c)
                        acc += sys.A[static_cast<std::size_t>(i)][static_cast<std::size_t>(c)] *
                               vals[static_cast<std::size_t>(c)][static_cast<std::size_t>(comp)];
                    if (mod_norm(acc, sys.field.orders[static_cast<std::size_t>(comp)]) !=
                        mod_norm(sys.b[static_cast<std::size_t>(i)][static_cast<std::size_t>(comp)],
                                 sys.field.orders[static_cast<std::size_t>(comp)]))
                        return;
                }
            if (!include_discounted && in_discount_set(sys, vals)) return;
            out.push_back(idx);
            return;
        }
        for (long long v = 0; v < fsize; ++v) {
            idx[static_cast<std::size_t>(depth)] = v;
            vals[static_cast<std::size_t>(depth)] = index_to_elem(sys.field, v);
            rec(depth + 1);
        }
    };
    rec(0);
    std::sort(out.begin(), out.end());
    return out;
}

BigInt count_solutions(const LinearSystem& sys, const SolveLimits& limits) {
    return BigInt(
        static_cast<long long>(enumerate_solutions(sys, true, limits).size()));
}

Hypergraph build_gfabz(const LinearSystem& sys, const SolveLimits& limits) {
    validate_system(sys);
    const int r = sys.r();
    const long long fsize = sys.field.size();
    const long long n = fsize * r;
    if (n > 1000000) throw ResourceLimitError("G(F,A,b,Z) would have too many vertices");
    auto solutions = enumerate_solutions(sys, false, limits);
    std::vector<std::vector<int>> edges;
    edges.reserve(solutions.size());
    for (const auto& sol : solutions) {
        std::vector<int> edge(static_cast<std::size_t>(r));
        for (int i = 0; i < r; ++i)
            edge[static_cast<std::size_t>(i)] =
                static_cast<int>(static_cast<long long>(i) * fsize +
                                 sol[static_cast<std::size_t>(i)] + 1);
        edges.push_back(std::move(edge));
    }
    return Hypergraph(static_cast<int>(n), r, std::move(edges));
}

LinearSystem ap_system(long long N, int ell) {
    if (ell < 3) throw std::invalid_argument("ell must be >= 3");
    LinearSystem sys;
    sys.field = FieldSpec::interval(N);
    sys.forbid_repeats = true;
    const int k = ell - 2;
    sys.A.assign(static_cast<std::size_t>(k), std::vector<long long>(static_cast<std::size_t>(ell), 0));
    if (ell == 3) {
        sys.A[0] = {1, 1, -2}; // endpoints then middle, as commonly written
    } else {
        for (int i = 0; i < k; ++i) {
            sys.A[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = 1;
            sys.A[static_cast<std::size_t>(i)][static_cast<std::size_t>(i) + 1] = -2;
            sys.A[static_cast<std::size_t>(i)][static_cast<std::size_t>(i) + 2] = 1;
        }
    }
    sys.b.assign(static_cast<std::size_t>(k), Elem{0});
    return sys;
}

LinearSystem embed_interval_in_zp(const LinearSystem& sys, long long bound) {
    validate_system(sys);
    if (sys.field.kind != FieldSpec::Kind::Interval)
        throw std::invalid_argument("embedding applies to interval systems");
    long long abs_sum = 0;
    for (const auto& row : sys.A)
        for (long long a : row) abs_sum += a < 0 ? -a : a;
    BigInt kfact = factorial(sys.k());
    BigInt default_bound = 4 * kfact;
    for (int i = 0; i < sys.k(); ++i) default_bound *= abs_sum;
    default_bound *= sys.field.N;
    BigInt lower = default_bound;
    if (BigInt(bound) > lower) lower = bound;
    if (lower > BigInt(4000000000LL))
        throw ResourceLimitError("embedding prime too large for desk scale");
    const long long p = next_prime_above(static_cast<long long>(lower));
    LinearSystem out;
    out.field = FieldSpec::zp(p);
    out.A = sys.A;
    out.forbid_repeats = sys.forbid_repeats;
    out.b.reserve(sys.b.size());
    for (const auto& e : sys.b) out.b.push_back(Elem{mod_norm(e[0], p)});
    for (const auto& z : sys.explicit_z) {
        std::vector<Elem> tuple;
        for (const auto& e : z) tuple.push_back(Elem{mod_norm(e[0], p)});
        out.explicit_z.push_back(std::move(tuple));
    }
    return out;
}

} // namespace containerkit
