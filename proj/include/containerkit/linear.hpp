#ifndef CONTAINERKIT_LINEAR_HPP
#define CONTAINERKIT_LINEAR_HPP

#include "containerkit/hypergraph.hpp"
#include "containerkit/rational.hpp"

#include <string>
#include <vector>

namespace containerkit {

// The ground set F of a linear system: a prime field Z_p, the integer
// interval [N], or a product of cyclic groups.
struct FieldSpec {
    enum class Kind { Zp, Interval, Abelian };
    Kind kind = Kind::Zp;
    long long p = 0;                // Zp
    long long N = 0;                // Interval
    std::vector<long long> orders;  // Abelian

    int arity() const {
        return kind == Kind::Abelian ? static_cast<int>(orders.size()) : 1;
    }
    long long size() const;

    static FieldSpec zp(long long p);
    static FieldSpec interval(long long N);
    static FieldSpec abelian(std::vector<long long> orders);
};

// An element of F, as a tuple of residues (size = arity; size 1 for Zp and
// Interval, where Interval values live in 1..N).
using Elem = std::vector<long long>;

// (F, A, b, Z): A is k x r with integer entries, b in F^k. Z is generated
// lazily from forbid_repeats (solutions with any two equal coordinate
// values) plus the optional explicit list.
struct LinearSystem {
    FieldSpec field;
    std::vector<std::vector<long long>> A; // k rows, r columns
    std::vector<Elem> b;                   // k entries
    bool forbid_repeats = false;
    std::vector<std::vector<Elem>> explicit_z; // r-tuples of elements

    int k() const { return static_cast<int>(A.size()); }
    int r() const { return A.empty() ? 0 : static_cast<int>(A[0].size()); }
};

void validate_system(const LinearSystem& sys);

Elem index_to_elem(const FieldSpec& f, long long index);
long long elem_to_index(const FieldSpec& f, const Elem& e);

// Full rank means surjectivity of x -> Ax (for fields: rank = k). Abundant
// means full rank is preserved after deleting any two columns. Fields and
// [N] are decided by rank (mod p / over Q); abelian groups by brute force.
bool has_full_rank(const LinearSystem& sys);
bool is_abundant(const LinearSystem& sys);

// m_F(A): for Z_p and [N], max over |J| >= 2 of
// (|J|-1)/(|J|-1+rank(A_J)-k) with A_J the matrix minus the columns in J;
// for abelian groups (k+t-1)/(t-1) with t the largest j such that every
// j-column deletion keeps full rank. Requires A abundant.
Rational m_F_A(const LinearSystem& sys);

// Is x (an r-tuple of values) discounted by Z?
bool in_discount_set(const LinearSystem& sys, const std::vector<Elem>& x);

struct SolveLimits {
    long long max_enumeration = 50000000; // bound on explored assignments
};

// All x in F^r with Ax = b, as tuples of element indices; Z ignored when
// include_discounted, otherwise Z-solutions are dropped. Deterministic
// lexicographic order by index tuple.
std::vector<std::vector<long long>> enumerate_solutions(const LinearSystem& sys,
                                                        bool include_discounted,
                                                        const SolveLimits& limits = {});

// |{x in F^r : Ax = b}| exactly, Z ignored. For full-rank A this equals
// |F|^(r-k).
BigInt count_solutions(const LinearSystem& sys, const SolveLimits& limits = {});

// The r-partite r-graph G(F,A,b,Z) on r|F| vertices: part i occupies ids
// (i-1)|F|+1 .. i|F|; one edge per non-discounted solution tuple.
Hypergraph build_gfabz(const LinearSystem& sys, const SolveLimits& limits = {});

// The (ell-2) x ell system forbidding an ell-term arithmetic progression in
// [N], with repeats discounted. ell = 3 gives A = (1,1,-2) as commonly
// written (endpoints then middle); ell >= 4 uses the banded rows
// x_i - 2x_{i+1} + x_{i+2} = 0.
LinearSystem ap_system(long long N, int ell);

// Embeds an interval system into Z_p with p the first prime above
// max(bound, 4 k! |A|^k N), which keeps abundance and makes every mod-p
// solution in [N]^r a genuine integer solution.
LinearSystem embed_interval_in_zp(const LinearSystem& sys, long long bound = 0);

// Exact ranks used by the definitions above.
int rank_mod_p(std::vector<std::vector<long long>> m, long long p);
int rank_rational(const std::vector<std::vector<long long>>& m);

} // namespace containerkit

#endif
