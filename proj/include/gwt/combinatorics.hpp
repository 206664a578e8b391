#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace gwt {

// Integer partition: weakly decreasing positive parts. The empty partition
// (size 0) is allowed.
struct Partition {
    std::vector<int> parts;

    Partition() = default;
    explicit Partition(std::vector<int> p);

    int size() const;
    int length() const { return static_cast<int>(parts.size()); }

    bool operator==(const Partition& o) const { return parts == o.parts; }
    bool operator<(const Partition& o) const { return parts < o.parts; }

    std::string str() const; // "(3,1,1)", "()" for empty
};

mpz_class factorial(int n);

// Pascal-table binomial; 0 outside 0 <= k <= n.
mpz_class binomial(int n, int k);

// (a_1 + ... + a_k)! / (a_1! ... a_k!) when sum(parts) == n, else 0.
mpz_class multinomial(int n, const std::vector<int>& parts);

// Unsigned Stirling numbers of the first kind: coefficient of x^{m-k} y^k in
// prod_{j=0}^{m-1} (j x + y). Computed by the two-term recurrence
// s(m+1,k) = s(m,k-1) + m s(m,k); returns 0 for k > m and for k = 0 < m.
mpz_class stirling_first_unsigned(int m, int k);

// All partitions of d, each once, in reverse-lexicographic order:
// (d), (d-1,1), ..., (1,...,1). Deterministic; downstream sums rely on it.
std::vector<Partition> partitions_of(int d);

// Number of standard Young tableaux of the given shape (hook-length formula);
// 1 for the empty partition.
mpz_class dimension(const Partition& lambda);

} // namespace gwt
