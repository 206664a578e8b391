#include "gwt/combinatorics.hpp"

#include <mutex>
#include <stdexcept>

namespace gwt {

Partition::Partition(std::vector<int> p) : parts(std::move(p)) {
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (parts[i] <= 0) throw std::invalid_argument("Partition: parts must be positive");
        if (i > 0 && parts[i] > parts[i - 1])
            throw std::invalid_argument("Partition: parts must be weakly decreasing");
    }
}

int Partition::size() const {
    int s = 0;
    for (int p : parts) s += p;
    return s;
}

std::string Partition::str() const {
    std::string s = "(";
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(parts[i]);
    }
    return s + ")";
}

namespace {
std::mutex table_mutex;
} // namespace

mpz_class factorial(int n) {
    if (n < 0) throw std::domain_error("factorial: negative argument");
    static std::vector<mpz_class> table{1};
    std::lock_guard<std::mutex> lock(table_mutex);
    while (static_cast<int>(table.size()) <= n)
        table.push_back(table.back() * static_cast<int>(table.size()));
    return table[static_cast<std::size_t>(n)];
}

mpz_class binomial(int n, int k) {
    if (k < 0 || n < 0 || k > n) return 0;
    static std::vector<std::vector<mpz_class>> rows{{1}};
    std::lock_guard<std::mutex> lock(table_mutex);
    while (static_cast<int>(rows.size()) <= n) {
        const auto& prev = rows.back();
        std::vector<mpz_class> row(prev.size() + 1, 1);
        for (std::size_t j = 1; j < prev.size(); ++j) row[j] = prev[j - 1] + prev[j];
        rows.push_back(std::move(row));
    }
    return rows[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
}

mpz_class multinomial(int n, const std::vector<int>& parts) {
    int sum = 0;
    for (int p : parts) {
        if (p < 0) return 0;
        sum += p;
    }
    if (sum != n) return 0;
    mpz_class r = factorial(n);
    for (int p : parts) r /= factorial(p);
    return r;
}

mpz_class stirling_first_unsigned(int m, int k) {
    if (m < 0 || k < 0) throw std::domain_error("stirling_first_unsigned: negative argument");
    if (k > m) return 0;
    static std::vector<std::vector<mpz_class>> tri{{1}}; // tri[m][k]
    std::lock_guard<std::mutex> lock(table_mutex);
    while (static_cast<int>(tri.size()) <= m) {
        int r = static_cast<int>(tri.size());
        const auto& prev = tri.back();
        std::vector<mpz_class> row(static_cast<std::size_t>(r) + 1, 0);
        for (int j = 0; j <= r; ++j) {
            if (j > 0) row[j] += prev[static_cast<std::size_t>(j - 1)];
            if (j < r) row[j] += (r - 1) * prev[static_cast<std::size_t>(j)];
        }
        tri.push_back(std::move(row));
    }
    return tri[static_cast<std::size_t>(m)][static_cast<std::size_t>(k)];
}

namespace {
void gen_partitions(int remaining, int max_part, std::vector<int>& acc,
                    std::vector<Partition>& out) {
    if (remaining == 0) {
        out.emplace_back(acc);
        return;
    }
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
        acc.push_back(p);
        gen_partitions(remaining - p, p, acc, out);
        acc.pop_back();
    }
}
} // namespace

std::vector<Partition> partitions_of(int d) {
    if (d < 0) throw std::domain_error("partitions_of: negative argument");
    std::vector<Partition> out;
    std::vector<int> acc;
    gen_partitions(d, d == 0 ? 1 : d, acc, out);
    return out;
}

mpz_class dimension(const Partition& lambda) {
    const auto& parts = lambda.parts;
    if (parts.empty()) return 1;
    // conjugate partition for the arm+leg hook lengths
    std::vector<int> conj(static_cast<std::size_t>(parts[0]), 0);
    for (int p : parts)
        for (int j = 0; j < p; ++j) conj[static_cast<std::size_t>(j)]++;
    mpz_class hooks = 1;
    for (std::size_t i = 0; i < parts.size(); ++i)
        for (int j = 0; j < parts[i]; ++j)
            hooks *= parts[i] - j + conj[static_cast<std::size_t>(j)] - static_cast<int>(i) - 1;
    mpz_class dim = factorial(lambda.size());
    mpz_divexact(dim.get_mpz_t(), dim.get_mpz_t(), hooks.get_mpz_t());
    return dim;
}

} // namespace gwt
