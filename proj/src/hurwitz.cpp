#include "gwt/hurwitz.hpp"

#include "gwt/errors.hpp"
#include "gwt/series.hpp"

#include <numeric>
#include <stdexcept>

namespace gwt {

Rational shifted_power_sum(int k, const Partition& lambda, int reg_order) {
    if (k < 0) throw std::domain_error("shifted_power_sum: negative order");
    if (reg_order < 0) reg_order = k;
    if (reg_order < k)
        throw std::domain_error("shifted_power_sum: regularizer order below requested power");

    // finite part: [z^k](e^{za} - e^{zb}) = (a^k - b^k)/k! at half-integer
    // shifts a = lambda_i - i + 1/2, b = -i + 1/2
    Rational coeff(0);
    const Rational half(1, 2);
    for (int i = 1; i <= lambda.length(); ++i) {
        Rational a = Rational(lambda.parts[static_cast<std::size_t>(i - 1)] - i) + half;
        Rational b = Rational(-i) + half;
        coeff += a.pow(k) - b.pow(k);
    }
    coeff /= Rational(factorial(k));

    coeff += regularized_half_shift_series(reg_order).at(k);
    return coeff * Rational(factorial(k));
}

Rational completed_cycle_hurwitz(const HurwitzSpec& spec) {
    Rational total(0);
    for (const auto& [lambda, term] : completed_cycle_hurwitz_terms(spec)) total += term;
    return total;
}

std::vector<std::pair<Partition, Rational>> completed_cycle_hurwitz_terms(const HurwitzSpec& spec) {
    if (spec.degree < 1) throw std::domain_error("completed_cycle_hurwitz: degree must be >= 1");
    if (spec.target_genus < 0)
        throw std::domain_error("completed_cycle_hurwitz: negative target genus");
    for (int k : spec.orders)
        if (k < 1) throw std::domain_error("completed_cycle_hurwitz: orders must be positive");

    std::vector<std::pair<Partition, Rational>> out;
    const long exponent = 2 - 2 * static_cast<long>(spec.target_genus);
    const Rational dfact = Rational(factorial(spec.degree));
    for (const Partition& lambda : partitions_of(spec.degree)) {
        Rational term = (Rational(dimension(lambda)) / dfact).pow(exponent);
        for (int k : spec.orders) term *= shifted_power_sum(k, lambda) / Rational(k);
        out.emplace_back(lambda, term);
    }
    return out;
}

Rational transposition_factorization_count(int d, int n) {
    if (d < 1) throw std::domain_error("transposition_factorization_count: degree must be >= 1");
    if (n < 0) throw std::domain_error("transposition_factorization_count: negative count");
    if (d > 6)
        throw resource_guard_error(
            "transposition_factorization_count: degree capped at 6 (factorial blow-up)");
    const int t = d * (d - 1) / 2;
    double tuples = 1;
    for (int i = 0; i < n; ++i) tuples *= t;
    if (tuples > 2e6)
        throw resource_guard_error("transposition_factorization_count: tuple space too large");
    if (n == 0) return Rational(1) / Rational(factorial(d)); // the empty tuple

    std::vector<std::pair<int, int>> trans;
    for (int i = 0; i < d; ++i)
        for (int j = i + 1; j < d; ++j) trans.emplace_back(i, j);

    long long count = 0;
    std::vector<int> perm(static_cast<std::size_t>(d));
    std::iota(perm.begin(), perm.end(), 0);

    auto rec = [&](auto&& self, int left, std::vector<int> p) -> void {
        if (left == 0) {
            bool id = true;
            for (int i = 0; i < d; ++i)
                if (p[static_cast<std::size_t>(i)] != i) {
                    id = false;
                    break;
                }
            if (id) ++count;
            return;
        }
        for (const auto& [x, y] : trans) {
            std::vector<int> q = p;
            std::swap(q[static_cast<std::size_t>(x)], q[static_cast<std::size_t>(y)]);
            self(self, left - 1, std::move(q));
        }
    };
    rec(rec, n, perm);

    return Rational(mpz_class(count)) / Rational(factorial(d));
}

} // namespace gwt
