#include "gwt/series.hpp"

#include "gwt/combinatorics.hpp"
#include "gwt/errors.hpp"

#include <algorithm>
#include <stdexcept>

namespace gwt {

Series::Series(int order) {
    if (order < 0) throw std::domain_error("Series: negative truncation order");
    c_.assign(static_cast<std::size_t>(order) + 1, Rational(0));
}

Series::Series(std::vector<Rational> coeffs) : c_(std::move(coeffs)) {
    if (c_.empty()) throw std::domain_error("Series: empty coefficient list");
}

Series Series::constant(const Rational& c, int order) {
    Series s(order);
    s.c_[0] = c;
    return s;
}

Series Series::identity(int order) {
    Series s(order);
    if (order < 1) throw std::domain_error("Series::identity: order must be >= 1");
    s.c_[1] = Rational(1);
    return s;
}

const Rational& Series::at(int k) const {
    if (k < 0 || k > order())
        throw std::out_of_range("Series: coefficient " + std::to_string(k) +
                                " beyond truncation order " + std::to_string(order()));
    return c_[static_cast<std::size_t>(k)];
}

void Series::set(int k, const Rational& v) {
    if (k < 0 || k > order())
        throw std::out_of_range("Series: coefficient " + std::to_string(k) +
                                " beyond truncation order " + std::to_string(order()));
    c_[static_cast<std::size_t>(k)] = v;
}

bool Series::is_zero() const {
    return std::all_of(c_.begin(), c_.end(), [](const Rational& r) { return r.is_zero(); });
}

Series Series::truncated(int new_order) const {
    if (new_order > order())
        throw std::out_of_range("Series::truncated: cannot extend a truncated series");
    Series s(new_order);
    for (int k = 0; k <= new_order; ++k) s.c_[static_cast<std::size_t>(k)] = at(k);
    return s;
}

Series Series::operator-() const {
    Series s = *this;
    for (auto& x : s.c_) x = -x;
    return s;
}

Series operator+(const Series& a, const Series& b) {
    Series s(std::min(a.order(), b.order()));
    for (int k = 0; k <= s.order(); ++k) s.c_[static_cast<std::size_t>(k)] = a.at(k) + b.at(k);
    return s;
}

Series operator-(const Series& a, const Series& b) {
    Series s(std::min(a.order(), b.order()));
    for (int k = 0; k <= s.order(); ++k) s.c_[static_cast<std::size_t>(k)] = a.at(k) - b.at(k);
    return s;
}

Series operator*(const Series& a, const Series& b) {
    Series s(std::min(a.order(), b.order()));
    for (int i = 0; i <= std::min(a.order(), s.order()); ++i) {
        if (a.at(i).is_zero()) continue;
        for (int j = 0; i + j <= s.order() && j <= b.order(); ++j)
            s.c_[static_cast<std::size_t>(i + j)] += a.at(i) * b.at(j);
    }
    return s;
}

Series Series::scaled(const Rational& c) const {
    Series s = *this;
    for (auto& x : s.c_) x *= c;
    return s;
}

bool operator==(const Series& a, const Series& b) {
    return a.order() == b.order() && a.c_ == b.c_;
}

Series Series::exp() const {
    if (!at(0).is_zero())
        throw std::domain_error("Series::exp: constant term must be 0, got " + at(0).str());
    // F = exp(f) satisfies F' = f'F, i.e. n F_n = sum_{k=1}^n k f_k F_{n-k}.
    Series f(order());
    f.c_[0] = Rational(1);
    for (int n = 1; n <= order(); ++n) {
        Rational acc(0);
        for (int k = 1; k <= n; ++k) acc += Rational(k) * at(k) * f.c_[static_cast<std::size_t>(n - k)];
        f.c_[static_cast<std::size_t>(n)] = acc / Rational(n);
    }
    return f;
}

Series Series::log() const {
    if (at(0) != Rational(1))
        throw std::domain_error("Series::log: constant term must be 1, got " + at(0).str());
    // L = log(f) satisfies f L' = f', i.e. n L_n = n f_n - sum_{k<n} k L_k f_{n-k}.
    Series l(order());
    for (int n = 1; n <= order(); ++n) {
        Rational acc = Rational(n) * at(n);
        for (int k = 1; k < n; ++k)
            acc -= Rational(k) * l.c_[static_cast<std::size_t>(k)] * at(n - k);
        l.c_[static_cast<std::size_t>(n)] = acc / Rational(n);
    }
    return l;
}

Series Series::derivative() const {
    if (order() == 0) return Series(0);
    Series d(order() - 1);
    for (int k = 1; k <= order(); ++k)
        d.c_[static_cast<std::size_t>(k - 1)] = Rational(k) * at(k);
    return d;
}

Series Series::reciprocal() const {
    if (at(0).is_zero())
        throw std::domain_error("Series::reciprocal: constant term is zero");
    Series r(order());
    Rational inv0 = at(0).reciprocal();
    r.c_[0] = inv0;
    for (int n = 1; n <= order(); ++n) {
        Rational acc(0);
        for (int k = 1; k <= n; ++k) acc += at(k) * r.c_[static_cast<std::size_t>(n - k)];
        r.c_[static_cast<std::size_t>(n)] = -acc * inv0;
    }
    return r;
}

Series Series::compose(const Series& inner) const {
    if (!inner.at(0).is_zero())
        throw std::domain_error("Series::compose: inner constant term must be 0, got " +
                                inner.at(0).str());
    int n = std::min(order(), inner.order());
    Series res(n);
    for (int k = std::min(order(), n); k >= 0; --k) {
        res = res * inner.truncated(n);
        res.c_[0] += at(k);
    }
    return res;
}

namespace {
// Convolution on raw coefficient vectors of equal length; reversion works on
// raw vectors because the intermediate Newton quantities are valid to full
// order even where the order-tracking product rule would be conservative.
std::vector<Rational> raw_mul(const std::vector<Rational>& a, const std::vector<Rational>& b) {
    std::vector<Rational> r(a.size(), Rational(0));
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].is_zero()) continue;
        for (std::size_t j = 0; i + j < r.size(); ++j) r[i + j] += a[i] * b[j];
    }
    return r;
}

std::vector<Rational> raw_compose(const std::vector<Rational>& f, const std::vector<Rational>& g) {
    std::vector<Rational> res(f.size(), Rational(0));
    for (std::size_t k = f.size(); k-- > 0;) {
        res = raw_mul(res, g);
        res[0] += f[k];
    }
    return res;
}

std::vector<Rational> raw_reciprocal(const std::vector<Rational>& a) {
    std::vector<Rational> r(a.size(), Rational(0));
    Rational inv0 = a[0].reciprocal();
    r[0] = inv0;
    for (std::size_t n = 1; n < a.size(); ++n) {
        Rational acc(0);
        for (std::size_t k = 1; k <= n; ++k) acc += a[k] * r[n - k];
        r[n] = -acc * inv0;
    }
    return r;
}
} // namespace

Series Series::reversion() const {
    if (!at(0).is_zero())
        throw std::domain_error("Series::reversion: constant term must be 0, got " + at(0).str());
    if (order() < 1 || at(1).is_zero())
        throw std::domain_error("Series::reversion: zero linear coefficient");

    const int n = order();
    std::vector<Rational> f(c_.begin(), c_.end());
    std::vector<Rational> fp(f.size(), Rational(0)); // f' padded to the same length
    for (int k = 1; k <= n; ++k) fp[static_cast<std::size_t>(k - 1)] = Rational(k) * f[static_cast<std::size_t>(k)];

    std::vector<Rational> g(f.size(), Rational(0));
    g[1] = at(1).reciprocal();

    int iterations = 2;
    for (int m = 1; m < n; m *= 2) ++iterations;
    for (int it = 0; it < iterations; ++it) {
        // g <- g - (f(g) - q) / f'(g)
        std::vector<Rational> residual = raw_compose(f, g);
        residual[1] -= Rational(1);
        std::vector<Rational> corr = raw_mul(residual, raw_reciprocal(raw_compose(fp, g)));
        for (std::size_t k = 0; k < g.size(); ++k) g[k] -= corr[k];
    }

    Series result(g);
    Series check = compose(result);
    if (!(check == Series::identity(n)))
        throw consistency_error("Series::reversion: round-trip verification failed");
    return result;
}

std::string Series::str(const std::string& var) const {
    std::string s;
    for (int k = 0; k <= order(); ++k) {
        if (at(k).is_zero()) continue;
        if (!s.empty()) s += " + ";
        s += at(k).str();
        if (k >= 1) s += "*" + var + (k > 1 ? "^" + std::to_string(k) : "");
    }
    if (s.empty()) s = "0";
    return s + " + O(" + var + "^" + std::to_string(order() + 1) + ")";
}

LaurentSeries::LaurentSeries(int valuation, std::vector<Rational> coeffs)
    : lo_(valuation), c_(std::move(coeffs)) {
    if (c_.empty()) throw std::domain_error("LaurentSeries: empty coefficient window");
    normalize();
}

LaurentSeries LaurentSeries::from_series(const Series& s, int shift) {
    std::vector<Rational> c;
    c.reserve(static_cast<std::size_t>(s.order()) + 1);
    for (int k = 0; k <= s.order(); ++k) c.push_back(s.at(k));
    return LaurentSeries(shift, std::move(c));
}

void LaurentSeries::normalize() {
    std::size_t lead = 0;
    while (lead + 1 < c_.size() && c_[lead].is_zero()) ++lead;
    if (lead > 0) {
        c_.erase(c_.begin(), c_.begin() + static_cast<std::ptrdiff_t>(lead));
        lo_ += static_cast<int>(lead);
    }
}

bool LaurentSeries::is_zero() const {
    return std::all_of(c_.begin(), c_.end(), [](const Rational& r) { return r.is_zero(); });
}

int LaurentSeries::valuation() const {
    for (std::size_t i = 0; i < c_.size(); ++i)
        if (!c_[i].is_zero()) return lo_ + static_cast<int>(i);
    return max_order() + 1;
}

Rational LaurentSeries::at(int k) const {
    if (k > max_order())
        throw std::out_of_range("LaurentSeries: coefficient " + std::to_string(k) +
                                " beyond truncation order " + std::to_string(max_order()));
    if (k < lo_) return Rational(0);
    return c_[static_cast<std::size_t>(k - lo_)];
}

LaurentSeries operator+(const LaurentSeries& a, const LaurentSeries& b) {
    int lo = std::min(a.lo_, b.lo_);
    int hi = std::min(a.max_order(), b.max_order());
    if (hi < lo) throw std::domain_error("LaurentSeries: sum has empty reliable window");
    std::vector<Rational> c;
    c.reserve(static_cast<std::size_t>(hi - lo) + 1);
    for (int k = lo; k <= hi; ++k) c.push_back(a.at(k) + b.at(k));
    return LaurentSeries(lo, std::move(c));
}

LaurentSeries operator*(const LaurentSeries& a, const LaurentSeries& b) {
    if (a.is_zero() || b.is_zero()) {
        return LaurentSeries(a.lo_ + b.lo_, {Rational(0)});
    }
    int lo = a.valuation() + b.valuation();
    int hi = std::min(a.valuation() + b.max_order(), b.valuation() + a.max_order());
    if (hi < lo) throw std::domain_error("LaurentSeries: product has empty reliable window");
    std::vector<Rational> c(static_cast<std::size_t>(hi - lo) + 1, Rational(0));
    for (int i = a.valuation(); i <= a.max_order(); ++i) {
        if (a.at(i).is_zero()) continue;
        for (int j = b.valuation(); j <= b.max_order() && i + j <= hi; ++j)
            c[static_cast<std::size_t>(i + j - lo)] += a.at(i) * b.at(j);
    }
    return LaurentSeries(lo, std::move(c));
}

LaurentSeries LaurentSeries::scaled(const Rational& s) const {
    LaurentSeries r = *this;
    for (auto& x : r.c_) x *= s;
    return r;
}

std::string LaurentSeries::str(const std::string& var) const {
    std::string s;
    for (int k = lo_; k <= max_order(); ++k) {
        if (at(k).is_zero()) continue;
        if (!s.empty()) s += " + ";
        s += at(k).str();
        if (k != 0) s += "*" + var + "^" + std::to_string(k);
    }
    if (s.empty()) s = "0";
    return s + " + O(" + var + "^" + std::to_string(max_order() + 1) + ")";
}

LaurentSeries regularized_half_shift_series(int order) {
    if (order < 1) throw std::domain_error("regularized_half_shift_series: order must be >= 1");
    // 2 sinh(z/2) = z * u(z) with u_j = 1 / (2^j (j+1)!) for even j.
    Series u(order + 1);
    for (int j = 0; j <= order + 1; j += 2)
        u.set(j, Rational(mpz_class(1), mpz_class(1) << j) / Rational(factorial(j + 1)));
    return LaurentSeries::from_series(u.reciprocal(), -1);
}

} // namespace gwt
