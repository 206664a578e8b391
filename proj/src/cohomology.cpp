#include "gwt/cohomology.hpp"

#include "gwt/errors.hpp"

#include <stdexcept>

namespace gwt {

SurfaceClass SurfaceClass::h_power(int k) {
    if (k < 0) throw std::domain_error("SurfaceClass::h_power: negative power");
    SurfaceClass c;
    if (k <= 2) {
        if (k == 0) c.c0 = 1;
        if (k == 1) c.c1 = 1;
        if (k == 2) c.c2 = 1;
    }
    return c; // H^k = 0 for k > 2
}

std::optional<int> SurfaceClass::codim() const {
    int found = -1;
    for (int k = 0; k <= 2; ++k) {
        if (component(k).is_zero()) continue;
        if (found >= 0) return std::nullopt;
        found = k;
    }
    if (found < 0) return std::nullopt;
    return found;
}

const Rational& SurfaceClass::component(int k) const {
    switch (k) {
        case 0: return c0;
        case 1: return c1;
        case 2: return c2;
    }
    throw std::out_of_range("SurfaceClass::component: index must be 0..2");
}

SurfaceClass operator+(const SurfaceClass& a, const SurfaceClass& b) {
    return {a.c0 + b.c0, a.c1 + b.c1, a.c2 + b.c2};
}

SurfaceClass operator-(const SurfaceClass& a, const SurfaceClass& b) {
    return {a.c0 - b.c0, a.c1 - b.c1, a.c2 - b.c2};
}

SurfaceClass SurfaceClass::operator-() const { return {-c0, -c1, -c2}; }

SurfaceClass operator*(const SurfaceClass& a, const SurfaceClass& b) {
    // product in Q[H]/(H^3)
    return {a.c0 * b.c0,
            a.c0 * b.c1 + a.c1 * b.c0,
            a.c0 * b.c2 + a.c1 * b.c1 + a.c2 * b.c0};
}

SurfaceClass SurfaceClass::scaled(const Rational& c) const {
    return {c0 * c, c1 * c, c2 * c};
}

bool operator==(const SurfaceClass& a, const SurfaceClass& b) {
    return a.c0 == b.c0 && a.c1 == b.c1 && a.c2 == b.c2;
}

std::string SurfaceClass::str() const {
    std::string s;
    auto emit = [&s](const Rational& c, const char* basis) {
        if (c.is_zero()) return;
        if (!s.empty()) s += " + ";
        if (basis[0] == '\0') {
            s += c.str();
        } else if (c == Rational(1)) {
            s += basis;
        } else {
            s += c.str() + std::string("*") + basis;
        }
    };
    emit(c0, "");
    emit(c1, "H");
    emit(c2, "H^2");
    return s.empty() ? "0" : s;
}

std::vector<std::pair<SurfaceClass, SurfaceClass>> pairing_inverse_basis() {
    return {{SurfaceClass::unit(), SurfaceClass::point_class()},
            {SurfaceClass::hyperplane(), SurfaceClass::hyperplane()},
            {SurfaceClass::point_class(), SurfaceClass::unit()}};
}

CohLaurent CohLaurent::monomial(int zpow, const SurfaceClass& c) {
    CohLaurent l;
    l.add_term(zpow, c);
    return l;
}

int CohLaurent::min_z() const {
    if (terms_.empty()) throw std::domain_error("CohLaurent: zero element has no valuation");
    return terms_.begin()->first;
}

int CohLaurent::max_z() const {
    if (terms_.empty()) throw std::domain_error("CohLaurent: zero element has no top term");
    return terms_.rbegin()->first;
}

SurfaceClass CohLaurent::coeff(int zpow) const {
    auto it = terms_.find(zpow);
    return it == terms_.end() ? SurfaceClass{} : it->second;
}

void CohLaurent::add_term(int zpow, const SurfaceClass& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(zpow, c);
    if (!inserted) {
        it->second = it->second + c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

CohLaurent operator+(const CohLaurent& a, const CohLaurent& b) {
    CohLaurent r = a;
    for (const auto& [p, c] : b.terms_) r.add_term(p, c);
    return r;
}

CohLaurent operator-(const CohLaurent& a, const CohLaurent& b) {
    CohLaurent r = a;
    for (const auto& [p, c] : b.terms_) r.add_term(p, -c);
    return r;
}

CohLaurent operator*(const CohLaurent& a, const CohLaurent& b) {
    CohLaurent r;
    for (const auto& [pa, ca] : a.terms_)
        for (const auto& [pb, cb] : b.terms_) r.add_term(pa + pb, ca * cb);
    return r;
}

CohLaurent CohLaurent::scaled(const Rational& c) const {
    CohLaurent r;
    for (const auto& [p, x] : terms_) r.add_term(p, x.scaled(c));
    return r;
}

CohLaurent CohLaurent::shifted(int zpow) const {
    CohLaurent r;
    for (const auto& [p, x] : terms_) r.add_term(p + zpow, x);
    return r;
}

bool operator==(const CohLaurent& a, const CohLaurent& b) {
    return (a - b).is_zero();
}

CohLaurent CohLaurent::inverse_unit() const {
    // scalar (H^0) part must be a single monomial c*z^v
    int v = 0;
    Rational lead;
    bool found = false;
    for (const auto& [p, c] : terms_) {
        if (c.c0.is_zero()) continue;
        if (found)
            throw std::domain_error("CohLaurent::inverse_unit: scalar part is not a monomial");
        v = p;
        lead = c.c0;
        found = true;
    }
    if (!found) throw std::domain_error("CohLaurent::inverse_unit: scalar part vanishes");

    // A = lead*z^v*(1 + B) with B nilpotent (B^3 = 0 since it is H-positive),
    // so 1/A = (1 - B + B^2) / (lead*z^v).
    CohLaurent scaled_down = scaled(lead.reciprocal()).shifted(-v);
    CohLaurent b = scaled_down - CohLaurent::monomial(0, SurfaceClass::unit());
    CohLaurent inv = CohLaurent::monomial(0, SurfaceClass::unit()) - b + b * b;
    inv = inv.scaled(lead.reciprocal()).shifted(-v);
    if (!(*this * inv == CohLaurent::monomial(0, SurfaceClass::unit())))
        throw consistency_error("CohLaurent::inverse_unit: verification failed");
    return inv;
}

bool CohLaurent::is_homogeneous_of_degree(int degree) const {
    for (const auto& [p, c] : terms_)
        for (int k = 0; k <= 2; ++k)
            if (!c.component(k).is_zero() && k + p != degree) return false;
    return true;
}

std::string CohLaurent::str() const {
    if (terms_.empty()) return "0";
    std::string s;
    for (const auto& [p, c] : terms_) {
        if (!s.empty()) s += " + ";
        s += "(" + c.str() + ")";
        if (p != 0) s += "*z^" + std::to_string(p);
    }
    return s;
}

} // namespace gwt
