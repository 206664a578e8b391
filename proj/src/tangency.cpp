#include "gwt/tangency.hpp"

#include "gwt/combinatorics.hpp"

#include <stdexcept>

namespace gwt {

PsiPolynomial PsiPolynomial::monomial(int psi_power, const SurfaceClass& c) {
    PsiPolynomial p;
    p.add_term(psi_power, c);
    return p;
}

SurfaceClass PsiPolynomial::coeff(int psi_power) const {
    auto it = terms_.find(psi_power);
    return it == terms_.end() ? SurfaceClass{} : it->second;
}

void PsiPolynomial::add_term(int psi_power, const SurfaceClass& c) {
    if (psi_power < 0) throw std::domain_error("PsiPolynomial: negative psi power");
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(psi_power, c);
    if (!inserted) {
        it->second = it->second + c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

PsiPolynomial operator+(const PsiPolynomial& a, const PsiPolynomial& b) {
    PsiPolynomial r = a;
    for (const auto& [p, c] : b.terms_) r.add_term(p, c);
    return r;
}

PsiPolynomial operator*(const PsiPolynomial& a, const PsiPolynomial& b) {
    PsiPolynomial r;
    for (const auto& [pa, ca] : a.terms_)
        for (const auto& [pb, cb] : b.terms_) r.add_term(pa + pb, ca * cb);
    return r;
}

PsiPolynomial PsiPolynomial::scaled(const Rational& c) const {
    PsiPolynomial r;
    for (const auto& [p, x] : terms_) r.add_term(p, x.scaled(c));
    return r;
}

bool operator==(const PsiPolynomial& a, const PsiPolynomial& b) {
    if (a.terms_.size() != b.terms_.size()) return false;
    for (const auto& [p, c] : a.terms_) {
        auto it = b.terms_.find(p);
        if (it == b.terms_.end() || !(it->second == c)) return false;
    }
    return true;
}

std::string PsiPolynomial::str() const {
    if (terms_.empty()) return "0";
    std::string s;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        if (!s.empty()) s += " + ";
        s += "(" + it->second.str() + ")";
        if (it->first == 1) s += "*psi";
        if (it->first > 1) s += "*psi^" + std::to_string(it->first);
    }
    return s;
}

PsiPolynomial divisor_insertion(int m, int e) {
    if (m < 1) throw std::domain_error("divisor_insertion: tangency order must be >= 1");
    if (e < 1) throw std::domain_error("divisor_insertion: divisor degree must be >= 1");
    PsiPolynomial p = PsiPolynomial::one();
    SurfaceClass eH = SurfaceClass::hyperplane().scaled(Rational(e));
    for (int k = 0; k < m; ++k) {
        PsiPolynomial factor = PsiPolynomial::monomial(0, eH);
        if (k > 0) factor.add_term(1, SurfaceClass::unit().scaled(Rational(k)));
        p = p * factor;
    }
    return p;
}

PsiPolynomial point_insertion(int m) {
    if (m < 1) throw std::domain_error("point_insertion: tangency order must be >= 1");
    Rational c = Rational(factorial(m - 1)) * Rational(factorial(m - 1));
    return PsiPolynomial::monomial(2 * (m - 1), SurfaceClass::point_class().scaled(c));
}

PsiPolynomial bundle_insertion(int m, int rank, const std::vector<SurfaceClass>& chern) {
    if (m < 1) throw std::domain_error("bundle_insertion: tangency order must be >= 1");
    if (rank < 1) throw std::domain_error("bundle_insertion: rank must be >= 1");
    if (static_cast<int>(chern.size()) != rank)
        throw std::domain_error("bundle_insertion: need exactly rank Chern classes");
    PsiPolynomial p = PsiPolynomial::one();
    for (int k = 0; k < m; ++k) {
        // sum_{j=0}^{r} (k psi)^{r-j} c_j, with c_0 = 1; for k = 0 only the
        // Euler class c_r survives
        PsiPolynomial factor;
        for (int j = 0; j <= rank; ++j) {
            SurfaceClass cj = (j == 0) ? SurfaceClass::unit() : chern[static_cast<std::size_t>(j - 1)];
            int pw = rank - j;
            if (k == 0 && pw > 0) continue;
            Rational kpow = Rational(k).pow(pw);
            factor.add_term(pw, cj.scaled(kpow));
        }
        p = p * factor;
    }
    return p;
}

namespace {

// Chow classes of a plane curve Z of degree e, written as x0 + x1*h with
// h = c_1(O(e)|_Z); h^2 = 0 on the curve. Pushforward to the plane is the
// projection formula: x0 + x1*h  |->  x0*(eH) + x1*(eH)^2.
struct CurveClass {
    Rational x0, x1;
};

PsiPolynomial theorem_route_divisor(int m, int e) {
    std::map<int, CurveClass> poly; // psi power -> class on the curve
    poly[0] = CurveClass{Rational(1), Rational(0)};
    for (int k = 1; k < m; ++k) {
        // multiply by (k psi + h)
        std::map<int, CurveClass> next;
        for (const auto& [p, c] : poly) {
            auto& up = next[p + 1];
            up.x0 += Rational(k) * c.x0;
            up.x1 += Rational(k) * c.x1;
            next[p].x1 += c.x0; // h * h = 0 on the curve
        }
        poly = std::move(next);
    }
    SurfaceClass eH = SurfaceClass::hyperplane().scaled(Rational(e));
    PsiPolynomial out;
    for (const auto& [p, c] : poly) {
        out.add_term(p, eH.scaled(c.x0));
        out.add_term(p, (eH * eH).scaled(c.x1));
    }
    return out;
}

PsiPolynomial theorem_route_point(int m) {
    // On a point all positive Chern classes vanish, so every factor is
    // (k psi)^2; pushforward multiplies by the point class.
    Rational c(1);
    for (int k = 1; k < m; ++k) c *= Rational(k) * Rational(k);
    return PsiPolynomial::monomial(2 * (m - 1), SurfaceClass::point_class().scaled(c));
}

} // namespace

PsiPolynomial lci_insertion_via_theorem(int m, const TangencyShape& shape) {
    if (m < 1) throw std::domain_error("lci_insertion_via_theorem: tangency order must be >= 1");
    if (const auto* d = std::get_if<DivisorShape>(&shape)) {
        if (d->degree_e < 1)
            throw std::domain_error("lci_insertion_via_theorem: divisor degree must be >= 1");
        return theorem_route_divisor(m, d->degree_e);
    }
    if (std::holds_alternative<PointShape>(shape)) return theorem_route_point(m);
    throw std::domain_error(
        "lci_insertion_via_theorem: unsupported shape (only divisors and points embed here)");
}

PsiPolynomial condition_insertion(const TangencyCondition& cond) {
    if (const auto* d = std::get_if<DivisorShape>(&cond.shape))
        return divisor_insertion(cond.order_m, d->degree_e);
    if (std::holds_alternative<PointShape>(cond.shape)) return point_insertion(cond.order_m);
    const auto& b = std::get<BundleShape>(cond.shape);
    return bundle_insertion(cond.order_m, b.rank, b.chern);
}

Rational naive_invariant(CorrelatorEngine& engine, int degree,
                         const std::vector<std::vector<TangencyCondition>>& per_point) {
    if (degree < 0) throw std::domain_error("naive_invariant: negative degree");
    if (per_point.empty()) throw std::domain_error("naive_invariant: need at least one marked point");

    // conditions sharing a marked point multiply before dispatch
    std::vector<PsiPolynomial> points;
    points.reserve(per_point.size());
    for (const auto& conds : per_point) {
        if (conds.empty())
            throw std::domain_error("naive_invariant: marked point with no condition");
        PsiPolynomial p = PsiPolynomial::one();
        for (const auto& c : conds) p = p * condition_insertion(c);
        points.push_back(std::move(p));
    }

    // distribute over the psi-monomials of every marked point
    Rational total(0);
    std::vector<Insertion> chosen(points.size());
    auto expand = [&](auto&& self, std::size_t i) -> void {
        if (i == points.size()) {
            total += engine.correlator(degree, chosen);
            return;
        }
        for (const auto& [p, c] : points[i].terms()) {
            chosen[i] = Insertion{p, c};
            self(self, i + 1);
        }
    };
    expand(expand, 0);
    return total;
}

Rational gathmann_count(CorrelatorEngine& engine, int d) {
    if (d < 1) throw std::domain_error("gathmann_count: degree must be >= 1");
    std::vector<std::vector<TangencyCondition>> conds(
        5, {TangencyCondition{2, DivisorShape{d}}});
    return naive_invariant(engine, 2, conds) / Rational(factorial(5));
}

Rational gathmann_closed_form(int d) {
    Rational dd(d);
    return dd.pow(8) * (dd * dd + Rational(5) * dd + Rational(20)) / Rational(120);
}

} // namespace gwt
