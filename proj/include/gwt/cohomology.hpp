#pragma once

#include "gwt/rational.hpp"

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace gwt {

// Element of the cohomology ring of the projective plane on the basis
// (1, H, H^2), H the hyperplane class, with H^3 = 0. Grading is complex
// codimension: deg H = 1. The ring data is isolated here so that another
// surface could be slotted in behind the same operations.
struct SurfaceClass {
    Rational c0, c1, c2;

    SurfaceClass() = default;
    SurfaceClass(Rational a, Rational b, Rational c)
        : c0(std::move(a)), c1(std::move(b)), c2(std::move(c)) {}

    static SurfaceClass unit() { return {1, 0, 0}; }
    static SurfaceClass hyperplane() { return {0, 1, 0}; }
    static SurfaceClass point_class() { return {0, 0, 1}; }
    static SurfaceClass h_power(int k); // H^k, zero for k > 2; k < 0 is an error

    bool is_zero() const { return c0.is_zero() && c1.is_zero() && c2.is_zero(); }

    // Codimension if homogeneous and nonzero, std::nullopt otherwise.
    std::optional<int> codim() const;

    const Rational& component(int k) const;

    friend SurfaceClass operator+(const SurfaceClass& a, const SurfaceClass& b);
    friend SurfaceClass operator-(const SurfaceClass& a, const SurfaceClass& b);
    SurfaceClass operator-() const;
    friend SurfaceClass operator*(const SurfaceClass& a, const SurfaceClass& b);
    SurfaceClass scaled(const Rational& c) const;
    friend bool operator==(const SurfaceClass& a, const SurfaceClass& b);

    // Integration over the surface: the H^2 coefficient.
    Rational integrate() const { return c2; }

    std::string str() const; // "a + b*H + c*H^2" with zero terms omitted
};

// Diagonal pairs (T_mu, T^mu) for the Poincare pairing on (1, H, H^2):
// [(1, H^2), (H, H), (H^2, 1)].
std::vector<std::pair<SurfaceClass, SurfaceClass>> pairing_inverse_basis();

// Laurent polynomial in z with SurfaceClass coefficients. All manipulations
// in this library keep finitely many exact terms, so no truncation window is
// carried: absent exponents are exact zeros.
class CohLaurent {
public:
    CohLaurent() = default;
    static CohLaurent monomial(int zpow, const SurfaceClass& c);

    bool is_zero() const { return terms_.empty(); }
    int min_z() const; // throws std::domain_error on the zero element
    int max_z() const;

    SurfaceClass coeff(int zpow) const;
    void add_term(int zpow, const SurfaceClass& c);

    friend CohLaurent operator+(const CohLaurent& a, const CohLaurent& b);
    friend CohLaurent operator-(const CohLaurent& a, const CohLaurent& b);
    friend CohLaurent operator*(const CohLaurent& a, const CohLaurent& b);
    CohLaurent scaled(const Rational& c) const;
    CohLaurent shifted(int zpow) const; // multiply by z^zpow
    friend bool operator==(const CohLaurent& a, const CohLaurent& b);

    // Inverse of a unit of the form c*z^v*(1 + nilpotent): the scalar part
    // must be a single monomial. Exact because H is nilpotent.
    CohLaurent inverse_unit() const;

    // True when every nonzero component satisfies codim + zpow == degree
    // (complex grading, deg H = deg z = 1).
    bool is_homogeneous_of_degree(int degree) const;

    const std::map<int, SurfaceClass>& terms() const { return terms_; }

    std::string str() const;

private:
    std::map<int, SurfaceClass> terms_; // zpow -> coefficient, zeros pruned
};

} // namespace gwt
