#pragma once

#include "gwt/cohomology.hpp"
#include "gwt/correlator.hpp"
#include "gwt/rational.hpp"

#include <map>
#include <string>
#include <variant>
#include <vector>

namespace gwt {

// Shapes a tangency condition can be imposed along, inside the projective
// plane: a plane curve of degree e, a point, or the zero locus of a
// transverse section of a vector bundle with the given Chern classes c_1..c_r.
struct DivisorShape {
    int degree_e = 1;
};
struct PointShape {};
struct BundleShape {
    int rank = 1;
    std::vector<SurfaceClass> chern; // c_1 .. c_rank
};
using TangencyShape = std::variant<DivisorShape, PointShape, BundleShape>;

// Contact of order >= m along the shape at a marked point.
struct TangencyCondition {
    int order_m = 1;
    TangencyShape shape;
};

// Polynomial in the cotangent line class psi with SurfaceClass coefficients.
// Products collect psi powers and truncate at H^3 = 0.
class PsiPolynomial {
public:
    PsiPolynomial() = default;
    static PsiPolynomial monomial(int psi_power, const SurfaceClass& c);
    static PsiPolynomial one() { return monomial(0, SurfaceClass::unit()); }

    bool is_zero() const { return terms_.empty(); }
    SurfaceClass coeff(int psi_power) const;
    void add_term(int psi_power, const SurfaceClass& c);

    friend PsiPolynomial operator+(const PsiPolynomial& a, const PsiPolynomial& b);
    friend PsiPolynomial operator*(const PsiPolynomial& a, const PsiPolynomial& b);
    PsiPolynomial scaled(const Rational& c) const;
    friend bool operator==(const PsiPolynomial& a, const PsiPolynomial& b);

    const std::map<int, SurfaceClass>& terms() const { return terms_; }

    std::string str() const;

private:
    std::map<int, SurfaceClass> terms_; // psi power -> coefficient, zeros pruned
};

// Order-m tangency along a degree-e plane curve as a psi-polynomial:
// prod_{k=0}^{m-1} (k psi + e H), i.e. the unsigned-Stirling expansion
// sum_k s(m,k) psi^{m-k} (eH)^k truncated at H^3 = 0.
PsiPolynomial divisor_insertion(int m, int e);

// Order-m tangency at a point of the surface: ((m-1)! psi^{m-1})^2 H^2.
PsiPolynomial point_insertion(int m);

// Order-m tangency along the zero locus of a transverse section of a rank-r
// bundle E: prod_{k=0}^{m-1} sum_{j=0}^{r} (k psi)^{r-j} c_j(E).
PsiPolynomial bundle_insertion(int m, int rank, const std::vector<SurfaceClass>& chern);

// Same conditions computed through the normal-bundle route: the product
// prod_{k=1}^{m-1} sum_j (k psi)^{r-j} c_j(N) is expanded in the Chow ring of
// the subvariety itself and pushed forward by the projection formula. Only
// Divisor and Point shapes are realizable this way inside the plane; other
// shapes raise std::domain_error. Must agree with the direct expansions.
PsiPolynomial lci_insertion_via_theorem(int m, const TangencyShape& shape);

// Dispatch a condition to its expansion.
PsiPolynomial condition_insertion(const TangencyCondition& cond);

// Gromov-Witten invariant of degree d with naive tangency conditions: each
// marked point carries a list of conditions whose psi-polynomials multiply,
// the product distributes over basis monomials, and the engine evaluates the
// resulting descendent brackets.
Rational naive_invariant(CorrelatorEngine& engine, int degree,
                         const std::vector<std::vector<TangencyCondition>>& per_point);

// Conics simply tangent to a degree-d plane curve at five points, as the
// naive-tangency count (1/5!) <2C,2C,2C,2C,2C>_{0,2}.
Rational gathmann_count(CorrelatorEngine& engine, int d);

// Closed form (1/120) d^8 (d^2 + 5d + 20) for the same count.
Rational gathmann_closed_form(int d);

} // namespace gwt
