#include "gwt/mirror.hpp"

#include "gwt/combinatorics.hpp"
#include "gwt/errors.hpp"
#include "gwt/tangency.hpp"

#include <stdexcept>

namespace gwt {

JFunctionTable j_function(int d_max) {
    if (d_max < 0) throw std::domain_error("j_function: negative order");
    JFunctionTable table;
    table.d_max = d_max;
    table.by_degree.reserve(static_cast<std::size_t>(d_max) + 1);
    table.by_degree.push_back(CohLaurent::monomial(1, SurfaceClass::unit())); // J^0 = z

    CohLaurent denom_inv = CohLaurent::monomial(0, SurfaceClass::unit());
    for (int d = 1; d <= d_max; ++d) {
        // multiply in 1/(H + dz)^3
        CohLaurent lin;
        lin.add_term(0, SurfaceClass::hyperplane());
        lin.add_term(1, SurfaceClass::unit().scaled(Rational(d)));
        denom_inv = denom_inv * (lin * lin * lin).inverse_unit();
        table.by_degree.push_back(denom_inv.shifted(1)); // z * prod
    }
    return table;
}

std::vector<CohLaurent> i_kx(int d_max) {
    JFunctionTable jt = j_function(d_max);
    std::vector<CohLaurent> table;
    table.reserve(jt.by_degree.size());
    for (int d = 0; d <= d_max; ++d) {
        CohLaurent v = jt.by_degree[static_cast<std::size_t>(d)];
        for (int k = 0; k < 3 * d; ++k) {
            CohLaurent factor;
            factor.add_term(0, SurfaceClass::hyperplane().scaled(Rational(-3)));
            if (k > 0) factor.add_term(1, SurfaceClass::unit().scaled(Rational(-k)));
            v = v * factor;
        }
        table.push_back(std::move(v));
    }
    return table;
}

std::pair<Series, Series> extract_I1_I2(const std::vector<CohLaurent>& table) {
    if (table.empty()) throw std::domain_error("extract_I1_I2: empty table");
    int d_max = static_cast<int>(table.size()) - 1;
    Series i1(d_max), i2(d_max);
    for (int d = 0; d <= d_max; ++d) {
        const CohLaurent& v = table[static_cast<std::size_t>(d)];
        CohLaurent expected;
        if (d == 0) {
            expected = CohLaurent::monomial(1, SurfaceClass::unit());
        } else {
            // slots: I1_d * (3H) at z^0 and I2_d * (9H^2) at z^{-1}
            Rational a = v.coeff(0).c1 / Rational(3);
            Rational b = v.coeff(-1).c2 / Rational(9);
            i1.set(d, a);
            i2.set(d, b);
            expected.add_term(0, SurfaceClass::hyperplane().scaled(a * Rational(3)));
            expected.add_term(-1, SurfaceClass::point_class().scaled(b * Rational(9)));
        }
        if (!(v == expected))
            throw consistency_error("extract_I1_I2: residual terms outside the z, D, D^2/z slots "
                                    "at degree " + std::to_string(d));
    }
    return {i1, i2};
}

namespace {
Rational harmonic_window(int lo, int hi) {
    Rational h(0);
    for (int k = lo; k <= hi; ++k) h += Rational(1, k);
    return h;
}

Rational hypergeometric_ratio(int d) {
    // (3d-1)! / d!^3
    return Rational(factorial(3 * d - 1)) / Rational(factorial(d)).pow(3);
}
} // namespace

Rational i1_closed_form(int d) {
    if (d < 0) throw std::domain_error("i1_closed_form: negative degree");
    if (d == 0) return Rational(0);
    Rational sign = (d % 2 == 0) ? Rational(1) : Rational(-1);
    return sign * hypergeometric_ratio(d);
}

Rational i2_closed_form(int d) {
    if (d < 0) throw std::domain_error("i2_closed_form: negative degree");
    if (d == 0) return Rational(0);
    Rational sign = (d % 2 == 0) ? Rational(1) : Rational(-1);
    return sign * hypergeometric_ratio(d) * harmonic_window(d + 1, 3 * d - 1);
}

Series naive_series_F(int d_max) {
    std::vector<CohLaurent> table = i_kx(d_max);
    Series f(d_max);
    for (int d = 1; d <= d_max; ++d) {
        // residue of the surface integral: H^2 coefficient at z^{-1},
        // then the sign flip q^d -> (-1)^{3d} q^d
        Rational res = table[static_cast<std::size_t>(d)].coeff(-1).c2;
        f.set(d, (d % 2 == 0) ? res : -res);
    }
    return f;
}

Rational naive_series_F_descendent(CorrelatorEngine& engine, int d, int degree_bound) {
    if (d < 0) throw std::domain_error("naive_series_F_descendent: negative degree");
    if (d == 0) return Rational(0); // empty moduli convention
    if (d > degree_bound)
        throw resource_guard_error("naive_series_F_descendent: degree " + std::to_string(d) +
                                   " beyond configured bound " + std::to_string(degree_bound));
    std::vector<std::vector<TangencyCondition>> cond{{TangencyCondition{3 * d, DivisorShape{3}}}};
    return naive_invariant(engine, d, cond);
}

Rational naive_series_F_closed_form(int d) {
    if (d < 0) throw std::domain_error("naive_series_F_closed_form: negative degree");
    if (d == 0) return Rational(0);
    return Rational(9) * hypergeometric_ratio(d) * harmonic_window(d + 1, 3 * d - 1);
}

MirrorData mirror_pipeline(int d_max) {
    auto [i1, i2] = extract_I1_I2(i_kx(d_max));
    return mirror_pipeline_from(std::move(i1), std::move(i2), naive_series_F(d_max));
}

MirrorData mirror_pipeline_from(Series I1, Series I2, Series F) {
    MirrorData md;
    md.mirror_map = Series::identity(I1.order()) * I1.scaled(Rational(3)).exp();
    md.inverse_map = md.mirror_map.reversion();
    // -Floc = d_X (I2 - I1^2/2) as a function of q; change variable to Q
    Series g = (I2 - (I1 * I1).scaled(Rational(1, 2))).scaled(-md.d_X);
    md.Floc = g.compose(md.inverse_map);
    md.I1 = std::move(I1);
    md.I2 = std::move(I2);
    md.F = std::move(F);
    return md;
}

Rational local_invariant(const MirrorData& md, int d) {
    if (d < 1) throw std::domain_error("local_invariant: degree must be >= 1");
    return md.Floc.at(d) / Rational(3 * d);
}

IdentityCheck check_identities(int d_max) { return check_identities_from(mirror_pipeline(d_max)); }

IdentityCheck check_identities_from(const MirrorData& md) {
    int order = std::min(md.F.order(), md.Floc.order());
    // F(q)|sign-flip - (d_X/2) I1^2  ==  -Floc(Q)|_{Q = q exp(3 I1)}
    Series lhs(order);
    for (int d = 0; d <= order; ++d)
        lhs.set(d, (d % 2 == 0) ? md.F.at(d) : -md.F.at(d));
    lhs = lhs - (md.I1 * md.I1).scaled(md.d_X / Rational(2)).truncated(order);
    Series rhs = (-md.Floc).compose(md.mirror_map).truncated(order);

    IdentityCheck report;
    report.passed = true;
    for (int d = 0; d <= order; ++d) {
        if (lhs.at(d) == rhs.at(d)) continue;
        report.passed = false;
        report.mismatches.push_back({d, lhs.at(d), rhs.at(d)});
    }
    // log series through the sign-flip identity Flog(Q)|flip = -Floc(Q)
    report.flog = Series(md.Floc.order());
    for (int d = 0; d <= md.Floc.order(); ++d)
        report.flog.set(d, (d % 2 == 0) ? -md.Floc.at(d) : md.Floc.at(d));
    return report;
}

} // namespace gwt
