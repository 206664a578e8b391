#include "gwt/correlator.hpp"

#include "gwt/combinatorics.hpp"
#include "gwt/errors.hpp"

#include <algorithm>
#include <stdexcept>

namespace gwt {

namespace {

std::string mono_str(const MonoInsertion& m) {
    std::string cls = m.codim == 0 ? "1" : (m.codim == 1 ? "H" : "H^2");
    return "tau_" + std::to_string(m.a) + "(" + cls + ")";
}

// key with the insertion at `pos` replaced (or removed when `replacement`
// is null)
CorrelatorKey key_without(const CorrelatorKey& key, std::size_t pos) {
    std::vector<MonoInsertion> ins = key.ins;
    ins.erase(ins.begin() + static_cast<std::ptrdiff_t>(pos));
    return CorrelatorKey::make(key.degree, std::move(ins));
}

CorrelatorKey key_replacing(const CorrelatorKey& key, std::size_t pos, MonoInsertion m) {
    std::vector<MonoInsertion> ins = key.ins;
    ins[pos] = m;
    return CorrelatorKey::make(key.degree, std::move(ins));
}

CorrelatorKey key_adding(const CorrelatorKey& key, MonoInsertion m) {
    std::vector<MonoInsertion> ins = key.ins;
    ins.push_back(m);
    return CorrelatorKey::make(key.degree, std::move(ins));
}

} // namespace

CorrelatorKey CorrelatorKey::make(int degree, std::vector<MonoInsertion> ins) {
    if (degree < 0) throw std::domain_error("CorrelatorKey: negative degree");
    for (const auto& m : ins)
        if (m.a < 0 || m.codim < 0 || m.codim > 2)
            throw std::domain_error("CorrelatorKey: invalid insertion");
    std::sort(ins.begin(), ins.end());
    CorrelatorKey k;
    k.degree = degree;
    k.ins = std::move(ins);
    return k;
}

int CorrelatorKey::total_psi() const {
    int s = 0;
    for (const auto& m : ins) s += m.a;
    return s;
}

int CorrelatorKey::total_codim() const {
    int s = 0;
    for (const auto& m : ins) s += m.codim;
    return s;
}

bool operator<(const CorrelatorKey& x, const CorrelatorKey& y) {
    if (x.degree != y.degree) return x.degree < y.degree;
    auto cmp = [](const MonoInsertion& a, const MonoInsertion& b) {
        if (a.a != b.a) return a.a < b.a;
        return a.codim < b.codim;
    };
    return std::lexicographical_compare(x.ins.begin(), x.ins.end(), y.ins.begin(), y.ins.end(),
                                        cmp);
}

std::string CorrelatorKey::str() const {
    std::string s = "<";
    for (std::size_t i = 0; i < ins.size();) {
        std::size_t j = i;
        while (j < ins.size() && ins[j] == ins[i]) ++j;
        if (i) s += " ";
        s += mono_str(ins[i]);
        if (j - i > 1) s += "^" + std::to_string(j - i);
        i = j;
    }
    return s + ">_{0," + std::to_string(degree) + "}";
}

int CorrelatorEngine::TraceNode::depth() const {
    int d = 0;
    for (const auto& c : children) d = std::max(d, c->depth());
    return d + 1;
}

Rational CorrelatorEngine::correlator(int degree, const std::vector<Insertion>& insertions,
                                      TraceNode* trace) {
    if (degree < 0) throw std::domain_error("correlator: negative degree");
    // split every class into basis monomials and expand multilinearly
    Rational total(0);
    std::vector<MonoInsertion> mono(insertions.size());
    std::vector<Rational> coeffs(insertions.size());

    auto expand = [&](auto&& self, std::size_t i, const Rational& coeff) -> void {
        if (coeff.is_zero()) return;
        if (i == insertions.size()) {
            auto key = CorrelatorKey::make(degree, mono);
            total += coeff * eval(key, trace);
            return;
        }
        for (int k = 0; k <= 2; ++k) {
            const Rational& c = insertions[i].cls.component(k);
            if (c.is_zero()) continue;
            if (insertions[i].psi_power < 0)
                throw std::domain_error("correlator: negative psi power");
            mono[i] = MonoInsertion{insertions[i].psi_power, k};
            self(self, i + 1, coeff * c);
        }
    };
    expand(expand, 0, Rational(1));
    return total;
}

Rational CorrelatorEngine::eval(const CorrelatorKey& key, TraceNode* trace) {
    return eval_inner(key, trace, 0);
}

Rational CorrelatorEngine::eval_inner(const CorrelatorKey& key, TraceNode* trace, int depth) {
    if (depth > max_depth_)
        throw resource_guard_error("correlator: reduction depth budget (" +
                                   std::to_string(max_depth_) + ") exceeded at " + key.str());
    {
        std::lock_guard<std::mutex> lock(mu_);
        stats_.max_depth = std::max(stats_.max_depth, depth);
        ++stats_.lookups;
        auto it = memo_.find(key);
        if (it != memo_.end()) {
            ++stats_.hits;
            if (trace) {
                auto node = std::make_unique<TraceNode>();
                node->bracket = key.str();
                node->rule = "cached";
                node->value = it->second;
                trace->children.push_back(std::move(node));
            }
            return it->second;
        }
    }

    std::unique_ptr<TraceNode> node;
    TraceNode* child_sink = nullptr;
    if (trace) {
        node = std::make_unique<TraceNode>();
        node->bracket = key.str();
        child_sink = node.get();
    }

    std::string rule;
    Rational value = reduce(key, child_sink, depth, rule);

    {
        std::lock_guard<std::mutex> lock(mu_);
        auto [it, inserted] = memo_.try_emplace(key, value);
        (void)it;
        if (inserted) ++stats_.entries;
    }
    if (trace) {
        node->rule = rule;
        node->value = value;
        trace->children.push_back(std::move(node));
    }
    return value;
}

Rational CorrelatorEngine::reduce(const CorrelatorKey& key, TraceNode* trace, int depth,
                                  std::string& rule) {
    const int d = key.degree;
    const int n = key.points();
    const int sum_a = key.total_psi();
    const int sum_c = key.total_codim();

    // dimension gate: vdim of the moduli space is 3d - 1 + n
    if (sum_a + sum_c != 3 * d - 1 + n) {
        rule = "dimension-gate";
        return Rational(0);
    }

    if (d == 0) {
        // degree zero: psi-class integral over the moduli of curves times an
        // integral over the surface; empty or unstable moduli give zero
        rule = "degree-zero";
        if (n < 3 || sum_c != 2) return Rational(0);
        std::vector<int> as;
        as.reserve(key.ins.size());
        for (const auto& m : key.ins) as.push_back(m.a);
        return Rational(multinomial(n - 3, as));
    }

    // string equation: tau_0(1) drops, one psi power comes off another point
    for (std::size_t i = 0; i < key.ins.size(); ++i) {
        if (key.ins[i].a != 0 || key.ins[i].codim != 0) continue;
        rule = "string";
        CorrelatorKey base = key_without(key, i);
        Rational acc(0);
        for (std::size_t j = 0; j < base.ins.size(); ++j) {
            if (base.ins[j].a == 0) continue;
            if (j > 0 && base.ins[j] == base.ins[j - 1]) continue; // equal terms grouped below
            int count = 0;
            for (const auto& m : base.ins) count += (m == base.ins[j]);
            auto lowered = key_replacing(base, j, MonoInsertion{base.ins[j].a - 1, base.ins[j].codim});
            acc += Rational(count) * eval_inner(lowered, trace, depth + 1);
        }
        return acc;
    }

    // dilaton equation: tau_1(1) drops with a factor (n' - 2)
    for (std::size_t i = 0; i < key.ins.size(); ++i) {
        if (key.ins[i].a != 1 || key.ins[i].codim != 0) continue;
        rule = "dilaton";
        CorrelatorKey base = key_without(key, i);
        return Rational(base.points() - 2) * eval_inner(base, trace, depth + 1);
    }

    // divisor equation for tau_0(H), applied only when it lowers complexity:
    // either the reduced bracket keeps >= 3 points or no psi powers remain
    // (otherwise the inverse-divisor bootstrap below would undo it).
    for (std::size_t i = 0; i < key.ins.size(); ++i) {
        if (key.ins[i].a != 0 || key.ins[i].codim != 1) continue;
        if (!(sum_a == 0 || n - 1 >= 3)) break;
        rule = "divisor";
        CorrelatorKey base = key_without(key, i);
        Rational acc = Rational(d) * eval_inner(base, trace, depth + 1);
        for (std::size_t j = 0; j < base.ins.size(); ++j) {
            if (base.ins[j].a == 0 || base.ins[j].codim + 1 > 2) continue;
            if (j > 0 && base.ins[j] == base.ins[j - 1]) continue;
            int count = 0;
            for (const auto& m : base.ins) count += (m == base.ins[j]);
            auto lowered =
                key_replacing(base, j, MonoInsertion{base.ins[j].a - 1, base.ins[j].codim + 1});
            acc += Rational(count) * eval_inner(lowered, trace, depth + 1);
        }
        return acc;
    }

    if (sum_a == 0) {
        // pure primary bracket: every insertion is a point class H^2 (unit
        // insertions were stripped by string, divisor strips always fire when
        // sum_a == 0), and the gate forces n = 3d - 1
        for (const auto& m : key.ins)
            if (m.codim != 2)
                throw consistency_error("correlator: primary reduction left " + key.str());
        rule = "point-count";
        return primary_point_count(d);
    }

    if (n >= 3) {
        rule = "trr";
        Rational acc(0);
        for (const auto& term : trr_expand(key, 0)) {
            Rational left = eval_inner(term.left, trace, depth + 1);
            if (left.is_zero()) continue;
            acc += term.coefficient * left * eval_inner(term.right, trace, depth + 1);
        }
        return acc;
    }

    // inverse divisor equation: raise the point count toward 3 so that the
    // topological recursion applies; the corrections strictly lower total psi
    rule = "inverse-divisor";
    CorrelatorKey raised = key_adding(key, MonoInsertion{0, 1});
    Rational acc = eval_inner(raised, trace, depth + 1);
    for (std::size_t j = 0; j < key.ins.size(); ++j) {
        if (key.ins[j].a == 0 || key.ins[j].codim + 1 > 2) continue;
        if (j > 0 && key.ins[j] == key.ins[j - 1]) continue;
        int count = 0;
        for (const auto& m : key.ins) count += (m == key.ins[j]);
        auto lowered = key_replacing(key, j, MonoInsertion{key.ins[j].a - 1, key.ins[j].codim + 1});
        acc -= Rational(count) * eval_inner(lowered, trace, depth + 1);
    }
    return acc / Rational(d);
}

std::vector<CorrelatorEngine::TrrTerm> CorrelatorEngine::trr_expand(const CorrelatorKey& key,
                                                                    int pivot_index,
                                                                    int companion1,
                                                                    int companion2) const {
    const int n = key.points();
    if (n < 3) throw std::domain_error("trr_expand: need at least 3 marked points");
    if (pivot_index < 0 || pivot_index >= n) throw std::domain_error("trr_expand: bad pivot index");
    if (key.ins[static_cast<std::size_t>(pivot_index)].a < 1)
        throw std::domain_error("trr_expand: pivot has no psi power");

    // default companions: the two canonically first non-pivot insertions
    std::vector<int> rest;
    for (int i = 0; i < n; ++i)
        if (i != pivot_index) rest.push_back(i);
    if (companion1 < 0) companion1 = rest[0];
    if (companion2 < 0) companion2 = rest[1];
    if (companion1 == companion2 || companion1 == pivot_index || companion2 == pivot_index ||
        companion1 >= n || companion2 >= n || companion1 < 0 || companion2 < 0)
        throw std::domain_error("trr_expand: bad companion indices");

    MonoInsertion pivot = key.ins[static_cast<std::size_t>(pivot_index)];
    MonoInsertion lowered{pivot.a - 1, pivot.codim};
    MonoInsertion compA = key.ins[static_cast<std::size_t>(companion1)];
    MonoInsertion compB = key.ins[static_cast<std::size_t>(companion2)];

    // remaining insertions as (value, multiplicity) groups
    std::vector<std::pair<MonoInsertion, int>> groups;
    for (int i = 0; i < n; ++i) {
        if (i == pivot_index || i == companion1 || i == companion2) continue;
        MonoInsertion m = key.ins[static_cast<std::size_t>(i)];
        bool merged = false;
        for (auto& g : groups)
            if (g.first == m) {
                ++g.second;
                merged = true;
                break;
            }
        if (!merged) groups.emplace_back(m, 1);
    }

    std::map<std::pair<CorrelatorKey, CorrelatorKey>, Rational> acc;

    std::vector<int> take(groups.size(), 0);
    auto emit = [&](const std::vector<int>& chosen, const Rational& mult) {
        for (int d_left = 0; d_left <= key.degree; ++d_left) {
            int d_right = key.degree - d_left;
            for (int mu = 0; mu <= 2; ++mu) {
                std::vector<MonoInsertion> left{lowered, MonoInsertion{0, mu}};
                std::vector<MonoInsertion> right{compA, compB, MonoInsertion{0, 2 - mu}};
                for (std::size_t g = 0; g < groups.size(); ++g) {
                    for (int t = 0; t < chosen[g]; ++t) left.push_back(groups[g].first);
                    for (int t = chosen[g]; t < groups[g].second; ++t)
                        right.push_back(groups[g].first);
                }
                // boundary strata with an unstable side do not exist
                if (d_left == 0 && static_cast<int>(left.size()) < 3) continue;
                if (d_right == 0 && static_cast<int>(right.size()) < 3) continue;
                auto kl = CorrelatorKey::make(d_left, std::move(left));
                auto kr = CorrelatorKey::make(d_right, std::move(right));
                acc[{kl, kr}] += mult;
            }
        }
    };

    auto choose = [&](auto&& self, std::size_t g, const Rational& mult) -> void {
        if (g == groups.size()) {
            emit(take, mult);
            return;
        }
        for (int t = 0; t <= groups[g].second; ++t) {
            take[g] = t;
            self(self, g + 1, mult * Rational(binomial(groups[g].second, t)));
        }
    };
    choose(choose, 0, Rational(1));

    std::vector<TrrTerm> out;
    out.reserve(acc.size());
    for (auto& [keys, coeff] : acc)
        if (!coeff.is_zero()) out.push_back(TrrTerm{coeff, keys.first, keys.second});
    return out;
}

Rational CorrelatorEngine::primary_point_count(int degree) {
    if (degree <= 0) throw std::domain_error("primary_point_count: degree must be positive");
    std::lock_guard<std::mutex> lock(mu_);
    while (static_cast<int>(point_counts_.size()) <= degree) {
        int d = static_cast<int>(point_counts_.size());
        if (d == 1) {
            point_counts_.push_back(Rational(1)); // one line through two points
            continue;
        }
        Rational acc(0);
        for (int da = 1; da < d; ++da) {
            int db = d - da;
            Rational counts = point_counts_[static_cast<std::size_t>(da)] *
                              point_counts_[static_cast<std::size_t>(db)];
            Rational weight =
                Rational(db) * Rational(binomial(3 * d - 4, 3 * da - 2)) -
                Rational(da) * Rational(binomial(3 * d - 4, 3 * da - 1));
            acc += counts * Rational(da) * Rational(da) * Rational(db) * weight;
        }
        point_counts_.push_back(acc);
    }
    return point_counts_[static_cast<std::size_t>(degree)];
}

Rational CorrelatorEngine::primary_point_count_via_trr(int degree) {
    if (degree < 2)
        throw std::domain_error("primary_point_count_via_trr: degree must be >= 2");
    std::vector<MonoInsertion> ins{MonoInsertion{1, 1}};
    for (int i = 0; i < 3 * degree - 2; ++i) ins.push_back(MonoInsertion{0, 2});
    std::vector<MonoInsertion> with_divisor = ins;
    with_divisor.push_back(MonoInsertion{0, 1});

    // companions: one point insertion and the tau_0(H); with this pair the
    // degree-0 three-point factors all integrate to zero, so no term
    // reassembles the full-degree point bracket
    CorrelatorKey key_c = CorrelatorKey::make(degree, with_divisor);
    Rational c(0);
    for (const auto& t : trr_expand(key_c, 0, 1, key_c.points() - 1))
        c += t.coefficient * eval(t.left) * eval(t.right);

    CorrelatorKey key_b = CorrelatorKey::make(degree, ins);
    return c - Rational(degree) * eval(key_b);
}

Rational CorrelatorEngine::one_point_descendent(int degree, int a, int b) {
    if (degree <= 0) throw std::domain_error("one_point_descendent: degree must be positive");
    if (a < 0 || b < 0) throw std::domain_error("one_point_descendent: negative parameters");
    if (b > 2) return Rational(0); // H^b = 0
    return eval(CorrelatorKey::make(degree, {MonoInsertion{a, b}}));
}

CorrelatorEngine::CacheStats CorrelatorEngine::stats() const {
    std::lock_guard<std::mutex> lock(mu_);
    return stats_;
}

void CorrelatorEngine::clear_cache() {
    std::lock_guard<std::mutex> lock(mu_);
    memo_.clear();
    stats_ = CacheStats{};
}

} // namespace gwt
