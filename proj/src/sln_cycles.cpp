#include "lpc/sln_cycles.hpp"

#include "lpc/algebra.hpp"
#include "lpc/error.hpp"
#include "lpc/poly_span.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>

namespace lpc {

CycleMonomial::CycleMonomial(std::vector<int> indices) : indices_(std::move(indices)) {
    if (indices_.size() < 2) throw InvalidParameter("a cycle needs at least two indices");
    std::set<int> seen(indices_.begin(), indices_.end());
    if (seen.size() != indices_.size()) throw InvalidParameter("cycle indices must be pairwise distinct");
    std::rotate(indices_.begin(), std::min_element(indices_.begin(), indices_.end()), indices_.end());
}

std::string CycleMonomial::label(int n) const {
    std::string out = "p";
    for (std::size_t i = 0; i < indices_.size(); ++i) {
        if (n >= 10 && i > 0) out += "_";
        out += std::to_string(indices_[i]);
    }
    return out;
}

Monomial CycleMonomial::monomial(int n) const {
    SlnLayout lay{n};
    std::vector<Monomial::Factor> f;
    for (std::size_t u = 0; u < indices_.size(); ++u) {
        int a = indices_[u], b = indices_[(u + 1) % indices_.size()];
        if (a < 1 || a > n || b < 1 || b > n) throw InvalidParameter("cycle index out of range for n=" + std::to_string(n));
        f.emplace_back(static_cast<std::uint32_t>(lay.offdiag(a, b)), 1);
    }
    return Monomial(std::move(f));
}

ExponentGraph ExponentGraph::from_monomial(int n, const Monomial& m) {
    SlnLayout lay{n};
    ExponentGraph g;
    g.n = n;
    for (const auto& [v, e] : m.factors()) {
        if (v >= lay.dim()) throw InvalidParameter("variable index out of range for sl(" + std::to_string(n) + ")");
        if (auto edge = lay.edge(v)) g.edges[*edge] += e;
    }
    return g;
}

Monomial ExponentGraph::to_monomial() const {
    SlnLayout lay{n};
    std::vector<Monomial::Factor> f;
    for (const auto& [edge, mult] : edges)
        if (mult > 0) f.emplace_back(static_cast<std::uint32_t>(lay.offdiag(edge.first, edge.second)), mult);
    return Monomial(std::move(f));
}

bool balance_check(const ExponentGraph& g) {
    std::map<int, long> net;
    for (const auto& [edge, mult] : g.edges) {
        net[edge.first] += mult;
        net[edge.second] -= mult;
    }
    return std::all_of(net.begin(), net.end(), [](const auto& kv) { return kv.second == 0; });
}

bool balance_check(int n, const Monomial& m) { return balance_check(ExponentGraph::from_monomial(n, m)); }

std::vector<CycleMonomial> cycle_decompose(ExponentGraph g) {
    if (!balance_check(g)) throw InvalidParameter("cycle decomposition needs a balanced monomial");
    for (auto it = g.edges.begin(); it != g.edges.end();)
        it = it->second == 0 ? g.edges.erase(it) : std::next(it);

    std::vector<CycleMonomial> out;
    std::vector<int> path;
    while (!g.edges.empty()) {
        if (path.empty()) path.push_back(g.edges.begin()->first.first);
        int v = path.back();
        auto it = g.edges.lower_bound({v, 0});
        if (it == g.edges.end() || it->first.first != v) {
            // Only the start vertex can run out of edges, after closing a cycle through it.
            path.clear();
            continue;
        }
        int w = it->first.second;
        if (--it->second == 0) g.edges.erase(it);
        auto pos = std::find(path.begin(), path.end(), w);
        if (pos == path.end()) {
            path.push_back(w);
            continue;
        }
        out.emplace_back(std::vector<int>(pos, path.end()));
        path.erase(pos + 1, path.end());
    }
    return out;
}

std::vector<CycleMonomial> enumerate_cycles(int n) {
    if (n < 2) throw InvalidParameter("sl(n) requires n >= 2");
    std::vector<CycleMonomial> out;
    for (int d = 2; d <= n; ++d) {
        // d-subsets in lexicographic order; the smallest element stays first and
        // the rest run through all orderings.
        std::vector<bool> pick(static_cast<std::size_t>(n), false);
        std::fill(pick.begin(), pick.begin() + d, true);
        do {
            std::vector<int> subset;
            for (int i = 0; i < n; ++i)
                if (pick[static_cast<std::size_t>(i)]) subset.push_back(i + 1);
            do {
                out.emplace_back(subset);
            } while (std::next_permutation(subset.begin() + 1, subset.end()));
        } while (std::prev_permutation(pick.begin(), pick.end()));
    }
    std::sort(out.begin(), out.end());
    return out;
}

GeneratorSet enumerate_cycle_generators(int n) {
    SlnLayout lay{n};
    std::vector<Polynomial> polys;
    std::vector<std::string> labels;
    for (int i = 1; i < n; ++i) {
        polys.push_back(Polynomial::variable(lay.dim(), lay.cartan(i)));
        labels.push_back("h" + std::to_string(i));
    }
    for (const auto& c : enumerate_cycles(n)) {
        polys.push_back(Polynomial::term(lay.dim(), c.monomial(n), 1));
        labels.push_back(c.label(n));
    }
    return GeneratorSet::from_polys(lay.dim(), polys, labels);
}

namespace {

struct Instance {
    std::vector<CycleMonomial> lhs;
    std::vector<CycleMonomial> rhs;
    std::string text;
};

Monomial product(const std::vector<CycleMonomial>& cs, int n) {
    Monomial m;
    for (const auto& c : cs) m = m * c.monomial(n);
    return m;
}

std::string describe(const std::vector<CycleMonomial>& cs, int n) {
    std::string out;
    for (const auto& c : cs) out += (out.empty() ? "" : "*") + c.label(n);
    return out.empty() ? "1" : out;
}

std::vector<CycleMonomial> all_pairs(int n, const std::function<bool(int, int)>& keep) {
    std::vector<CycleMonomial> out;
    for (int r = 1; r <= n; ++r)
        for (int s = r + 1; s <= n; ++s)
            if (keep(r, s)) out.emplace_back(std::vector<int>{r, s});
    return out;
}

std::vector<CycleMonomial> repeat(const std::vector<CycleMonomial>& cs, long times) {
    std::vector<CycleMonomial> out;
    for (long t = 0; t < times; ++t) out.insert(out.end(), cs.begin(), cs.end());
    return out;
}

/// Ordered k-tuples of distinct indices in 1..n.
void for_each_tuple(int n, int k, const std::function<void(const std::vector<int>&)>& fn) {
    std::vector<int> cur;
    std::vector<bool> used(static_cast<std::size_t>(n + 1), false);
    std::function<void()> rec = [&] {
        if (static_cast<int>(cur.size()) == k) {
            fn(cur);
            return;
        }
        for (int i = 1; i <= n; ++i) {
            if (used[static_cast<std::size_t>(i)]) continue;
            used[static_cast<std::size_t>(i)] = true;
            cur.push_back(i);
            rec();
            cur.pop_back();
            used[static_cast<std::size_t>(i)] = false;
        }
    };
    rec();
}

long phi(int n, int k) {
    long v = 1;
    for (int s = 2; s <= k - 1; ++s) v *= n - s;
    return v;
}

FamilyResult make_result(const std::string& family, const std::string& convention) {
    FamilyResult r;
    r.family = family;
    r.convention = convention;
    return r;
}

FamilyResult run_family(const std::string& family, const std::string& convention, int n,
                        const std::vector<Instance>& instances) {
    FamilyResult r = make_result(family, convention);
    for (const auto& inst : instances) {
        ++r.instances;
        if (!(product(inst.lhs, n) == product(inst.rhs, n))) {
            if (r.failures++ == 0) r.first_failure = inst.text;
        }
    }
    return r;
}

Instance make_instance(std::vector<CycleMonomial> lhs, std::vector<CycleMonomial> rhs, int n) {
    Instance inst{std::move(lhs), std::move(rhs), ""};
    inst.text = describe(inst.lhs, n) + " = " + describe(inst.rhs, n);
    return inst;
}

}  // namespace

RelationFamiliesReport relation_families_check(int n, std::size_t budget, unsigned ideal_degree) {
    if (n < 2) throw InvalidParameter("sl(n) requires n >= 2");
    RelationFamiliesReport rep;
    rep.n = n;
    rep.ideal_degree = ideal_degree;
    std::map<std::string, std::vector<Instance>> chosen_instances;

    auto count_check = [&](std::size_t count) {
        if (count > budget)
            throw ResourceError("relation family instances exceed budget of " + std::to_string(budget),
                                static_cast<unsigned>(n));
    };
    auto record = [&](FamilyResult r, std::vector<Instance> insts) {
        if (r.holds() && !rep.chosen.count(r.family)) {
            rep.chosen[r.family] = r.convention;
            chosen_instances[r.family] = std::move(insts);
        }
        rep.results.push_back(std::move(r));
    };

    // (i) product of the 2-cycles along a k-cycle equals the k-cycle times its reverse.
    {
        std::vector<Instance> insts;
        for (int k = 2; k <= n; ++k)
            for_each_tuple(n, k, [&](const std::vector<int>& t) {
                count_check(insts.size() + 1);
                std::vector<CycleMonomial> lhs;
                for (int u = 0; u < k; ++u)
                    lhs.emplace_back(std::vector<int>{t[static_cast<std::size_t>(u)], t[static_cast<std::size_t>((u + 1) % k)]});
                std::vector<int> rev{t[0]};
                for (int u = k - 1; u >= 1; --u) rev.push_back(t[static_cast<std::size_t>(u)]);
                insts.push_back(make_instance(lhs, {CycleMonomial(t), CycleMonomial(rev)}, n));
            });
        record(run_family("i", "as printed", n, insts), insts);
    }

    // (ii) product of all 2-cycles against two n-cycles and a trailing product.
    {
        std::vector<int> forward(static_cast<std::size_t>(n));
        std::iota(forward.begin(), forward.end(), 1);
        std::vector<int> full_reverse{1};
        for (int i = n; i >= 2; --i) full_reverse.push_back(i);
        std::vector<int> printed_reverse{1};
        for (int i = n - 1; i >= 2; --i) printed_reverse.push_back(i);
        auto lhs = all_pairs(n, [](int, int) { return true; });
        auto trailing = all_pairs(n, [](int r, int s) { return s >= r + 2; });
        auto trailing_no_corner = all_pairs(n, [n](int r, int s) { return s >= r + 2 && !(r == 1 && s == n); });

        struct Variant {
            std::string name;
            std::vector<int> reverse;
            std::vector<CycleMonomial> tail;
        };
        std::vector<Variant> variants{
            {"as printed: reverse cycle (1,n-1,...,2), pairs s >= m+2", printed_reverse, trailing},
            {"reverse cycle (1,n,...,2), pairs s >= m+2", full_reverse, trailing},
            {"reverse cycle (1,n,...,2), pairs s >= m+2 without (1,n)", full_reverse, trailing_no_corner},
        };
        for (const auto& v : variants) {
            FamilyResult r = make_result("ii", v.name);
            std::vector<Instance> insts;
            if (n < 3 || v.reverse.size() < 2) {
                r.applicable = false;
                r.first_failure = "no valid instance for n = " + std::to_string(n);
            } else {
                std::vector<CycleMonomial> rhs{CycleMonomial(forward), CycleMonomial(v.reverse)};
                rhs.insert(rhs.end(), v.tail.begin(), v.tail.end());
                insts.push_back(make_instance(lhs, rhs, n));
                r = run_family("ii", v.name, n, insts);
            }
            record(std::move(r), std::move(insts));
        }
    }

    // (iii) product of all k-cycles against a power of the 2-cycle product.
    {
        auto pairs = all_pairs(n, [](int, int) { return true; });
        std::vector<Instance> ordered, rotation;
        for (int k = 2; k <= n; ++k) {
            std::vector<CycleMonomial> by_tuple, by_cycle;
            for_each_tuple(n, k, [&](const std::vector<int>& t) {
                count_check(by_tuple.size() + 1);
                by_tuple.emplace_back(t);
            });
            for (const auto& c : enumerate_cycles(n))
                if (static_cast<int>(c.length()) == k) by_cycle.push_back(c);
            auto rhs = repeat(pairs, phi(n, k));
            ordered.push_back(make_instance(by_tuple, rhs, n));
            rotation.push_back(make_instance(by_cycle, rhs, n));
        }
        record(run_family("iii", "product over ordered index tuples", n, ordered), ordered);
        record(run_family("iii", "product over cycles up to rotation, phi(2) = 1", n, rotation), rotation);
    }

    // Containment of the chosen relations in the relation ideal, in low degree.
    GeneratorSet gens = enumerate_cycle_generators(n);
    std::map<CycleMonomial, std::size_t> index;
    {
        auto cycles = enumerate_cycles(n);
        for (std::size_t i = 0; i < cycles.size(); ++i) index[cycles[i]] = static_cast<std::size_t>(n - 1) + i;
    }
    const std::size_t m = gens.size();
    auto formal = [&](const std::vector<CycleMonomial>& cs) {
        std::vector<std::uint32_t> e(m, 0);
        for (const auto& c : cs) ++e[index.at(c)];
        return Polynomial::term(m, Monomial::from_exponents(e), 1);
    };
    std::vector<Polynomial> targets;
    std::vector<unsigned> target_degrees;
    for (const auto& [family, insts] : chosen_instances)
        for (const auto& inst : insts) {
            unsigned d = product(inst.lhs, n).degree();
            if (d == 0 || d > ideal_degree) continue;
            Polynomial rel = formal(inst.lhs) - formal(inst.rhs);
            if (rel.is_zero()) continue;
            targets.push_back(std::move(rel));
            target_degrees.push_back(d);
        }
    if (!targets.empty()) {
        unsigned top = *std::max_element(target_degrees.begin(), target_degrees.end());
        RelationSet rs = relation_basis(gens, top);
        GeneratorProducts prods(gens);
        std::map<unsigned, PolySpan> ideal;
        for (std::size_t t = 0; t < targets.size(); ++t) {
            unsigned d = target_degrees[t];
            auto it = ideal.find(d);
            if (it == ideal.end()) {
                PolySpan span(m);
                for (std::size_t r = 0; r < rs.relations.size(); ++r) {
                    if (rs.degrees[r] > d) continue;
                    for (const auto& e : prods.exponents(d - rs.degrees[r]))
                        span.insert(rs.relations[r] * Polynomial::term(m, Monomial::from_exponents(e), 1));
                }
                it = ideal.emplace(d, std::move(span)).first;
            }
            ++rep.ideal_checked;
            if (!it->second.contains(targets[t])) ++rep.ideal_missing;
        }
    }

    rep.passed = rep.chosen.count("i") && rep.chosen.count("iii") && (n < 3 || rep.chosen.count("ii")) &&
                 rep.ideal_missing == 0;
    return rep;
}

bool OracleReport::passed() const {
    return std::all_of(degrees.begin(), degrees.end(),
                       [](const OracleDegree& d) { return d.mismatches == 0 && d.same_span; });
}

OracleReport oracle_cross_check(int n, unsigned k_max, const CommutantOptions& opts) {
    LieAlgebra alg = builtin_sl(n);
    SubalgebraSpec cartan = SubalgebraSpec::cartan(alg);
    const std::size_t dim = alg.dim();
    OracleReport rep;
    rep.n = n;
    for (unsigned k = 0; k <= k_max; ++k) {
        OracleDegree od;
        od.degree = k;
        std::vector<Polynomial> kernel = invariant_basis(alg, cartan, k, opts);
        od.kernel_dim = kernel.size();
        std::vector<Polynomial> balanced;
        for (const auto& m : monomials_of_degree(dim, k)) {
            ++od.monomials;
            Polynomial p = Polynomial::term(dim, m, 1);
            bool bal = balance_check(n, m);
            if (bal) balanced.push_back(p);
            if (bal != is_invariant(alg, cartan, p)) ++od.mismatches;
        }
        od.balanced = balanced.size();
        od.same_span = same_span(balanced, kernel, dim);
        rep.degrees.push_back(od);
    }
    return rep;
}

}  // namespace lpc
