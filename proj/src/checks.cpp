#include <bit>
#include <random>
#include <sstream>

#include "vdcat/bruhat.hpp"
#include "vdcat/cli.hpp"
#include "vdcat/gendet.hpp"
#include "vdcat/linkdiag.hpp"
#include "vdcat/tqft.hpp"
#include "vdcat/zndiag.hpp"

namespace vdcat {

namespace {

BigInt vandermonde_product(const ColorVector& x) {
    BigInt v = 1;
    for (int i = 1; i <= x.size(); ++i) {
        v *= x.at(i);
        for (int j = i + 1; j <= x.size(); ++j) v *= BigInt(x.at(j)) - BigInt(x.at(i));
    }
    return v;
}

CheckResult bruhat_thin() {
    for (int n = 1; n <= 5; ++n) {
        const auto poset = shared_bruhat(n);
        if (poset->level_sizes() != mahonian_numbers(n)) return {"bruhat thin", false, "level sizes, n=" + std::to_string(n)};
        for (std::size_t e = 0; e < poset->size(); ++e) {
            for (std::size_t a : poset->up(e)) {
                for (std::size_t t : poset->up(a)) {
                    if (length2_middles(*poset, poset->element(e), poset->element(t)).size() != 2) {
                        return {"bruhat thin", false, poset->element(e).to_string() + " < " + poset->element(t).to_string()};
                    }
                }
            }
        }
    }
    return {"bruhat thin", true, "n <= 5"};
}

CheckResult torus_circles() {
    for (int n = 1; n <= 8; ++n) {
        const LinkDiagram d = torus_two_n(n);
        for (std::uint32_t bits = 1; bits < (1U << n); ++bits) {
            Smoothing s(static_cast<std::size_t>(n));
            for (int k = 0; k < n; ++k) s[static_cast<std::size_t>(k)] = (bits >> k) & 1U;
            if (circle_count(d, s) != std::popcount(bits)) {
                return {"torus circle counts", false, "n=" + std::to_string(n)};
            }
        }
    }
    return {"torus circle counts", true, "n <= 8"};
}

CheckResult frobenius() {
    for (std::uint32_t dim = 1; dim <= 8; ++dim)
        if (!frobenius_check(AlgebraSpec(dim))) return {"frobenius axioms", false, "dim " + std::to_string(dim)};
    return {"frobenius axioms", true, "dims 1..8"};
}

CheckResult torus_vandermonde(unsigned threads) {
    const char* cases[] = {"1,2", "2,1", "1,2,3", "3,1,2", "2,2,2"};
    EulerOptions o;
    o.homology.threads = threads;
    for (const char* text : cases) {
        const ColorVector x = ColorVector::parse(text);
        const auto r = verify_euler(torus_two_n(x.size()), x, o);
        if (!r.agree.value_or(false) || r.euler_characteristic != vandermonde_product(x)) {
            return {"torus vandermonde", false, std::string("x=") + text};
        }
    }
    return {"torus vandermonde", true, "n <= 3, with homology"};
}

CheckResult matrix_complexes(unsigned threads) {
    std::mt19937 rng(7);
    HomologyOptions h;
    h.threads = threads;
    for (int trial = 0; trial < 10; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 3);
        std::vector<std::vector<BigInt>> rows(static_cast<std::size_t>(n));
        for (auto& row : rows)
            for (int j = 0; j < n; ++j) row.emplace_back(1 + rng() % 4);
        const PosIntMatrix m(rows);
        const auto r = homology(build_matrix_complex(m), h);
        if (r.euler_characteristic != det_exact(m) || r.homology_euler_characteristic != r.euler_characteristic) {
            return {"matrix complexes", false, "trial " + std::to_string(trial)};
        }
    }
    return {"matrix complexes", true, "10 random matrices, n <= 3"};
}

CheckResult functoriality() {
    const LinkDiagram d = torus_two_n(2);
    const ColorVector x = ColorVector::parse("2,2");
    const CochainComplex c = build_complex(d, x);
    const ZndiagMorphism a{x, x, {{1, 2}}, {1}}, b{x, x, {{1, 1}}, {}};
    const ChainMap fa = chain_map(c, c, a), fb = chain_map(c, c, b);
    const ChainMap id = chain_map(c, c, ZndiagMorphism::identity(x));
    for (std::size_t k = 0; k < id.levels.size(); ++k)
        if (!(id.levels[k] == SparseGF2::identity(c.level_dims()[k]))) return {"functoriality", false, "identity"};
    if (!chain_map_commutes(c, c, fa) || !chain_map_commutes(c, c, fb)) return {"functoriality", false, "chain-map law"};
    if (!(chain_map(c, c, compose(a, b)) == then(fa, fb))) return {"functoriality", false, "composition"};
    return {"functoriality", true, "torus n = 2"};
}

}  // namespace

std::vector<CheckResult> run_property_checks(unsigned threads) {
    std::vector<CheckResult> out;
    const auto guarded = [&](const char* name, auto&& fn) {
        try {
            out.push_back(fn());
        } catch (const std::exception& e) {
            out.push_back({name, false, e.what()});
        }
    };
    guarded("bruhat thin", bruhat_thin);
    guarded("torus circle counts", torus_circles);
    guarded("frobenius axioms", frobenius);
    guarded("torus vandermonde", [&] { return torus_vandermonde(threads); });
    guarded("matrix complexes", [&] { return matrix_complexes(threads); });
    guarded("functoriality", functoriality);
    return out;
}

}  // namespace vdcat
