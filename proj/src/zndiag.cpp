#include "vdcat/zndiag.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "json.hpp"
#include "vdcat/errors.hpp"
#include "vdcat/tqft.hpp"

namespace vdcat {

ZndiagMorphism ZndiagMorphism::identity(const ColorVector& x) {
    ZndiagMorphism m{x, x, {}, {}};
    for (int i = 1; i <= x.size(); ++i) m.arcs.emplace_back(i, i);
    return m;
}

ZndiagMorphism validate_morphism(const ZndiagMorphism& m) {
    const int n = m.source.size();
    if (m.target.size() != n) throw ValidationError("source and target color vectors must have the same length");
    std::set<int> left, right;
    for (auto [i, j] : m.arcs) {
        if (i < 1 || i > n || j < 1 || j > n) {
            throw ValidationError("arc (" + std::to_string(i) + "," + std::to_string(j) + ") is out of range");
        }
        if (i > j) throw ConstraintError("arc (" + std::to_string(i) + "," + std::to_string(j) + ") has i > j");
        if (m.source.at(i) != m.target.at(j)) {
            throw ConstraintError("arc (" + std::to_string(i) + "," + std::to_string(j) + ") joins colors " +
                                  std::to_string(m.source.at(i)) + " and " + std::to_string(m.target.at(j)));
        }
        if (!left.insert(i).second) throw MatchingError("source point " + std::to_string(i) + " is used twice");
        if (!right.insert(j).second) throw MatchingError("target point " + std::to_string(j) + " is used twice");
    }
    for (auto c : m.dots)
        if (c < 1) throw ValidationError("dot colors must be positive");
    ZndiagMorphism out = m;
    std::sort(out.arcs.begin(), out.arcs.end());
    std::sort(out.dots.begin(), out.dots.end());
    return out;
}

ZndiagMorphism compose(const ZndiagMorphism& a, const ZndiagMorphism& b) {
    if (!(a.target == b.source)) throw CompositionError("first target " + a.target.to_string() +
                                                        " differs from second source " + b.source.to_string());
    const ZndiagMorphism va = validate_morphism(a), vb = validate_morphism(b);
    const int n = a.target.size();
    std::vector<int> from_left(static_cast<std::size_t>(n + 1), 0), to_right(static_cast<std::size_t>(n + 1), 0);
    for (auto [i, j] : va.arcs) from_left[static_cast<std::size_t>(j)] = i;
    for (auto [j, k] : vb.arcs) to_right[static_cast<std::size_t>(j)] = k;
    ZndiagMorphism out{a.source, b.target, {}, va.dots};
    out.dots.insert(out.dots.end(), vb.dots.begin(), vb.dots.end());
    for (int j = 1; j <= n; ++j) {
        const int i = from_left[static_cast<std::size_t>(j)], k = to_right[static_cast<std::size_t>(j)];
        if (i && k) out.arcs.emplace_back(i, k);
        if (!i && !k) out.dots.push_back(a.target.at(j));
    }
    return validate_morphism(out);
}

ChainMap then(const ChainMap& first, const ChainMap& second) {
    if (first.levels.size() != second.levels.size()) throw PreconditionError("chain maps have different lengths");
    ChainMap out;
    for (std::size_t k = 0; k < first.levels.size(); ++k) out.levels.push_back(second.levels[k] * first.levels[k]);
    return out;
}

ChainMap chain_map(const CochainComplex& cx, const CochainComplex& cy, const ZndiagMorphism& morphism) {
    const ZndiagMorphism m = validate_morphism(morphism);
    const int n = m.source.size();
    if (cx.n() != n || cy.n() != n) throw PreconditionError("morphism length does not match the complexes");
    if ((cx.colors() && !(*cx.colors() == m.source)) || (cy.colors() && !(*cy.colors() == m.target))) {
        throw PreconditionError("complexes are not colored by the morphism's source and target");
    }
    const bool scalar = std::all_of(m.dots.begin(), m.dots.end(), [](std::uint32_t c) { return c % 2 == 1; });
    std::vector<int> partner(static_cast<std::size_t>(n + 1), 0);
    std::vector<bool> target_used(static_cast<std::size_t>(n + 1), false);
    for (auto [i, j] : m.arcs) {
        partner[static_cast<std::size_t>(i)] = j;
        target_used[static_cast<std::size_t>(j)] = true;
    }

    const auto& poset = cx.poset();
    ChainMap f;
    for (int k = 0; k <= poset.max_rank(); ++k) {
        const auto rows = cy.level_dims()[static_cast<std::size_t>(k)];
        const auto cols = cx.level_dims()[static_cast<std::size_t>(k)];
        std::vector<Triplet> entries;
        for (std::size_t e : poset.level(k)) {
            if (!scalar) break;
            const auto fx = cx.factors(e), fy = cy.factors(e);
            std::vector<LocalMap> maps;
            for (int i = 1; i <= n; ++i) {
                const Factor& in = fx[static_cast<std::size_t>(i - 1)];
                LocalMap lm;
                lm.in_stride = cx.stride(e, i);
                if (const int j = partner[static_cast<std::size_t>(i)]; j == i) {
                    lm.out_stride = cy.stride(e, j);
                    for (std::uint64_t t = 0; t < in.size; ++t) lm.entries.emplace_back(t, t);
                } else if (j) {
                    const Factor& out = fy[static_cast<std::size_t>(j - 1)];
                    lm.out_stride = cy.stride(e, j);
                    for (std::uint32_t a = 0; a < in.radix; ++a) {
                        lm.entries.emplace_back(constant_tensor_index(in.radix, in.copies, a),
                                                constant_tensor_index(out.radix, out.copies, a));
                    }
                } else {
                    for (std::uint32_t a = 0; a < in.radix; ++a)
                        lm.entries.emplace_back(constant_tensor_index(in.radix, in.copies, a), 0);
                }
                maps.push_back(std::move(lm));
            }
            for (int j = 1; j <= n; ++j) {
                if (target_used[static_cast<std::size_t>(j)]) continue;
                const Factor& out = fy[static_cast<std::size_t>(j - 1)];
                LocalMap lm;
                lm.out_stride = cy.stride(e, j);
                for (std::uint32_t a = 0; a < out.radix; ++a)
                    lm.entries.emplace_back(0, constant_tensor_index(out.radix, out.copies, a));
                maps.push_back(std::move(lm));
            }
            const auto row0 = cy.block_offset(e), col0 = cx.block_offset(e);
            for_each_tensor_entry(std::span<const LocalMap>(maps), [&](std::uint64_t out, std::uint64_t in) {
                entries.push_back({static_cast<std::uint32_t>(row0 + out), static_cast<std::uint32_t>(col0 + in)});
            });
        }
        f.levels.push_back(SparseGF2::from_triplets(rows, cols, std::move(entries)));
    }
    return f;
}

ChainMap chain_map(const LinkDiagram& d, const ZndiagMorphism& m, std::uint64_t budget) {
    const ZndiagMorphism v = validate_morphism(m);
    return chain_map(build_complex(d, v.source, budget), build_complex(d, v.target, budget), v);
}

bool chain_map_commutes(const CochainComplex& cx, const CochainComplex& cy, const ChainMap& f) {
    if (f.levels.size() != cx.level_dims().size()) return false;
    for (int k = 0; k < cx.top_level(); ++k) {
        const auto ku = static_cast<std::size_t>(k);
        if (!(cy.differential(k) * f.levels[ku] == f.levels[ku + 1] * cx.differential(k))) return false;
    }
    return true;
}

CohomologyBasis::CohomologyBasis(const CochainComplex& c) {
    for (int k = 0; k <= c.top_level(); ++k) {
        const auto cycles = nullspace_basis(c.differential(k).to_dense());
        std::vector<BitVector> boundaries;
        if (k > 0) {
            const GF2Matrix images = c.differential(k - 1).transpose().to_dense();
            for (std::size_t r = 0; r < images.rows(); ++r) {
                BitVector v = images.row_vector(r);
                if (v.any()) boundaries.push_back(std::move(v));
            }
        }
        quotients_.emplace_back(cycles, boundaries);
    }
}

std::vector<std::size_t> CohomologyBasis::dims() const {
    std::vector<std::size_t> out;
    for (const auto& q : quotients_) out.push_back(q.dim());
    return out;
}

std::vector<GF2Matrix> induced_cohomology_map(const ChainMap& f, const CohomologyBasis& source,
                                              const CohomologyBasis& target) {
    if (f.levels.size() != source.levels() || f.levels.size() != target.levels()) {
        throw PreconditionError("chain map and cohomology bases have different lengths");
    }
    std::vector<GF2Matrix> out;
    for (std::size_t k = 0; k < f.levels.size(); ++k) {
        const QuotientBasis& src = source.level(static_cast<int>(k));
        const QuotientBasis& tgt = target.level(static_cast<int>(k));
        GF2Matrix m(tgt.dim(), src.dim());
        for (std::size_t c = 0; c < src.dim(); ++c) {
            const BitVector image = f.levels[k].apply(src.representatives()[c]);
            if (tgt.ambient_dim() != image.size()) {
                // No cycles at all on the target side.
                if (image.any()) throw ConsistencyError("chain map sends a cycle outside the target cycle space");
                continue;
            }
            BitVector coords;
            try {
                coords = tgt.coordinates(image);
            } catch (const MembershipError&) {
                throw ConsistencyError("chain map sends a cycle outside the target cycle space at level " +
                                       std::to_string(k));
            }
            for (std::size_t r = coords.next_set(0); r < coords.size(); r = coords.next_set(r + 1)) m.set(r, c);
        }
        out.push_back(std::move(m));
    }
    return out;
}

std::vector<GF2Matrix> induced_cohomology_map(const LinkDiagram& d, const ZndiagMorphism& m, std::uint64_t budget) {
    const ZndiagMorphism v = validate_morphism(m);
    const CochainComplex cx = build_complex(d, v.source, budget);
    const CochainComplex cy = build_complex(d, v.target, budget);
    const ChainMap f = chain_map(cx, cy, v);
    if (!chain_map_commutes(cx, cy, f)) throw ConsistencyError("chain map does not commute with the differentials");
    return induced_cohomology_map(f, CohomologyBasis(cx), CohomologyBasis(cy));
}

namespace {

std::vector<std::uint32_t> read_colors(const nlohmann::json& j, const char* field) {
    if (!j.contains(field) || !j[field].is_array()) {
        throw FormatError(std::string("morphism file needs an integer list \"") + field + "\"");
    }
    std::vector<std::uint32_t> out;
    for (const auto& v : j[field]) {
        if (!v.is_number_integer() || v.get<std::int64_t>() < 1 || v.get<std::int64_t>() > 0xFFFFFFFFLL) {
            throw FormatError(std::string("\"") + field + "\" entries must be positive integers");
        }
        out.push_back(v.get<std::uint32_t>());
    }
    return out;
}

}  // namespace

ZndiagMorphism parse_morphism(std::string_view json_text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(json_text);
    } catch (const nlohmann::json::parse_error& e) {
        throw FormatError(std::string("morphism file is not valid JSON: ") + e.what());
    }
    if (!j.is_object()) throw FormatError("morphism file must hold an object");
    ZndiagMorphism m{ColorVector(read_colors(j, "source")), ColorVector(read_colors(j, "target")), {}, {}};
    if (j.contains("arcs")) {
        if (!j["arcs"].is_array()) throw FormatError("\"arcs\" must be a list of [i, j] pairs");
        for (const auto& arc : j["arcs"]) {
            if (!arc.is_array() || arc.size() != 2 || !arc[0].is_number_integer() || !arc[1].is_number_integer()) {
                throw FormatError("\"arcs\" must be a list of [i, j] pairs");
            }
            m.arcs.emplace_back(arc[0].get<int>(), arc[1].get<int>());
        }
    }
    if (j.contains("dots")) m.dots = read_colors(j, "dots");
    return validate_morphism(m);
}

std::string serialize_morphism(const ZndiagMorphism& m) {
    nlohmann::ordered_json j;
    j["source"] = m.source.values();
    j["target"] = m.target.values();
    j["arcs"] = nlohmann::ordered_json::array();
    for (auto [i, k] : m.arcs) j["arcs"].push_back({i, k});
    j["dots"] = m.dots;
    return j.dump(2);
}

}  // namespace vdcat
