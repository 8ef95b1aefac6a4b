#include "vdcat/linkdiag.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "json.hpp"

#include "vdcat/errors.hpp"

namespace vdcat {

namespace {

std::array<ArcPair, 2> canonical(const std::array<ArcPair, 2>& pairs) {
    std::array<ArcPair, 2> c = pairs;
    for (auto& p : c)
        if (p.first > p.second) std::swap(p.first, p.second);
    if (c[1] < c[0]) std::swap(c[0], c[1]);
    return c;
}

std::vector<ArcEnd> ends_of(const std::array<ArcPair, 2>& pairs) {
    std::vector<ArcEnd> e{pairs[0].first, pairs[0].second, pairs[1].first, pairs[1].second};
    std::sort(e.begin(), e.end());
    return e;
}

class DisjointSets {
public:
    explicit DisjointSets(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }

    std::size_t find(std::size_t a) {
        while (parent_[a] != a) {
            parent_[a] = parent_[parent_[a]];
            a = parent_[a];
        }
        return a;
    }

    bool unite(std::size_t a, std::size_t b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        if (b < a) std::swap(a, b);
        parent_[b] = a;
        return true;
    }

private:
    std::vector<std::size_t> parent_;
};

std::size_t dense_index(const std::vector<ArcEnd>& ends, ArcEnd e) {
    return static_cast<std::size_t>(std::lower_bound(ends.begin(), ends.end(), e) - ends.begin());
}

void check_smoothing(const LinkDiagram& d, const Smoothing& smoothing) {
    if (static_cast<int>(smoothing.size()) != d.crossing_count()) {
        throw PreconditionError("smoothing has length " + std::to_string(smoothing.size()) + " but the diagram has " +
                                std::to_string(d.crossing_count()) + " crossings");
    }
}

DisjointSets resolve(const LinkDiagram& d, const Smoothing& smoothing) {
    const auto& ends = d.arc_ends();
    DisjointSets sets(ends.size());
    for (std::size_t c = 0; c < smoothing.size(); ++c) {
        const auto& crossing = d.crossings()[c];
        const auto& pairs = smoothing[c] ? crossing.one : crossing.zero;
        for (const auto& [a, b] : pairs) sets.unite(dense_index(ends, a), dense_index(ends, b));
    }
    return sets;
}

}  // namespace

LinkDiagram::LinkDiagram(std::vector<Crossing> crossings, int free_loops)
    : crossings_(std::move(crossings)), free_loops_(free_loops) {
    if (free_loops_ < 0) throw FormatError("free_loops must be nonnegative");
    std::map<ArcEnd, int> zero_uses;
    for (std::size_t i = 0; i < crossings_.size(); ++i) {
        const auto& c = crossings_[i];
        if (ends_of(c.zero) != ends_of(c.one)) {
            throw FormatError("crossing " + std::to_string(i + 1) + ": 0- and 1-smoothing use different arc ends");
        }
        if (canonical(c.zero) == canonical(c.one)) {
            throw FormatError("crossing " + std::to_string(i + 1) + ": 0- and 1-smoothing pair the arc ends identically");
        }
        for (ArcEnd e : ends_of(c.zero)) ++zero_uses[e];
    }
    for (const auto& [e, uses] : zero_uses) {
        if (uses != 2) {
            throw ValidationError("arc end " + std::to_string(e) + " appears " + std::to_string(uses) +
                                  " times; a closed diagram uses each arc end exactly twice");
        }
        arc_ends_.push_back(e);
    }
    // 1-pairings use the same multiset per crossing, so their counts agree.
}

LinkDiagram LinkDiagram::reordered(const std::vector<int>& order_one_based) const {
    if (static_cast<int>(order_one_based.size()) != crossing_count()) {
        throw PreconditionError("reordering length does not match crossing count");
    }
    std::vector<Crossing> out;
    out.reserve(crossings_.size());
    std::vector<bool> used(crossings_.size(), false);
    for (int k : order_one_based) {
        if (k < 1 || k > crossing_count() || used[static_cast<std::size_t>(k - 1)]) {
            throw PreconditionError("reordering must be a permutation of the crossings");
        }
        used[static_cast<std::size_t>(k - 1)] = true;
        out.push_back(crossings_[static_cast<std::size_t>(k - 1)]);
    }
    return LinkDiagram(std::move(out), free_loops_);
}

LinkDiagram parse_diagram(std::string_view text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw FormatError(std::string("diagram is not valid JSON: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("crossings") || !doc["crossings"].is_array()) {
        throw FormatError("diagram needs a \"crossings\" list");
    }
    auto read_pairs = [](const nlohmann::json& j, const char* what) {
        if (!j.is_array() || j.size() != 2) throw FormatError(std::string("\"") + what + "\" must hold two pairs");
        std::array<ArcPair, 2> pairs;
        for (std::size_t k = 0; k < 2; ++k) {
            const auto& p = j[k];
            if (!p.is_array() || p.size() != 2 || !p[0].is_number_integer() || !p[1].is_number_integer()) {
                throw FormatError(std::string("\"") + what + "\" pairs must be two integers");
            }
            pairs[k] = {p[0].get<ArcEnd>(), p[1].get<ArcEnd>()};
        }
        return pairs;
    };
    std::vector<Crossing> crossings;
    for (const auto& c : doc["crossings"]) {
        if (!c.is_object() || !c.contains("zero") || !c.contains("one")) {
            throw FormatError("each crossing needs \"zero\" and \"one\" pairings");
        }
        crossings.push_back({read_pairs(c["zero"], "zero"), read_pairs(c["one"], "one")});
    }
    int free_loops = 0;
    if (doc.contains("free_loops")) {
        if (!doc["free_loops"].is_number_integer()) throw FormatError("\"free_loops\" must be an integer");
        free_loops = doc["free_loops"].get<int>();
    }
    return LinkDiagram(std::move(crossings), free_loops);
}

std::string serialize_diagram(const LinkDiagram& d) {
    auto pairs_json = [](const std::array<ArcPair, 2>& p) {
        return nlohmann::json::array({{p[0].first, p[0].second}, {p[1].first, p[1].second}});
    };
    nlohmann::ordered_json doc;
    doc["crossings"] = nlohmann::ordered_json::array();
    for (const auto& c : d.crossings()) {
        nlohmann::ordered_json cj;
        cj["zero"] = pairs_json(c.zero);
        cj["one"] = pairs_json(c.one);
        doc["crossings"].push_back(cj);
    }
    if (d.free_loops() != 0) doc["free_loops"] = d.free_loops();
    return doc.dump(2);
}

LinkDiagram torus_two_n(int n) {
    if (n < 1) throw PreconditionError("torus_two_n needs at least one crossing");
    std::vector<Crossing> crossings;
    for (int k = 1; k <= n; ++k) {
        const int below = k == 1 ? n : k - 1;
        const ArcEnd bl = 2 * below - 1, br = 2 * below;
        const ArcEnd tl = 2 * k - 1, tr = 2 * k;
        // 0: strands pass straight through; 1: turn back (cap and cup).
        crossings.push_back({{ArcPair{bl, tl}, ArcPair{br, tr}}, {ArcPair{bl, br}, ArcPair{tl, tr}}});
    }
    return LinkDiagram(std::move(crossings));
}

LinkDiagram disjoint_union(const LinkDiagram& a, const LinkDiagram& b) {
    const ArcEnd shift_from = a.arc_ends().empty() ? 0 : a.arc_ends().back();
    const ArcEnd shift = b.arc_ends().empty() ? 0 : shift_from - b.arc_ends().front() + 1;
    std::vector<Crossing> crossings = a.crossings();
    for (Crossing c : b.crossings()) {
        for (auto* pairs : {&c.zero, &c.one})
            for (auto& [x, y] : *pairs) {
                x += shift;
                y += shift;
            }
        crossings.push_back(c);
    }
    return LinkDiagram(std::move(crossings), a.free_loops() + b.free_loops());
}

int circle_count(const LinkDiagram& d, const Smoothing& smoothing) {
    check_smoothing(d, smoothing);
    auto sets = resolve(d, smoothing);
    int roots = 0;
    for (std::size_t i = 0; i < d.arc_ends().size(); ++i)
        if (sets.find(i) == i) ++roots;
    return roots + d.free_loops();
}

std::vector<std::vector<ArcEnd>> circles(const LinkDiagram& d, const Smoothing& smoothing) {
    check_smoothing(d, smoothing);
    auto sets = resolve(d, smoothing);
    const auto& ends = d.arc_ends();
    std::map<std::size_t, std::vector<ArcEnd>> by_root;
    for (std::size_t i = 0; i < ends.size(); ++i) by_root[sets.find(i)].push_back(ends[i]);
    // Roots are the smallest member (unite keeps the lower index), so map
    // order is already order by smallest arc end.
    std::vector<std::vector<ArcEnd>> out;
    out.reserve(by_root.size());
    for (auto& [root, members] : by_root) out.push_back(std::move(members));
    return out;
}

SmoothingProfile s_vector(const LinkDiagram& d) {
    const int n = d.crossing_count();
    if (n < 1) throw PreconditionError("s_vector needs at least one crossing");
    SmoothingProfile profile;
    Smoothing smoothing(static_cast<std::size_t>(n), 0);
    for (int k = 1; k <= n; ++k) {
        smoothing[static_cast<std::size_t>(k - 1)] = 1;
        profile.s.push_back(circle_count(d, smoothing));
    }
    return profile;
}

HeightUniformity is_height_uniform(const LinkDiagram& d, int cap) {
    const int n = d.crossing_count();
    if (n > cap) {
        throw SizeError("height check over " + std::to_string(n) + " crossings exceeds the cap of " +
                        std::to_string(cap));
    }
    std::vector<std::optional<std::pair<Smoothing, int>>> first(static_cast<std::size_t>(n + 1));
    HeightUniformity result;
    const std::uint64_t total = std::uint64_t{1} << n;
    for (std::uint64_t bits = 0; bits < total; ++bits) {
        Smoothing s(static_cast<std::size_t>(n));
        int height = 0;
        for (int k = 0; k < n; ++k) {
            s[static_cast<std::size_t>(k)] = static_cast<std::uint8_t>((bits >> k) & 1U);
            height += s[static_cast<std::size_t>(k)];
        }
        const int count = circle_count(d, s);
        auto& slot = first[static_cast<std::size_t>(height)];
        if (!slot) {
            slot.emplace(s, count);
        } else if (slot->second != count) {
            result.uniform = false;
            result.witness.emplace(slot->first, std::move(s));
            return result;
        }
    }
    return result;
}

}  // namespace vdcat
