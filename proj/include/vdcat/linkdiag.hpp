#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace vdcat {

using ArcEnd = int;
using ArcPair = std::pair<ArcEnd, ArcEnd>;

/// One crossing, given by the arc-end pairings of its 0- and 1-smoothings.
struct Crossing {
    std::array<ArcPair, 2> zero;
    std::array<ArcPair, 2> one;

    friend bool operator==(const Crossing&, const Crossing&) = default;
};

/// A closed link diagram with an ordered list of crossings c_1..c_n.
class LinkDiagram {
public:
    LinkDiagram() = default;

    /// Validates the crossing records and closedness. Throws FormatError for
    /// a bad crossing and ValidationError for an arc end not used exactly twice.
    LinkDiagram(std::vector<Crossing> crossings, int free_loops = 0);

    int crossing_count() const { return static_cast<int>(crossings_.size()); }
    int free_loops() const { return free_loops_; }
    const std::vector<Crossing>& crossings() const { return crossings_; }

    /// Distinct arc-end identifiers, ascending.
    const std::vector<ArcEnd>& arc_ends() const { return arc_ends_; }

    /// Crossing i of the result is crossing order.at(i) of this diagram.
    LinkDiagram reordered(const std::vector<int>& order_one_based) const;

    friend bool operator==(const LinkDiagram& a, const LinkDiagram& b) {
        return a.crossings_ == b.crossings_ && a.free_loops_ == b.free_loops_;
    }

private:
    std::vector<Crossing> crossings_;
    int free_loops_ = 0;
    std::vector<ArcEnd> arc_ends_;
};

using Smoothing = std::vector<std::uint8_t>;

/// Circle counts s_1..s_n; s_k counts circles with c_1..c_k 1-smoothed.
struct SmoothingProfile {
    std::vector<int> s;

    int size() const { return static_cast<int>(s.size()); }
    int at(int k) const { return s[static_cast<std::size_t>(k - 1)]; }
    friend bool operator==(const SmoothingProfile&, const SmoothingProfile&) = default;
};

LinkDiagram parse_diagram(std::string_view text);
std::string serialize_diagram(const LinkDiagram& d);

/// Closure of sigma_1^n in the 2-strand braid group, crossings bottom to top.
/// Arc 2k-1 / 2k are the left / right strands just above crossing k.
LinkDiagram torus_two_n(int n);

/// Crossings of `a` first, then those of `b` with arc ends shifted apart.
LinkDiagram disjoint_union(const LinkDiagram& a, const LinkDiagram& b);

/// Circles of the resolved diagram plus free loops.
int circle_count(const LinkDiagram& d, const Smoothing& smoothing);

/// The circles of a smoothing, each listed by its arc ends ascending, and the
/// circles ordered by smallest arc end. Free loops are not listed.
std::vector<std::vector<ArcEnd>> circles(const LinkDiagram& d, const Smoothing& smoothing);

SmoothingProfile s_vector(const LinkDiagram& d);

inline constexpr int kDefaultHeightCap = 20;

struct HeightUniformity {
    bool uniform = true;
    /// Two smoothings of equal height with different circle counts.
    std::optional<std::pair<Smoothing, Smoothing>> witness;
};

HeightUniformity is_height_uniform(const LinkDiagram& d, int cap = kDefaultHeightCap);

}  // namespace vdcat
