#include "vdcat/bruhat.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>

#include "vdcat/errors.hpp"

namespace vdcat {

Permutation::Permutation(std::vector<int> entries) : entries_(std::move(entries)) {
    const int n = static_cast<int>(entries_.size());
    std::vector<bool> seen(entries_.size() + 1, false);
    for (int v : entries_) {
        if (v < 1 || v > n) {
            throw ValidationError("permutation entry " + std::to_string(v) + " outside 1.." +
                                  std::to_string(n));
        }
        if (seen[static_cast<std::size_t>(v)]) {
            throw ValidationError("permutation entry " + std::to_string(v) + " repeated");
        }
        seen[static_cast<std::size_t>(v)] = true;
    }
}

Permutation Permutation::identity(int n) {
    if (n < 0) throw ValidationError("negative permutation size");
    std::vector<int> e(static_cast<std::size_t>(n));
    std::iota(e.begin(), e.end(), 1);
    return Permutation(std::move(e));
}

Permutation Permutation::parse(std::string_view text) {
    std::vector<int> e;
    if (text.find(',') == std::string_view::npos) {
        for (char c : text) {
            if (c < '0' || c > '9') throw ValidationError("bad permutation text: " + std::string(text));
            e.push_back(c - '0');
        }
    } else {
        std::size_t pos = 0;
        while (pos <= text.size()) {
            auto next = text.find(',', pos);
            if (next == std::string_view::npos) next = text.size();
            int v = 0;
            auto field = text.substr(pos, next - pos);
            auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), v);
            if (ec != std::errc{} || ptr != field.data() + field.size()) {
                throw ValidationError("bad permutation text: " + std::string(text));
            }
            e.push_back(v);
            pos = next + 1;
        }
    }
    return Permutation(std::move(e));
}

Permutation Permutation::swapped(int i, int j) const {
    Permutation out = *this;
    std::swap(out.entries_[static_cast<std::size_t>(i - 1)], out.entries_[static_cast<std::size_t>(j - 1)]);
    return out;
}

std::string Permutation::to_string() const {
    std::string s;
    const bool digits = size() <= 9;
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        if (!digits && i > 0) s += ',';
        s += std::to_string(entries_[i]);
    }
    return s;
}

int inversions(const Permutation& p) {
    auto e = p.entries();
    int count = 0;
    for (std::size_t i = 0; i < e.size(); ++i)
        for (std::size_t j = i + 1; j < e.size(); ++j)
            if (e[i] > e[j]) ++count;
    return count;
}

int sign(const Permutation& p) { return inversions(p) % 2 == 0 ? 1 : -1; }

std::size_t lex_rank(const Permutation& p) {
    // Lehmer code read as a factorial-base number.
    auto e = p.entries();
    const std::size_t n = e.size();
    std::size_t rank = 0;
    for (std::size_t i = 0; i < n; ++i) {
        std::size_t smaller_after = 0;
        for (std::size_t j = i + 1; j < n; ++j)
            if (e[j] < e[i]) ++smaller_after;
        rank = rank * (n - i) + smaller_after;
    }
    return rank;
}

std::vector<Permutation> covers(const Permutation& p) {
    auto e = p.entries();
    const int n = p.size();
    std::vector<Permutation> out;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            const int lo = e[static_cast<std::size_t>(i)];
            const int hi = e[static_cast<std::size_t>(j)];
            if (lo > hi) continue;
            bool empty = true;
            for (int k = i + 1; k < j && empty; ++k) {
                const int v = e[static_cast<std::size_t>(k)];
                if (v > lo && v < hi) empty = false;
            }
            if (empty) out.push_back(p.swapped(i + 1, j + 1));
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::size_t BruhatPoset::id_of(const Permutation& p) const {
    if (p.size() != n_) throw PreconditionError("permutation size does not match poset");
    return lex_rank(p);
}

std::vector<std::size_t> BruhatPoset::level_sizes() const {
    std::vector<std::size_t> sizes;
    sizes.reserve(levels_.size());
    for (const auto& l : levels_) sizes.push_back(l.size());
    return sizes;
}

BruhatPoset build_bruhat(int n, int cap) {
    if (n < 1) throw ValidationError("Bruhat order needs n >= 1");
    if (n > cap) {
        throw SizeError("n = " + std::to_string(n) + " exceeds the Bruhat cap of " + std::to_string(cap));
    }
    BruhatPoset poset;
    poset.n_ = n;

    std::vector<int> e(static_cast<std::size_t>(n));
    std::iota(e.begin(), e.end(), 1);
    do {
        poset.elements_.emplace_back(e);
    } while (std::next_permutation(e.begin(), e.end()));

    const std::size_t count = poset.elements_.size();
    poset.rank_.resize(count);
    poset.levels_.resize(static_cast<std::size_t>(poset.max_rank() + 1));
    poset.index_in_level_.resize(count);
    poset.up_.resize(count);
    poset.down_.resize(count);

    for (std::size_t id = 0; id < count; ++id) {
        const int r = inversions(poset.elements_[id]);
        poset.rank_[id] = r;
        auto& lvl = poset.levels_[static_cast<std::size_t>(r)];
        poset.index_in_level_[id] = lvl.size();
        lvl.push_back(id);
    }
    for (std::size_t id = 0; id < count; ++id) {
        for (const auto& s : covers(poset.elements_[id])) {
            const std::size_t top = lex_rank(s);
            poset.up_[id].push_back(top);
            poset.down_[top].push_back(id);
            poset.edges_.push_back({id, top});
        }
    }
    for (auto& d : poset.down_) std::sort(d.begin(), d.end());
    return poset;
}

std::vector<Permutation> length2_middles(const BruhatPoset& poset, const Permutation& bottom,
                                         const Permutation& top) {
    const std::size_t b = poset.id_of(bottom);
    const std::size_t t = poset.id_of(top);
    if (poset.rank_of(t) != poset.rank_of(b) + 2) {
        throw PreconditionError(bottom.to_string() + " .. " + top.to_string() +
                                " is not an interval of length 2");
    }
    std::vector<Permutation> middles;
    for (std::size_t m : poset.up(b)) {
        const auto ups = poset.up(m);
        if (std::find(ups.begin(), ups.end(), t) != ups.end()) middles.push_back(poset.element(m));
    }
    if (middles.empty()) {
        throw PreconditionError(bottom.to_string() + " and " + top.to_string() + " are not comparable");
    }
    return middles;
}

std::vector<std::uint64_t> mahonian_numbers(int n) {
    std::vector<std::uint64_t> poly{1};
    for (int k = 1; k <= n; ++k) {
        std::vector<std::uint64_t> next(poly.size() + static_cast<std::size_t>(k - 1), 0);
        for (std::size_t i = 0; i < poly.size(); ++i)
            for (int d = 0; d < k; ++d) next[i + static_cast<std::size_t>(d)] += poly[i];
        poly = std::move(next);
    }
    return poly;
}

}  // namespace vdcat
