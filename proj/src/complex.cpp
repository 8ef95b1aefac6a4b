#include "vdcat/complex.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <limits>
#include <map>
#include <mutex>
#include <string>
#include <thread>

#include "vdcat/errors.hpp"
#include "vdcat/gendet.hpp"

namespace vdcat {

namespace {

std::uint64_t repunit(std::uint32_t radix, int count) {
    std::uint64_t r = 0;
    for (int i = 0; i < count; ++i) r = r * radix + 1;
    return r;
}

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
    if (a != 0 && b > std::numeric_limits<std::uint64_t>::max() / a) {
        throw SizeError("block dimension overflows 64 bits");
    }
    return a * b;
}

/// Runs fn(i) for i in [0, count) on up to `threads` workers.
template <class Fn>
void parallel_for(std::size_t count, unsigned threads, Fn&& fn) {
    if (threads <= 1 || count <= 1) {
        for (std::size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::jthread> workers;
    const unsigned n = static_cast<unsigned>(std::min<std::size_t>(threads, count));
    for (unsigned t = 0; t < n; ++t) {
        workers.emplace_back([&] {
            for (std::size_t i = next++; i < count; i = next++) fn(i);
        });
    }
}

std::vector<std::uint64_t> to_u64(std::span<const BigInt> dims) {
    std::vector<std::uint64_t> out;
    for (const auto& d : dims) out.push_back(d.convert_to<std::uint64_t>());
    return out;
}

}  // namespace

std::shared_ptr<const BruhatPoset> shared_bruhat(int n, int cap) {
    static std::mutex mu;
    static std::map<int, std::shared_ptr<const BruhatPoset>> cache;
    if (n > cap) return std::make_shared<const BruhatPoset>(build_bruhat(n, cap));  // throws SizeError
    std::lock_guard lock(mu);
    auto& slot = cache[n];
    if (!slot) slot = std::make_shared<const BruhatPoset>(build_bruhat(n, std::max(cap, n)));
    return slot;
}

CochainComplex::CochainComplex(std::shared_ptr<const BruhatPoset> poset, std::vector<std::vector<Factor>> factors,
                               EdgeRule rule)
    : poset_(std::move(poset)), factors_(std::move(factors)), rule_(rule) {
    const std::size_t count = poset_->size();
    if (factors_.size() != count) throw PreconditionError("need one factor list per permutation");
    strides_.resize(count);
    block_size_.resize(count);
    offset_.resize(count);
    for (std::size_t e = 0; e < count; ++e) {
        auto& f = factors_[e];
        if (static_cast<int>(f.size()) != poset_->n()) throw PreconditionError("need one factor per position");
        std::uint64_t size = 1;
        strides_[e].assign(f.size(), 0);
        for (std::size_t p = f.size(); p-- > 0;) {
            if (f[p].radix < 1) throw ValidationError("factor radix must be positive");
            if (rule_ == EdgeRule::merge_split && f[p].copies < 1) {
                throw ValidationError("merge-split complexes need at least one circle per position");
            }
            std::uint64_t fs = 1;
            for (int c = 0; c < f[p].copies; ++c) fs = checked_mul(fs, f[p].radix);
            f[p].size = fs;
            strides_[e][p] = size;
            size = checked_mul(size, fs);
        }
        block_size_[e] = size;
    }
    level_dims_.assign(static_cast<std::size_t>(poset_->max_rank() + 1), 0);
    for (int k = 0; k <= poset_->max_rank(); ++k) {
        std::uint64_t off = 0;
        for (std::size_t e : poset_->level(k)) {
            offset_[e] = off;
            off += block_size_[e];
            if (off < block_size_[e]) throw SizeError("level dimension overflows 64 bits");
        }
        level_dims_[static_cast<std::size_t>(k)] = off;
    }
}

std::uint64_t CochainComplex::total_dim() const {
    std::uint64_t t = 0;
    for (auto d : level_dims_) t += d;
    return t;
}

std::size_t CochainComplex::element_at(int level, std::uint64_t index) const {
    if (level < 0 || level > top_level() || index >= level_dims_[static_cast<std::size_t>(level)]) {
        throw PreconditionError("basis index out of range");
    }
    const auto ids = poset_->level(level);
    auto it = std::upper_bound(ids.begin(), ids.end(), index,
                               [&](std::uint64_t v, std::size_t e) { return v < offset_[e]; });
    return *(it - 1);
}

std::vector<std::uint32_t> CochainComplex::digits(std::size_t element, std::uint64_t local) const {
    std::vector<std::uint32_t> out;
    const auto& f = factors_[element];
    for (std::size_t p = 0; p < f.size(); ++p) {
        std::uint64_t t = (local / strides_[element][p]) % f[p].size;
        std::vector<std::uint32_t> pos(static_cast<std::size_t>(f[p].copies));
        for (int c = f[p].copies; c-- > 0;) {
            pos[static_cast<std::size_t>(c)] = static_cast<std::uint32_t>(t % f[p].radix);
            t /= f[p].radix;
        }
        out.insert(out.end(), pos.begin(), pos.end());
    }
    return out;
}

std::uint64_t CochainComplex::local_index(std::size_t element, std::span<const std::uint32_t> d) const {
    std::uint64_t idx = 0;
    std::size_t k = 0;
    const auto& f = factors_[element];
    for (std::size_t p = 0; p < f.size(); ++p) {
        std::uint64_t t = 0;
        for (int c = 0; c < f[p].copies; ++c) {
            if (k >= d.size() || d[k] >= f[p].radix) throw PreconditionError("digit out of range");
            t = t * f[p].radix + d[k++];
        }
        idx += t * strides_[element][p];
    }
    if (k != d.size()) throw PreconditionError("wrong number of digits");
    return idx;
}

std::vector<LocalMap> CochainComplex::edge_maps(std::size_t bottom, std::size_t top) const {
    const auto& pb = poset_->element(bottom);
    const auto& pt = poset_->element(top);
    std::vector<LocalMap> maps(factors_[bottom].size());
    for (std::size_t p = 0; p < maps.size(); ++p) {
        const Factor& in = factors_[bottom][p];
        const Factor& out = factors_[top][p];
        LocalMap& m = maps[p];
        m.in_stride = strides_[bottom][p];
        m.out_stride = strides_[top][p];
        const int pos = static_cast<int>(p) + 1;
        if (pb.at(pos) == pt.at(pos)) {
            m.entries.reserve(in.size);
            for (std::uint64_t t = 0; t < in.size; ++t) m.entries.emplace_back(t, t);
        } else if (rule_ == EdgeRule::merge_split) {
            for (std::uint32_t a = 0; a < in.radix; ++a)
                m.entries.emplace_back(repunit(in.radix, in.copies) * a, repunit(out.radix, out.copies) * a);
        } else {
            for (std::uint64_t t = 0; t < in.size; ++t) m.entries.emplace_back(t, 0);
        }
    }
    return maps;
}

SparseGF2 CochainComplex::differential(int k) const {
    const auto dim = [&](int level) -> std::uint64_t {
        return level < 0 || level > top_level() ? 0 : level_dims_[static_cast<std::size_t>(level)];
    };
    const std::uint64_t rows = dim(k + 1), cols = dim(k);
    if (rows > std::numeric_limits<std::uint32_t>::max() || cols > std::numeric_limits<std::uint32_t>::max()) {
        throw SizeError("differential at level " + std::to_string(k) + " is too large to materialize");
    }
    std::vector<Triplet> entries;
    if (rows != 0 && cols != 0) {
        for (std::size_t e : poset_->level(k)) {
            for (std::size_t t : poset_->up(e)) {
                const auto maps = edge_maps(e, t);
                const std::uint64_t row0 = offset_[t], col0 = offset_[e];
                for_each_tensor_entry(std::span<const LocalMap>(maps), [&](std::uint64_t out, std::uint64_t in) {
                    entries.push_back({static_cast<std::uint32_t>(row0 + out), static_cast<std::uint32_t>(col0 + in)});
                });
            }
        }
    }
    return SparseGF2::from_triplets(rows, cols, std::move(entries));
}

void CochainComplex::apply_differential(int k, std::uint64_t col, std::vector<std::uint64_t>& out) const {
    if (k >= top_level()) return;
    const std::size_t e = element_at(k, col);
    const std::uint64_t local = col - offset_[e];
    const auto& pe = poset_->element(e);
    const auto& fe = factors_[e];
    for (std::size_t t : poset_->up(e)) {
        const auto& pt = poset_->element(t);
        std::uint64_t row = 0;
        bool nonzero = true;
        for (std::size_t p = 0; p < fe.size() && nonzero; ++p) {
            const std::uint64_t digit = (local / strides_[e][p]) % fe[p].size;
            const int pos = static_cast<int>(p) + 1;
            if (pe.at(pos) == pt.at(pos)) {
                row += digit * strides_[t][p];
            } else if (rule_ == EdgeRule::merge_split) {
                const std::uint64_t rep_in = repunit(fe[p].radix, fe[p].copies);
                if (digit % rep_in != 0) {
                    nonzero = false;
                } else {
                    const Factor& ft = factors_[t][p];
                    row += (digit / rep_in) * repunit(ft.radix, ft.copies) * strides_[t][p];
                }
            }
            // unit_counit sends every basis vector to e_1, local index 0.
        }
        if (nonzero) out.push_back(offset_[t] + row);
    }
}

std::vector<BigInt> predicted_level_dims(const BruhatPoset& poset, const ColorVector& x, const SmoothingProfile& s) {
    if (x.size() != poset.n() || s.size() != poset.n()) {
        throw PreconditionError("color vector and circle profile must have length " + std::to_string(poset.n()));
    }
    std::vector<BigInt> dims(static_cast<std::size_t>(poset.max_rank() + 1), 0);
    for (std::size_t e = 0; e < poset.size(); ++e) {
        const auto& p = poset.element(e);
        BigInt term = 1;
        for (int i = 1; i <= poset.n(); ++i) {
            BigInt power = 1;
            for (int c = 0; c < s.at(p.at(i)); ++c) power *= x.at(i);
            term *= power;
        }
        dims[static_cast<std::size_t>(poset.rank_of(e))] += term;
    }
    return dims;
}

BigInt alternating_sum(std::span<const BigInt> dims) {
    BigInt chi = 0;
    for (std::size_t k = 0; k < dims.size(); ++k) chi += (k % 2 == 0) ? dims[k] : BigInt(-dims[k]);
    return chi;
}

CochainComplex build_complex(const LinkDiagram& d, const ColorVector& x, std::uint64_t budget, int bruhat_cap) {
    if (x.size() != d.crossing_count()) {
        throw PreconditionError("color vector has length " + std::to_string(x.size()) + " but the diagram has " +
                                std::to_string(d.crossing_count()) + " crossings");
    }
    const auto poset = shared_bruhat(d.crossing_count(), bruhat_cap);
    const SmoothingProfile s = s_vector(d);
    const auto dims = predicted_level_dims(*poset, x, s);
    BigInt total = 0;
    for (const auto& v : dims) total += v;
    if (total > budget) {
        throw SizeError("complex has total dimension " + total.str() + " (sum over pi of prod x_i^s_pi(i)), above the budget of " +
                        std::to_string(budget));
    }
    std::vector<std::vector<Factor>> factors(poset->size());
    for (std::size_t e = 0; e < poset->size(); ++e) {
        const auto& p = poset->element(e);
        for (int i = 1; i <= poset->n(); ++i) factors[e].push_back({x.at(i), s.at(p.at(i)), 0});
    }
    CochainComplex c(poset, std::move(factors), EdgeRule::merge_split);
    c.colors_ = x;
    c.profile_ = s;
    return c;
}

bool d_squared_vanishes(const CochainComplex& c, unsigned threads) {
    std::atomic<bool> ok{true};
    for (int k = 0; k + 2 <= c.top_level() && ok; ++k) {
        const std::uint64_t cols = c.level_dims()[static_cast<std::size_t>(k)];
        constexpr std::uint64_t kChunk = 1 << 14;
        const std::size_t chunks = static_cast<std::size_t>((cols + kChunk - 1) / kChunk);
        parallel_for(chunks, threads, [&](std::size_t chunk) {
            std::vector<std::uint64_t> first, second;
            const std::uint64_t end = std::min<std::uint64_t>(cols, (chunk + 1) * kChunk);
            for (std::uint64_t col = chunk * kChunk; col < end && ok.load(std::memory_order_relaxed); ++col) {
                first.clear();
                c.apply_differential(k, col, first);
                if (first.empty()) continue;
                second.clear();
                for (auto r : first) c.apply_differential(k + 1, r, second);
                std::sort(second.begin(), second.end());
                for (std::size_t i = 0; i < second.size();) {
                    std::size_t j = i;
                    while (j < second.size() && second[j] == second[i]) ++j;
                    if ((j - i) % 2 == 1) {
                        ok = false;
                        return;
                    }
                    i = j;
                }
            }
        });
    }
    return ok;
}

std::vector<std::uint64_t> differential_ranks(const CochainComplex& c, const HomologyOptions& options) {
    const std::size_t levels = static_cast<std::size_t>(c.top_level());
    std::vector<std::uint64_t> ranks(levels, 0);
    parallel_for(levels, options.threads, [&](std::size_t k) {
        const SparseGF2 d = c.differential(static_cast<int>(k));
        const bool dense = d.cols() == 0 || d.rows() <= options.dense_limit_bits / d.cols();
        ranks[k] = dense ? rank(d.to_dense()) : rank(d);
    });
    return ranks;
}

HomologyReport homology(const CochainComplex& c, const HomologyOptions& options) {
    const auto start = std::chrono::steady_clock::now();
    if (!d_squared_vanishes(c, options.threads)) {
        throw ConsistencyError("differential does not square to zero");
    }
    const auto ranks = differential_ranks(c, options);
    HomologyReport report;
    report.n = c.n();
    if (c.colors()) report.x = c.colors()->values();
    if (c.profile()) report.s = c.profile()->s;
    std::vector<std::uint64_t> h;
    std::vector<BigInt> cochain, hom;
    for (std::size_t k = 0; k < c.level_dims().size(); ++k) {
        const std::uint64_t out_rank = k < ranks.size() ? ranks[k] : 0;
        const std::uint64_t in_rank = k > 0 ? ranks[k - 1] : 0;
        h.push_back(c.level_dims()[k] - out_rank - in_rank);
        cochain.emplace_back(c.level_dims()[k]);
        hom.emplace_back(h.back());
    }
    report.cochain_dims = c.level_dims();
    report.homology_dims = h;
    report.euler_characteristic = alternating_sum(cochain);
    report.homology_euler_characteristic = alternating_sum(hom);
    report.elapsed_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return report;
}

HomologyReport verify_euler(const LinkDiagram& d, const ColorVector& x, const EulerOptions& options) {
    const auto start = std::chrono::steady_clock::now();
    if (x.size() != d.crossing_count()) {
        throw PreconditionError("color vector has length " + std::to_string(x.size()) + " but the diagram has " +
                                std::to_string(d.crossing_count()) + " crossings");
    }
    const SmoothingProfile s = s_vector(d);
    HomologyReport report;
    if (options.skip_homology) {
        const auto poset = shared_bruhat(d.crossing_count(), options.bruhat_cap);
        const auto dims = predicted_level_dims(*poset, x, s);
        report.n = d.crossing_count();
        report.x = x.values();
        report.s = s.s;
        const BigInt limit = std::numeric_limits<std::uint64_t>::max();
        for (const auto& v : dims)
            if (v > limit) throw SizeError("cochain dimension " + v.str() + " does not fit 64 bits");
        report.cochain_dims = to_u64(dims);
        report.euler_characteristic = alternating_sum(dims);
    } else {
        const CochainComplex c = build_complex(d, x, options.budget, options.bruhat_cap);
        report = homology(c, options.homology);
    }
    report.determinant = det_exact(vandermonde_matrix(x, s));
    report.agree = report.euler_characteristic == *report.determinant &&
                   (!report.homology_euler_characteristic || *report.homology_euler_characteristic == *report.determinant);
    report.elapsed_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return report;
}

OrderIndependence order_independence_check(const LinkDiagram& d, const ColorVector& x, const Permutation& reordering,
                                           std::uint64_t budget) {
    if (reordering.size() != d.crossing_count()) {
        throw PreconditionError("reordering must permute all " + std::to_string(d.crossing_count()) + " crossings");
    }
    OrderIndependence result;
    result.height_uniform = is_height_uniform(d).uniform;
    const LinkDiagram other = d.reordered({reordering.entries().begin(), reordering.entries().end()});
    const CochainComplex a = build_complex(d, x, budget);
    const CochainComplex b = build_complex(other, x, budget);
    result.identical = a.level_dims() == b.level_dims();
    for (int k = 0; result.identical && k < a.top_level(); ++k) result.identical = a.differential(k) == b.differential(k);
    return result;
}

}  // namespace vdcat
