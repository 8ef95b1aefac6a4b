#include "vdcat/gendet.hpp"

#include <limits>
#include <numeric>
#include <string>

#include "json.hpp"
#include "vdcat/errors.hpp"

namespace vdcat {

PosIntMatrix::PosIntMatrix(std::vector<std::vector<BigInt>> rows) : n_(static_cast<int>(rows.size())) {
    if (rows.empty()) throw ValidationError("matrix must be nonempty");
    for (auto& r : rows) {
        if (static_cast<int>(r.size()) != n_) throw ValidationError("matrix must be square");
        for (auto& v : r) {
            if (v < 1) throw ValidationError("matrix entries must be positive integers");
            entries_.push_back(std::move(v));
        }
    }
}

std::vector<std::vector<BigInt>> PosIntMatrix::rows() const {
    std::vector<std::vector<BigInt>> out(static_cast<std::size_t>(n_));
    for (int i = 1; i <= n_; ++i)
        for (int j = 1; j <= n_; ++j) out[static_cast<std::size_t>(i - 1)].push_back(at(i, j));
    return out;
}

BigInt det_exact(const PosIntMatrix& m) {
    const int n = m.n();
    std::vector<std::vector<BigInt>> a = m.rows();
    BigInt prev = 1;
    int sign = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (a[k][k] == 0) {
            int swap = -1;
            for (int i = k + 1; i < n && swap < 0; ++i)
                if (a[i][k] != 0) swap = i;
            if (swap < 0) return 0;
            std::swap(a[k], a[swap]);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j) a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
            a[i][k] = 0;
        }
        prev = a[k][k];
    }
    return sign * a[n - 1][n - 1];
}

BigInt det_by_permutations(const PosIntMatrix& m, int cap) {
    const int n = m.n();
    if (n > cap) throw SizeError("permutation expansion is capped at n = " + std::to_string(cap));
    std::vector<int> p(static_cast<std::size_t>(n));
    std::iota(p.begin(), p.end(), 1);
    BigInt total = 0;
    do {
        BigInt term = 1;
        for (int i = 1; i <= n; ++i) term *= m.at(i, p[static_cast<std::size_t>(i - 1)]);
        if (sign(Permutation(p)) < 0) total -= term;
        else total += term;
    } while (std::next_permutation(p.begin(), p.end()));
    return total;
}

PosIntMatrix vandermonde_matrix(const ColorVector& x, const SmoothingProfile& s) {
    if (x.size() != s.size()) throw PreconditionError("color vector and circle profile lengths differ");
    std::vector<std::vector<BigInt>> rows(static_cast<std::size_t>(x.size()));
    for (int i = 1; i <= x.size(); ++i) {
        for (int j = 1; j <= s.size(); ++j) {
            rows[static_cast<std::size_t>(i - 1)].push_back(boost::multiprecision::pow(BigInt(x.at(i)),
                                                                                      static_cast<unsigned>(s.at(j))));
        }
    }
    return PosIntMatrix(std::move(rows));
}

CochainComplex build_matrix_complex(const PosIntMatrix& m, std::uint64_t budget, int bruhat_cap) {
    const auto poset = shared_bruhat(m.n(), bruhat_cap);
    const BigInt radix_limit = std::numeric_limits<std::uint32_t>::max();
    BigInt total = 0;
    std::vector<std::vector<Factor>> factors(poset->size());
    for (std::size_t e = 0; e < poset->size(); ++e) {
        const auto& p = poset->element(e);
        BigInt block = 1;
        for (int i = 1; i <= m.n(); ++i) {
            const BigInt& v = m.at(i, p.at(i));
            block *= v;
            if (v > radix_limit) throw SizeError("matrix entry " + v.str() + " is too large for a tensor factor");
            factors[e].push_back({v.convert_to<std::uint32_t>(), 1, 0});
        }
        total += block;
        if (total > budget) {
            throw SizeError("matrix complex has total dimension above the budget of " + std::to_string(budget));
        }
    }
    return CochainComplex(poset, std::move(factors), EdgeRule::unit_counit);
}

PosIntMatrix parse_matrix(std::string_view json_text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(json_text);
    } catch (const nlohmann::json::parse_error& e) {
        throw FormatError(std::string("matrix file is not valid JSON: ") + e.what());
    }
    if (!j.is_object() || !j.contains("matrix") || !j["matrix"].is_array()) {
        throw FormatError("matrix file needs a \"matrix\" field holding a list of rows");
    }
    std::vector<std::vector<BigInt>> rows;
    for (const auto& row : j["matrix"]) {
        if (!row.is_array()) throw FormatError("matrix rows must be lists");
        rows.emplace_back();
        for (const auto& v : row) {
            if (v.is_number_unsigned() || v.is_number_integer()) {
                rows.back().emplace_back(v.get<std::int64_t>());
            } else if (v.is_string()) {
                try {
                    rows.back().emplace_back(v.get<std::string>());
                } catch (const std::exception&) {
                    throw FormatError("matrix entry is not an integer: " + v.get<std::string>());
                }
            } else {
                throw FormatError("matrix entries must be integers");
            }
        }
    }
    return PosIntMatrix(std::move(rows));
}

}  // namespace vdcat
