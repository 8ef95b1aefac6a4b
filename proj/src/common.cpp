#include "vdcat/common.hpp"

#include <charconv>

#include "vdcat/errors.hpp"

namespace vdcat {

ColorVector::ColorVector(std::vector<std::uint32_t> x) : x_(std::move(x)) {
    for (auto v : x_)
        if (v < 1) throw ValidationError("color entries must be positive integers");
}

ColorVector ColorVector::parse(std::string_view text) {
    std::vector<std::uint32_t> x;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        auto next = text.find(',', pos);
        if (next == std::string_view::npos) next = text.size();
        auto field = text.substr(pos, next - pos);
        while (!field.empty() && field.front() == ' ') field.remove_prefix(1);
        while (!field.empty() && field.back() == ' ') field.remove_suffix(1);
        long long v = 0;
        auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), v);
        if (field.empty() || ec != std::errc{} || ptr != field.data() + field.size()) {
            throw ValidationError("bad color vector: '" + std::string(text) + "'");
        }
        if (v < 1 || v > 0xFFFFFFFFLL) throw ValidationError("color entries must be positive integers");
        x.push_back(static_cast<std::uint32_t>(v));
        pos = next + 1;
    }
    return ColorVector(std::move(x));
}

std::string ColorVector::to_string() const {
    std::string s;
    for (std::size_t i = 0; i < x_.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(x_[i]);
    }
    return s;
}

}  // namespace vdcat
