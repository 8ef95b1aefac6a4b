#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace vdcat {

using BigInt = boost::multiprecision::cpp_int;

/// A vector of positive integers (x_1, ..., x_n); x_i picks the algebra of color i.
class ColorVector {
public:
    ColorVector() = default;
    /// Throws ValidationError on an entry below 1.
    explicit ColorVector(std::vector<std::uint32_t> x);

    /// Comma separated list, e.g. "1,2,3".
    static ColorVector parse(std::string_view text);

    int size() const { return static_cast<int>(x_.size()); }
    /// One-based.
    std::uint32_t at(int i) const { return x_[static_cast<std::size_t>(i - 1)]; }
    const std::vector<std::uint32_t>& values() const { return x_; }
    std::string to_string() const;

    friend bool operator==(const ColorVector&, const ColorVector&) = default;

private:
    std::vector<std::uint32_t> x_;
};

}  // namespace vdcat
