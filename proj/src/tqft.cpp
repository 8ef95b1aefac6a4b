#include "vdcat/tqft.hpp"

#include <string>
#include <vector>

#include "vdcat/errors.hpp"

namespace vdcat {

namespace {

GF2Matrix kron(const GF2Matrix& a, const GF2Matrix& b) {
    GF2Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t ar = 0; ar < a.rows(); ++ar)
        for (std::size_t ac = 0; ac < a.cols(); ++ac) {
            if (!a.get(ar, ac)) continue;
            for (std::size_t br = 0; br < b.rows(); ++br)
                for (std::size_t bc = 0; bc < b.cols(); ++bc)
                    if (b.get(br, bc)) out.set(ar * b.rows() + br, ac * b.cols() + bc);
        }
    return out;
}

GF2Matrix swap_map(std::uint32_t dim) {
    GF2Matrix s(std::size_t{dim} * dim, std::size_t{dim} * dim);
    for (std::size_t a = 0; a < dim; ++a)
        for (std::size_t b = 0; b < dim; ++b) s.set(b * dim + a, a * dim + b);
    return s;
}

}  // namespace

AlgebraSpec::AlgebraSpec(std::uint32_t d) : dim(d) {
    if (d < 1) throw ValidationError("algebra dimension must be at least 1");
}

void CobordismShape::validate() const {
    if (dim < 1) throw ValidationError("cobordism color must be at least 1");
    if (r < 0 || l < 0) throw ValidationError("boundary counts must be nonnegative");
    switch (kind) {
        case CobordismKind::identity:
            if (r != l) throw ValidationError("identity cobordism needs r = l");
            break;
        case CobordismKind::connected:
            if (r + l < 1) throw ValidationError("connected cobordism needs a boundary circle");
            break;
        case CobordismKind::sphere:
            if (r != 0 || l != 0) throw ValidationError("sphere has no boundary");
            break;
    }
}

FrobeniusStructure product_algebra(AlgebraSpec spec) {
    const std::size_t n = spec.dim;
    FrobeniusStructure f{GF2Matrix(n, n * n), GF2Matrix(n, 1), GF2Matrix(n * n, n), GF2Matrix(1, n)};
    for (std::size_t a = 0; a < n; ++a) {
        f.mult.set(a, a * n + a);
        f.unit.set(a, 0);
        f.comult.set(a * n + a, a);
        f.counit.set(0, a);
    }
    return f;
}

std::uint64_t checked_power(std::uint64_t base, int exponent, std::uint64_t limit) {
    std::uint64_t v = 1;
    for (int i = 0; i < exponent; ++i) {
        if (base != 0 && v > limit / base) {
            throw SizeError(std::to_string(base) + "^" + std::to_string(exponent) + " exceeds the limit of " +
                            std::to_string(limit));
        }
        v *= base;
    }
    return v;
}

std::uint64_t constant_tensor_index(std::uint32_t dim, int count, std::uint32_t a) {
    std::uint64_t repunit = 0;
    for (int i = 0; i < count; ++i) repunit = repunit * dim + 1;
    return repunit * a;
}

GF2Matrix connected_map(AlgebraSpec spec, int r, int l, std::uint64_t budget_bits) {
    if (r < 0 || l < 0) throw PreconditionError("boundary counts must be nonnegative");
    if (r == 0 && l == 0) throw PreconditionError("a closed component is a sphere; use sphere_scalar");
    const std::uint64_t in = checked_power(spec.dim, r, budget_bits);
    const std::uint64_t out = checked_power(spec.dim, l, budget_bits);
    if (in > budget_bits / out) {
        throw SizeError("connected map of " + std::to_string(out) + "x" + std::to_string(in) + " exceeds the budget");
    }
    GF2Matrix m(out, in);
    for (std::uint32_t a = 0; a < spec.dim; ++a) m.set(constant_tensor_index(spec.dim, l, a), constant_tensor_index(spec.dim, r, a));
    return m;
}

bool sphere_scalar(AlgebraSpec spec) { return spec.dim % 2 == 1; }

GF2Matrix cobordism_map(const CobordismShape& shape) {
    shape.validate();
    const AlgebraSpec spec(shape.dim);
    switch (shape.kind) {
        case CobordismKind::identity:
            return GF2Matrix::identity(checked_power(shape.dim, shape.r, kDefaultTensorBudgetBits));
        case CobordismKind::connected:
            return connected_map(spec, shape.r, shape.l);
        case CobordismKind::sphere: {
            GF2Matrix s(1, 1);
            s.set(0, 0, sphere_scalar(spec));
            return s;
        }
    }
    return {};
}

bool frobenius_check(AlgebraSpec spec, std::uint32_t cap) {
    if (spec.dim > cap) {
        throw SizeError("frobenius_check at dimension " + std::to_string(spec.dim) + " exceeds the cap of " +
                        std::to_string(cap));
    }
    const auto f = product_algebra(spec);
    const GF2Matrix one = GF2Matrix::identity(spec.dim);

    const bool assoc = f.mult * kron(f.mult, one) == f.mult * kron(one, f.mult);
    const bool unit = f.mult * kron(f.unit, one) == one && f.mult * kron(one, f.unit) == one;
    const bool coassoc = kron(f.comult, one) * f.comult == kron(one, f.comult) * f.comult;
    const bool counit = kron(f.counit, one) * f.comult == one && kron(one, f.counit) * f.comult == one;
    const GF2Matrix dm = f.comult * f.mult;
    const bool frobenius = kron(f.mult, one) * kron(one, f.comult) == dm && kron(one, f.mult) * kron(f.comult, one) == dm;
    const bool commutative = f.mult * swap_map(spec.dim) == f.mult;
    const bool special = f.mult * f.comult == one;
    return assoc && unit && coassoc && counit && frobenius && commutative && special;
}

GF2Matrix tensor_assemble(std::span<const GF2Matrix> factors, std::uint64_t budget_bits) {
    std::uint64_t rows = 1, cols = 1;
    for (const auto& f : factors) {
        const bool overflow = (f.rows() != 0 && rows > budget_bits / f.rows()) || (f.cols() != 0 && cols > budget_bits / f.cols());
        if (overflow) {
            throw SizeError("tensor product of " + std::to_string(factors.size()) + " factors overflows the size budget");
        }
        rows *= f.rows();
        cols *= f.cols();
        if (cols != 0 && rows > budget_bits / cols) {
            throw SizeError("tensor product " + std::to_string(rows) + "x" + std::to_string(cols) +
                            " exceeds the size budget of " + std::to_string(budget_bits) + " bits");
        }
    }
    GF2Matrix out = GF2Matrix::identity(1);
    for (const auto& f : factors) out = kron(out, f);
    return out;
}

}  // namespace vdcat
