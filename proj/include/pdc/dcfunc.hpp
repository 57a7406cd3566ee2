#pragma once

// Polyhedral DC functions
//
//   h(d) = max_i [a_i + <v_i, d>] - max_j [b_j + <w_j, d>]
//
// stored as two lists of affine pieces over exact rationals. Piece order is
// input order and duplicates are kept; reports number pieces from 1.

#include "pdc/rational.hpp"

#include <cstddef>
#include <vector>

namespace pdc {

struct AffinePiece {
    Rational constant;
    Vec gradient;

    Rational at(const Vec& delta) const { return constant + dot(gradient, delta); }

    friend bool operator==(const AffinePiece&, const AffinePiece&) = default;
};

class PolyhedralDC {
public:
    /// Validates and builds. Throws EmptyPieceList or DimensionMismatch.
    static PolyhedralDC make(std::size_t dimension, std::vector<AffinePiece> plus,
                             std::vector<AffinePiece> minus);

    std::size_t dimension() const noexcept { return dimension_; }
    const std::vector<AffinePiece>& plus() const noexcept { return plus_; }
    const std::vector<AffinePiece>& minus() const noexcept { return minus_; }

    friend bool operator==(const PolyhedralDC&, const PolyhedralDC&) = default;

private:
    PolyhedralDC(std::size_t dimension, std::vector<AffinePiece> plus,
                 std::vector<AffinePiece> minus)
        : dimension_(dimension), plus_(std::move(plus)), minus_(std::move(minus)) {}

    std::size_t dimension_;
    std::vector<AffinePiece> plus_;
    std::vector<AffinePiece> minus_;
};

/// h with both constant maxima shifted to zero; original h = function + offset.
class NormalizedDC {
public:
    /// Accepts an already normalized function (offset 0). Throws NotNormalized.
    static NormalizedDC assume_normalized(PolyhedralDC h);

    const PolyhedralDC& function() const noexcept { return function_; }
    const Rational& offset() const noexcept { return offset_; }

    friend NormalizedDC normalize(const PolyhedralDC& h);

private:
    NormalizedDC(PolyhedralDC f, Rational offset) : function_(std::move(f)), offset_(std::move(offset)) {}

    PolyhedralDC function_;
    Rational offset_;
};

struct ActiveSets {
    std::vector<std::size_t> plus;  // 0-based indices into h.plus()
    std::vector<std::size_t> minus;
};

Rational eval(const PolyhedralDC& h, const Vec& delta);

/// Asymptotic slope max_i <v_i, d> - max_j <w_j, d>.
Rational recession(const PolyhedralDC& h, const Vec& direction);

ActiveSets active_sets(const PolyhedralDC& h, const Vec& point);

/// One-sided derivative h'(point; direction). Exact for piecewise affine h:
/// only pieces active at the point contribute.
Rational directional_derivative(const PolyhedralDC& h, const Vec& point, const Vec& direction);

NormalizedDC normalize(const PolyhedralDC& h);

/// max over pieces of piece.at(delta); pieces must be nonempty.
Rational max_affine(const std::vector<AffinePiece>& pieces, const Vec& delta);

} // namespace pdc
