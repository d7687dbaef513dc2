#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "qfano/integer.hpp"

namespace qfano {

// Nonnegative integer vector indexed by the vertices of a quiver.
class DimVector {
public:
    DimVector() = default;
    explicit DimVector(std::vector<Int> entries);
    DimVector(std::initializer_list<Int> entries) : DimVector(std::vector<Int>(entries)) {}

    static DimVector zero(std::size_t n) { return DimVector(std::vector<Int>(n, 0)); }
    static DimVector unit(std::size_t n, std::size_t i);
    static DimVector ones(std::size_t n) { return DimVector(std::vector<Int>(n, 1)); }

    std::size_t size() const noexcept { return entries_.size(); }
    Int operator[](std::size_t i) const { return entries_[i]; }
    std::span<const Int> entries() const noexcept { return entries_; }
    auto begin() const noexcept { return entries_.begin(); }
    auto end() const noexcept { return entries_.end(); }

    bool is_zero() const noexcept;
    // d - e, requires e <= d componentwise.
    DimVector minus(const DimVector& e) const;

    friend bool operator==(const DimVector&, const DimVector&) = default;
    friend auto operator<=>(const DimVector&, const DimVector&) = default;

private:
    friend class SubdimCursor;
    std::vector<Int> entries_;
};

// Integer linear form theta on dimension vectors, theta(e) = sum theta_i e_i.
class LinearForm {
public:
    LinearForm() = default;
    explicit LinearForm(std::vector<Int> coefficients) : coeffs_(std::move(coefficients)) {}
    LinearForm(std::initializer_list<Int> coefficients) : coeffs_(coefficients) {}

    static LinearForm zero(std::size_t n) { return LinearForm(std::vector<Int>(n, 0)); }
    // The dual basis form picking out coordinate i.
    static LinearForm coordinate(std::size_t n, std::size_t i);

    std::size_t size() const noexcept { return coeffs_.size(); }
    Int operator[](std::size_t i) const { return coeffs_[i]; }
    std::span<const Int> coefficients() const noexcept { return coeffs_; }
    auto begin() const noexcept { return coeffs_.begin(); }
    auto end() const noexcept { return coeffs_.end(); }

    Int operator()(const DimVector& e) const;

    LinearForm operator+(const LinearForm& other) const;
    LinearForm operator-(const LinearForm& other) const;
    LinearForm operator-() const;
    LinearForm scaled(Int factor) const;

    friend bool operator==(const LinearForm&, const LinearForm&) = default;

private:
    std::vector<Int> coeffs_;
};

struct Arrow {
    int source;
    int target;
    Int multiplicity = 1;
};

// Acyclic quiver stored as vertex count plus arrow-multiplicity matrix.
// Parallel arrows are never individually identified.
class Quiver {
public:
    // Builds the accumulated multiplicity matrix. Throws IndexError for
    // out-of-range vertices, PreconditionError for negative multiplicities
    // and CycleError if the support digraph has a directed cycle.
    Quiver(int n, std::span<const Arrow> arrows);
    Quiver(int n, std::initializer_list<Arrow> arrows)
        : Quiver(n, std::span<const Arrow>(arrows.begin(), arrows.size())) {}

    int vertex_count() const noexcept { return n_; }
    Int multiplicity(int source, int target) const { return mult_[index(source, target)]; }
    Int total_arrows() const;
    // Arrows with positive multiplicity in row-major (source, target) order.
    std::vector<Arrow> arrows() const;

    friend bool operator==(const Quiver&, const Quiver&) = default;

private:
    std::size_t index(int source, int target) const {
        return static_cast<std::size_t>(source) * static_cast<std::size_t>(n_) +
               static_cast<std::size_t>(target);
    }

    int n_ = 0;
    std::vector<Int> mult_;
};

Quiver make_quiver(int n, std::span<const Arrow> arrows);

// Kahn's algorithm; among available sources the smallest index goes first.
std::vector<int> topological_order(const Quiver& q);

// <d, e> = sum_i d_i e_i - sum_{i->j} d_i e_j.
Int euler_form(const Quiver& q, const DimVector& d, const DimVector& e);

// {d, e} = <d, e> - <e, d>.
Int antisym_form(const Quiver& q, const DimVector& d, const DimVector& e);

// 1 - <d, d>; may be nonpositive.
Int moduli_dimension(const Quiver& q, const DimVector& d);

bool is_indivisible(const DimVector& d);

// gcd of the coefficients; 0 for the zero form.
Int gcd_form(const LinearForm& theta);

std::string to_string(const DimVector& d);
std::string to_string(const LinearForm& theta);

}  // namespace qfano
