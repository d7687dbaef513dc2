#pragma once

#include <cstdint>
#include <functional>
#include <iterator>
#include <optional>

#include "qfano/quiver.hpp"

namespace qfano {

inline constexpr std::uint64_t kDefaultBudget = 100'000'000;

// Knobs shared by every enumerative scan. `jobs` never changes results,
// only how many worker threads share the work.
struct ScanOptions {
    std::uint64_t budget = kDefaultBudget;
    unsigned jobs = 1;
};

// Walks the sub-dimension vectors of d in lexicographic order (vertex 0 most
// significant), mutating a single DimVector in place.
class SubdimCursor {
public:
    SubdimCursor(const DimVector& bound, std::uint64_t position);

    const DimVector& current() const noexcept { return current_; }
    std::uint64_t position() const noexcept { return position_; }
    void advance();

private:
    const DimVector* bound_;
    DimVector current_;
    std::uint64_t position_;
};

// The stream of every e with 0 <= e <= d, e != 0, e != d, each exactly once,
// in lexicographic order. Holds Prod(d_i + 1) - 2 elements.
class SubdimRange {
public:
    // Throws BudgetExceeded if the element count exceeds `budget`.
    explicit SubdimRange(DimVector d, std::uint64_t budget = kDefaultBudget);

    const DimVector& bound() const noexcept { return d_; }
    std::uint64_t size() const noexcept { return size_; }
    // Element at stream position pos, 0 <= pos < size().
    DimVector at(std::uint64_t pos) const;

    class iterator {
    public:
        using iterator_category = std::input_iterator_tag;
        using value_type = DimVector;
        using difference_type = std::ptrdiff_t;
        using reference = const DimVector&;
        using pointer = const DimVector*;

        iterator() = default;
        reference operator*() const { return cursor_->current(); }
        pointer operator->() const { return &cursor_->current(); }
        iterator& operator++() {
            cursor_->advance();
            if (cursor_->position() >= end_) cursor_.reset();
            return *this;
        }
        void operator++(int) { ++*this; }
        friend bool operator==(const iterator& a, const iterator& b) {
            return a.cursor_.has_value() == b.cursor_.has_value() &&
                   (!a.cursor_ || a.cursor_->position() == b.cursor_->position());
        }

    private:
        friend class SubdimRange;
        iterator(const DimVector& d, std::uint64_t end) : end_(end) {
            if (end > 0) cursor_.emplace(d, 0);
        }
        std::optional<SubdimCursor> cursor_;
        std::uint64_t end_ = 0;
    };

    iterator begin() const { return iterator(d_, size_); }
    iterator end() const { return iterator(); }

private:
    DimVector d_;
    std::uint64_t size_;
};

// Number of proper nonzero e <= d, or nullopt if it does not fit in 64 bits.
std::optional<std::uint64_t> subdim_count(const DimVector& d);

SubdimRange subdim_vectors(const DimVector& d, std::uint64_t budget = kDefaultBudget);

// Stream position of the lexicographically first e satisfying `pred`, or
// nullopt. With jobs > 1 the range is split into chunks handed out in
// increasing order; the answer is the minimum hit regardless of schedule.
// `pred` must be safe to call concurrently.
std::optional<std::uint64_t> find_first(const SubdimRange& range, unsigned jobs,
                                        const std::function<bool(const DimVector&)>& pred);

}  // namespace qfano
