#include "qfano/scan.hpp"

#include <algorithm>
#include <atomic>
#include <thread>
#include <vector>

namespace qfano {

namespace {

constexpr std::uint64_t kChunk = 1u << 14;

// Fill `out` with the mixed-radix digits of `rank` (last vertex least significant).
void decode_rank(const DimVector& d, std::uint64_t rank, std::vector<Int>& out) {
    out.assign(d.size(), 0);
    for (std::size_t i = d.size(); i-- > 0;) {
        const auto radix = static_cast<std::uint64_t>(d[i]) + 1;
        out[i] = static_cast<Int>(rank % radix);
        rank /= radix;
    }
}

}  // namespace

SubdimCursor::SubdimCursor(const DimVector& bound, std::uint64_t position)
    : bound_(&bound), current_(DimVector::zero(bound.size())), position_(position) {
    // Stream position p is mixed-radix rank p + 1 (rank 0 is the zero vector).
    decode_rank(bound, position + 1, current_.entries_);
}

void SubdimCursor::advance() {
    auto& e = current_.entries_;
    for (std::size_t i = e.size(); i-- > 0;) {
        if (e[i] < (*bound_)[i]) {
            ++e[i];
            ++position_;
            return;
        }
        e[i] = 0;
    }
    ++position_;
}

std::optional<std::uint64_t> subdim_count(const DimVector& d) {
    std::uint64_t total = 1;
    for (Int v : d) {
        const auto radix = static_cast<std::uint64_t>(v) + 1;
        if (__builtin_mul_overflow(total, radix, &total)) return std::nullopt;
    }
    return total >= 2 ? total - 2 : 0;
}

SubdimRange::SubdimRange(DimVector d, std::uint64_t budget) : d_(std::move(d)), size_(0) {
    const auto count = subdim_count(d_);
    if (!count || *count > budget) {
        throw BudgetExceeded("sub-dimension vector count exceeds budget of " + std::to_string(budget));
    }
    size_ = *count;
}

DimVector SubdimRange::at(std::uint64_t pos) const {
    if (pos >= size_) throw IndexError("sub-dimension vector position out of range");
    return SubdimCursor(d_, pos).current();
}

SubdimRange subdim_vectors(const DimVector& d, std::uint64_t budget) { return SubdimRange(d, budget); }

std::optional<std::uint64_t> find_first(const SubdimRange& range, unsigned jobs,
                                        const std::function<bool(const DimVector&)>& pred) {
    const std::uint64_t total = range.size();
    if (total == 0) return std::nullopt;

    auto scan_chunk = [&](std::uint64_t begin, std::uint64_t end,
                          const std::atomic<std::uint64_t>* best) -> std::optional<std::uint64_t> {
        SubdimCursor cursor(range.bound(), begin);
        for (std::uint64_t pos = begin; pos < end; ++pos, cursor.advance()) {
            if (best && (pos & 1023) == 0 && best->load(std::memory_order_relaxed) < pos) {
                return std::nullopt;
            }
            if (pred(cursor.current())) return pos;
        }
        return std::nullopt;
    };

    const std::uint64_t chunks = (total + kChunk - 1) / kChunk;
    if (jobs <= 1 || chunks <= 1) return scan_chunk(0, total, nullptr);

    constexpr std::uint64_t kNone = UINT64_MAX;
    std::atomic<std::uint64_t> best{kNone};
    std::atomic<std::uint64_t> next_chunk{0};
    auto worker = [&] {
        for (;;) {
            const std::uint64_t c = next_chunk.fetch_add(1, std::memory_order_relaxed);
            if (c >= chunks) return;
            const std::uint64_t begin = c * kChunk;
            // Chunks are claimed in increasing order, so once a hit precedes
            // this chunk no later chunk can improve on it.
            if (best.load(std::memory_order_relaxed) < begin) return;
            const std::uint64_t end = std::min(total, begin + kChunk);
            if (auto hit = scan_chunk(begin, end, &best)) {
                std::uint64_t cur = best.load(std::memory_order_relaxed);
                while (*hit < cur && !best.compare_exchange_weak(cur, *hit)) {
                }
            }
        }
    };
    const unsigned workers = static_cast<unsigned>(std::min<std::uint64_t>(jobs, chunks));
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (unsigned t = 0; t < workers; ++t) pool.emplace_back(worker);
    pool.clear();  // joins
    const std::uint64_t found = best.load();
    if (found == kNone) return std::nullopt;
    return found;
}

}  // namespace qfano
