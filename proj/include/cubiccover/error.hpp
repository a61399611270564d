#ifndef CUBICCOVER_ERROR_HPP
#define CUBICCOVER_ERROR_HPP

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace cubiccover {

enum class ErrorKind {
    parse,
    loop_edge,
    vertex_out_of_range,
    not_cubic,
    too_large,
    disconnected,
    no_perfect_matching,
    pm_cap_exceeded,
    no_two_factor,
    not_a_perfect_matching,
    factors_not_distinct,
    invalid_core_cover,
    core_not_bipartite,
    not_a_partition,
    nonempty_intersection,
    union_not_all_edges,
    dimension_cap_exceeded,
    no_cycle_cover,
    budget_exceeded,
    invalid_argument,
};

inline std::string_view to_string(ErrorKind k)
{
    switch (k) {
    case ErrorKind::parse: return "parse";
    case ErrorKind::loop_edge: return "loop-edge";
    case ErrorKind::vertex_out_of_range: return "vertex-out-of-range";
    case ErrorKind::not_cubic: return "not-3-regular";
    case ErrorKind::too_large: return "too-large";
    case ErrorKind::disconnected: return "disconnected";
    case ErrorKind::no_perfect_matching: return "no-perfect-matching";
    case ErrorKind::pm_cap_exceeded: return "pm-cap-exceeded";
    case ErrorKind::no_two_factor: return "no-2-factor";
    case ErrorKind::not_a_perfect_matching: return "not-a-pm";
    case ErrorKind::factors_not_distinct: return "factors-not-distinct";
    case ErrorKind::invalid_core_cover: return "invalid-core-cover";
    case ErrorKind::core_not_bipartite: return "core-not-bipartite";
    case ErrorKind::not_a_partition: return "not-a-partition";
    case ErrorKind::nonempty_intersection: return "nonempty-quadruple-intersection";
    case ErrorKind::union_not_all_edges: return "union-not-all-edges";
    case ErrorKind::dimension_cap_exceeded: return "dimension-cap-exceeded";
    case ErrorKind::no_cycle_cover: return "no-cycle-cover";
    case ErrorKind::budget_exceeded: return "timeout";
    case ErrorKind::invalid_argument: return "invalid-argument";
    }
    return "unknown";
}

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(to_string(kind)) + ": " + what)
        , kind_(kind)
    {
    }

    [[nodiscard]] ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

/// Resource limits shared by the exhaustive searches.
struct SearchLimits {
    std::size_t pm_cap = 1'000'000;
    std::optional<std::chrono::steady_clock::time_point> deadline;

    static SearchLimits with_budget(std::chrono::milliseconds budget)
    {
        SearchLimits l;
        l.deadline = std::chrono::steady_clock::now() + budget;
        return l;
    }
};

/// Cheap periodic deadline poll for inner search loops.
class DeadlineTicker {
public:
    explicit DeadlineTicker(const SearchLimits& limits)
        : deadline_(limits.deadline)
    {
    }

    void tick()
    {
        if (!deadline_ || (++ticks_ & 0xfff) != 0)
            return;
        if (std::chrono::steady_clock::now() > *deadline_)
            throw Error(ErrorKind::budget_exceeded, "wall-clock budget exhausted");
    }

private:
    std::optional<std::chrono::steady_clock::time_point> deadline_;
    std::uint64_t ticks_ = 0;
};

} // namespace cubiccover

#endif
