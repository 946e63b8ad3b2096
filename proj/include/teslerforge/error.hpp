#ifndef TESLERFORGE_ERROR_HPP
#define TESLERFORGE_ERROR_HPP

#include <stdexcept>
#include <string>

namespace teslerforge {

/// Domain error with a stable machine-readable code. The CLI maps these to
/// exit status 2 and a JSON error object; codes are part of the interface.
class Error : public std::runtime_error {
  public:
    Error(std::string code, const std::string& message)
        : std::runtime_error(message), code_(std::move(code)) {}

    const std::string& code() const { return code_; }

  private:
    std::string code_;
};

namespace errc {
inline constexpr const char* index_out_of_range = "index_out_of_range";
inline constexpr const char* size_mismatch = "size_mismatch";
inline constexpr const char* parse_error = "parse_error";
inline constexpr const char* negative_input = "negative_input";
inline constexpr const char* not_a_vertex = "not_a_vertex";
inline constexpr const char* not_adjacent = "not_adjacent";
inline constexpr const char* zero_row = "zero_row";
inline constexpr const char* formula_violation = "formula_violation";
inline constexpr const char* not_in_cone = "not_in_cone";
inline constexpr const char* infeasible = "infeasible";
inline constexpr const char* empty_polytope = "empty_polytope";
inline constexpr const char* unbounded_or_rank_deficient = "unbounded_or_rank_deficient";
inline constexpr const char* dim_guard_exceeded = "dim_guard_exceeded";
inline constexpr const char* max_n_exceeded = "max_n_exceeded";
inline constexpr const char* precondition_violated = "precondition_violated";
}  // namespace errc

}  // namespace teslerforge

#endif
