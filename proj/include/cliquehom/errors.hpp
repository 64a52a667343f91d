// Error codes and the exception type shared by the whole library.
#pragma once

#include <stdexcept>
#include <string>

namespace cliquehom {

enum class errc {
    index_out_of_range,
    self_loop,
    size_mismatch,
    too_small,
    too_large,
    empty_parts,
    subset_too_small,
    dim_out_of_range,
    unknown_face,
    insufficient_dim,
    invalid_params,
    sample_too_large,
    memory_budget,
    overflow,
    invalid_spec,
    parse_error,
};

inline const char* errc_name(errc c) {
    switch (c) {
        case errc::index_out_of_range: return "index_out_of_range";
        case errc::self_loop: return "self_loop";
        case errc::size_mismatch: return "size_mismatch";
        case errc::too_small: return "too_small";
        case errc::too_large: return "too_large";
        case errc::empty_parts: return "empty_parts";
        case errc::subset_too_small: return "subset_too_small";
        case errc::dim_out_of_range: return "dim_out_of_range";
        case errc::unknown_face: return "unknown_face";
        case errc::insufficient_dim: return "insufficient_dim";
        case errc::invalid_params: return "invalid_params";
        case errc::sample_too_large: return "sample_too_large";
        case errc::memory_budget: return "memory_budget";
        case errc::overflow: return "overflow";
        case errc::invalid_spec: return "invalid_spec";
        case errc::parse_error: return "parse_error";
    }
    return "unknown";
}

/// Library exception carrying a machine-checkable error code.
class Error : public std::runtime_error {
  public:
    Error(errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}
    errc code() const { return code_; }

  private:
    errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) { throw Error(code, what); }

}  // namespace cliquehom
