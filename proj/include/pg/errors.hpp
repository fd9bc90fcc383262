#pragma once

#include <stdexcept>
#include <string>

namespace pg {

enum class errc {
    invalid_spec,
    not_a_group,
    too_large,
    too_small,
    out_of_range,
    precondition_violated,
    bad_vertex_list,
    partition_mismatch,
    timeout,
    trivial_group,
    empty_set,
    not_singleton_star,
    not_an_n_class,
    size_mismatch,
    not_a_power_graph_shape,
    orientation_ambiguous,
    classification_failed,
    not_transitive,
    not_a_power_digraph_shape,
    inconsistent_counts,
    invalid_n,
    invalid_params,
    quotient_search_failed,
    not_a_cycle,
    parse_error,
    io_error,
    usage_error,
};

const char* errc_name(errc c);

class error : public std::runtime_error {
public:
    error(errc code, const std::string& what)
        : std::runtime_error(what), code_(code) {}
    errc code() const { return code_; }

private:
    errc code_;
};

[[noreturn]] inline void fail(errc c, const std::string& msg) {
    throw error(c, msg);
}

} // namespace pg
