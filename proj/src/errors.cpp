#include "pg/errors.hpp"

namespace pg {

const char* errc_name(errc c) {
    switch (c) {
    case errc::invalid_spec: return "InvalidSpec";
    case errc::not_a_group: return "NotAGroup";
    case errc::too_large: return "TooLarge";
    case errc::too_small: return "TooSmall";
    case errc::out_of_range: return "OutOfRange";
    case errc::precondition_violated: return "PreconditionViolated";
    case errc::bad_vertex_list: return "BadVertexList";
    case errc::partition_mismatch: return "PartitionMismatch";
    case errc::timeout: return "Timeout";
    case errc::trivial_group: return "TrivialGroup";
    case errc::empty_set: return "EmptySet";
    case errc::not_singleton_star: return "NotSingletonStar";
    case errc::not_an_n_class: return "NotAnNClass";
    case errc::size_mismatch: return "SizeMismatch";
    case errc::not_a_power_graph_shape: return "NotAPowerGraphShape";
    case errc::orientation_ambiguous: return "OrientationAmbiguous";
    case errc::classification_failed: return "ClassificationFailed";
    case errc::not_transitive: return "NotTransitive";
    case errc::not_a_power_digraph_shape: return "NotAPowerDigraphShape";
    case errc::inconsistent_counts: return "InconsistentCounts";
    case errc::invalid_n: return "InvalidN";
    case errc::invalid_params: return "InvalidParams";
    case errc::quotient_search_failed: return "QuotientSearchFailed";
    case errc::not_a_cycle: return "NotACycle";
    case errc::parse_error: return "ParseError";
    case errc::io_error: return "IoError";
    case errc::usage_error: return "UsageError";
    }
    return "UnknownError";
}

} // namespace pg
