#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace cqg {

struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// exact algebra
struct not_a_root : error {
    using error::error;
};
struct zero_polynomial : error {
    using error::error;
};
struct unsupported_degree : error {
    using error::error;
};
struct non_square_matrix : error {
    using error::error;
};

// fusion rings
struct ring_mismatch : error {
    using error::error;
};
struct no_dimension_function : error {
    using error::error;
};
struct not_irreducible : error {
    using error::error;
};
struct trivial_representation : error {
    using error::error;
};

// raised when a lazily presented ring outgrows the caller's cap
struct cap_exceeded : error {
    std::size_t stage;
    std::size_t support_seen;
    cap_exceeded(std::size_t stage_, std::size_t support_, const std::string& what_)
        : error(what_), stage(stage_), support_seen(support_) {}
};

// inconsistent input data that passed construction but violates a ring
// invariant discovered mid-computation
struct data_corruption : error {
    using error::error;
};

// groups and group rings
struct group_mismatch : error {
    using error::error;
};
struct infinite_group : error {
    using error::error;
};
struct identity_element : error {
    using error::error;
};
struct torsion_free_at_cap : error {
    using error::error;
};
struct invalid_generators : error {
    using error::error;
};
struct insufficient_data : error {
    using error::error;
};

// multimatrix algebras
struct single_block : error {
    using error::error;
};

// character tables & document I/O
struct malformed_table : error {
    using error::error;
};
struct non_integral_multiplicity : error {
    using error::error;
};
struct negative_multiplicity : error {
    using error::error;
};
struct parse_error : error {
    using error::error;
};

struct invalid_witness : error {
    using error::error;
};

}  // namespace cqg
