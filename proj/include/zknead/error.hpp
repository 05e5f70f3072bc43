#pragma once

#include <stdexcept>
#include <string>

namespace zknead {

enum class errc {
    empty_sequence,
    nonpositive_entry,
    not_coprime,
    improper_fraction,
    no_such_expansion,
    not_unimodular,
    square_discriminant,
    nonpositive_discriminant,
    not_reduced,
    excluded_spec,
    discriminant_mismatch,
    not_primitive,
    zero_form,
    step_limit_exceeded,
    internal_inconsistency,
    domain_error,
    overflow,
    parse_error,
};

const char* errc_name(errc c);

/// Domain error carrying a machine-checkable code.
class error : public std::runtime_error {
public:
    error(errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
    errc code() const noexcept { return code_; }

private:
    errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) { throw error(code, what); }

} // namespace zknead
