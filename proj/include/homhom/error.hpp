#ifndef HOMHOM_ERROR_HPP
#define HOMHOM_ERROR_HPP

#include <stdexcept>
#include <string>

namespace homhom {

enum class Errc {
    loop_arc,
    symmetric_pair,
    index_out_of_range,
    size_cap_exceeded,
    zero_multiplicity,
    empty_list,
    degenerate_placement,
    not_a_tournament,
    invalid_partial_hom,
    no_witness,
    io_error,
    parse_error,
    bad_argument,
};

const char* errc_name(Errc c);

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

    Errc code() const { return code_; }

private:
    Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

} // namespace homhom

#endif
