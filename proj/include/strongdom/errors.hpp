#pragma once

#include <stdexcept>
#include <string>

namespace strongdom {

enum class Errc {
    invalid_vertex,
    self_loop,
    invalid_parameter,
    oracle_too_large,
    no_set_within_cap,
    edge_not_present,
    hypothesis_violated,
    invalid_witness,
    parse_error,
    graph_too_large,
};

inline const char* errc_name(Errc c) {
    switch (c) {
        case Errc::invalid_vertex: return "InvalidVertex";
        case Errc::self_loop: return "SelfLoopRejected";
        case Errc::invalid_parameter: return "InvalidParameter";
        case Errc::oracle_too_large: return "OracleTooLarge";
        case Errc::no_set_within_cap: return "NoSetWithinCap";
        case Errc::edge_not_present: return "EdgeNotPresent";
        case Errc::hypothesis_violated: return "HypothesisViolated";
        case Errc::invalid_witness: return "InvalidWitness";
        case Errc::parse_error: return "ParseError";
        case Errc::graph_too_large: return "GraphTooLarge";
    }
    return "UnknownError";
}

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& msg)
        : std::runtime_error(std::string(errc_name(code)) + ": " + msg), code_(code) {}

    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

} // namespace strongdom
