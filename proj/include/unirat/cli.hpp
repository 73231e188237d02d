#ifndef UNIRAT_CLI_HPP
#define UNIRAT_CLI_HPP

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "unirat/fieldops.hpp"

namespace unirat {

struct Query {
    std::string command;  // member|trdeg|basis|minpoly|subfields|closure|decompose
    std::vector<std::string> vars;
    std::vector<std::string> gens;
    std::optional<std::string> elem;
    std::string format = "text";  // text|json
    std::size_t max_block_subsets = 4096;
};

/// Exit codes: 0 success, 2 usage/parse/input error, 4 internal invariant
/// violation. (Timeouts are enforced by the binary and exit 3.)
int run_query(const Query& q, std::ostream& out, std::ostream& err);

std::string format_minpoly(const MinPoly& mp, const std::string& var);

}  // namespace unirat

#endif
