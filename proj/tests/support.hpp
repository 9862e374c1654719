#pragma once

#include <array>
#include <cstdio>
#include <string>

#include "pgroup/families.hpp"
#include "pgroup/group.hpp"

namespace testsupport {

struct CommandResult {
    int exit_code = -1;
    std::string out;
};

inline CommandResult run_command(const std::string& cmd) {
    CommandResult res;
    std::string full = cmd + " 2>&1";
    FILE* pipe = popen(full.c_str(), "r");
    if (!pipe) return res;
    std::array<char, 4096> buf{};
    std::size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) res.out.append(buf.data(), got);
    int status = pclose(pipe);
    res.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return res;
}

inline pgroup::Group family(pgroup::Family f, std::map<std::string, long long> params) {
    return pgroup::construct({f, std::move(params)});
}

// the named census member; throws if the id is absent
inline pgroup::Group census_member(pgroup::Elem p, pgroup::Elem max_order, const std::string& id) {
    for (pgroup::Group& g : pgroup::census(p, max_order))
        if (g.name() == id) return g;
    throw std::runtime_error("census member not found: " + id);
}

}  // namespace testsupport
