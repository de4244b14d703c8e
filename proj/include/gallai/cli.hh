#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace gallai
{
    // Exit codes: 0 definitive success, 1 definitive negative, 2 usage or
    // input error, 3 search budget exhausted.
    auto run_cli(const std::vector<std::string> & args, std::ostream & out, std::ostream & err) -> int;
}
