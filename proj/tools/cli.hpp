#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace symrig::cli {

// exit codes: 0 success / member / rigid / all-agree, 1 negative answer,
// 2 usage or input error
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace symrig::cli
