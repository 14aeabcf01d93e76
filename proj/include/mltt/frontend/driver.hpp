#pragma once

// Command-line driver.
//
//   mltt check FILE
//   mltt check -e EXPR -t TYPE
//   mltt infer -e EXPR
//   mltt nf -e EXPR [-t TYPE]
//   mltt conv -e EXPR -e EXPR -t TYPE
//
// Global flags: --fuel N (default 1000000), --json. Expression commands also
// take --defs FILE to make a file's definitions available.
//
// Exit codes: 0 success, 1 type error, 2 parse error, 3 out of fuel,
// 4 internal ill-formed state.

#include <iosfwd>
#include <string>
#include <vector>

namespace mltt::frontend {

/// `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace mltt::frontend
