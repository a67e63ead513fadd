#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace surgcalc::cli {

/// Exit status semantics: 0 when every claim is Pass or Unchecked, 2 when any
/// claim Fails, 1 on usage or parse errors.
struct Report {
  int exit_code = 0;
  std::string json;  // machine payload; the human table is derived from it
};

Report run(const std::vector<std::string>& args, std::ostream& out,
           std::ostream& err);

}  // namespace surgcalc::cli
