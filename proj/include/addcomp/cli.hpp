#pragma once

#include <ostream>

namespace addcomp {

// Exit codes: 0 ok, 1 verification failed, 2 usage or input error. Errors
// are reported on `err` as {"error": <category>, "message": ...}.
int run_cli(int argc, char** argv, std::ostream& out, std::ostream& err);

}  // namespace addcomp
