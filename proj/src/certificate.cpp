#include "pi3/certificate.hpp"

namespace pi3 {

std::string to_string(Status s) {
  switch (s) {
    case Status::Pass: return "PASS";
    case Status::Fail: return "FAIL";
    case Status::NecessaryOnly: return "NECESSARY-ONLY";
  }
  return "FAIL";
}

}  // namespace pi3
