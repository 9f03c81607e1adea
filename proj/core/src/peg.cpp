#include "whanoi/peg.hpp"

namespace whanoi {

Peg parse_peg(const std::string& text) {
  if (text.size() == 1 && text[0] >= '0' && text[0] <= '2') {
    return Peg{text[0] - '0'};
  }
  throw std::invalid_argument("peg must be 0, 1 or 2, got '" + text + "'");
}

}  // namespace whanoi
