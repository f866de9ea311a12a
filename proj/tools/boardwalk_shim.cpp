// Speaks the candidate line protocol on stdin/stdout using the reference
// games, so external-candidate plumbing can be tested against known rules.

#include <iostream>

#include "boardwalk/harness/endpoint.hpp"

int main() {
  std::ios::sync_with_stdio(false);
  return boardwalk::harness::serve_protocol(std::cin, std::cout);
}
