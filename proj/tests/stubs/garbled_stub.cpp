// Completes the handshake, then answers moves outside the protocol.

#include <iostream>
#include <string>

int main() {
  std::string line;
  while (std::getline(std::cin, line)) {
    if (line.rfind("HELLO", 0) == 0) {
      std::cout << "READY\nBOARD 3 3\n___\n___\n___\nSTATE 0 0\nCONTINUE\n" << std::flush;
    } else if (line.rfind("MOVE", 0) == 0) {
      std::cout << "OK MAYBE\n" << std::flush;
    }
  }
}
