// Scriptable black box speaking the line protocol: one decimal input
// per line on stdin, one decimal output per line on stdout. The mode
// argument selects the behavior under test.
//
//   double      output 2*i for every input
//   odd-zero    stall forever on even inputs, output 0 on odd inputs
//   compliant   output i+1, never an irremediable pair
//   garbage     answer "hello" regardless of input

#include <chrono>
#include <iostream>
#include <string>
#include <thread>

int main(int argc, char** argv) {
  const std::string mode = argc > 1 ? argv[1] : "double";
  std::string line;
  while (std::getline(std::cin, line)) {
    const int i = std::stoi(line);
    if (mode == "double") {
      std::cout << 2 * i << std::endl;
    } else if (mode == "odd-zero") {
      if (i % 2 == 0)
        while (true) std::this_thread::sleep_for(std::chrono::seconds(1));
      std::cout << 0 << std::endl;
    } else if (mode == "compliant") {
      std::cout << i + 1 << std::endl;
    } else if (mode == "garbage") {
      std::cout << "hello" << std::endl;
    } else {
      return 64;
    }
  }
  return 0;
}
