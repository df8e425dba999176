#include "cli.hpp"

#include <iostream>

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  try {
    const auto config = capcone::cli::load_default_config();
    const auto result = capcone::cli::run(args, config);
    if (result.exit_code == 0) {
      std::cout << result.payload;
    } else {
      std::cerr << result.payload;
    }
    return result.exit_code;
  } catch (const std::exception& e) {
    std::cerr << e.what() << "\n";
    return 2;
  }
}
