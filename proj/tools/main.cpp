#include "cli_app.hpp"

int main(int argc, char** argv) {
    return sylrec::cli::run_command(std::vector<std::string>(argv + 1, argv + argc));
}
