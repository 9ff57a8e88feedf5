#include "cli_app.hpp"

int main(int argc, char** argv) {
    return groupalg::cli::main_entry(argc, argv);
}
