#include "localcc_app/app.hpp"

int main(int argc, char** argv) { return localcc::app::run_cli(argc, argv); }
