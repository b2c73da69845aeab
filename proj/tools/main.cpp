#include "billiard_cli.hpp"

#include <unistd.h>

int main(int argc, char** argv)
{
	std::vector<std::string> args(argv, argv + argc);
	return billiard::cli::run(args, std::cout, std::cerr, ::isatty(STDOUT_FILENO) != 0);
}
